#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "finsupp/io.hpp"
#include "finsupp/suite.hpp"

using namespace finsupp;

TEST_CASE("make_family is deterministic and well-formed") {
  Family a = make_family(0);
  Family b = make_family(0);
  CHECK(a.seed == 0);
  REQUIRE(a.steps.size() == 500);
  REQUIRE(a.tails.size() == 100);
  REQUIRE(a.pairs.size() == 200);
  REQUIRE(b.steps.size() == 500);

  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    const auto& x = a.steps[i].atoms();
    const auto& y = b.steps[i].atoms();
    REQUIRE(x.size() == y.size());
    CHECK(x.size() <= 20);
    CHECK(!x.empty());
    for (std::size_t j = 0; j < x.size(); ++j) {
      CHECK(x[j].a == y[j].a);
      CHECK(x[j].b == y[j].b);
      CHECK(x[j].v == y[j].v);
    }
  }
  for (std::size_t i = 0; i < a.tails.size(); ++i) {
    REQUIRE(a.tails[i].tail().has_value());
    CHECK(a.tails[i].pieces().size() <= 6);
    // Steeper than every 1/p1 on the parameter grid, so all norms converge.
    CHECK(a.tails[i].tail()->gamma > 4.0);
    CHECK(a.tails[i].tail()->gamma == b.tails[i].tail()->gamma);
    CHECK(a.tails[i].tail()->c == b.tails[i].tail()->c);
  }
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    CHECK(a.pairs[i].first.atoms().size() == b.pairs[i].first.atoms().size());
    CHECK(a.pairs[i].second.atoms().size() == b.pairs[i].second.atoms().size());
  }

  Family c = make_family(1);
  bool differs = false;
  for (std::size_t i = 0; i < a.steps.size() && !differs; ++i) {
    if (a.steps[i].atoms().size() != c.steps[i].atoms().size()) differs = true;
    else if (a.steps[i].atoms()[0].v != c.steps[i].atoms()[0].v) differs = true;
  }
  CHECK(differs);
}

TEST_CASE("restricted suite runs clean and covers every check kind") {
  Family fam = make_family(0);
  SuiteConfig cfg;
  cfg.p_grid = {2.0};
  cfg.alpha_grid = {0.5};
  cfg.q_grid = {kInf};
  SuiteResult res = run_suite(fam, cfg);
  CHECK(res.all_pass);
  std::set<std::string> names;
  for (const auto& e : res.entries) {
    CHECK(e.report.pass);
    names.insert(e.report.name);
  }
  for (const char* expected :
       {"jackson_sharp", "bernstein_sharp", "jackson", "inverse_weak", "bernstein",
        "equivalence", "quasi_triangle", "kfunc_bracket", "kfunc_chain", "hardy_exp",
        "hardy_step", "equivalence_p1"}) {
    CHECK_MESSAGE(names.count(expected) == 1, expected);
  }
}

TEST_CASE("parallel and serial drivers produce identical output") {
  Family fam = make_family(3);
  SuiteConfig cfg;
  cfg.p_grid = {1.0, 2.0};
  cfg.alpha_grid = {0.5};
  cfg.q_grid = {1.0, kInf};
  SuiteResult par = run_suite(fam, cfg);
  cfg.parallel = false;
  SuiteResult ser = run_suite_serial(fam, cfg);
  CHECK(suite_to_json(par, fam.seed) == suite_to_json(ser, fam.seed));
}

TEST_CASE("aggregated rows carry band metadata") {
  Family fam = make_family(0);
  SuiteConfig cfg;
  cfg.p_grid = {2.0};
  cfg.alpha_grid = {0.5};
  cfg.q_grid = {kInf};
  SuiteResult res = run_suite(fam, cfg);
  bool saw_band = false;
  for (const auto& e : res.entries) {
    if (e.n > 1) {
      saw_band = true;
      CHECK(e.min_ratio <= e.max_ratio);
      CHECK(std::isfinite(e.max_ratio));
      CHECK(e.report.inputs.find("n=") != std::string::npos);
    }
  }
  CHECK(saw_band);
}
