#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "finsupp/io.hpp"
#include "finsupp/kfunc.hpp"
#include "finsupp/norms.hpp"
#include "finsupp/suite.hpp"
#include "finsupp/theorems.hpp"

namespace {

using finsupp::kInf;
using nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string output;
  std::string format;  // "json" or "csv"; empty = per-command default
  double p = 2.0;
  std::string q_text = "inf";
  double alpha = 0.5;
  std::optional<double> p1;
  std::optional<double> sigma;
  std::uint64_t seed = 0;
  double tol = 1e-10;
};

double parse_q(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") return kInf;
  try {
    std::size_t used = 0;
    double q = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return q;
  } catch (const std::exception&) {
    throw std::runtime_error("--q expects a positive number or \"inf\"");
  }
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--input", opt.input, "input file (JSON profile/step, or CSV samples)");
  cmd->add_option("--output", opt.output, "write the report here instead of stdout");
  cmd->add_option("--format", opt.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--p", opt.p, "primary exponent p > 0");
  cmd->add_option("--q", opt.q_text, "secondary exponent q > 0 or \"inf\"");
  auto* a = cmd->add_option("--alpha", opt.alpha, "approximation order alpha > 0");
  auto* p1 = cmd->add_option("--p1", opt.p1, "weak-space exponent (alternative to --alpha)");
  a->excludes(p1);
  p1->excludes(a);
  cmd->add_option("--sigma", opt.sigma, "support-measure budget");
  cmd->add_option("--seed", opt.seed, "seed for the built-in verify family");
  cmd->add_option("--tol", opt.tol, "quadrature relative tolerance");
}

finsupp::NormParams make_params(const Options& opt) {
  double q = parse_q(opt.q_text);
  if (opt.p1) return finsupp::NormParams::from_p1(opt.p, q, *opt.p1);
  return finsupp::NormParams::from_alpha(opt.p, q, opt.alpha);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + opt.output);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

// Reads --input as a profile, rearranging step functions; CSV samples
// are ingested with threshold 0.
finsupp::RearrangementProfile load_profile(const Options& opt) {
  if (opt.input.empty()) throw std::runtime_error("--input is required");
  std::string text = slurp(opt.input);
  if (opt.input.size() > 4 && opt.input.substr(opt.input.size() - 4) == ".csv") {
    return rearrange(finsupp::ingest_samples(finsupp::parse_samples_csv(text), 0.0));
  }
  finsupp::ParsedInput in = finsupp::parse_input_json(text);
  if (in.profile) return *in.profile;
  return rearrange(*in.step);
}

finsupp::StepFunction load_step(const Options& opt) {
  if (opt.input.empty()) throw std::runtime_error("--input is required");
  std::string text = slurp(opt.input);
  if (opt.input.size() > 4 && opt.input.substr(opt.input.size() - 4) == ".csv") {
    return finsupp::ingest_samples(finsupp::parse_samples_csv(text), 0.0);
  }
  finsupp::ParsedInput in = finsupp::parse_input_json(text);
  if (!in.step) throw std::runtime_error("this command needs a step function (\"atoms\")");
  return *in.step;
}

ordered_json num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

int cmd_norm(const Options& opt) {
  finsupp::NormParams np = make_params(opt);
  finsupp::QuadratureSpec quad;
  quad.rel_tol = opt.tol;
  finsupp::RearrangementProfile f = load_profile(opt);

  double lp = finsupp::lp_norm(f, np.p);
  double weak = finsupp::weak_lorentz_norm(f, np.p);
  double lorentz = finsupp::lorentz_norm(f, np.p, np.q);
  double aspace = finsupp::approx_space_norm(f, np, quad);

  if (opt.format == "csv") {
    std::string text = "name,value\n";
    text += "lp," + finsupp::fmt_double(lp) + "\n";
    text += "weak_lorentz," + finsupp::fmt_double(weak) + "\n";
    text += "lorentz," + finsupp::fmt_double(lorentz) + "\n";
    text += "approx_space," + finsupp::fmt_double(aspace) + "\n";
    emit(opt, text);
  } else {
    ordered_json j;
    j["p"] = num(np.p);
    j["q"] = num(np.q);
    j["alpha"] = num(np.alpha);
    j["p1"] = num(np.p1);
    j["lp"] = num(lp);
    j["weak_lorentz"] = num(weak);
    j["lorentz"] = num(lorentz);
    j["approx_space"] = num(aspace);
    emit(opt, j.dump(2));
  }
  return 0;
}

int cmd_error_decay(const Options& opt) {
  finsupp::NormParams np = make_params(opt);
  finsupp::RearrangementProfile f = load_profile(opt);

  struct Row {
    double sigma, err, scaled;
  };
  std::vector<Row> rows;
  for (int k = 0; k <= 120; ++k) {  // 2^-10 .. 2^20, 4 points per octave
    double sigma = std::exp2(-10.0 + 0.25 * k);
    double err = finsupp::approx_error(f, sigma, np.p);
    rows.push_back({sigma, err, std::pow(sigma, np.alpha) * err});
  }

  if (opt.format == "json") {
    ordered_json j;
    j["p"] = num(np.p);
    j["alpha"] = num(np.alpha);
    ordered_json arr = ordered_json::array();
    for (const Row& r : rows)
      arr.push_back({{"sigma", num(r.sigma)},
                     {"error", num(r.err)},
                     {"sigma_alpha_error", num(r.scaled)}});
    j["rows"] = std::move(arr);
    emit(opt, j.dump(2));
  } else {
    std::string text = "sigma,error,sigma_alpha_error\n";
    for (const Row& r : rows)
      text += finsupp::fmt_double(r.sigma) + "," + finsupp::fmt_double(r.err) + "," +
              finsupp::fmt_double(r.scaled) + "\n";
    emit(opt, text);
  }
  return 0;
}

int cmd_best_approx(const Options& opt) {
  finsupp::NormParams np = make_params(opt);
  if (!opt.sigma) throw std::runtime_error("--sigma is required for best-approx");
  finsupp::StepFunction f = load_step(opt);
  finsupp::BestApprox ba = finsupp::best_approx(f, *opt.sigma, np.p);

  if (opt.format == "csv") {
    std::string text = "a,b,v\n";
    for (const finsupp::StepAtom& at : ba.approximant.atoms())
      text += finsupp::fmt_double(at.a) + "," + finsupp::fmt_double(at.b) + "," +
              finsupp::fmt_double(at.v) + "\n";
    emit(opt, text);
    std::cout << "error=" << finsupp::fmt_double(ba.error) << "\n";
  } else {
    ordered_json atoms = ordered_json::array();
    for (const finsupp::StepAtom& at : ba.approximant.atoms())
      atoms.push_back({{"a", num(at.a)}, {"b", num(at.b)}, {"v", num(at.v)}});
    ordered_json j;
    j["sigma"] = num(*opt.sigma);
    j["p"] = num(np.p);
    j["error"] = num(ba.error);
    j["approximant"] = {{"atoms", std::move(atoms)}};
    emit(opt, j.dump(2));
  }
  return 0;
}

int cmd_kfunc(const Options& opt) {
  finsupp::NormParams np = make_params(opt);
  finsupp::QuadratureSpec quad;
  quad.rel_tol = opt.tol;
  finsupp::RearrangementProfile f = load_profile(opt);

  struct Row {
    double t, lo, up;
  };
  std::vector<Row> rows;
  for (int j = -20; j <= 20; ++j) {
    double t = std::exp2(static_cast<double>(j));
    finsupp::BoundReport b = finsupp::k_upper_truncation(f, t, np);
    rows.push_back({t, b.lower, b.upper});
  }
  const double theta = 0.5;
  finsupp::BoundReport interp = finsupp::interp_norm_bounds(f, theta, np.q, np, quad);

  if (opt.format == "json") {
    ordered_json j;
    j["p"] = num(np.p);
    j["p1"] = num(np.p1);
    j["alpha"] = num(np.alpha);
    ordered_json arr = ordered_json::array();
    for (const Row& r : rows)
      arr.push_back({{"t", num(r.t)}, {"k_lower", num(r.lo)}, {"k_upper", num(r.up)}});
    j["rows"] = std::move(arr);
    j["interp_bracket"] = {{"theta", num(theta)},
                           {"q", num(np.q)},
                           {"lower", num(interp.lower)},
                           {"upper", num(interp.upper)},
                           {"witness", interp.witness}};
    emit(opt, j.dump(2));
  } else {
    std::string text = "t,k_lower,k_upper\n";
    for (const Row& r : rows)
      text += finsupp::fmt_double(r.t) + "," + finsupp::fmt_double(r.lo) + "," +
              finsupp::fmt_double(r.up) + "\n";
    emit(opt, text);
    std::cout << "interp_bracket theta=" << finsupp::fmt_double(theta) << " lower="
              << finsupp::fmt_double(interp.lower) << " upper="
              << finsupp::fmt_double(interp.upper) << " (" << interp.witness << ")\n";
  }
  return 0;
}

int cmd_verify(const Options& opt, bool p_set, bool alpha_set, bool q_set) {
  finsupp::SuiteConfig cfg;
  cfg.quad.rel_tol = opt.tol;
  if (p_set) cfg.p_grid = {opt.p};
  if (alpha_set) cfg.alpha_grid = {opt.alpha};
  if (q_set) cfg.q_grid = {parse_q(opt.q_text)};

  finsupp::Family fam;
  if (opt.input.empty()) {
    fam = finsupp::make_family(opt.seed);
  } else {
    // User-supplied list: a JSON array of profile/step objects replaces
    // the built-in family; consecutive steps pair up for the
    // quasi-triangle rows.
    ordered_json arr = ordered_json::parse(slurp(opt.input));
    if (!arr.is_array()) throw std::runtime_error("verify --input expects a JSON array");
    fam.seed = opt.seed;
    for (const ordered_json& item : arr) {
      finsupp::ParsedInput in = finsupp::parse_input_json(item.dump());
      if (in.step)
        fam.steps.push_back(*in.step);
      else
        fam.tails.push_back(*in.profile);
    }
    if (fam.steps.empty() && fam.tails.empty())
      throw std::runtime_error("verify --input list is empty");
    for (std::size_t i = 0; i + 1 < fam.steps.size(); i += 2)
      fam.pairs.emplace_back(fam.steps[i], fam.steps[i + 1]);
    if (fam.pairs.empty() && !fam.steps.empty())
      fam.pairs.emplace_back(fam.steps[0], fam.steps[0]);
    cfg.bracket_stride = 1;
  }

  finsupp::SuiteResult res = finsupp::run_suite(fam, cfg);

  std::ostringstream out;
  out << "finsupp verify: seed=" << fam.seed << " family=v" << finsupp::kFamilyVersion
      << " checks=" << res.entries.size() << "\n";
  std::size_t passed = 0;
  for (const finsupp::SuiteEntry& e : res.entries) {
    passed += e.report.pass ? 1 : 0;
    out << (e.report.pass ? "PASS" : "FAIL") << " " << e.report.name
        << " ratio=" << finsupp::fmt_double(e.report.ratio) << " [" << e.report.inputs << "]\n";
  }
  out << "RESULT " << (res.all_pass ? "PASS" : "FAIL") << " (" << passed << "/"
      << res.entries.size() << ")\n";
  std::cout << out.str();

  if (!opt.output.empty()) {
    if (opt.format == "csv") {
      std::string text = "name,pass,ratio,min_ratio,max_ratio,n\n";
      for (const finsupp::SuiteEntry& e : res.entries)
        text += e.report.name + "," + (e.report.pass ? "1" : "0") + "," +
                finsupp::fmt_double(e.report.ratio) + "," + finsupp::fmt_double(e.min_ratio) +
                "," + finsupp::fmt_double(e.max_ratio) + "," + std::to_string(e.n) + "\n";
      std::ofstream f(opt.output, std::ios::binary);
      if (!f) throw std::runtime_error("cannot write " + opt.output);
      f << text;
    } else {
      std::ofstream f(opt.output, std::ios::binary);
      if (!f) throw std::runtime_error("cannot write " + opt.output);
      f << finsupp::suite_to_json(res, fam.seed) << "\n";
    }
  }
  return res.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-support approximation norms, K-functional bounds, and theorem checks"};
  app.require_subcommand(1);

  Options opt;
  CLI::App* norm = app.add_subcommand("norm", "L_p / weak / Lorentz / approximation-space norms");
  CLI::App* decay = app.add_subcommand("error-decay", "table of sigma, E_sigma, sigma^alpha E_sigma");
  CLI::App* best = app.add_subcommand("best-approx", "best finite-support approximant and residual");
  CLI::App* kfunc = app.add_subcommand("kfunc", "K-functional bracket table and interpolation-norm bounds");
  CLI::App* verify = app.add_subcommand("verify", "run the theorem-check suite");
  for (CLI::App* cmd : {norm, decay, best, kfunc, verify}) add_common(cmd, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (norm->parsed()) return cmd_norm(opt);
    if (decay->parsed()) return cmd_error_decay(opt);
    if (best->parsed()) return cmd_best_approx(opt);
    if (kfunc->parsed()) return cmd_kfunc(opt);
    if (verify->parsed())
      return cmd_verify(opt, verify->count("--p") > 0, verify->count("--alpha") > 0,
                        verify->count("--q") > 0);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}
