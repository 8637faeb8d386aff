#include "finsupp/io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace finsupp {

namespace {

using nlohmann::ordered_json;

// JSON has no +-inf/nan literals; encode them as strings.
ordered_json num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double get_num(const ordered_json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    if (s == "nan") return std::nan("");
  }
  throw std::runtime_error(std::string("expected a number for ") + what);
}

ordered_json profile_json(const RearrangementProfile& f) {
  ordered_json pieces = ordered_json::array();
  for (const ProfilePiece& pc : f.pieces())
    pieces.push_back({{"t0", num(pc.t0)}, {"t1", num(pc.t1)}, {"v", num(pc.v)}});
  ordered_json j;
  j["pieces"] = std::move(pieces);
  if (f.tail())
    j["tail"] = {{"T", num(f.tail()->T)}, {"c", num(f.tail()->c)}, {"gamma", num(f.tail()->gamma)}};
  else
    j["tail"] = nullptr;
  return j;
}

RearrangementProfile profile_from(const ordered_json& j) {
  std::vector<ProfilePiece> pieces;
  if (j.contains("pieces"))
    for (const ordered_json& pc : j.at("pieces"))
      pieces.push_back({get_num(pc.at("t0"), "t0"), get_num(pc.at("t1"), "t1"),
                        get_num(pc.at("v"), "v")});
  std::optional<PowerTail> tail;
  if (j.contains("tail") && !j.at("tail").is_null()) {
    const ordered_json& t = j.at("tail");
    tail = PowerTail{get_num(t.at("T"), "T"), get_num(t.at("c"), "c"),
                     get_num(t.at("gamma"), "gamma")};
  }
  return RearrangementProfile(std::move(pieces), tail);
}

StepFunction step_from(const ordered_json& j) {
  std::vector<StepAtom> atoms;
  for (const ordered_json& at : j.at("atoms"))
    atoms.push_back(
        {get_num(at.at("a"), "a"), get_num(at.at("b"), "b"), get_num(at.at("v"), "v")});
  return StepFunction(std::move(atoms));
}

ordered_json report_json(const CheckReport& rep) {
  ordered_json j;
  j["name"] = rep.name;
  j["lhs"] = num(rep.lhs);
  j["rhs"] = num(rep.rhs);
  j["ratio"] = num(rep.ratio);
  j["constant_claimed"] = rep.constant_claimed ? num(*rep.constant_claimed)
                                               : ordered_json("unspecified");
  j["pass"] = rep.pass;
  j["inputs"] = rep.inputs;
  return j;
}

ordered_json entry_json(const SuiteEntry& e) {
  ordered_json j = report_json(e.report);
  if (e.n != 1) {
    j["min_ratio"] = num(e.min_ratio);
    j["max_ratio"] = num(e.max_ratio);
    j["n"] = e.n;
  }
  return j;
}

}  // namespace

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string profile_to_json(const RearrangementProfile& f) { return profile_json(f).dump(); }

std::string step_to_json(const StepFunction& f) {
  ordered_json atoms = ordered_json::array();
  for (const StepAtom& at : f.atoms())
    atoms.push_back({{"a", num(at.a)}, {"b", num(at.b)}, {"v", num(at.v)}});
  ordered_json j;
  j["atoms"] = std::move(atoms);
  return j.dump();
}

ParsedInput parse_input_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& ex) {
    throw std::runtime_error(std::string("invalid JSON: ") + ex.what());
  }
  if (!j.is_object()) throw std::runtime_error("input must be a JSON object");
  ParsedInput out;
  if (j.contains("atoms"))
    out.step = step_from(j);
  else if (j.contains("pieces") || j.contains("tail"))
    out.profile = profile_from(j);
  else
    throw std::runtime_error("input needs an \"atoms\" or \"pieces\" key");
  return out;
}

SampledFunction parse_samples_csv(const std::string& text) {
  std::vector<double> xs, vs;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
    pos = eol == std::string::npos ? text.size() : eol + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++lineno;
    if (lineno == 1) {
      if (line != "x,value") throw std::runtime_error("CSV header must be \"x,value\"");
      continue;
    }
    if (line.empty()) continue;
    std::size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("CSV row " + std::to_string(lineno) + " needs two columns");
    try {
      xs.push_back(std::stod(line.substr(0, comma)));
      vs.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw std::runtime_error("CSV row " + std::to_string(lineno) + " is not numeric");
    }
  }
  if (xs.size() < 2) throw std::runtime_error("CSV needs at least two data rows");
  const double h = xs[1] - xs[0];
  if (!(h > 0.0) || !std::isfinite(h)) throw std::runtime_error("CSV x values must increase");
  for (std::size_t i = 2; i < xs.size(); ++i) {
    double expect = xs[0] + h * static_cast<double>(i);
    if (std::fabs(xs[i] - expect) > 1e-9 * std::max(std::fabs(expect), h))
      throw std::runtime_error("CSV x values are not uniformly spaced (row " +
                               std::to_string(i + 2) + ")");
  }
  SampledFunction s;
  s.x0 = xs[0];
  s.h = h;
  s.samples = std::move(vs);
  return s;
}

std::string report_to_json(const CheckReport& rep) { return report_json(rep).dump(); }

std::string entry_to_json(const SuiteEntry& e) { return entry_json(e).dump(); }

std::string suite_to_json(const SuiteResult& res, std::uint64_t seed) {
  ordered_json j;
  j["seed"] = seed;
  j["family_version"] = kFamilyVersion;
  j["all_pass"] = res.all_pass;
  ordered_json checks = ordered_json::array();
  for (const SuiteEntry& e : res.entries) checks.push_back(entry_json(e));
  j["checks"] = std::move(checks);
  return j.dump(2);
}

}  // namespace finsupp
