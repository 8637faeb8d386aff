#include "finsupp/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace finsupp {

StepFunction::StepFunction(std::vector<StepAtom> atoms) : atoms_(std::move(atoms)) {
  for (const StepAtom& at : atoms_) {
    if (!std::isfinite(at.a) || !std::isfinite(at.b) || !(at.a < at.b))
      throw std::invalid_argument("StepFunction: atoms need finite a < b");
    if (!std::isfinite(at.v) || at.v == 0.0)
      throw std::invalid_argument("StepFunction: atom values must be finite and nonzero");
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const StepAtom& x, const StepAtom& y) { return x.a < y.a; });
  for (std::size_t k = 1; k < atoms_.size(); ++k)
    if (atoms_[k].a < atoms_[k - 1].b)
      throw std::invalid_argument("StepFunction: atoms must not overlap");
}

IntervalSet StepFunction::support() const {
  std::vector<Interval> ivs;
  ivs.reserve(atoms_.size());
  for (const StepAtom& at : atoms_) ivs.push_back({at.a, at.b});
  return IntervalSet(std::move(ivs));
}

double StepFunction::support_measure() const {
  double m = 0.0;
  for (const StepAtom& at : atoms_) m += at.b - at.a;
  return m;
}

double StepFunction::value_at(double x) const {
  auto it = std::upper_bound(atoms_.begin(), atoms_.end(), x,
                             [](double v, const StepAtom& at) { return v < at.a; });
  if (it == atoms_.begin()) return 0.0;
  --it;
  return x < it->b ? it->v : 0.0;
}

RearrangementProfile rearrange(const StepFunction& f) {
  // (|value|, length) sorted by decreasing value, equal values pooled.
  std::vector<std::pair<double, double>> levels;
  levels.reserve(f.atoms().size());
  for (const StepAtom& at : f.atoms()) levels.push_back({std::fabs(at.v), at.b - at.a});
  std::sort(levels.begin(), levels.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<ProfilePiece> pieces;
  double t = 0.0;
  for (const auto& [v, len] : levels) {
    if (!pieces.empty() && pieces.back().v == v) {
      pieces.back().t1 += len;
    } else {
      pieces.push_back({t, t + len, v});
    }
    t = pieces.back().t1;
  }
  return RearrangementProfile(std::move(pieces), std::nullopt);
}

IntervalSet best_support_set(const StepFunction& f, double sigma) {
  if (!(sigma > 0.0)) throw std::domain_error("best_support_set: sigma must be > 0");
  const double level = evaluate(rearrange(f), sigma);  // f*(sigma)

  std::vector<Interval> picked;
  double taken = 0.0;
  for (const StepAtom& at : f.atoms()) {
    if (std::fabs(at.v) > level) {
      picked.push_back({at.a, at.b});
      taken += at.b - at.a;
    }
  }
  double rem = sigma - taken;
  if (rem > 0.0) {
    if (level > 0.0) {
      // Top up along the plateau, leftmost atoms first.
      for (const StepAtom& at : f.atoms()) {
        if (std::fabs(at.v) != level) continue;
        double len = std::min(at.b - at.a, rem);
        picked.push_back({at.a, at.a + len});
        rem -= len;
        if (rem <= 0.0) break;
      }
    } else {
      // sigma exceeds the support measure: pad to the right of the hull.
      double h = f.support().hull_end();
      picked.push_back({h, h + rem});
    }
  }
  return IntervalSet(std::move(picked));
}

BestApprox best_approx(const StepFunction& f, double sigma, double p) {
  BestApprox out;
  out.error = approx_error(rearrange(f), sigma, p);
  out.approximant = restrict_to(f, best_support_set(f, sigma));
  return out;
}

StepFunction restrict_to(const StepFunction& f, const IntervalSet& S) {
  std::vector<StepAtom> atoms;
  for (const StepAtom& at : f.atoms()) {
    IntervalSet part = IntervalSet::single(at.a, at.b).intersect(S);
    for (const Interval& iv : part.intervals()) atoms.push_back({iv.a, iv.b, at.v});
  }
  return StepFunction(std::move(atoms));
}

StepFunction add(const StepFunction& f, const StepFunction& g) {
  std::vector<double> cuts;
  for (const StepAtom& at : f.atoms()) {
    cuts.push_back(at.a);
    cuts.push_back(at.b);
  }
  for (const StepAtom& at : g.atoms()) {
    cuts.push_back(at.a);
    cuts.push_back(at.b);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<StepAtom> atoms;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    double a = cuts[k], b = cuts[k + 1];
    double mid = a + 0.5 * (b - a);
    double v = f.value_at(mid) + g.value_at(mid);
    if (v == 0.0) continue;
    if (!atoms.empty() && atoms.back().b == a && atoms.back().v == v)
      atoms.back().b = b;
    else
      atoms.push_back({a, b, v});
  }
  return StepFunction(std::move(atoms));
}

StepFunction ingest_samples(const SampledFunction& s, double threshold) {
  if (!(std::isfinite(s.h) && s.h > 0.0))
    throw std::domain_error("ingest_samples: spacing must be finite and > 0");
  if (!(threshold >= 0.0)) throw std::domain_error("ingest_samples: threshold must be >= 0");
  std::vector<StepAtom> atoms;
  for (std::size_t i = 0; i < s.samples.size(); ++i) {
    double v = s.samples[i];
    if (!std::isfinite(v)) throw std::invalid_argument("ingest_samples: non-finite sample");
    if (std::fabs(v) <= threshold) continue;
    double a = s.x0 + static_cast<double>(i) * s.h;
    double b = s.x0 + static_cast<double>(i + 1) * s.h;
    if (!atoms.empty() && atoms.back().b == a && atoms.back().v == v)
      atoms.back().b = b;
    else
      atoms.push_back({a, b, v});
  }
  return StepFunction(std::move(atoms));
}

}  // namespace finsupp
