#pragma once

#include <vector>

#include "finsupp/interval_set.hpp"
#include "finsupp/profile.hpp"

namespace finsupp {

// Nonzero constant value on a half-open interval.
struct StepAtom {
  double a = 0.0;
  double b = 0.0;
  double v = 0.0;
};

// Finitely supported simple function: finitely many atoms on pairwise
// disjoint intervals, zero elsewhere.  Atoms are kept sorted by position;
// touching atoms with equal values are not merged automatically, so two
// representations of the same function may differ atom-wise.
class StepFunction {
 public:
  StepFunction() = default;  // the zero function

  // Sorts by left endpoint.  Throws std::invalid_argument on empty or
  // inverted intervals, overlapping atoms, or zero/non-finite values.
  explicit StepFunction(std::vector<StepAtom> atoms);

  const std::vector<StepAtom>& atoms() const { return atoms_; }
  bool is_zero() const { return atoms_.empty(); }

  IntervalSet support() const;
  double support_measure() const;
  double value_at(double x) const;

 private:
  std::vector<StepAtom> atoms_;
};

// Uniformly sampled function: value samples[i] on [x0 + i*h, x0 + (i+1)*h).
struct SampledFunction {
  double x0 = 0.0;
  double h = 1.0;
  std::vector<double> samples;
};

// Decreasing rearrangement of |f| as a piecewise profile (no tail).
RearrangementProfile rearrange(const StepFunction& f);

// Best support set of measure sigma > 0: the strict level set
// {|f| > f*(sigma)}, topped up along the plateau {|f| = f*(sigma)} taken
// leftmost-first, splitting the last plateau interval if needed.  When
// sigma exceeds the support measure, the excess is padded with the
// interval immediately to the right of the support hull.
IntervalSet best_support_set(const StepFunction& f, double sigma);

struct BestApprox {
  StepFunction approximant;
  double error = 0.0;
};

// Restriction of f to its best support set together with the achieved
// L_p distance (computed in closed form from the rearrangement).
BestApprox best_approx(const StepFunction& f, double sigma, double p);

// Pointwise restriction f * indicator(S).
StepFunction restrict_to(const StepFunction& f, const IntervalSet& S);

// Pointwise sum.  Cells where the values cancel exactly are dropped;
// adjacent cells with equal values are merged.
StepFunction add(const StepFunction& f, const StepFunction& g);

// Turns samples into a step function, dropping cells with |value| <=
// threshold (threshold >= 0) and merging adjacent equal-valued cells.
StepFunction ingest_samples(const SampledFunction& s, double threshold);

}  // namespace finsupp
