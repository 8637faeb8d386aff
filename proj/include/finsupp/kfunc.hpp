#pragma once

#include <string>

#include "finsupp/norms.hpp"
#include "finsupp/profile.hpp"
#include "finsupp/quadrature.hpp"
#include "finsupp/step_function.hpp"

namespace finsupp {

// Two-sided enclosure with a note about where the bound was attained.
struct BoundReport {
  double lower = 0.0;
  double upper = 0.0;
  std::string witness;
};

// K(t; f) is the Peetre K-functional of f in the couple
// (L_p, L_{p1,inf}) with 1/p1 = alpha + 1/p, decay rate r = alpha.

// Lower bound E_{t^{-1/r}}(f)_p / C with C = max(1, (r p)^{-1/p}); exact
// up to that constant for p >= 1.
double k_lower(const RearrangementProfile& f, double t, const NormParams& params);
double k_lower(const StepFunction& f, double t, const NormParams& params);

// Upper bound by minimizing E_sigma(f)_p + t * W(sigma) over truncation
// levels sigma, where W(sigma) = sup_{s < sigma} s^{1/p1} f*(s) is the
// weak norm of the part kept.  Candidates: every piece breakpoint, a
// golden-section pass inside each segment and in the tail region, and
// sigma = +inf (keep everything) when the weak norm is finite.  `lower`
// carries k_lower at the same t.
BoundReport k_upper_truncation(const RearrangementProfile& f, double t,
                               const NormParams& params);
BoundReport k_upper_truncation(const StepFunction& f, double t, const NormParams& params);

// Dyadic-sum majorant of K(2^{-m r}): E(2^m) + 2^{-m r} * sum_{k <= m}
// 2^{k r} * 2 * E(2^{k-1}), truncated once terms drop below rel_tol of
// the running sum.
double k_upper_dyadic(const RearrangementProfile& f, int m, const NormParams& params,
                      double rel_tol = 1e-12);
double k_upper_dyadic(const StepFunction& f, int m, const NormParams& params,
                      double rel_tol = 1e-12);

// Constant C with k_upper_truncation(f, 2^{-m r}).upper <= C * k_upper_dyadic(f, m):
// max(1, 2^{r + 2/p - 1}).
double dyadic_chain_constant(const NormParams& params);

// Encloses the (theta, q) interpolation norm of K: the q-integral (or
// sup) of t^{-theta} K(t) against dt/t.  Cells of a dyadic t-grid are
// bounded through K's monotonicity; the grid expands until the analytic
// closures (K <= ||f||_p on the right, K <= t * weak norm on the left)
// are negligible.  Reports +inf bounds when the integral diverges.
BoundReport interp_norm_bounds(const RearrangementProfile& f, double theta, double q,
                               const NormParams& params, const QuadratureSpec& quad = {});

}  // namespace finsupp
