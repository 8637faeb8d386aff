#pragma once

#include "finsupp/profile.hpp"
#include "finsupp/quadrature.hpp"
#include "finsupp/step_function.hpp"

namespace finsupp {

// (integral |f|^p)^{1/p}, p in (0, inf).  +inf when divergent.
double lp_norm(const RearrangementProfile& f, double p);
double lp_norm(const StepFunction& f, double p);

// sup_t t^{1/p} f*(t).  +inf when the tail decays slower than t^{-1/p}.
double weak_lorentz_norm(const RearrangementProfile& f, double p);

// L_{p,q} norm via the rearrangement: q < inf uses the closed-form
// integral of [t^{1/p} f*(t)]^q dt/t piece by piece, q = inf delegates to
// the weak norm.
double lorentz_norm(const RearrangementProfile& f, double p, double q);

// Approximation-space quasinorm: the q-integral (or sup, q = inf) of
// sigma^alpha * E_sigma(f)_p against dsigma/sigma.  Piece segments are
// integrated by tanh-sinh (the integrand has a sigma^{alpha*q - 1} factor
// that is singular at 0); the tail region has a closed form.  Returns
// +inf when any contribution diverges.
double approx_space_norm(const RearrangementProfile& f, const NormParams& params,
                         const QuadratureSpec& quad = {});

}  // namespace finsupp
