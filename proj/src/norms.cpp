#include "finsupp/norms.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace finsupp {

namespace {

void require_p(double p) {
  if (!(std::isfinite(p) && p > 0.0)) throw std::domain_error("norms: p must be in (0, inf)");
}

// integral_T^inf of (c t^{-gamma})^p dt; +inf unless gamma*p > 1.
double tail_p_moment(const PowerTail& tl, double p) {
  double gp = tl.gamma * p;
  if (gp <= 1.0) return kInf;
  return std::pow(tl.c, p) * std::pow(tl.T, 1.0 - gp) / (gp - 1.0);
}

}  // namespace

double lp_norm(const RearrangementProfile& f, double p) {
  require_p(p);
  return std::pow(p_moment(f, 0.0, kInf, p), 1.0 / p);
}

double lp_norm(const StepFunction& f, double p) {
  require_p(p);
  double s = 0.0;
  for (const StepAtom& at : f.atoms()) s += std::pow(std::fabs(at.v), p) * (at.b - at.a);
  return std::pow(s, 1.0 / p);
}

double weak_lorentz_norm(const RearrangementProfile& f, double p) {
  require_p(p);
  double best = 0.0;
  for (const ProfilePiece& pc : f.pieces()) {
    if (pc.v <= 0.0) continue;
    double s = pc.v * std::pow(pc.t1, 1.0 / p);
    if (s > best) best = s;
  }
  if (f.tail()) {
    const PowerTail& tl = *f.tail();
    if (tl.gamma < 1.0 / p) return kInf;  // c t^{1/p - gamma} unbounded
    double s = tl.c * std::pow(tl.T, 1.0 / p - tl.gamma);
    if (s > best) best = s;
  }
  return best;
}

double lorentz_norm(const RearrangementProfile& f, double p, double q) {
  require_p(p);
  if (std::isnan(q) || !(q > 0.0)) throw std::domain_error("norms: q must be in (0, inf]");
  if (q == kInf) return weak_lorentz_norm(f, p);
  double sum = 0.0;
  for (const ProfilePiece& pc : f.pieces()) {
    if (pc.v <= 0.0) continue;
    sum += std::pow(pc.v, q) * (p / q) *
           (std::pow(pc.t1, q / p) - std::pow(pc.t0, q / p));
  }
  if (f.tail()) {
    const PowerTail& tl = *f.tail();
    // integral_T^inf [t^{1/p} c t^{-gamma}]^q dt/t
    if (tl.gamma <= 1.0 / p) return kInf;
    double e = q / p - tl.gamma * q;  // < 0
    sum += std::pow(tl.c, q) * std::pow(tl.T, e) / (-e);
  }
  return std::pow(sum, 1.0 / q);
}

double approx_space_norm(const RearrangementProfile& f, const NormParams& params,
                         const QuadratureSpec& quad) {
  if (f.is_zero()) return 0.0;
  const double p = params.p, q = params.q, alpha = params.alpha;
  const auto& pieces = f.pieces();
  const std::size_t n = pieces.size();

  // Suffix p-moments G[k] = integral of f*^p over [t0_k, inf); on the
  // segment of piece k, G(sigma) = G[k+1] + v_k^p * (t1_k - sigma).
  std::vector<double> G(n + 1, 0.0);
  if (f.tail()) {
    G[n] = tail_p_moment(*f.tail(), p);
    if (G[n] == kInf) return kInf;  // every E_sigma is infinite
  }
  for (std::size_t k = n; k-- > 0;)
    G[k] = G[k + 1] + std::pow(pieces[k].v, p) * (pieces[k].t1 - pieces[k].t0);

  if (q == kInf) {
    double best = 0.0;
    auto consider = [&](double sigma, double Gval) {
      if (sigma <= 0.0 || Gval <= 0.0) return;
      double s = std::pow(sigma, alpha) * std::pow(Gval, 1.0 / p);
      if (s > best) best = s;
    };
    for (std::size_t k = 0; k < n; ++k) {
      double A = G[k + 1];
      double B = std::pow(pieces[k].v, p);
      double t1 = pieces[k].t1;
      consider(pieces[k].t0, A + B * (t1 - pieces[k].t0));
      consider(t1, A);
      if (B > 0.0) {
        // Interior critical point of sigma^{alpha p} (A + B(t1 - sigma)).
        double ap = alpha * p;
        double star = ap * (A + B * t1) / (B * (ap + 1.0));
        if (star > pieces[k].t0 && star < t1) consider(star, A + B * (t1 - star));
      }
    }
    if (f.tail()) {
      const PowerTail& tl = *f.tail();
      double s = alpha + 1.0 / p - tl.gamma;  // sigma^alpha E(sigma) ~ sigma^s
      if (s > 0.0) return kInf;
      consider(tl.T, G[n]);
    }
    return best;
  }

  const double aq = alpha * q;
  if (f.tail()) {
    double e = aq + q * (1.0 - f.tail()->gamma * p) / p;
    if (e >= 0.0) return kInf;  // tail part of the outer integral diverges
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double A = G[k + 1];
    const double B = std::pow(pieces[k].v, p);
    const double t0 = pieces[k].t0, t1 = pieces[k].t1;
    if (B == 0.0 && A == 0.0) continue;
    if (B == 0.0) {
      sum += std::pow(A, q / p) * (std::pow(t1, aq) - std::pow(t0, aq)) / aq;
      continue;
    }
    // dr = t1 - sigma, so A + B*dr is G(sigma) without cancellation, and
    // dl is the exact distance to a possibly singular left endpoint.
    sum += tanh_sinh(
        [&](double, double dl, double dr) {
          return std::pow(t0 + dl, aq - 1.0) * std::pow(A + B * dr, q / p);
        },
        t0, t1, quad);
  }
  if (f.tail()) {
    const PowerTail& tl = *f.tail();
    double e = aq + q * (1.0 - tl.gamma * p) / p;
    double Kq = std::pow(tl.c, q) * std::pow(tl.gamma * p - 1.0, -q / p);
    sum += Kq * std::pow(tl.T, e) / (-e);
  }
  return std::pow(sum, 1.0 / q);
}

}  // namespace finsupp
