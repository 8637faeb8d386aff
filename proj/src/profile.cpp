#include "finsupp/profile.hpp"

#include <cmath>
#include <stdexcept>

namespace finsupp {

namespace {

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

RearrangementProfile::RearrangementProfile(std::vector<ProfilePiece> pieces,
                                           std::optional<PowerTail> tail)
    : pieces_(std::move(pieces)), tail_(std::move(tail)) {
  if (tail_) {
    if (!(std::isfinite(tail_->T) && tail_->T > 0.0) ||
        !(std::isfinite(tail_->c) && tail_->c > 0.0) ||
        !(std::isfinite(tail_->gamma) && tail_->gamma > 0.0))
      throw std::invalid_argument("profile: tail requires T > 0, c > 0, gamma > 0");
    if (pieces_.empty()) {
      // Implicit cap keeping the profile constant up to the tail start.
      double cap = tail_->c * std::pow(tail_->T, -tail_->gamma);
      pieces_.push_back({0.0, tail_->T, cap});
    }
  }
  if (pieces_.empty()) return;  // zero profile

  if (pieces_.front().t0 != 0.0)
    throw std::invalid_argument("profile: pieces must start at t = 0");
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    const ProfilePiece& pc = pieces_[k];
    if (!std::isfinite(pc.t0) || !std::isfinite(pc.t1) || !(pc.t0 < pc.t1))
      throw std::invalid_argument("profile: piece needs finite t0 < t1");
    if (!finite_nonneg(pc.v))
      throw std::invalid_argument("profile: piece value must be finite and >= 0");
    if (k > 0) {
      if (pieces_[k - 1].t1 != pc.t0)
        throw std::invalid_argument("profile: pieces must tile contiguously");
      if (pc.v > pieces_[k - 1].v)
        throw std::invalid_argument("profile: piece values must be nonincreasing");
    }
  }
  if (tail_) {
    if (pieces_.back().t1 != tail_->T)
      throw std::invalid_argument("profile: tail must start where pieces end");
    double at_T = tail_->c * std::pow(tail_->T, -tail_->gamma);
    // Tiny relative slack so junction values computed by callers round-trip.
    if (pieces_.back().v < at_T * (1.0 - 1e-12))
      throw std::invalid_argument("profile: profile must not increase at the tail junction");
  }
}

double RearrangementProfile::pieces_end() const {
  return pieces_.empty() ? 0.0 : pieces_.back().t1;
}

double RearrangementProfile::support_measure() const {
  if (tail_) return kInf;
  for (std::size_t k = pieces_.size(); k-- > 0;)
    if (pieces_[k].v > 0.0) return pieces_[k].t1;
  return 0.0;
}

RearrangementProfile RearrangementProfile::scaled(double c) const {
  if (!(std::isfinite(c) && c > 0.0))
    throw std::invalid_argument("profile: scale factor must be finite and > 0");
  std::vector<ProfilePiece> ps = pieces_;
  for (ProfilePiece& pc : ps) pc.v *= c;
  std::optional<PowerTail> tl = tail_;
  if (tl) tl->c *= c;
  return RearrangementProfile(std::move(ps), std::move(tl));
}

double evaluate(const RearrangementProfile& f, double t) {
  if (!(t > 0.0)) throw std::domain_error("evaluate: t must be > 0");
  for (const ProfilePiece& pc : f.pieces())
    if (t < pc.t1) return pc.v;
  if (f.tail()) return f.tail()->c * std::pow(t, -f.tail()->gamma);
  return 0.0;
}

double distribution(const RearrangementProfile& f, double lambda) {
  if (!(lambda >= 0.0)) throw std::domain_error("distribution: lambda must be >= 0");
  if (lambda == 0.0) return f.support_measure();
  if (f.tail() && f.tail()->c * std::pow(f.tail()->T, -f.tail()->gamma) > lambda)
    return std::pow(f.tail()->c / lambda, 1.0 / f.tail()->gamma);
  double m = 0.0;
  for (const ProfilePiece& pc : f.pieces()) {
    if (pc.v > lambda)
      m = pc.t1;
    else
      break;
  }
  return m;
}

double p_moment(const RearrangementProfile& f, double a, double b, double p) {
  if (!(std::isfinite(p) && p > 0.0)) throw std::domain_error("p_moment: p must be in (0, inf)");
  if (!(a >= 0.0) || std::isnan(b) || b < a)
    throw std::domain_error("p_moment: need 0 <= a <= b");
  double total = 0.0;
  for (const ProfilePiece& pc : f.pieces()) {
    double lo = std::max(a, pc.t0);
    double hi = std::min(b, pc.t1);
    if (lo < hi && pc.v > 0.0) total += std::pow(pc.v, p) * (hi - lo);
  }
  if (f.tail()) {
    const PowerTail& tl = *f.tail();
    double lo = std::max(a, tl.T);
    double gp = tl.gamma * p;
    double cp = std::pow(tl.c, p);
    if (b == kInf) {
      if (gp <= 1.0) return kInf;
      total += cp * std::pow(lo, 1.0 - gp) / (gp - 1.0);
    } else if (lo < b) {
      if (gp == 1.0)
        total += cp * std::log(b / lo);
      else
        total += cp * (std::pow(lo, 1.0 - gp) - std::pow(b, 1.0 - gp)) / (gp - 1.0);
    }
  }
  return total;
}

double approx_error(const RearrangementProfile& f, double sigma, double p) {
  if (!(sigma >= 0.0)) throw std::domain_error("approx_error: sigma must be >= 0");
  return std::pow(p_moment(f, sigma, kInf, p), 1.0 / p);
}

NormParams NormParams::from_alpha(double p, double q, double alpha) {
  if (!(std::isfinite(p) && p > 0.0)) throw std::invalid_argument("NormParams: p must be in (0, inf)");
  if (std::isnan(q) || !(q > 0.0)) throw std::invalid_argument("NormParams: q must be in (0, inf]");
  if (!(std::isfinite(alpha) && alpha > 0.0))
    throw std::invalid_argument("NormParams: alpha must be in (0, inf)");
  NormParams np;
  np.p = p;
  np.q = q;
  np.alpha = alpha;
  np.p1 = 1.0 / (alpha + 1.0 / p);
  return np;
}

NormParams NormParams::from_p1(double p, double q, double p1) {
  if (!(std::isfinite(p) && p > 0.0)) throw std::invalid_argument("NormParams: p must be in (0, inf)");
  if (!(std::isfinite(p1) && p1 > 0.0 && p1 < p))
    throw std::invalid_argument("NormParams: p1 must be in (0, p)");
  NormParams np = from_alpha(p, q, 1.0 / p1 - 1.0 / p);
  np.p1 = p1;  // keep the caller's value rather than the round trip
  return np;
}

}  // namespace finsupp
