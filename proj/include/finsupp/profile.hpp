#pragma once

#include <limits>
#include <optional>
#include <vector>

namespace finsupp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Constant value v >= 0 on the half-open interval [t0, t1).
struct ProfilePiece {
  double t0 = 0.0;
  double t1 = 0.0;
  double v = 0.0;
};

// Algebraic tail c * t^{-gamma} on [T, +inf), c > 0, gamma > 0.
struct PowerTail {
  double T = 1.0;
  double c = 1.0;
  double gamma = 1.0;
};

// A nonincreasing, right-continuous function on [0, +inf): the decreasing
// rearrangement of something.  Finitely many constant pieces tiling
// [0, T) contiguously, optionally followed by a power tail on [T, +inf).
//
// The junction must not increase: the last piece value must be >= the
// tail value at T.  A profile with a tail and no explicit pieces gets an
// implicit cap piece of value c*T^{-gamma} on [0, T).
class RearrangementProfile {
 public:
  RearrangementProfile() = default;  // the zero function

  RearrangementProfile(std::vector<ProfilePiece> pieces,
                       std::optional<PowerTail> tail);

  const std::vector<ProfilePiece>& pieces() const { return pieces_; }
  const std::optional<PowerTail>& tail() const { return tail_; }

  bool is_zero() const { return pieces_.empty() && !tail_; }

  // End of the last piece (== tail start when a tail is present),
  // 0 for the zero profile.
  double pieces_end() const;

  // Measure of the support: pieces_end() without a tail (trailing zero
  // pieces excluded), +inf with one.
  double support_measure() const;

  // Pointwise multiple c*f, c > 0.
  RearrangementProfile scaled(double c) const;

 private:
  std::vector<ProfilePiece> pieces_;
  std::optional<PowerTail> tail_;
};

// f*(t) for t > 0.  Right-continuous; 0 beyond the support.
double evaluate(const RearrangementProfile& f, double t);

// Distribution function mu(lambda) = |{f* > lambda}|, lambda >= 0.
// +inf when the tail keeps f* above lambda on an unbounded set.
double distribution(const RearrangementProfile& f, double lambda);

// integral of f*(t)^p over [a, b), 0 <= a <= b <= +inf.  +inf when the
// tail integral diverges (gamma*p <= 1 and b = +inf beyond a positive tail).
double p_moment(const RearrangementProfile& f, double a, double b, double p);

// E_sigma(f)_p = ( integral_sigma^inf f*(t)^p dt )^{1/p}: the distance, in
// L_p, from f to its best approximation supported on sigma units of measure.
double approx_error(const RearrangementProfile& f, double sigma, double p);

// Parameter bundle for the approximation-space scale: exponent alpha > 0,
// primary exponent p > 0, fine index q in (0, +inf].  The secondary
// exponent p1 is tied to (alpha, p) by 1/p1 = alpha + 1/p; construct from
// either side.
struct NormParams {
  double p = 1.0;
  double q = 1.0;
  double alpha = 1.0;
  double p1 = 0.5;

  static NormParams from_alpha(double p, double q, double alpha);
  static NormParams from_p1(double p, double q, double p1);

  // In the K-functional couple (L_p, L_{p1,inf}) the decay rate is
  // r = 1/p1 - 1/p, which equals alpha.
  double r() const { return alpha; }
};

}  // namespace finsupp
