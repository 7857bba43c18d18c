// The one-parameter family of interval maps, their digit sequences, and the
// convergent recurrences.
//
// T(x) = |1/x| - lambda * floor(|1/(x*lambda)| + 1 - alpha) on
// [lambda(alpha-1), lambda*alpha), T(0) = 0, for q >= 3,
// lambda = 2cos(pi/q), alpha in [1/2, 1/lambda].
#pragma once

#include <utility>
#include <vector>

#include "rosen/algebraic.hpp"
#include "rosen/real.hpp"

namespace rosen {

struct Digit {
  int eps = 0;  // sign of the point the digit was read from
  long d = 0;
  bool infinite = false;  // the orbit landed exactly on 0
  bool operator==(const Digit&) const = default;
};

class Params {
 public:
  static Params make(int q, const mpq_class& alpha);
  static Params make(const FieldPtr& f, const AlgebraicNumber& alpha);
  static Params make_rho_over_lambda(int q);
  static Params make_inv_lambda(int q);

  int q() const { return q_; }
  const FieldPtr& field() const { return f_; }
  const AlgebraicNumber& alpha() const { return alpha_; }
  const AlgebraicNumber& lambda() const { return lambda_; }
  const AlgebraicNumber& ell0() const { return ell0_; }  // lambda*(alpha-1)
  const AlgebraicNumber& r0() const { return r0_; }      // lambda*alpha

  // Right endpoint of the d-indexed positive cylinder: 1/((alpha+d)*lambda).
  AlgebraicNumber delta(long d) const;
  // False only for q = 3 with alpha < rho, where the (+1:1) cylinder is empty.
  bool plus_one_cylinder_nonempty() const;

  bool alpha_is_half() const;
  bool alpha_is_inv_lambda() const;

 private:
  Params() = default;
  FieldPtr f_;
  int q_ = 0;
  AlgebraicNumber alpha_, lambda_, ell0_, r0_;
};

// Digit of a point of [ell0, r0); exact.
Digit digit_of(const Params& P, const AlgebraicNumber& x);
// One application of the map together with the digit it read; x must lie in
// the interval and be nonzero.
std::pair<Digit, AlgebraicNumber> step(const Params& P, const AlgebraicNumber& x);

struct ExactExpansion {
  std::vector<Digit> digits;           // digits[k] produced by orbit[k]
  std::vector<AlgebraicNumber> orbit;  // orbit[k] = T^k(x0); size digits+1 unless zero hit
  bool hit_zero = false;
};
ExactExpansion expand(const Params& P, const AlgebraicNumber& x0, int max_steps);

struct FloatExpansion {
  std::vector<Digit> digits;
  std::vector<Real> orbit;
  enum class Stop { completed, exact_zero, near_zero } stop = Stop::completed;
};
// Floating-point orbit at the precision of x0.  Points with
// |x| < 2^-zero_band_exp are treated as having reached zero.
FloatExpansion expand(const Params& P, const Real& x0, int max_steps,
                      long zero_band_exp = 64);

// Numerator/denominator recurrences R_n = d_n*lambda*R_{n-1} + eps_n*R_{n-2},
// seeded R_{-1}=1, R_0=0, S_{-1}=0, S_0=1.  Accessors take n >= -1.
struct Convergents {
  std::vector<Real> R, S;
  const Real& r(long n) const { return R[static_cast<std::size_t>(n + 1)]; }
  const Real& s(long n) const { return S[static_cast<std::size_t>(n + 1)]; }
  long max_index() const { return static_cast<long>(R.size()) - 2; }
};
Convergents convergents(const Params& P, const std::vector<Digit>& digits, long prec);

struct ExactConvergents {
  std::vector<AlgebraicNumber> R, S;
  const AlgebraicNumber& r(long n) const { return R[static_cast<std::size_t>(n + 1)]; }
  const AlgebraicNumber& s(long n) const { return S[static_cast<std::size_t>(n + 1)]; }
  long max_index() const { return static_cast<long>(R.size()) - 2; }
};
ExactConvergents convergents_exact(const Params& P, const std::vector<Digit>& digits);

// Exact value of the finite expansion (tail zero): eps_1/(d_1*lambda + eps_2/(...)).
AlgebraicNumber evaluate_finite(const Params& P, const std::vector<Digit>& digits);

// alpha*lambda / (1 + (alpha-1)*lambda); |x - R_n/S_n| <= coeff / S_n^2.
AlgebraicNumber approximation_bound_coeff(const Params& P);

}  // namespace rosen
