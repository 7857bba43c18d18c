#include "rosen/expansion.hpp"

#include <stdexcept>

#include "rosen/rational.hpp"

namespace rosen {

Params Params::make(int q, const mpq_class& alpha) {
  auto f = Field::make(q);
  return make(f, AlgebraicNumber::from_rational(f, alpha));
}

Params Params::make(const FieldPtr& f, const AlgebraicNumber& alpha) {
  Params P;
  P.f_ = f;
  P.q_ = f->q();
  P.lambda_ = AlgebraicNumber::lambda(f);
  P.alpha_ = alpha;
  auto half = AlgebraicNumber::from_rational(f, make_rational(1, 2));
  if (alpha < half || alpha * P.lambda_ > AlgebraicNumber::from_long(f, 1)) {
    throw std::domain_error("alpha must lie in [1/2, 1/lambda]");
  }
  P.ell0_ = (alpha - AlgebraicNumber::from_long(f, 1)) * P.lambda_;
  P.r0_ = alpha * P.lambda_;
  return P;
}

Params Params::make_rho_over_lambda(int q) {
  auto f = Field::make(q);
  return make(f, AlgebraicNumber::rho(f) / AlgebraicNumber::lambda(f));
}

Params Params::make_inv_lambda(int q) {
  auto f = Field::make(q);
  return make(f, AlgebraicNumber::lambda(f).inverse());
}

AlgebraicNumber Params::delta(long d) const {
  return ((alpha_ + AlgebraicNumber::from_long(f_, d)) * lambda_).inverse();
}

bool Params::plus_one_cylinder_nonempty() const { return r0_ > delta(1); }

bool Params::alpha_is_half() const {
  return alpha_ == AlgebraicNumber::from_rational(f_, make_rational(1, 2));
}

bool Params::alpha_is_inv_lambda() const {
  return alpha_ * lambda_ == AlgebraicNumber::from_long(f_, 1);
}

Digit digit_of(const Params& P, const AlgebraicNumber& x) {
  if (x.is_zero()) return Digit{0, 0, true};
  int eps = x.sgn();
  AlgebraicNumber ax = eps < 0 ? -x : x;
  AlgebraicNumber arg = (ax * P.lambda()).inverse() + AlgebraicNumber::from_long(P.field(), 1) - P.alpha();
  return Digit{eps, arg.floor_long(), false};
}

std::pair<Digit, AlgebraicNumber> step(const Params& P, const AlgebraicNumber& x) {
  Digit dig = digit_of(P, x);
  if (dig.infinite) return {dig, AlgebraicNumber::zero(P.field())};
  AlgebraicNumber ax = dig.eps < 0 ? -x : x;
  AlgebraicNumber next =
      ax.inverse() - AlgebraicNumber::from_long(P.field(), dig.d) * P.lambda();
  return {dig, next};
}

ExactExpansion expand(const Params& P, const AlgebraicNumber& x0, int max_steps) {
  if (x0 < P.ell0() || x0 >= P.r0()) {
    throw std::domain_error("point outside the expansion interval");
  }
  ExactExpansion e;
  e.orbit.push_back(x0);
  for (int k = 0; k < max_steps; ++k) {
    const AlgebraicNumber& x = e.orbit.back();
    if (x.is_zero()) {
      e.digits.push_back(Digit{0, 0, true});
      e.hit_zero = true;
      break;
    }
    auto [dig, next] = step(P, x);
    e.digits.push_back(dig);
    e.orbit.push_back(next);
  }
  return e;
}

FloatExpansion expand(const Params& P, const Real& x0, int max_steps,
                      long zero_band_exp) {
  const long prec = x0.precision();
  Real lam = P.lambda().to_real(prec);
  Real one_minus_alpha =
      (AlgebraicNumber::from_long(P.field(), 1) - P.alpha()).to_real(prec);
  FloatExpansion e;
  e.orbit.push_back(x0);
  mpfr_t u, arg;
  mpfr_init2(u, prec);
  mpfr_init2(arg, prec);
  for (int k = 0; k < max_steps; ++k) {
    const Real& x = e.orbit.back();
    if (x.is_zero()) {
      e.digits.push_back(Digit{0, 0, true});
      e.stop = FloatExpansion::Stop::exact_zero;
      break;
    }
    if (mpfr_get_exp(x.raw()) <= -zero_band_exp) {
      e.stop = FloatExpansion::Stop::near_zero;
      break;
    }
    int eps = x.sgn();
    mpfr_si_div(u, 1, x.raw(), MPFR_RNDN);
    if (eps < 0) mpfr_neg(u, u, MPFR_RNDN);
    mpfr_div(arg, u, lam.raw(), MPFR_RNDN);
    mpfr_add(arg, arg, one_minus_alpha.raw(), MPFR_RNDN);
    mpfr_floor(arg, arg);
    long d = mpfr_get_si(arg, MPFR_RNDN);
    e.digits.push_back(Digit{eps, d, false});
    Real next(prec);
    mpfr_mul_si(next.raw(), lam.raw(), d, MPFR_RNDN);
    mpfr_sub(next.raw(), u, next.raw(), MPFR_RNDN);
    e.orbit.push_back(next);
  }
  mpfr_clear(u);
  mpfr_clear(arg);
  return e;
}

Convergents convergents(const Params& P, const std::vector<Digit>& digits, long prec) {
  Convergents c;
  c.R.push_back(Real::of(1L, prec));
  c.R.push_back(Real::of(0L, prec));
  c.S.push_back(Real::of(0L, prec));
  c.S.push_back(Real::of(1L, prec));
  Real lam = P.lambda().to_real(prec);
  for (const Digit& dig : digits) {
    if (dig.infinite) break;
    Real dl = Real::of(dig.d, prec) * lam;
    Real eps = Real::of(static_cast<long>(dig.eps), prec);
    std::size_t n = c.R.size();
    c.R.push_back(dl * c.R[n - 1] + eps * c.R[n - 2]);
    c.S.push_back(dl * c.S[n - 1] + eps * c.S[n - 2]);
  }
  return c;
}

ExactConvergents convergents_exact(const Params& P, const std::vector<Digit>& digits) {
  const auto& f = P.field();
  ExactConvergents c;
  c.R.push_back(AlgebraicNumber::from_long(f, 1));
  c.R.push_back(AlgebraicNumber::zero(f));
  c.S.push_back(AlgebraicNumber::zero(f));
  c.S.push_back(AlgebraicNumber::from_long(f, 1));
  for (const Digit& dig : digits) {
    if (dig.infinite) break;
    AlgebraicNumber dl = AlgebraicNumber::from_long(f, dig.d) * P.lambda();
    AlgebraicNumber eps = AlgebraicNumber::from_long(f, dig.eps);
    std::size_t n = c.R.size();
    c.R.push_back(dl * c.R[n - 1] + eps * c.R[n - 2]);
    c.S.push_back(dl * c.S[n - 1] + eps * c.S[n - 2]);
  }
  return c;
}

AlgebraicNumber evaluate_finite(const Params& P, const std::vector<Digit>& digits) {
  const auto& f = P.field();
  AlgebraicNumber t = AlgebraicNumber::zero(f);
  for (std::size_t i = digits.size(); i-- > 0;) {
    const Digit& dig = digits[i];
    if (dig.infinite) {
      t = AlgebraicNumber::zero(f);
      continue;
    }
    t = AlgebraicNumber::from_long(f, dig.eps) *
        (AlgebraicNumber::from_long(f, dig.d) * P.lambda() + t).inverse();
  }
  return t;
}

AlgebraicNumber approximation_bound_coeff(const Params& P) {
  const auto& f = P.field();
  AlgebraicNumber one = AlgebraicNumber::from_long(f, 1);
  return P.alpha() * P.lambda() / (one + (P.alpha() - one) * P.lambda());
}

}  // namespace rosen
