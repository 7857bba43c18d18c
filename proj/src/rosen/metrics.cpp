#include "rosen/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rosen/expansion.hpp"

namespace rosen {

ThetaPair theta_from_orbit(const Real& t, const Real& v, int eps_next) {
  long prec = std::max(t.precision(), v.precision());
  Real one = Real::of(1L, prec);
  Real den = one + t * v;
  if (den.sgn() <= 0) throw std::logic_error("orbit point outside the domain: 1 + t v <= 0");
  ThetaPair p;
  p.theta_prev = v / den;
  p.theta_cur = (Real::of(static_cast<long>(eps_next), prec) * t) / den;
  p.eps_next = eps_next;
  return p;
}

Real theta_direct(const Params& P, const Real& x0, int n) {
  long prec = x0.precision();
  if (n == 0) return x0.abs();
  FloatExpansion e = expand(P, x0, n);
  if (static_cast<int>(e.digits.size()) < n || (!e.digits.empty() && e.digits.back().infinite))
    return Real::of(0L, prec);  // orbit terminated before the n-th convergent
  Convergents cv = convergents(P, e.digits, prec);
  const Real& S = cv.s(n);
  return S * S * (x0 - cv.r(n) / S).abs();
}

std::vector<Real> theta_sequence(const Params& P, const Real& x0, int n) {
  long prec = x0.precision();
  FloatExpansion e = expand(P, x0, n);
  Convergents cv = convergents(P, e.digits, prec);
  Real one = Real::of(1L, prec);
  std::vector<Real> out;
  for (std::size_t k = 0; k < e.digits.size(); ++k) {
    if (e.digits[k].infinite) break;
    long m = static_cast<long>(k) + 1;  // orbit[m] = T^m x0 pairs with v_m
    if (m >= static_cast<long>(e.orbit.size())) break;
    const Real& t = e.orbit[static_cast<std::size_t>(m)];
    Real v = cv.s(m - 1) / cv.s(m);
    out.push_back(t.abs() / (one + t * v));
  }
  return out;
}

std::pair<Real, Real> f_map(const Real& t, const Real& v) {
  long prec = std::max(t.precision(), v.precision());
  Real den = Real::of(1L, prec) + t * v;
  if (den.is_zero()) throw std::domain_error("f_map singular: t v = -1");
  return {v / den, t / den};
}

std::pair<Real, Real> f_inverse(const Real& xi, const Real& eta) {
  long prec = std::max(xi.precision(), eta.precision());
  Real one = Real::of(1L, prec);
  Real rad = one - Real::of(4L, prec) * xi * eta;
  if (rad.sgn() < 0) throw std::domain_error("f_inverse: 4 xi eta > 1 has no preimage");
  Real den = one + sqrt(rad);
  Real two = Real::of(2L, prec);
  return {two * eta / den, two * xi / den};
}

ThetaDensity::ThetaDensity(const Domain& D, long prec) {
  DomainSnapshot s = snapshot(D, prec);
  breaks_.reserve(s.breaks.size());
  for (const Real& b : s.breaks) breaks_.push_back(b.to_double());
  heights_.reserve(s.heights.size());
  for (const Real& h : s.heights) heights_.push_back(h.to_double());
  C_ = normalizing_constant(D.params, prec).to_double();
  // xi = v/(1+tv) is decreasing in t and increasing in v, so its maximum
  // over a rectangle sits at the top-left corner; eta = |t|/(1+tv) is
  // maximal either at a top-left corner (t < 0) or at the right endpoint
  // with v = 0 (t > 0).
  for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
    double lo = breaks_[i], hi = breaks_[i + 1], h = heights_[i];
    xi_max_ = std::max(xi_max_, h / (1.0 + lo * h));
    if (lo < 0) eta_max_ = std::max(eta_max_, -lo / (1.0 + lo * h));
    if (hi > 0) eta_max_ = std::max(eta_max_, hi);
  }
}

bool ThetaDensity::member(double t, double v) const {
  if (v < 0 || breaks_.empty()) return false;
  if (t < breaks_.front() || t >= breaks_.back()) return false;
  std::size_t i =
      static_cast<std::size_t>(std::upper_bound(breaks_.begin(), breaks_.end(), t) -
                               breaks_.begin()) - 1;
  if (i >= heights_.size()) return false;
  return v <= heights_[i];
}

bool ThetaDensity::in_plus(double xi, double eta) const {
  if (xi < 0 || eta < 0) return false;
  double rad = 1.0 - 4.0 * xi * eta;
  if (rad < 0) return false;
  double den = 1.0 + std::sqrt(rad);
  return member(2.0 * eta / den, 2.0 * xi / den);
}

bool ThetaDensity::in_minus(double xi, double eta) const {
  if (xi < 0 || eta < 0) return false;
  double den = 1.0 + std::sqrt(1.0 + 4.0 * xi * eta);
  return member(-2.0 * eta / den, 2.0 * xi / den);
}

double ThetaDensity::density(double xi, double eta) const {
  double d = 0.0;
  if (in_plus(xi, eta)) d += C_ / std::sqrt(1.0 - 4.0 * xi * eta);
  if (in_minus(xi, eta)) d += C_ / std::sqrt(1.0 + 4.0 * xi * eta);
  return d;
}

AlgebraicNumber lenstra_constant(const Params& P) {
  if (P.q() % 2 != 0)
    throw std::domain_error("linear-law threshold has a closed form for even q only");
  const FieldPtr& f = P.field();
  const AlgebraicNumber& lam = P.lambda();
  AlgebraicNumber two = AlgebraicNumber::from_long(f, 2);
  AlgebraicNumber four = AlgebraicNumber::from_long(f, 4);
  AlgebraicNumber a = lam / (lam + two);
  AlgebraicNumber b = lam * (two - P.alpha() * lam * lam) / (four - lam * lam);
  return (a - b).sgn() <= 0 ? a : b;
}

}  // namespace rosen
