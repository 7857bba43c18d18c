#include "rosen/algebraic.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

#include "rosen/rational.hpp"

namespace rosen {

namespace {

using QPoly = std::vector<mpq_class>;  // ascending; empty == zero polynomial

void normalize(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly q_add(const QPoly& a, const QPoly& b) {
  QPoly c(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  normalize(c);
  return c;
}

QPoly q_neg(const QPoly& a) {
  QPoly c = a;
  for (auto& x : c) x = -x;
  return c;
}

QPoly q_sub(const QPoly& a, const QPoly& b) { return q_add(a, q_neg(b)); }

QPoly q_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  normalize(c);
  return c;
}

QPoly q_scale(const QPoly& a, const mpq_class& s) {
  if (s == 0) return {};
  QPoly c = a;
  for (auto& x : c) x *= s;
  return c;
}

// Division with remainder; divisor must be nonzero.
std::pair<QPoly, QPoly> q_divrem(const QPoly& a, const QPoly& b) {
  assert(!b.empty());
  QPoly rem = a, quo;
  if (a.size() >= b.size()) {
    quo.assign(a.size() - b.size() + 1, mpq_class(0));
    mpq_class inv_lead = 1 / b.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
      if (rem.size() < k + b.size()) continue;
      mpq_class q = rem[k + b.size() - 1] * inv_lead;
      if (q == 0) continue;
      quo[k] = q;
      for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= q * b[j];
      normalize(rem);
    }
    normalize(quo);
  }
  return {quo, rem};
}

QPoly q_mod(const QPoly& a, const QPoly& m) { return q_divrem(a, m).second; }

// Inverse of a modulo the irreducible monic m (a nonzero mod m).
QPoly q_inverse_mod(const QPoly& a, const QPoly& m) {
  QPoly r0 = m, r1 = q_mod(a, m);
  if (r1.empty()) throw std::domain_error("division by zero in Q(lambda)");
  QPoly u0, u1 = {mpq_class(1)};  // coefficients of a in r0, r1
  while (!r1.empty()) {
    auto [q, r] = q_divrem(r0, r1);
    QPoly u2 = q_sub(u0, q_mul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.size() != 1) throw std::logic_error("gcd with minimal polynomial not constant");
  return q_mod(q_scale(u0, 1 / r0[0]), m);
}

Interval eval_enclosure(const QPoly& p, const Interval& x, long prec) {
  Interval acc = Interval::from_long(0, prec);
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * x + Interval::from_rational(p[i], prec);
  }
  return acc;
}

const long kMaxRefinePrec = 1L << 22;

}  // namespace

AlgebraicNumber::AlgebraicNumber(FieldPtr f, std::vector<mpq_class> a,
                                 std::vector<mpq_class> b)
    : f_(std::move(f)), a_(std::move(a)), b_(std::move(b)) {
  const auto& m = f_->minpoly();
  a_ = q_mod(a_, m);
  b_ = q_mod(b_, m);
}

AlgebraicNumber AlgebraicNumber::zero(const FieldPtr& f) {
  return AlgebraicNumber(f, {}, {});
}

AlgebraicNumber AlgebraicNumber::from_rational(const FieldPtr& f, const mpq_class& v) {
  if (v == 0) return zero(f);
  return AlgebraicNumber(f, {v}, {});
}

AlgebraicNumber AlgebraicNumber::from_long(const FieldPtr& f, long v) {
  return from_rational(f, mpq_class(v));
}

AlgebraicNumber AlgebraicNumber::lambda(const FieldPtr& f) {
  return AlgebraicNumber(f, {mpq_class(0), mpq_class(1)}, {});
}

AlgebraicNumber AlgebraicNumber::rho(const FieldPtr& f) {
  return AlgebraicNumber(f, {}, {mpq_class(1)});
}

bool AlgebraicNumber::is_zero() const {
  if (a_.empty() && b_.empty()) return true;
  if (b_.empty()) return false;  // nonzero reduced lambda-polynomial
  if (a_.empty()) return false;  // b*rho with b != 0, rho != 0
  const auto& m = f_->minpoly();
  // a + b*rho == 0 iff rho == -a/b lies in Q(lambda); rho is the positive
  // root of x^2 + (2 - lambda)x - 1.
  QPoly c = q_mod(q_mul(q_neg(a_), q_inverse_mod(b_, m)), m);
  QPoly lam = {mpq_class(0), mpq_class(1)};
  QPoly quad = q_add(q_mul(c, c),
                     q_sub(q_mul(q_sub(QPoly{mpq_class(2)}, lam), c),
                           QPoly{mpq_class(1)}));
  quad = q_mod(quad, m);
  if (!quad.empty()) return false;
  // c satisfies the quadratic; value vanishes iff c is the positive root.
  AlgebraicNumber cval(f_, c, {});
  return cval.sgn() > 0;
}

int AlgebraicNumber::sgn() const {
  if (is_zero()) return 0;
  for (long p = 64;; p *= 2) {
    Interval I = enclosure(p);
    if (I.strictly_positive()) return 1;
    if (I.strictly_negative()) return -1;
    if (p > kMaxRefinePrec) throw std::logic_error("sign refinement diverged");
  }
}

bool AlgebraicNumber::is_rational() const {
  return b_.empty() && a_.size() <= 1;
}

mpq_class AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw std::logic_error("not rational");
  return a_.empty() ? mpq_class(0) : a_[0];
}

long AlgebraicNumber::floor_long() const {
  if (is_rational()) {
    mpz_class f = floor_div(rational_value());
    if (!f.fits_slong_p()) throw std::overflow_error("floor out of range");
    return f.get_si();
  }
  for (long p = 64;; p *= 2) {
    Interval I = enclosure(p);
    if (auto uf = I.uniform_floor()) return *uf;
    if (auto m = I.straddled_integer()) {
      if ((*this - from_long(f_, *m)).is_zero()) return *m;
    }
    if (p > kMaxRefinePrec) throw std::logic_error("floor refinement diverged");
  }
}

AlgebraicNumber AlgebraicNumber::abs() const { return sgn() < 0 ? -*this : *this; }

AlgebraicNumber AlgebraicNumber::operator-() const {
  return AlgebraicNumber(f_, q_neg(a_), q_neg(b_));
}

AlgebraicNumber AlgebraicNumber::operator+(const AlgebraicNumber& o) const {
  assert(f_ == o.f_);
  return AlgebraicNumber(f_, q_add(a_, o.a_), q_add(b_, o.b_));
}

AlgebraicNumber AlgebraicNumber::operator-(const AlgebraicNumber& o) const {
  assert(f_ == o.f_);
  return AlgebraicNumber(f_, q_sub(a_, o.a_), q_sub(b_, o.b_));
}

AlgebraicNumber AlgebraicNumber::operator*(const AlgebraicNumber& o) const {
  assert(f_ == o.f_);
  // (a1 + b1 r)(a2 + b2 r) with r^2 = (lambda - 2) r + 1
  QPoly lam_m2 = {mpq_class(-2), mpq_class(1)};
  QPoly bb = q_mul(b_, o.b_);
  QPoly a = q_add(q_mul(a_, o.a_), bb);
  QPoly b = q_add(q_add(q_mul(a_, o.b_), q_mul(b_, o.a_)), q_mul(lam_m2, bb));
  return AlgebraicNumber(f_, std::move(a), std::move(b));
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  const auto& m = f_->minpoly();
  if (a_.empty() && b_.empty()) throw std::domain_error("inverse of zero");
  if (b_.empty()) {
    return AlgebraicNumber(f_, q_inverse_mod(a_, m), {});
  }
  // Multiply by the conjugate a + b((lambda-2) - rho); the norm
  // N = a^2 + ab(lambda-2) - b^2 lies in Q(lambda).
  QPoly lam_m2 = {mpq_class(-2), mpq_class(1)};
  QPoly norm = q_mod(
      q_sub(q_add(q_mul(a_, a_), q_mul(q_mul(a_, b_), lam_m2)), q_mul(b_, b_)), m);
  if (norm.empty()) throw std::logic_error("degenerate quadratic generator");
  QPoly ninv = q_inverse_mod(norm, m);
  QPoly conj_a = q_add(a_, q_mul(b_, lam_m2));
  QPoly conj_b = q_neg(b_);
  return AlgebraicNumber(f_, q_mod(q_mul(conj_a, ninv), m),
                         q_mod(q_mul(conj_b, ninv), m));
}

AlgebraicNumber AlgebraicNumber::operator/(const AlgebraicNumber& o) const {
  return *this * o.inverse();
}

Interval AlgebraicNumber::enclosure(long prec) const {
  Interval lam = f_->lambda_enclosure(prec);
  Interval A = eval_enclosure(a_, lam, prec);
  if (b_.empty()) return A;
  Interval B = eval_enclosure(b_, lam, prec);
  return A + B * Interval::positive_quadratic_root(lam);
}

Real AlgebraicNumber::to_real(long prec) const {
  Real r(prec);
  enclosure(prec + 64).midpoint(r.raw());
  return r;
}

double AlgebraicNumber::to_double() const { return to_real(64).to_double(); }

namespace {
std::string poly_str(const QPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << " + ";
    os << p[i].get_str();
    if (i == 1) os << "*L";
    if (i > 1) os << "*L^" << i;
  }
  return os.str();
}
}  // namespace

std::string AlgebraicNumber::str() const {
  std::string s = "(" + poly_str(a_) + ")";
  if (!b_.empty()) s += " + (" + poly_str(b_) + ")*R";
  return s;
}

std::string AlgebraicNumber::decimal(int digits) const {
  long prec = static_cast<long>(digits * 3.33) + 32;
  return to_real(prec).str(digits);
}

}  // namespace rosen
