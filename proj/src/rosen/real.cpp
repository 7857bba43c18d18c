#include "rosen/real.hpp"

#include <atomic>
#include <cstdio>
#include <vector>

namespace rosen {

namespace {
std::atomic<long> g_default_prec{128};
long pick(long prec) { return prec > 0 ? prec : default_precision(); }
}  // namespace

long default_precision() { return g_default_prec.load(std::memory_order_relaxed); }
void set_default_precision(long bits) {
  g_default_prec.store(bits < 16 ? 16 : bits, std::memory_order_relaxed);
}

Real Real::of(double v, long prec) {
  Real r(pick(prec));
  mpfr_set_d(r.x_, v, MPFR_RNDN);
  return r;
}

Real Real::of(long v, long prec) {
  Real r(pick(prec));
  mpfr_set_si(r.x_, v, MPFR_RNDN);
  return r;
}

Real Real::of(const mpq_class& v, long prec) {
  Real r(pick(prec));
  mpfr_set_q(r.x_, v.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::pi(long prec) {
  Real r(pick(prec));
  mpfr_const_pi(r.x_, MPFR_RNDN);
  return r;
}

std::string Real::str(int digits) const {
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%dRg", digits);
  char* out = nullptr;
  mpfr_asprintf(&out, fmt, x_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

Real Real::abs() const {
  Real r(precision());
  mpfr_abs(r.x_, x_, MPFR_RNDN);
  return r;
}

Real Real::neg() const {
  Real r(precision());
  mpfr_neg(r.x_, x_, MPFR_RNDN);
  return r;
}

long Real::floor_long() const {
  mpfr_t t;
  mpfr_init2(t, precision());
  mpfr_floor(t, x_);
  long v = mpfr_get_si(t, MPFR_RNDN);
  mpfr_clear(t);
  return v;
}

namespace {
long join(const Real& a, const Real& b) {
  return a.precision() > b.precision() ? a.precision() : b.precision();
}
}  // namespace

Real operator+(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}
Real sqrt(const Real& a) {
  Real r(a.precision());
  mpfr_sqrt(r.x_, a.x_, MPFR_RNDN);
  return r;
}
Real log(const Real& a) {
  Real r(a.precision());
  mpfr_log(r.x_, a.x_, MPFR_RNDN);
  return r;
}

}  // namespace rosen
