#include "rosen/interval.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace rosen {

Interval::Interval(long prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    prec_ = o.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  if (this != &o) {
    prec_ = o.prec_;
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_rational(const mpq_class& v, long prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_long(long v, long prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::two_cos_pi_over(int q, long prec) {
  if (q < 3) throw std::invalid_argument("q must be >= 3");
  Interval r(prec);
  mpfr_t alo, ahi;
  mpfr_init2(alo, prec);
  mpfr_init2(ahi, prec);
  mpfr_const_pi(alo, MPFR_RNDD);
  mpfr_const_pi(ahi, MPFR_RNDU);
  mpfr_div_si(alo, alo, q, MPFR_RNDD);
  mpfr_div_si(ahi, ahi, q, MPFR_RNDU);
  // cos decreases on [0, pi/3], so the enclosure swaps endpoints.
  mpfr_cos(r.lo_, ahi, MPFR_RNDD);
  mpfr_cos(r.hi_, alo, MPFR_RNDU);
  mpfr_mul_2ui(r.lo_, r.lo_, 1, MPFR_RNDD);
  mpfr_mul_2ui(r.hi_, r.hi_, 1, MPFR_RNDU);
  mpfr_clear(alo);
  mpfr_clear(ahi);
  return r;
}

Interval Interval::positive_quadratic_root(const Interval& t) {
  // (t - 2 + sqrt((t-2)^2 + 4)) / 2
  long prec = t.prec_;
  Interval tm2 = t - Interval::from_long(2, prec);
  Interval disc = tm2 * tm2 + Interval::from_long(4, prec);
  Interval s(prec);
  mpfr_sqrt(s.lo_, disc.lo_, MPFR_RNDD);
  mpfr_sqrt(s.hi_, disc.hi_, MPFR_RNDU);
  Interval num = tm2 + s;
  Interval r(prec);
  mpfr_div_2ui(r.lo_, num.lo_, 1, MPFR_RNDD);
  mpfr_div_2ui(r.hi_, num.hi_, 1, MPFR_RNDU);
  return r;
}

bool Interval::strictly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::strictly_negative() const { return mpfr_sgn(hi_) < 0; }
bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

Interval Interval::operator+(const Interval& o) const {
  long prec = std::max(prec_, o.prec_);
  Interval r(prec);
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  long prec = std::max(prec_, o.prec_);
  Interval r(prec);
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  long prec = std::max(prec_, o.prec_);
  Interval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  // min over the four corner products, rounded down
  mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  // max over the four corner products, rounded up
  mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval Interval::neg() const {
  Interval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

std::optional<long> Interval::uniform_floor() const {
  mpfr_t fl, fh;
  mpfr_init2(fl, prec_);
  mpfr_init2(fh, prec_);
  mpfr_floor(fl, lo_);
  mpfr_floor(fh, hi_);
  std::optional<long> out;
  if (mpfr_equal_p(fl, fh) && mpfr_fits_slong_p(fl, MPFR_RNDN)) {
    out = mpfr_get_si(fl, MPFR_RNDN);
  }
  mpfr_clear(fl);
  mpfr_clear(fh);
  return out;
}

std::optional<long> Interval::straddled_integer() const {
  mpfr_t w, c;
  mpfr_init2(w, prec_);
  mpfr_init2(c, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  std::optional<long> out;
  if (mpfr_cmp_ui(w, 1) < 0) {
    mpfr_ceil(c, lo_);
    if (mpfr_cmp(c, hi_) <= 0 && mpfr_fits_slong_p(c, MPFR_RNDN)) {
      out = mpfr_get_si(c, MPFR_RNDN);
    }
  }
  mpfr_clear(w);
  mpfr_clear(c);
  return out;
}

void Interval::midpoint(mpfr_ptr out) const {
  mpfr_add(out, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(out, out, 1, MPFR_RNDN);
}

std::string Interval::str() const {
  char* a = nullptr;
  char* b = nullptr;
  mpfr_asprintf(&a, "%.20Rg", lo_);
  mpfr_asprintf(&b, "%.20Rg", hi_);
  std::string s = std::string("[") + a + ", " + b + "]";
  mpfr_free_str(a);
  mpfr_free_str(b);
  return s;
}

}  // namespace rosen
