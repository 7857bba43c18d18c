// Value-semantic MPFR wrapper.
//
// Each value carries its own precision.  Binary operations round to the
// larger of the two operand precisions, so a computation seeded with
// inputs at a chosen precision stays at that precision throughout.
#pragma once

#include <mpfr.h>

#include <gmpxx.h>
#include <string>
#include <utility>

namespace rosen {

long default_precision();
void set_default_precision(long bits);

class Real {
 public:
  Real() : Real(default_precision()) {}
  explicit Real(long prec) {
    mpfr_init2(x_, static_cast<mpfr_prec_t>(prec));
    mpfr_set_zero(x_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(x_, mpfr_get_prec(o.x_));
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(x_, o.x_);
    return *this;
  }
  ~Real() { mpfr_clear(x_); }

  static Real of(double v, long prec = 0);
  static Real of(long v, long prec = 0);
  static Real of(const mpq_class& v, long prec = 0);
  static Real pi(long prec);

  long precision() const { return mpfr_get_prec(x_); }
  mpfr_ptr raw() { return x_; }
  mpfr_srcptr raw() const { return x_; }

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  // Shortest-faithful style decimal with the given significant digits.
  std::string str(int digits = 20) const;

  int sgn() const { return mpfr_sgn(x_); }
  bool is_zero() const { return mpfr_zero_p(x_); }
  Real abs() const;
  Real neg() const;
  long floor_long() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real sqrt(const Real& a);
  friend Real log(const Real& a);

  friend bool operator<(const Real& a, const Real& b) {
    return mpfr_less_p(a.x_, b.x_) != 0;
  }
  friend bool operator<=(const Real& a, const Real& b) {
    return mpfr_lessequal_p(a.x_, b.x_) != 0;
  }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }
  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_equal_p(a.x_, b.x_) != 0;
  }

 private:
  mpfr_t x_;
};

}  // namespace rosen
