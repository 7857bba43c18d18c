// Directed-rounding interval arithmetic used to certify signs and floors
// of algebraic numbers.  Not a general-purpose interval library: only the
// operations the refinement loops need.
#pragma once

#include <mpfr.h>

#include <gmpxx.h>
#include <optional>
#include <string>

namespace rosen {

class Interval {
 public:
  explicit Interval(long prec);
  Interval(const Interval&);
  Interval(Interval&&) noexcept;
  Interval& operator=(const Interval&);
  Interval& operator=(Interval&&) noexcept;
  ~Interval();

  static Interval from_rational(const mpq_class& v, long prec);
  static Interval from_long(long v, long prec);
  // Enclosure of 2cos(pi/q).
  static Interval two_cos_pi_over(int q, long prec);
  // Enclosure of the positive root of x^2 + (2-t)x - 1 given an enclosure
  // of t (assumes the expression (t-2)^2 + 4 stays positive, which it does).
  static Interval positive_quadratic_root(const Interval& t);

  long precision() const { return prec_; }
  bool strictly_positive() const;
  bool strictly_negative() const;
  bool contains_zero() const;

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval neg() const;

  // Floor of every point in the interval if it is the same integer,
  // otherwise nullopt.
  std::optional<long> uniform_floor() const;
  // The unique integer contained in the interval when the width is < 1 and
  // an integer is inside; nullopt otherwise.
  std::optional<long> straddled_integer() const;

  // Midpoint rounded into an mpfr value at the given precision.
  void midpoint(mpfr_ptr out) const;

  std::string str() const;

 private:
  long prec_;
  mpfr_t lo_, hi_;
};

}  // namespace rosen
