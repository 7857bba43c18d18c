// Exact arithmetic in Q(lambda_q)[rho], where rho is the positive root of
// x^2 + (2 - lambda)x - 1 = 0.  Elements are stored as a + b*rho with a, b
// polynomials in lambda reduced modulo the minimal polynomial; all
// predicates (sign, floor, comparisons) are exact, decided by the zero
// test plus interval refinement.
#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rosen/field.hpp"
#include "rosen/real.hpp"

namespace rosen {

class AlgebraicNumber {
 public:
  AlgebraicNumber() = default;  // invalid until assigned

  static AlgebraicNumber zero(const FieldPtr& f);
  static AlgebraicNumber from_rational(const FieldPtr& f, const mpq_class& v);
  static AlgebraicNumber from_long(const FieldPtr& f, long v);
  static AlgebraicNumber lambda(const FieldPtr& f);
  static AlgebraicNumber rho(const FieldPtr& f);

  bool valid() const { return static_cast<bool>(f_); }
  const FieldPtr& field() const { return f_; }

  bool is_zero() const;          // exact
  int sgn() const;               // exact
  bool is_rational() const;      // true iff the reduced form lies in Q
  mpq_class rational_value() const;
  long floor_long() const;       // exact
  AlgebraicNumber abs() const;

  AlgebraicNumber operator-() const;
  AlgebraicNumber operator+(const AlgebraicNumber&) const;
  AlgebraicNumber operator-(const AlgebraicNumber&) const;
  AlgebraicNumber operator*(const AlgebraicNumber&) const;
  AlgebraicNumber operator/(const AlgebraicNumber&) const;
  AlgebraicNumber inverse() const;

  bool operator==(const AlgebraicNumber& o) const { return (*this - o).is_zero(); }
  bool operator!=(const AlgebraicNumber& o) const { return !(*this == o); }
  bool operator<(const AlgebraicNumber& o) const { return (*this - o).sgn() < 0; }
  bool operator<=(const AlgebraicNumber& o) const { return (*this - o).sgn() <= 0; }
  bool operator>(const AlgebraicNumber& o) const { return (*this - o).sgn() > 0; }
  bool operator>=(const AlgebraicNumber& o) const { return (*this - o).sgn() >= 0; }

  Interval enclosure(long prec) const;
  Real to_real(long prec) const;
  double to_double() const;

  // Exact textual form, e.g. "(-1/2 + 1/2*L) + (1)*R".
  std::string str() const;
  std::string decimal(int digits = 30) const;

 private:
  AlgebraicNumber(FieldPtr f, std::vector<mpq_class> a, std::vector<mpq_class> b);
  FieldPtr f_;
  std::vector<mpq_class> a_, b_;  // lambda-polynomials, ascending, reduced
};

}  // namespace rosen
