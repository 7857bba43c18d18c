// The real cyclotomic ground field Q(lambda_q), lambda_q = 2cos(pi/q),
// together with the auxiliary quadratic generator used by the half-plane
// constants.
#pragma once

#include <gmpxx.h>
#include <memory>
#include <vector>

#include "rosen/interval.hpp"

namespace rosen {

// Monic integer minimal polynomial of 2cos(pi/q) over Q, ascending
// coefficients, degree phi(2q)/2.
std::vector<mpz_class> minimal_poly_two_cos_pi_over(int q);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  static FieldPtr make(int q);

  int q() const { return q_; }
  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  // Monic, ascending, rational coefficients.
  const std::vector<mpq_class>& minpoly() const { return minpoly_; }

  Interval lambda_enclosure(long prec) const;
  Interval rho_enclosure(long prec) const;

 private:
  explicit Field(int q);
  int q_;
  std::vector<mpq_class> minpoly_;
};

}  // namespace rosen
