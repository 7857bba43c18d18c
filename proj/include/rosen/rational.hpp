// Exact rational helpers on top of gmpxx.
#pragma once

#include <gmpxx.h>
#include <string>

namespace rosen {

// Parse "p/q", "p", or a decimal string like "0.5038" into an exact rational.
// Throws std::invalid_argument on malformed input.
mpq_class parse_rational(const std::string& s);

// Canonical construction from a (possibly non-coprime) pair.
inline mpq_class make_rational(long num, long den) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

inline mpz_class floor_div(const mpq_class& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

std::string to_string(const mpq_class& x);

}  // namespace rosen
