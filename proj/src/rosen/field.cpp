#include "rosen/field.hpp"

#include <cassert>
#include <stdexcept>

namespace rosen {

namespace {

using ZPoly = std::vector<mpz_class>;  // ascending coefficients

ZPoly zp_one() { return {mpz_class(1)}; }

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  ZPoly c(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Exact division of integer polynomials (remainder known to vanish).
ZPoly zp_div(const ZPoly& a, const ZPoly& b) {
  ZPoly rem = a;
  assert(b.back() != 0);
  if (rem.size() < b.size()) throw std::logic_error("bad poly division");
  ZPoly quo(rem.size() - b.size() + 1, mpz_class(0));
  for (std::size_t k = quo.size(); k-- > 0;) {
    mpz_class q = rem[k + b.size() - 1] / b.back();
    quo[k] = q;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= q * b[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::logic_error("poly division not exact");
  return quo;
}

ZPoly z_pow_minus_one(int d) {
  ZPoly p(d + 1, mpz_class(0));
  p[0] = -1;
  p[d] = 1;
  return p;
}

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

// Cyclotomic polynomial Phi_n via the Moebius product.
ZPoly cyclotomic(int n) {
  ZPoly num = zp_one(), den = zp_one();
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = moebius(n / d);
    if (mu == 1) num = zp_mul(num, z_pow_minus_one(d));
    if (mu == -1) den = zp_mul(den, z_pow_minus_one(d));
  }
  return zp_div(num, den);
}

}  // namespace

std::vector<mpz_class> minimal_poly_two_cos_pi_over(int q) {
  if (q < 3) throw std::invalid_argument("q must be >= 3");
  // 2cos(pi/q) = z + 1/z with z a primitive 2q-th root of unity.  Phi_2q is
  // palindromic of degree 2D; fold it with z^k + z^-k = V_k(z + 1/z) where
  // V_0 = 2, V_1 = y, V_k = y*V_{k-1} - V_{k-2}.
  ZPoly phi = cyclotomic(2 * q);
  int D = (static_cast<int>(phi.size()) - 1) / 2;
  assert(static_cast<int>(phi.size()) == 2 * D + 1);
  for (int k = 0; k <= 2 * D; ++k) assert(phi[k] == phi[2 * D - k]);

  std::vector<ZPoly> V(D + 1);
  V[0] = {mpz_class(2)};
  if (D >= 1) V[1] = {mpz_class(0), mpz_class(1)};
  for (int k = 2; k <= D; ++k) {
    ZPoly t = zp_mul(V[k - 1], ZPoly{mpz_class(0), mpz_class(1)});
    if (t.size() < V[k - 2].size()) t.resize(V[k - 2].size(), mpz_class(0));
    for (std::size_t j = 0; j < V[k - 2].size(); ++j) t[j] -= V[k - 2][j];
    V[k] = t;
  }

  ZPoly psi(D + 1, mpz_class(0));
  psi[0] = phi[D];
  for (int k = 1; k <= D; ++k)
    for (std::size_t j = 0; j < V[k].size(); ++j) psi[j] += phi[D + k] * V[k][j];
  assert(psi[D] == 1);
  return psi;
}

Field::Field(int q) : q_(q) {
  auto zp = minimal_poly_two_cos_pi_over(q);
  minpoly_.reserve(zp.size());
  for (const auto& c : zp) minpoly_.emplace_back(c);
}

FieldPtr Field::make(int q) { return FieldPtr(new Field(q)); }

Interval Field::lambda_enclosure(long prec) const {
  return Interval::two_cos_pi_over(q_, prec);
}

Interval Field::rho_enclosure(long prec) const {
  return Interval::positive_quadratic_root(lambda_enclosure(prec));
}

}  // namespace rosen
