#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "rosen/expansion.hpp"
#include "rosen/rational.hpp"

using namespace rosen;

namespace {

AlgebraicNumber q_of(const Params& P, long num, long den) {
  return AlgebraicNumber::from_rational(P.field(), make_rational(num, den));
}

std::vector<Digit> digs(std::initializer_list<std::pair<int, long>> xs) {
  std::vector<Digit> out;
  for (auto [e, d] : xs) out.push_back(Digit{e, d, false});
  return out;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(Params::make(2, make_rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(Params::make(5, make_rational(1, 4)), std::domain_error);
  CHECK_THROWS_AS(Params::make(5, make_rational(7, 10)), std::domain_error);  // > 1/lambda
  CHECK_NOTHROW(Params::make(3, mpq_class(1)));  // 1/lambda = 1 for q = 3
  auto P = Params::make_inv_lambda(8);
  CHECK(P.alpha_is_inv_lambda());
  CHECK(!P.alpha_is_half());
  CHECK(Params::make(6, make_rational(1, 2)).alpha_is_half());
}

TEST_CASE("endpoints and cylinder geometry") {
  auto P = Params::make(4, make_rational(1, 2));
  // delta_1 = sqrt(2)/3
  CHECK(P.delta(1).to_real(128).to_double() ==
        doctest::Approx(0.47140452079103168293).epsilon(1e-15));
  CHECK(P.ell0().to_real(128).to_double() ==
        doctest::Approx(-0.70710678118654752440).epsilon(1e-15));
  CHECK(P.r0() == -P.ell0());
  CHECK(P.plus_one_cylinder_nonempty());

  // q = 3 with small alpha: the (+1:1) cylinder is empty, digit at r0 is 2
  auto P3 = Params::make(3, make_rational(11, 20));
  CHECK(!P3.plus_one_cylinder_nonempty());
  CHECK(digit_of(P3, P3.r0()).d == 2);
  auto P3h = Params::make(3, make_rational(7, 10));
  CHECK(P3h.plus_one_cylinder_nonempty());

  // boundary points delta_d carry digit d+1 on both signs
  for (int q : {4, 5, 9}) {
    auto Pq = Params::make(q, make_rational(53, 100));
    for (long d = 1; d <= 6; ++d) {
      CAPTURE(q);
      CAPTURE(d);
      Digit plus = digit_of(Pq, Pq.delta(d));
      CHECK(plus.eps == 1);
      CHECK(plus.d == d + 1);
      Digit minus = digit_of(Pq, -Pq.delta(d));
      CHECK(minus.eps == -1);
      CHECK(minus.d == d + 1);
    }
  }
}

TEST_CASE("frozen endpoint orbits: q=6 alpha=0.53") {
  auto P = Params::make(6, make_rational(53, 100));
  auto el = expand(P, P.ell0(), 4);
  CHECK(el.digits == digs({{-1, 1}, {-1, 1}, {1, 2}, {1, 1}}));
  CHECK(el.orbit[1].to_double() == doctest::Approx(-0.5036459795058437520).epsilon(1e-14));
  CHECK(el.orbit[2].to_double() == doctest::Approx(0.2534708498881283844).epsilon(1e-14));
  CHECK(el.orbit[3].to_double() == doctest::Approx(0.4811252243246881371).epsilon(1e-14));

  // r0 itself is not inside [ell0, r0); advance its orbit by stepping manually
  AlgebraicNumber r = P.r0();
  std::vector<Digit> rdigs;
  std::vector<AlgebraicNumber> rorb = {r};
  for (int k = 0; k < 3; ++k) {
    auto [dig, next] = step(P, r);
    rdigs.push_back(dig);
    rorb.push_back(next);
    r = next;
  }
  CHECK(rdigs == digs({{1, 1}, {-1, 1}, {-1, 3}}));
  // orbits merge at index p = 3: T^3(ell0) == T^3(r0) exactly
  CHECK(el.orbit[3] == rorb[3]);
  CHECK(el.orbit[2] != rorb[2]);
  // the digits the merging points produce differ by one
  CHECK(rdigs[2].d == el.digits[2].d + 1);
}

TEST_CASE("frozen endpoint orbits: q=5, both interior alphas") {
  // alpha = 0.56
  {
    auto P = Params::make(5, make_rational(56, 100));
    auto el = expand(P, P.ell0(), 2);
    CHECK(el.digits == digs({{-1, 1}, {-1, 3}}));
    AlgebraicNumber r = P.r0();
    std::vector<Digit> rdigs;
    for (int k = 0; k < 3; ++k) {
      auto [dig, next] = step(P, r);
      rdigs.push_back(dig);
      r = next;
    }
    CHECK(rdigs == digs({{1, 1}, {-1, 1}, {1, 2}}));
    CHECK(el.orbit[2] == r);  // ell_2 == r_3 exactly
    CHECK(el.orbit[2].to_double() ==
          doctest::Approx(-0.1683141907119148405).epsilon(1e-14));
  }
  // alpha = 0.5038: digits computed exactly; the step-4 digit pair is (3, 4)
  {
    auto P = Params::make(5, make_rational(5038, 10000));
    auto el = expand(P, P.ell0(), 6);
    CHECK(el.digits ==
          digs({{-1, 1}, {-1, 2}, {-1, 1}, {1, 3}, {1, 2}, {1, 1}}));
    AlgebraicNumber r = P.r0();
    std::vector<Digit> rdigs;
    std::vector<AlgebraicNumber> rorb = {r};
    for (int k = 0; k < 6; ++k) {
      auto [dig, next] = step(P, r);
      rdigs.push_back(dig);
      rorb.push_back(next);
      r = next;
    }
    CHECK(rdigs == digs({{1, 1}, {-1, 2}, {-1, 1}, {-1, 4}, {1, 2}, {1, 1}}));
    CHECK(el.orbit[4] == rorb[4]);              // merge at index 2h+2 = 4
    CHECK(rdigs[3].d == el.digits[3].d + 1);    // d_4(r0) = d_4(ell0) + 1
  }
}

TEST_CASE("finite expansion: x = 3/10 at q=5, alpha=0.56") {
  auto P = Params::make(5, make_rational(56, 100));
  auto x = q_of(P, 3, 10);
  auto e = expand(P, x, 12);
  REQUIRE(e.hit_zero);
  REQUIRE(e.digits.size() == 7);
  CHECK(e.digits[6].infinite);
  std::vector<Digit> finite(e.digits.begin(), e.digits.end() - 1);
  CHECK(finite == digs({{1, 2}, {1, 6}, {1, 1}, {1, 5}, {-1, 3}, {-1, 1}}));
  CHECK(evaluate_finite(P, finite) == x);
  CHECK(e.orbit[5].to_double() == doctest::Approx(-0.6180339887498948482).epsilon(1e-14));
  CHECK(e.orbit[6].is_zero());

  // float path at 128 bits stops in the near-zero band after the same digits
  auto fe = expand(P, Real::of(make_rational(3, 10), 128), 12);
  CHECK(fe.stop == FloatExpansion::Stop::near_zero);
  REQUIRE(fe.digits.size() == 6);
  for (int i = 0; i < 6; ++i) CHECK(fe.digits[i] == finite[i]);
}

TEST_CASE("convergent identities along exact orbits") {
  for (auto [q, num, den] : {std::tuple<int, long, long>{4, 1, 2},
                             {5, 56, 100},
                             {6, 53, 100},
                             {7, 51, 100},
                             {3, 11, 20}}) {
    CAPTURE(q);
    auto P = Params::make(q, make_rational(num, den));
    for (auto [xn, xd] : {std::pair<long, long>{13, 57}, {-22, 61}, {1, 3}}) {
      auto x = q_of(P, xn, xd);
      if (x < P.ell0() || x >= P.r0()) continue;
      auto e = expand(P, x, 8);
      std::size_t n_digits = e.digits.size();
      if (e.hit_zero) --n_digits;
      auto c = convergents_exact(P, e.digits);
      REQUIRE(c.max_index() == static_cast<long>(n_digits));
      auto one = AlgebraicNumber::from_long(P.field(), 1);
      mpq_class det(1);
      for (std::size_t n = 1; n <= n_digits; ++n) {
        CAPTURE(n);
        det *= -e.digits[n - 1].eps;
        // determinant: R_{n-1} S_n - R_n S_{n-1} = prod(-eps)
        CHECK(c.r(n - 1) * c.s(n) - c.r(n) * c.s(n - 1) ==
              AlgebraicNumber::from_rational(P.field(), det));
        // S_n > 0 and v_n in (0, 1]
        CHECK(c.s(n).sgn() > 0);
        auto v = c.s(n - 1) / c.s(n);
        CHECK(v.sgn() > 0);
        CHECK(v <= one);
        // value of the truncated word equals R_n/S_n
        std::vector<Digit> head(e.digits.begin(), e.digits.begin() + n);
        CHECK(evaluate_finite(P, head) == c.r(n) / c.s(n));
        // reconstruction: x = (R_n + T^n(x) R_{n-1}) / (S_n + T^n(x) S_{n-1})
        const auto& tn = e.orbit[n];
        CHECK(x == (c.r(n) + tn * c.r(n - 1)) / (c.s(n) + tn * c.s(n - 1)));
        // orbit recovery: T^n(x) = (R_n - S_n x)/(S_{n-1} x - R_{n-1})
        CHECK(tn == (c.r(n) - c.s(n) * x) / (c.s(n - 1) * x - c.r(n - 1)));
        // approximation bound: S_n^2 |x - R_n/S_n| <= alpha*lambda/(1+(alpha-1)lambda)
        auto err = (x - c.r(n) / c.s(n)).abs() * c.s(n) * c.s(n);
        CHECK(err <= approximation_bound_coeff(P));
      }
    }
  }
}

TEST_CASE("orbit stays inside the interval") {
  for (auto [q, num, den] : {std::tuple<int, long, long>{5, 5038, 10000},
                             {8, 1, 2},
                             {12, 51, 100}}) {
    auto P = Params::make(q, make_rational(num, den));
    auto x = q_of(P, 17, 93);
    auto e = expand(P, x, 10);
    for (const auto& pt : e.orbit) {
      CHECK(pt >= P.ell0());
      CHECK(pt < P.r0());
    }
  }
}

TEST_CASE("float and exact expansions agree for generic points") {
  auto P = Params::make(7, make_rational(52, 100));
  auto x = q_of(P, 29, 73);
  auto ex = expand(P, x, 25);
  auto fl = expand(P, Real::of(make_rational(29, 73), 192), 25);
  REQUIRE(fl.stop == FloatExpansion::Stop::completed);
  REQUIRE(ex.digits.size() == 25);
  for (int i = 0; i < 25; ++i) CHECK(ex.digits[i] == fl.digits[i]);
  for (int i = 0; i <= 25; ++i) {
    CHECK(fl.orbit[i].to_double() ==
          doctest::Approx(ex.orbit[i].to_double()).epsilon(1e-9));
  }
}

TEST_CASE("orbit of -lambda/2 at alpha = 1/2 reaches zero") {
  // even q: p-1 ones; odd q: h ones, a two, h ones
  for (int q : {4, 6, 8, 10, 12}) {
    CAPTURE(q);
    int p = q / 2;
    auto P = Params::make(q, make_rational(1, 2));
    auto e = expand(P, P.ell0(), 2 * p);
    REQUIRE(e.hit_zero);
    REQUIRE(static_cast<int>(e.digits.size()) == p);  // p-1 digits + terminal
    for (int i = 0; i < p - 1; ++i) CHECK(e.digits[i] == Digit{-1, 1, false});
    CHECK(e.digits[p - 1].infinite);
  }
  for (int q : {3, 5, 7, 9, 11}) {
    CAPTURE(q);
    int h = (q - 3) / 2;
    auto P = Params::make(q, make_rational(1, 2));
    auto e = expand(P, P.ell0(), 3 * q);
    REQUIRE(e.hit_zero);
    REQUIRE(static_cast<int>(e.digits.size()) == 2 * h + 2);
    for (int i = 0; i < h; ++i) CHECK(e.digits[i] == Digit{-1, 1, false});
    CHECK(e.digits[h] == Digit{-1, 2, false});
    for (int i = h + 1; i <= 2 * h; ++i) CHECK(e.digits[i] == Digit{-1, 1, false});
    CHECK(e.digits[2 * h + 1].infinite);
  }
}

TEST_CASE("expansion outside the interval is rejected") {
  auto P = Params::make(5, make_rational(56, 100));
  CHECK_THROWS_AS(expand(P, P.r0(), 3), std::domain_error);
  CHECK_THROWS_AS(expand(P, q_of(P, -2, 1), 3), std::domain_error);
}
