#include "rosen/natext.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "rosen/bseq.hpp"

namespace rosen {

namespace {

using A = AlgebraicNumber;

int even_p(const Params& P) { return P.q() / 2; }
int odd_h(const Params& P) { return (P.q() - 3) / 2; }

bool regime_is_even(Regime r) {
  return r == Regime::EvenHalf || r == Regime::EvenInterior ||
         r == Regime::EvenInvLambda;
}
bool regime_is_odd1(Regime r) {
  return r == Regime::OddHigh || r == Regime::OddInvLambda;
}
bool regime_is_odd2(Regime r) {
  return r == Regime::OddLow || r == Regime::OddHalf;
}

struct OrbitLens {
  int ell, r;
};

// How far each endpoint orbit must be followed for the regime's ordering
// statement, height bookkeeping, and domain rectangles.
OrbitLens orbit_lengths(Regime rg, const Params& P) {
  switch (rg) {
    case Regime::EvenInterior: {
      int p = even_p(P);
      return {p, p};
    }
    case Regime::EvenHalf:
    case Regime::EvenInvLambda: {
      int p = even_p(P);
      return {p - 1, p - 1};
    }
    case Regime::OddHigh: {
      int h = odd_h(P);
      return {h + 2, h + 2};
    }
    case Regime::OddInvLambda: {
      int h = odd_h(P);
      return {h, h + 1};
    }
    case Regime::OddLow: {
      int h = odd_h(P);
      return {2 * h + 2, 2 * h + 2};
    }
    case Regime::OddHalf:
    case Regime::OddRho: {
      int h = odd_h(P);
      return {2 * h + 1, 2 * h + 1};
    }
  }
  throw std::logic_error("unhandled regime");
}

void extend_orbit(const Params& P, std::vector<A>& pts, std::vector<Digit>& digs,
                  int len) {
  for (int k = 0; k < len; ++k) {
    const A& x = pts.back();
    if (x.is_zero()) break;
    auto [dig, next] = step(P, x);
    digs.push_back(dig);
    pts.push_back(next);
  }
}

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::EvenHalf: return "even-half";
    case Regime::EvenInterior: return "even-interior";
    case Regime::EvenInvLambda: return "even-inv-lambda";
    case Regime::OddHalf: return "odd-half";
    case Regime::OddLow: return "odd-low";
    case Regime::OddRho: return "odd-rho";
    case Regime::OddHigh: return "odd-high";
    case Regime::OddInvLambda: return "odd-inv-lambda";
  }
  return "?";
}

Regime classify(const Params& P) {
  if (P.q() % 2 == 0) {
    if (P.alpha_is_half()) return Regime::EvenHalf;
    if (P.alpha_is_inv_lambda()) return Regime::EvenInvLambda;
    return Regime::EvenInterior;
  }
  if (P.alpha_is_half()) return Regime::OddHalf;
  if (P.alpha_is_inv_lambda()) return Regime::OddInvLambda;
  // alpha against rho/lambda, i.e. alpha*lambda against rho
  int s = (P.alpha() * P.lambda() - A::rho(P.field())).sgn();
  if (s == 0) return Regime::OddRho;
  return s < 0 ? Regime::OddLow : Regime::OddHigh;
}

EndpointOrbits endpoint_orbits(const Params& P) {
  Regime rg = classify(P);
  OrbitLens len = orbit_lengths(rg, P);
  EndpointOrbits o;
  o.ell.push_back(P.ell0());
  o.r.push_back(P.r0());
  extend_orbit(P, o.ell, o.ell_digits, len.ell);
  extend_orbit(P, o.r, o.r_digits, len.r);
  return o;
}

namespace {

struct CertBuilder {
  std::map<std::string, A> vals;
  OrderingCertificate cert;

  const A& get(const std::string& n) const {
    auto it = vals.find(n);
    if (it == vals.end()) throw std::logic_error("ordering: missing point " + n);
    return it->second;
  }
  void item(const std::string& a, const std::string& rel, const std::string& b) {
    const A& x = get(a);
    const A& y = get(b);
    OrderingItem it;
    it.lhs = a;
    it.rel = rel;
    it.rhs = b;
    it.lhs_value = x.decimal(25);
    it.rhs_value = y.decimal(25);
    it.ok = rel == "<" ? x < y : x == y;
    cert.items.push_back(std::move(it));
  }
  void chain(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i + 1 < names.size(); ++i)
      item(names[i], "<", names[i + 1]);
  }
  void digit_item(std::string desc, long lhs, long rhs) {
    OrderingItem it;
    it.lhs = std::move(desc);
    it.rel = "==";
    it.lhs_value = std::to_string(lhs);
    it.rhs_value = std::to_string(rhs);
    it.ok = lhs == rhs;
    cert.items.push_back(std::move(it));
  }
};

std::string ell_name(int k) { return "ell_" + std::to_string(k); }
std::string r_name(int k) { return "r_" + std::to_string(k); }

}  // namespace

OrderingCertificate verify_ordering(const Params& P) {
  Regime rg = classify(P);
  EndpointOrbits ob = endpoint_orbits(P);

  CertBuilder b;
  b.cert.regime = rg;
  for (std::size_t k = 0; k < ob.ell.size(); ++k) b.vals.emplace(ell_name(int(k)), ob.ell[k]);
  for (std::size_t k = 0; k < ob.r.size(); ++k) b.vals.emplace(r_name(int(k)), ob.r[k]);
  b.vals.emplace("zero", A::zero(P.field()));
  b.vals.emplace("-delta_1", -P.delta(1));
  b.vals.emplace("-delta_2", -P.delta(2));

  auto el = ell_name;
  auto rr = r_name;

  switch (rg) {
    case Regime::EvenInterior: {
      int p = even_p(P);
      std::vector<std::string> ch{el(0)};
      for (int j = 1; j <= p - 2; ++j) {
        ch.push_back(rr(j));
        ch.push_back(el(j));
      }
      ch.push_back("-delta_1");
      ch.push_back(rr(p - 1));
      ch.push_back("zero");
      ch.push_back(el(p - 1));
      ch.push_back(rr(0));
      b.chain(ch);
      b.item(el(p), "==", rr(p));
      b.digit_item("d_" + std::to_string(p) + "(r_0) == d_" + std::to_string(p) +
                       "(ell_0) + 1",
                   ob.r_digits[p - 1].d, ob.ell_digits[p - 1].d + 1);
      break;
    }
    case Regime::EvenHalf: {
      int p = even_p(P);
      std::vector<std::string> ch{el(0)};
      for (int j = 1; j <= p - 2; ++j) ch.push_back(rr(j));
      ch.push_back("-delta_1");
      ch.push_back("zero");
      ch.push_back(rr(0));
      b.chain(ch);
      for (int j = 1; j <= p - 1; ++j) b.item(rr(j), "==", el(j));
      b.item(rr(p - 1), "==", "zero");
      break;
    }
    case Regime::EvenInvLambda: {
      int p = even_p(P);
      std::vector<std::string> ch{el(0)};
      for (int j = 1; j <= p - 2; ++j) ch.push_back(el(j));
      ch.push_back("zero");
      ch.push_back(rr(0));
      b.chain(ch);
      for (int j = 1; j <= p - 1; ++j) b.item(el(j - 1), "==", rr(j));
      b.item(el(p - 2), "==", "-delta_1");
      b.item(el(p - 1), "==", el(0));
      break;
    }
    case Regime::OddHigh: {
      int h = odd_h(P);
      if (h == 0) {
        b.cert.h0_adapted = true;
        b.chain({"-delta_1", el(0), "zero", rr(1), rr(0)});
        b.cert.skipped = {"r_h (coincides with r_0)", "ell_h (coincides with ell_0)"};
      } else {
        std::vector<std::string> ch{el(0)};
        for (int j = 1; j <= h - 1; ++j) {
          ch.push_back(rr(j));
          ch.push_back(el(j));
        }
        ch.push_back(rr(h));
        ch.push_back("-delta_1");
        ch.push_back(el(h));
        ch.push_back("zero");
        ch.push_back(rr(h + 1));
        ch.push_back(rr(0));
        b.chain(ch);
      }
      b.item(el(h + 1), "==", rr(h + 2));
      b.digit_item("d_" + std::to_string(h + 1) + "(ell_0) == d_" +
                       std::to_string(h + 2) + "(r_0) + 1",
                   ob.ell_digits[h].d, ob.r_digits[h + 1].d + 1);
      break;
    }
    case Regime::OddInvLambda: {
      int h = odd_h(P);
      if (h == 0) {
        b.cert.h0_adapted = true;
        b.item(el(0), "==", "zero");
        b.item(rr(1), "==", "zero");
        b.item("zero", "<", rr(0));
        b.cert.skipped = {"-delta_1 (no negative branch)"};
      } else {
        std::vector<std::string> ch{el(0)};
        for (int j = 1; j <= h - 1; ++j) ch.push_back(el(j));
        ch.push_back("-delta_1");
        ch.push_back("zero");
        ch.push_back(rr(0));
        b.chain(ch);
        for (int j = 0; j <= h - 1; ++j) b.item(el(j), "==", rr(j + 1));
        b.item(el(h), "==", "zero");
        b.item(rr(h + 1), "==", "zero");
      }
      break;
    }
    case Regime::OddLow: {
      int h = odd_h(P);
      if (h == 0) {
        b.cert.h0_adapted = true;
        b.chain({el(0), "-delta_2", rr(1), "zero", el(1), rr(0)});
        b.cert.skipped = {"r_{2h}, ell_{2h}, r_h, ell_h (coincide with endpoints)",
                          "-delta_1 (below ell_0)"};
      } else {
        std::vector<std::string> ch{el(0)};
        for (int j = 1; j <= h - 1; ++j) {
          ch.push_back(rr(h + j));
          ch.push_back(el(h + j));
          ch.push_back(rr(j));
          ch.push_back(el(j));
        }
        ch.push_back(rr(2 * h));
        ch.push_back(el(2 * h));
        ch.push_back("-delta_1");
        ch.push_back(rr(h));
        ch.push_back(el(h));
        ch.push_back("-delta_2");
        ch.push_back(rr(2 * h + 1));
        ch.push_back("zero");
        ch.push_back(el(2 * h + 1));
        ch.push_back(rr(0));
        b.chain(ch);
      }
      b.item(el(2 * h + 2), "==", rr(2 * h + 2));
      b.digit_item("d_" + std::to_string(2 * h + 2) + "(r_0) == d_" +
                       std::to_string(2 * h + 2) + "(ell_0) + 1",
                   ob.r_digits[2 * h + 1].d, ob.ell_digits[2 * h + 1].d + 1);
      break;
    }
    case Regime::OddHalf: {
      int h = odd_h(P);
      if (h == 0) {
        b.cert.h0_adapted = true;
        b.chain({el(0), "-delta_2", "zero", rr(0)});
        b.item(rr(1), "==", "zero");
        b.item(el(1), "==", rr(1));
        b.cert.skipped = {"-delta_1, r_h, r_{2h} (coincide with endpoints)"};
      } else {
        std::vector<std::string> ch{el(0)};
        for (int j = 1; j <= h - 1; ++j) {
          ch.push_back(rr(h + j));
          ch.push_back(rr(j));
        }
        ch.push_back(rr(2 * h));
        ch.push_back("-delta_1");
        ch.push_back(rr(h));
        ch.push_back("-delta_2");
        ch.push_back("zero");
        ch.push_back(rr(0));
        b.chain(ch);
        for (int j = 1; j <= 2 * h + 1; ++j) b.item(el(j), "==", rr(j));
        b.item(rr(2 * h + 1), "==", "zero");
      }
      break;
    }
    case Regime::OddRho: {
      int h = odd_h(P);
      if (h == 0) {
        b.cert.h0_adapted = true;
        b.chain({el(0), "zero", rr(0)});
        b.item(el(0), "==", rr(1));
        b.item(el(1), "==", el(0));
        b.item(el(0), "==", "-delta_2");
        b.cert.skipped = {"ell_{2h} == -delta_1 (coincides with ell_0)"};
      } else {
        std::vector<std::string> ch{el(0)};
        for (int j = 1; j <= h - 1; ++j) {
          ch.push_back(el(h + j));
          ch.push_back(el(j));
        }
        ch.push_back(el(2 * h));
        ch.push_back(el(h));
        ch.push_back("-delta_2");
        ch.push_back("zero");
        ch.push_back(rr(0));
        b.chain(ch);
        b.item(el(2 * h), "==", "-delta_1");
        b.item(el(0), "==", rr(h + 1));
        for (int j = 1; j <= h; ++j) b.item(el(h + j), "==", rr(j));
        for (int j = 1; j <= h - 1; ++j) b.item(el(j), "==", rr(h + j + 1));
        b.item(el(2 * h + 1), "==", el(0));
        for (int k = 1; k <= h; ++k) b.item(rr(h + 1 + k), "==", el(k));
      }
      break;
    }
  }

  bool ok = true;
  for (const auto& it : b.cert.items) ok = ok && it.ok;
  b.cert.ok = ok;
  return std::move(b.cert);
}

HeightSystem height_system(const Params& P) {
  Regime rg = classify(P);
  const FieldPtr& f = P.field();
  const A lam = P.lambda();
  const A one = A::from_long(f, 1);
  const A two = A::from_long(f, 2);
  auto B = [&](long n) { return b_value(f, n); };

  HeightSystem hs;
  hs.regime = rg;

  int N = 0;
  if (regime_is_even(rg)) {
    int p = even_p(P);
    N = 2 * p - 1;
    hs.H.assign(std::size_t(N) + 1, A());
    for (int n = 1; n <= p - 1; ++n) hs.H[std::size_t(2 * n)] = B(n) / B(n + 1);
    for (int n = 1; n <= p; ++n)
      hs.H[std::size_t(2 * n - 1)] =
          (B(p - n) - B(p + 1 - n)) / (B(p - 1 - n) - B(p - n));
  } else if (regime_is_odd1(rg) || rg == Regime::OddRho) {
    int h = odd_h(P);
    N = rg == Regime::OddRho ? 2 * h + 1 : 2 * h + 2;
    hs.H.assign(std::size_t(N) + 1, A());
    for (int n = 1; n <= h + 1; ++n) {
      if (2 * n <= N) hs.H[std::size_t(2 * n)] = B(n) / B(n + 1);
      hs.H[std::size_t(2 * n - 1)] = (B(n - 1) + B(n)) / (B(n) + B(n + 1));
    }
  } else {
    int h = odd_h(P);
    N = 4 * h + 3;
    hs.H.assign(std::size_t(N) + 1, A());
    const A rho = A::rho(f);
    for (int n = 1; n <= h; ++n) hs.H[std::size_t(4 * n)] = B(n) / B(n + 1);
    for (int n = 1; n <= h + 1; ++n)
      hs.H[std::size_t(4 * n - 2)] = (B(n - 1) + B(n)) / (B(n) + B(n + 1));
    for (int n = 0; n <= h; ++n)
      hs.H[std::size_t(4 * h + 3 - 4 * n)] =
          (B(n + 1) * rho - B(n)) / (B(n) * rho - B(n - 1));
    for (int n = 0; n <= h; ++n)
      hs.H[std::size_t(4 * h + 1 - 4 * n)] =
          (B(n + 1) * rho - B(n + 2)) / (B(n) * rho - B(n + 1));
  }

  auto rel = [&](std::string name, bool ok) {
    hs.relations.push_back({std::move(name), ok});
  };
  auto skip = [&](std::string name) { hs.skipped.push_back(std::move(name)); };
  auto idx = [](int n) { return std::to_string(n); };

  for (int n = 1; n <= N; ++n)
    rel("0 < H_" + idx(n) + " <= 1",
        hs.H[std::size_t(n)].sgn() > 0 && hs.H[std::size_t(n)] <= one);

  auto Hn = [&](int n) -> const A& { return hs.H[std::size_t(n)]; };

  if (regime_is_even(rg)) {
    int p = even_p(P);
    rel("H_1*(lam + H_" + idx(2 * p - 1) + ") == 1",
        Hn(1) * (lam + Hn(2 * p - 1)) == one);
    rel("H_2*lam == 1", Hn(2) * lam == one);
    for (int n = 3; n <= 2 * p - 1; ++n)
      rel("H_" + idx(n) + "*(lam - H_" + idx(n - 2) + ") == 1",
          Hn(n) * (lam - Hn(n - 2)) == one);
    rel("2*H_" + idx(2 * p - 2) + " == lam", two * Hn(2 * p - 2) == lam);
    rel("H_" + idx(2 * p - 3) + " + H_" + idx(2 * p - 1) + " == lam",
        Hn(2 * p - 3) + Hn(2 * p - 1) == lam);
  } else if (regime_is_odd1(rg)) {
    int h = odd_h(P);
    rel("H_1*(lam + H_" + idx(2 * h + 2) + ") == 1",
        Hn(1) * (lam + Hn(2 * h + 2)) == one);
    rel("H_2*lam == 1", Hn(2) * lam == one);
    for (int n = 3; n <= 2 * h + 2; ++n)
      rel("H_" + idx(n) + "*(lam - H_" + idx(n - 2) + ") == 1",
          Hn(n) * (lam - Hn(n - 2)) == one);
    rel("2*H_" + idx(2 * h + 1) + " == lam", two * Hn(2 * h + 1) == lam);
    if (2 * h >= 1)
      rel("H_" + idx(2 * h) + " + H_" + idx(2 * h + 2) + " == lam",
          Hn(2 * h) + Hn(2 * h + 2) == lam);
    else
      skip("H_{2h} + H_{2h+2} == lam (h = 0)");
    rel("H_" + idx(2 * h + 2) + " == 1", Hn(2 * h + 2) == one);
  } else if (rg == Regime::OddRho) {
    int h = odd_h(P);
    rel("H_1*(lam + 1) == 1", Hn(1) * (lam + one) == one);
    if (N >= 2)
      rel("H_2*lam == 1", Hn(2) * lam == one);
    else
      skip("H_2*lam == 1 (h = 0)");
    for (int n = 3; n <= 2 * h + 1; ++n)
      rel("H_" + idx(n) + "*(lam - H_" + idx(n - 2) + ") == 1",
          Hn(n) * (lam - Hn(n - 2)) == one);
    rel("2*H_" + idx(2 * h + 1) + " == lam", two * Hn(2 * h + 1) == lam);
  } else {
    int h = odd_h(P);
    const A rho = A::rho(f);
    if (h >= 1) {
      rel("H_1*(2*lam - H_" + idx(4 * h - 1) + ") == 1",
          Hn(1) * (two * lam - Hn(4 * h - 1)) == one);
      rel("H_2*(2*lam - H_" + idx(4 * h) + ") == 1",
          Hn(2) * (two * lam - Hn(4 * h)) == one);
    } else {
      skip("H_1*(2*lam - H_{4h-1}) == 1 (h = 0)");
      skip("H_2*(2*lam - H_{4h}) == 1 (h = 0)");
    }
    rel("H_3*(lam + H_" + idx(4 * h + 3) + ") == 1",
        Hn(3) * (lam + Hn(4 * h + 3)) == one);
    if (h >= 1)
      rel("H_4*lam == 1", Hn(4) * lam == one);
    else
      skip("H_4*lam == 1 (h = 0)");
    for (int n = 5; n <= 4 * h + 3; ++n)
      rel("H_" + idx(n) + "*(lam - H_" + idx(n - 4) + ") == 1",
          Hn(n) * (lam - Hn(n - 4)) == one);
    rel("2*H_" + idx(4 * h + 2) + " == lam", two * Hn(4 * h + 2) == lam);
    rel("H_" + idx(4 * h + 1) + " + H_" + idx(4 * h + 3) + " == lam",
        Hn(4 * h + 1) + Hn(4 * h + 3) == lam);
    rel("H_" + idx(4 * h + 3) + " == rho", Hn(4 * h + 3) == rho);
  }

  bool ok = true;
  for (const auto& r : hs.relations) ok = ok && r.ok;
  hs.ok = ok;
  return hs;
}

int Domain::rect_index_of(const AlgebraicNumber& x) const {
  for (std::size_t i = 0; i < rects.size(); ++i)
    if (rects[i].lo <= x && x < rects[i].hi) return int(i);
  return -1;
}

Domain build_domain(const Params& P) {
  Regime rg = classify(P);
  EndpointOrbits ob = endpoint_orbits(P);
  HeightSystem hs = height_system(P);

  Domain D{P, rg, {}, -1};

  auto add = [&](const A& lo, const A& hi, int hidx) {
    if (lo == hi) return;  // rectangle degenerates at a boundary parameter
    if (hi < lo)
      throw std::runtime_error("domain rectangle inverted: J_" + std::to_string(hidx));
    D.rects.push_back({lo, hi, hs.H[std::size_t(hidx)], "J_" + std::to_string(hidx)});
  };

  const auto& el = ob.ell;
  const auto& rv = ob.r;

  if (rg == Regime::EvenInterior || rg == Regime::EvenHalf) {
    int p = even_p(P);
    for (int n = 1; n <= p - 1; ++n) {
      add(el[std::size_t(n - 1)], rv[std::size_t(n)], 2 * n - 1);
      add(rv[std::size_t(n)], el[std::size_t(n)], 2 * n);
    }
    add(el[std::size_t(p - 1)], P.r0(), 2 * p - 1);
  } else if (rg == Regime::EvenInvLambda) {
    int p = even_p(P);
    for (int n = 1; n <= p - 2; ++n)
      add(rv[std::size_t(n)], rv[std::size_t(n + 1)], 2 * n);
    add(rv[std::size_t(p - 1)], P.r0(), 2 * p - 2);
  } else if (regime_is_odd1(rg)) {
    int h = odd_h(P);
    for (int n = 1; n <= h; ++n) {
      add(el[std::size_t(n - 1)], rv[std::size_t(n)], 2 * n - 1);
      add(rv[std::size_t(n)], el[std::size_t(n)], 2 * n);
    }
    add(el[std::size_t(h)], rv[std::size_t(h + 1)], 2 * h + 1);
    add(rv[std::size_t(h + 1)], P.r0(), 2 * h + 2);
  } else if (regime_is_odd2(rg)) {
    int h = odd_h(P);
    for (int n = 1; n <= h; ++n) {
      add(el[std::size_t(n - 1)], rv[std::size_t(h + n)], 4 * n - 3);
      add(rv[std::size_t(h + n)], el[std::size_t(h + n)], 4 * n - 2);
      add(el[std::size_t(h + n)], rv[std::size_t(n)], 4 * n - 1);
      add(rv[std::size_t(n)], el[std::size_t(n)], 4 * n);
    }
    add(el[std::size_t(h)], rv[std::size_t(2 * h + 1)], 4 * h + 1);
    add(rv[std::size_t(2 * h + 1)], el[std::size_t(2 * h + 1)], 4 * h + 2);
    add(el[std::size_t(2 * h + 1)], P.r0(), 4 * h + 3);
  } else {  // OddRho
    int h = odd_h(P);
    for (int n = 1; n <= h; ++n) {
      add(el[std::size_t(n - 1)], rv[std::size_t(n)], 2 * n - 1);
      add(rv[std::size_t(n)], el[std::size_t(n)], 2 * n);
    }
    add(el[std::size_t(h)], P.r0(), 2 * h + 1);
  }

  if (D.rects.empty()) throw std::runtime_error("empty domain");
  if (!(D.rects.front().lo == P.ell0()) || !(D.rects.back().hi == P.r0()))
    throw std::runtime_error("domain does not span the fundamental interval");
  const A one = A::from_long(P.field(), 1);
  for (std::size_t i = 0; i < D.rects.size(); ++i) {
    const Rect& rc = D.rects[i];
    if (!(rc.height.sgn() > 0) || !(rc.height <= one))
      throw std::runtime_error("rectangle height out of (0, 1]: " + rc.label);
    if (i + 1 < D.rects.size() && !(rc.hi == D.rects[i + 1].lo))
      throw std::runtime_error("domain gap or overlap after " + rc.label);
    if (D.zero_rect < 0 && rc.lo.sgn() <= 0 && rc.hi.sgn() > 0) D.zero_rect = int(i);
  }
  if (D.zero_rect < 0) throw std::runtime_error("no rectangle holds zero");
  return D;
}

Real domain_mass(const Domain& D, long prec) {
  long wp = prec + 16;
  Real total = Real::of(0L, wp);
  Real one = Real::of(1L, wp);
  for (const Rect& rc : D.rects) {
    Real a = (rc.lo * rc.height).to_real(wp);
    Real b = (rc.hi * rc.height).to_real(wp);
    total = total + log((one + b) / (one + a));
  }
  return total;
}

Real normalizing_constant(const Params& P, long prec) {
  long wp = prec + 32;
  Regime rg = classify(P);
  Real lam = P.lambda().to_real(wp);
  Real one = Real::of(1L, wp);
  Real two = Real::of(2L, wp);
  Real den;
  if (regime_is_even(rg)) {
    Real four = Real::of(4L, wp);
    den = log((two + lam) / sqrt(four - lam * lam));
  } else if (regime_is_odd1(rg)) {
    Real r0 = P.r0().to_real(wp);
    den = log((one + r0) / sqrt(two - lam));
  } else {
    Real rho = A::rho(P.field()).to_real(wp);
    den = log((one + rho) / sqrt(two - lam));
  }
  return one / den;
}

std::pair<AlgebraicNumber, AlgebraicNumber> planar_map(const Params& P,
                                                       const AlgebraicNumber& x,
                                                       const AlgebraicNumber& y) {
  auto [dig, tx] = step(P, x);
  if (dig.infinite) throw std::domain_error("planar map is undefined at x = 0");
  A ey = dig.eps < 0 ? -y : y;
  A yn = (A::from_long(P.field(), dig.d) * P.lambda() + ey).inverse();
  return {tx, yn};
}

std::pair<Real, Real> planar_map(const Params& P, const Real& x, const Real& y) {
  long prec = x.precision();
  int s = x.sgn();
  if (s == 0) throw std::domain_error("planar map is undefined at x = 0");
  Real one = Real::of(1L, prec);
  Real lam = P.lambda().to_real(prec);
  Real alpha = P.alpha().to_real(prec);
  Real ax = x.abs();
  long d = (one / (ax * lam) + one - alpha).floor_long();
  Real dl = Real::of(d, prec) * lam;
  Real tx = one / ax - dl;
  Real ey = s < 0 ? y.neg() : y;
  Real yn = one / (dl + ey);
  return {tx, yn};
}

std::optional<std::pair<Real, Real>> planar_map_inverse(const Domain& D,
                                                        const Real& xp,
                                                        const Real& yp) {
  const Params& P = D.params;
  long prec = xp.precision();
  if (yp.sgn() <= 0) return std::nullopt;
  DomainSnapshot snap = snapshot(D, prec);
  Real one = Real::of(1L, prec);
  Real lam = P.lambda().to_real(prec);
  Real alpha = P.alpha().to_real(prec);
  Real u = one / yp;
  double ud = u.to_double();
  double lamd = lam.to_double();
  long d_lo = std::max(1L, long(std::floor((ud - 1.0) / lamd)) - 1);
  long d_hi = long(std::ceil((ud + 1.0) / lamd)) + 1;
  double slack = std::ldexp(1.0, -int(std::min<long>(prec / 2, 400)));
  for (int eps : {+1, -1}) {
    for (long d = d_lo; d <= d_hi; ++d) {
      Real dl = Real::of(d, prec) * lam;
      Real y = eps > 0 ? u - dl : dl - u;
      double yd = y.to_double();
      if (yd < -slack || yd > 1.0 + slack) continue;
      Real den = xp + dl;
      if (den.sgn() == 0) continue;
      Real x = eps > 0 ? one / den : (one / den).neg();
      if (x.sgn() != eps) continue;
      long dx = (one / (x.abs() * lam) + one - alpha).floor_long();
      if (dx != d) continue;
      if (!snap.contains(x, y, slack)) continue;
      return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

int DomainSnapshot::rect_index_of(const Real& x) const {
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    if (breaks[i] <= x && x < breaks[i + 1]) return int(i);
  return -1;
}

bool DomainSnapshot::contains(const Real& x, const Real& y, double slack) const {
  double xd = x.to_double();
  double yd = y.to_double();
  if (yd < -slack) return false;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (xd >= breaks[i].to_double() - slack && xd <= breaks[i + 1].to_double() + slack &&
        yd <= heights[i].to_double() + slack)
      return true;
  }
  return false;
}

DomainSnapshot snapshot(const Domain& D, long prec) {
  DomainSnapshot s;
  s.breaks.reserve(D.rects.size() + 1);
  s.heights.reserve(D.rects.size());
  for (const Rect& rc : D.rects) {
    s.breaks.push_back(rc.lo.to_real(prec));
    s.heights.push_back(rc.height.to_real(prec));
  }
  s.breaks.push_back(D.rects.back().hi.to_real(prec));
  return s;
}

std::pair<Real, Real> conjugation(const Real& x, const Real& y) {
  if (x.sgn() < 0) return {y.neg(), x.neg()};
  return {y, x};
}

std::pair<Real, Real> conjugation_inverse(const Real& u, const Real& v) {
  if (u.sgn() < 0) return {v.neg(), u.neg()};
  return {v, u};
}

}  // namespace rosen
