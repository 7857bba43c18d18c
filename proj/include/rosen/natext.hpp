// Planar extension domains: parameter regimes, endpoint-orbit ordering
// certificates, fiber-height systems, the rectangle decomposition of the
// invariant domain, its measure, and the two-dimensional extension map with
// its inverse and the half-to-endpoint conjugation.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rosen/expansion.hpp"

namespace rosen {

enum class Regime {
  EvenHalf,
  EvenInterior,
  EvenInvLambda,
  OddHalf,
  OddLow,
  OddRho,
  OddHigh,
  OddInvLambda,
};

const char* regime_name(Regime r);
Regime classify(const Params& P);

struct EndpointOrbits {
  // ell[k] = T^k(left endpoint); r[k] = T^k(right endpoint).  Digit entry k
  // is the digit read at orbit point k (i.e. the (k+1)-st digit).
  std::vector<AlgebraicNumber> ell, r;
  std::vector<Digit> ell_digits, r_digits;
};
// Computes both orbits far enough for the regime's ordering statement.
EndpointOrbits endpoint_orbits(const Params& P);

struct OrderingItem {
  std::string lhs, rel, rhs;  // rel is "<" or "=="
  bool ok = false;
  std::string lhs_value, rhs_value;
};
struct OrderingCertificate {
  Regime regime{};
  bool h0_adapted = false;  // q = 3 degeneracies: colliding items dropped
  std::vector<OrderingItem> items;
  std::vector<std::string> skipped;
  bool ok = false;
};
OrderingCertificate verify_ordering(const Params& P);

struct HeightRelation {
  std::string name;
  bool ok = false;
};
struct HeightSystem {
  Regime regime{};
  std::vector<AlgebraicNumber> H;  // 1-based; H[0] unused
  std::vector<HeightRelation> relations;
  std::vector<std::string> skipped;
  bool ok = false;
};
HeightSystem height_system(const Params& P);

struct Rect {
  AlgebraicNumber lo, hi, height;
  std::string label;
};
struct Domain {
  Params params;
  Regime regime{};
  std::vector<Rect> rects;  // sorted, disjoint, union = [ell0, r0)
  int zero_rect = -1;       // rectangle whose half-open interval contains 0
  int rect_index_of(const AlgebraicNumber& x) const;  // -1 when outside
};
Domain build_domain(const Params& P);

// Total unnormalized mass: sum of log((1 + hi*H)/(1 + lo*H)).
Real domain_mass(const Domain& D, long prec);
// Closed-form normalizing constant; domain_mass equals 1/C.
Real normalizing_constant(const Params& P, long prec);

// (x, y) -> (T x, 1/(d lambda + eps y)); y in [0, 1].
std::pair<AlgebraicNumber, AlgebraicNumber> planar_map(const Params& P,
                                                       const AlgebraicNumber& x,
                                                       const AlgebraicNumber& y);
std::pair<Real, Real> planar_map(const Params& P, const Real& x, const Real& y);
// Inverse by candidate search over (eps, d); nullopt if no candidate lands
// in the domain.  Works at the precision of the inputs.
std::optional<std::pair<Real, Real>> planar_map_inverse(const Domain& D,
                                                        const Real& xp,
                                                        const Real& yp);

// Float-precision snapshot of a domain for membership tests.
struct DomainSnapshot {
  std::vector<Real> breaks;   // rect boundaries, ascending, size rects+1
  std::vector<Real> heights;  // per rect
  // index of the rectangle containing x, or -1
  int rect_index_of(const Real& x) const;
  bool contains(const Real& x, const Real& y, double slack = 0.0) const;
};
DomainSnapshot snapshot(const Domain& D, long prec);

// Endpoint-parameter conjugation for even q: (x,y) -> (-y,-x) on x < 0,
// (y,x) on x >= 0; the inverse mirrors it.
std::pair<Real, Real> conjugation(const Real& x, const Real& y);
std::pair<Real, Real> conjugation_inverse(const Real& u, const Real& v);

struct JigsawCertificate {
  Regime regime{};
  long d_star = 0;
  int finite_pieces = 0;
  int slabs = 0;
  bool tail_lemma_ok = false;  // adjacent-to-zero heights sum to lambda
  std::vector<std::string> failures;
  bool ok = false;
};
// Exact self-tiling certificate: the images of all cylinder pieces of the
// domain rectangles tile the domain (finitely many pieces checked one by
// one; the infinite tail of cylinders near zero handled by the telescoping
// height identity).
JigsawCertificate verify_bijectivity(const Params& P);

}  // namespace rosen
