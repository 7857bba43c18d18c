// Approximation coefficients Theta_n = S_n^2 |x - R_n/S_n|, the planar
// change of variables carrying the extension domain onto the limit region
// of (Theta_{n-1}, Theta_n) pairs, the closed-form limiting density, and
// the even-q linear-law threshold constant.
#pragma once

#include <utility>
#include <vector>

#include "rosen/natext.hpp"

namespace rosen {

// Coefficient pair read off a planar orbit point (t_n, v_n):
//   theta_cur  = eps_next * t / (1 + t v)   (= Theta_n, nonnegative)
//   theta_prev = v / (1 + t v)              (= Theta_{n-1})
// where eps_next is the sign of the digit about to be produced, i.e. sgn(t).
struct ThetaPair {
  Real theta_prev;
  Real theta_cur;
  int eps_next = 0;
};

ThetaPair theta_from_orbit(const Real& t, const Real& v, int eps_next);

// Direct form S_n^2 |x - R_n/S_n| at the precision of x0; n = 0 gives |x0|.
// Suffers catastrophic cancellation as n grows unless the precision is
// raised, and is kept as an independent cross-check of theta_sequence.
Real theta_direct(const Params& P, const Real& x0, int n);

// Theta_1..Theta_n along the orbit of x0, computed cancellation-free from
// the planar recurrence alone (t' = T t, v' = 1/(d lambda + eps v)).
// Stops early if the orbit reaches (or nearly reaches) zero.
std::vector<Real> theta_sequence(const Params& P, const Real& x0, int n);

// F(t, v) = (v/(1+tv), t/(1+tv)); maps the domain onto the limit region,
// positive-t half to eta > 0 and negative-t half to eta < 0.
std::pair<Real, Real> f_map(const Real& t, const Real& v);
// Inverse map: (xi, eta) -> (2 eta, 2 xi) / (1 + sqrt(1 - 4 xi eta)).
std::pair<Real, Real> f_inverse(const Real& xi, const Real& eta);

// Membership and closed-form density of the limiting distribution of
// (Theta_{n-1}, Theta_n).  A point (xi, eta) with eta >= 0 collects
//   C / sqrt(1 - 4 xi eta)  when f_inverse(xi,  eta) lies in the domain,
//   C / sqrt(1 + 4 xi eta)  when f_inverse(xi, -eta) lies in the domain,
// the two branches being the folded images of the t >= 0 and t < 0 halves.
// Works in double precision: intended for histogram comparison, not proofs.
class ThetaDensity {
 public:
  explicit ThetaDensity(const Domain& D, long prec = 96);

  bool in_plus(double xi, double eta) const;
  bool in_minus(double xi, double eta) const;
  double density(double xi, double eta) const;

  double constant() const { return C_; }
  // Bounding box [0, xi_max] x [0, eta_max] containing the limit region.
  double xi_max() const { return xi_max_; }
  double eta_max() const { return eta_max_; }

 private:
  bool member(double t, double v) const;
  std::vector<double> breaks_, heights_;
  double C_ = 0.0, xi_max_ = 0.0, eta_max_ = 0.0;
};

// Largest threshold L such that the limiting frequency of Theta_n < z is
// exactly linear in z on [0, L]:
//   min( lambda/(lambda+2), lambda (2 - alpha lambda^2) / (4 - lambda^2) ).
// Defined for even q only; throws std::domain_error otherwise.
AlgebraicNumber lenstra_constant(const Params& P);

}  // namespace rosen
