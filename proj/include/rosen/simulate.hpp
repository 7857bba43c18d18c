// Seeded Monte Carlo experiments over the planar extension: rectangle
// equidistribution of orbits, threshold counts of the approximation
// coefficients, the joint (Theta_{n-1}, Theta_n) histogram, and a
// membership stress test of the planar map.
//
// Every experiment is split into `shards` sub-runs with independently
// seeded generators and plain integer counters, merged in shard order, so
// the result is identical for any thread count (including a serial build).
#pragma once

#include <cstdint>
#include <vector>

#include "rosen/metrics.hpp"
#include "rosen/natext.hpp"

namespace rosen {

struct McOptions {
  std::uint64_t seed = 1;
  long long steps = 1000000;  // samples collected across all shards
  int shards = 64;
  int threads = 0;  // 0: one thread per available core when OpenMP is built in
  long prec = 128;  // working precision of the orbit arithmetic
  long burn_in = 1000;  // per-(re)start steps discarded before counting
};

// Orbit visits to each rectangle of the domain, against the closed-form
// measure of the rectangle.
struct EquidistributionResult {
  std::vector<long long> counts;  // per rectangle, in domain order
  std::vector<double> expected;   // measure of each rectangle (sums to 1)
  long long total = 0;            // counted samples, including `outside`
  long long outside = 0;          // samples off the domain (0 in exact arithmetic)
  double max_sigma = 0.0;         // worst binomial deviation over rectangles
};
EquidistributionResult run_equidistribution(const Domain& D, const McOptions& opt);

// Frequencies of Theta_n below each threshold, against the linear law
// (frequency = lambda C z for thresholds z up to the threshold constant).
struct LenstraResult {
  std::vector<double> thresholds;
  std::vector<long long> counts;
  std::vector<double> expected;  // lambda C z per threshold
  long long total = 0;
  double slope = 0.0;  // least-squares slope of frequency vs threshold through 0
};
LenstraResult run_lenstra(const Params& P, const std::vector<double>& thresholds,
                          const McOptions& opt);

// Joint histogram of consecutive coefficient pairs over the bounding box
// of the limit region, against the 16x-oversampled density integral.
struct Theta2dResult {
  int nx = 0, ny = 0;
  double xi_max = 0.0, eta_max = 0.0;
  std::vector<long long> counts;  // row-major, index ix + nx*iy
  std::vector<double> expected;   // quadrature of the density per cell
  long long total = 0;
  long long outside = 0;  // pairs beyond the bounding box (0 in theory)
};
Theta2dResult run_theta2d(const Domain& D, int nx, int ny, const McOptions& opt);

// Applies one planar step to uniformly sampled domain points and counts
// images that fail the membership test; 0 means the domain maps into itself.
long long run_membership(const Domain& D, const McOptions& opt);

}  // namespace rosen
