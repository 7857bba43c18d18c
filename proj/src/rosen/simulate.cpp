#include "rosen/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rosen {

namespace {

// Restart the orbit when |t| drops below 2^-kZeroBand: the digit would no
// longer fit machine integers and the point is, at working precision,
// indistinguishable from the terminating set (measure zero in theory).
constexpr long kZeroBand = 60;

std::mt19937_64 shard_rng(std::uint64_t seed, int shard) {
  // seed_seq keeps only 32 bits per entry, so the seed is split into words.
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(shard) + 1u};
  return std::mt19937_64(seq);
}

// Uniform in [0, 1) carrying the full working precision.
Real uniform01(std::mt19937_64& g, long prec) {
  int words = static_cast<int>((prec + 63) / 64);
  mpz_class z = 0;
  for (int w = 0; w < words; ++w) {
    z <<= 64;
    z |= mpz_class(static_cast<unsigned long>(g()));
  }
  Real r = Real::of(0L, prec);
  mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
  mpfr_mul_2si(r.raw(), r.raw(), -64L * words, MPFR_RNDN);
  return r;
}

// One planar step (t, v) -> (T t, 1/(d lambda + eps v)) with cached
// field constants; returns false when t sits in the restart band.
struct Stepper {
  Real lam, al, one;
  long prec;

  Stepper(const Params& P, long prec)
      : lam(P.lambda().to_real(prec)),
        al(P.alpha().to_real(prec)),
        one(Real::of(1L, prec)),
        prec(prec) {}

  Real start(std::mt19937_64& g, const Real& lo, const Real& span) const {
    return lo + uniform01(g, prec) * span;
  }

  bool step(Real& t, Real& v) const {
    if (t.is_zero() || mpfr_get_exp(t.raw()) < -kZeroBand) return false;
    int eps = t.sgn();
    Real u = (one / t).abs();
    long d = (u / lam + one - al).floor_long();
    Real dl = Real::of(d, prec) * lam;
    t = u - dl;
    v = one / (dl + Real::of(static_cast<long>(eps), prec) * v);
    return true;
  }
};

// Double-precision rectangle lookup for binning.
struct Bins {
  std::vector<double> breaks, heights;

  explicit Bins(const Domain& D, long prec) {
    DomainSnapshot s = snapshot(D, prec);
    for (const Real& b : s.breaks) breaks.push_back(b.to_double());
    for (const Real& h : s.heights) heights.push_back(h.to_double());
  }

  int index_of(double t) const {
    if (t < breaks.front() || t >= breaks.back()) return -1;
    return static_cast<int>(std::upper_bound(breaks.begin(), breaks.end(), t) -
                            breaks.begin()) - 1;
  }
};

long long shard_quota(const McOptions& opt, int shard) {
  long long per = opt.steps / opt.shards;
  return per + (shard < opt.steps % opt.shards ? 1 : 0);
}

int resolved_threads(const McOptions& opt) {
#ifdef _OPENMP
  return opt.threads > 0 ? opt.threads : omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs fn(shard) over all shards, possibly in parallel; fn must only touch
// shard-local state. Results are merged by the caller in shard order.
template <typename Fn>
void for_each_shard(const McOptions& opt, Fn&& fn) {
  if (opt.shards < 1) throw std::invalid_argument("shards must be positive");
  const int n = opt.shards;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolved_threads(opt))
  for (int s = 0; s < n; ++s) fn(s);
#else
  for (int s = 0; s < n; ++s) fn(s);
#endif
}

}  // namespace

EquidistributionResult run_equidistribution(const Domain& D, const McOptions& opt) {
  const Params& P = D.params;
  Stepper st(P, opt.prec);
  Bins bins(D, opt.prec);
  Real lo = P.ell0().to_real(opt.prec);
  Real span = P.r0().to_real(opt.prec) - lo;
  const std::size_t nrect = bins.heights.size();

  std::vector<std::vector<long long>> counts(static_cast<std::size_t>(opt.shards),
                                             std::vector<long long>(nrect, 0));
  std::vector<long long> outside(static_cast<std::size_t>(opt.shards), 0);

  for_each_shard(opt, [&](int s) {
    auto g = shard_rng(opt.seed, s);
    Real t = st.start(g, lo, span);
    Real v = Real::of(0L, opt.prec);
    long long need = shard_quota(opt, s);
    long long age = 0;
    auto& mine = counts[static_cast<std::size_t>(s)];
    while (need > 0) {
      if (!st.step(t, v)) {
        t = st.start(g, lo, span);
        v = Real::of(0L, opt.prec);
        age = 0;
        continue;
      }
      if (++age <= opt.burn_in) continue;
      double td = t.to_double();
      int idx = bins.index_of(td);
      if (idx < 0 || v.to_double() > bins.heights[static_cast<std::size_t>(idx)] + 1e-9)
        ++outside[static_cast<std::size_t>(s)];
      else
        ++mine[static_cast<std::size_t>(idx)];
      --need;
    }
  });

  EquidistributionResult res;
  res.counts.assign(nrect, 0);
  for (int s = 0; s < opt.shards; ++s) {
    for (std::size_t i = 0; i < nrect; ++i) res.counts[i] += counts[static_cast<std::size_t>(s)][i];
    res.outside += outside[static_cast<std::size_t>(s)];
  }
  for (long long c : res.counts) res.total += c;
  res.total += res.outside;

  double C = normalizing_constant(P, 96).to_double();
  res.expected.resize(nrect);
  for (std::size_t i = 0; i < nrect; ++i) {
    double h = bins.heights[i];
    res.expected[i] = C * std::log((1.0 + bins.breaks[i + 1] * h) /
                                   (1.0 + bins.breaks[i] * h));
    double p = res.expected[i];
    double n = static_cast<double>(res.total);
    double sigma = std::sqrt(n * p * (1.0 - p));
    if (sigma > 0)
      res.max_sigma = std::max(
          res.max_sigma, std::abs(static_cast<double>(res.counts[i]) - n * p) / sigma);
  }
  return res;
}

LenstraResult run_lenstra(const Params& P, const std::vector<double>& thresholds,
                          const McOptions& opt) {
  Stepper st(P, opt.prec);
  Real lo = P.ell0().to_real(opt.prec);
  Real span = P.r0().to_real(opt.prec) - lo;
  const std::size_t nz = thresholds.size();

  std::vector<std::vector<long long>> counts(static_cast<std::size_t>(opt.shards),
                                             std::vector<long long>(nz, 0));

  for_each_shard(opt, [&](int s) {
    auto g = shard_rng(opt.seed, s);
    Real t = st.start(g, lo, span);
    Real v = Real::of(0L, opt.prec);
    long long need = shard_quota(opt, s);
    long long age = 0;
    auto& mine = counts[static_cast<std::size_t>(s)];
    while (need > 0) {
      if (!st.step(t, v)) {
        t = st.start(g, lo, span);
        v = Real::of(0L, opt.prec);
        age = 0;
        continue;
      }
      if (++age <= opt.burn_in) continue;
      double theta = (t.abs() / (st.one + t * v)).to_double();
      for (std::size_t j = 0; j < nz; ++j)
        if (theta < thresholds[j]) ++mine[j];
      --need;
    }
  });

  LenstraResult res;
  res.thresholds = thresholds;
  res.counts.assign(nz, 0);
  for (int s = 0; s < opt.shards; ++s)
    for (std::size_t j = 0; j < nz; ++j) res.counts[j] += counts[static_cast<std::size_t>(s)][j];
  res.total = opt.steps;

  double lamC = (P.lambda().to_real(96) * normalizing_constant(P, 96)).to_double();
  res.expected.resize(nz);
  double num = 0, denom = 0;
  for (std::size_t j = 0; j < nz; ++j) {
    res.expected[j] = lamC * thresholds[j];
    double f = static_cast<double>(res.counts[j]) / static_cast<double>(res.total);
    num += thresholds[j] * f;
    denom += thresholds[j] * thresholds[j];
  }
  res.slope = denom > 0 ? num / denom : 0.0;
  return res;
}

Theta2dResult run_theta2d(const Domain& D, int nx, int ny, const McOptions& opt) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("histogram grid must be nonempty");
  const Params& P = D.params;
  Stepper st(P, opt.prec);
  Real lo = P.ell0().to_real(opt.prec);
  Real span = P.r0().to_real(opt.prec) - lo;
  ThetaDensity den(D);
  const double bx = den.xi_max(), by = den.eta_max();
  const std::size_t ncell = static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);

  std::vector<std::vector<long long>> counts(static_cast<std::size_t>(opt.shards),
                                             std::vector<long long>(ncell, 0));
  std::vector<long long> outside(static_cast<std::size_t>(opt.shards), 0);

  for_each_shard(opt, [&](int s) {
    auto g = shard_rng(opt.seed, s);
    Real t = st.start(g, lo, span);
    Real v = Real::of(0L, opt.prec);
    long long need = shard_quota(opt, s);
    long long age = 0;
    auto& mine = counts[static_cast<std::size_t>(s)];
    while (need > 0) {
      if (!st.step(t, v)) {
        t = st.start(g, lo, span);
        v = Real::of(0L, opt.prec);
        age = 0;
        continue;
      }
      if (++age <= opt.burn_in) continue;
      Real dn = st.one + t * v;
      double xi = (v / dn).to_double();
      double eta = (t.abs() / dn).to_double();
      int ix = static_cast<int>(xi / bx * nx);
      int iy = static_cast<int>(eta / by * ny);
      if (xi < 0 || eta < 0 || ix >= nx || iy >= ny)
        ++outside[static_cast<std::size_t>(s)];
      else
        ++mine[static_cast<std::size_t>(ix) + static_cast<std::size_t>(nx) * static_cast<std::size_t>(iy)];
      --need;
    }
  });

  Theta2dResult res;
  res.nx = nx;
  res.ny = ny;
  res.xi_max = bx;
  res.eta_max = by;
  res.counts.assign(ncell, 0);
  for (int s = 0; s < opt.shards; ++s) {
    for (std::size_t i = 0; i < ncell; ++i) res.counts[i] += counts[static_cast<std::size_t>(s)][i];
    res.outside += outside[static_cast<std::size_t>(s)];
  }
  res.total = opt.steps;

  // 4x4 midpoint quadrature of the density per cell.
  res.expected.assign(ncell, 0.0);
  const double dx = bx / nx, dy = by / ny;
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      double sum = 0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          sum += den.density((ix + (a + 0.5) / 4.0) * dx, (iy + (b + 0.5) / 4.0) * dy);
      res.expected[static_cast<std::size_t>(ix) + static_cast<std::size_t>(nx) * static_cast<std::size_t>(iy)] =
          sum / 16.0 * dx * dy;
    }
  return res;
}

long long run_membership(const Domain& D, const McOptions& opt) {
  const Params& P = D.params;
  DomainSnapshot s96 = snapshot(D, opt.prec);
  Bins bins(D, opt.prec);
  Real lo = P.ell0().to_real(opt.prec);
  Real span = P.r0().to_real(opt.prec) - lo;

  std::vector<long long> bad(static_cast<std::size_t>(opt.shards), 0);

  for_each_shard(opt, [&](int s) {
    auto g = shard_rng(opt.seed, s);
    long long need = shard_quota(opt, s);
    Stepper st(P, opt.prec);
    while (need > 0) {
      Real t = st.start(g, lo, span);
      if (t.is_zero() || mpfr_get_exp(t.raw()) < -kZeroBand) continue;
      int idx = bins.index_of(t.to_double());
      if (idx < 0) continue;  // start landed on the boundary at double resolution
      Real v = uniform01(g, opt.prec) *
               Real::of(bins.heights[static_cast<std::size_t>(idx)], opt.prec);
      auto [tp, vp] = planar_map(P, t, v);
      if (!s96.contains(tp, vp, 1e-9)) ++bad[static_cast<std::size_t>(s)];
      --need;
    }
  });

  long long total = 0;
  for (long long b : bad) total += b;
  return total;
}

}  // namespace rosen
