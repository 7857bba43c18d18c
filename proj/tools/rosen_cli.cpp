// Command-line front end: expansions, theorem certificates, domain dumps,
// and seeded statistical experiments, with JSON/CSV output for scripting.
#include <cmath>
#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rosen/expansion.hpp"
#include "rosen/io.hpp"
#include "rosen/metrics.hpp"
#include "rosen/natext.hpp"
#include "rosen/rational.hpp"
#include "rosen/simulate.hpp"

using namespace rosen;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  int q = 4;
  std::string alpha = "1/2";
  long prec = 128;
  std::string out;
  std::string format;
};

void add_common(CLI::App* cmd, CommonOpts& c, const char* default_format) {
  cmd->add_option("--q", c.q, "index of the parameter field (>= 3)")->required();
  cmd->add_option("--alpha", c.alpha,
                  "expansion parameter: rational, decimal, \"1/2\", \"1/lambda\" or "
                  "\"rho/lambda\"");
  cmd->add_option("--precision", c.prec, "working precision in bits")
      ->check(CLI::Range(64L, 65536L))
      ->envname("ROSEN_PRECISION")
      ->default_val(128);
  cmd->add_option("--out", c.out, "output file (default: stdout)");
  c.format = default_format;
  cmd->add_option("--format", c.format, "output format");
}

Params make_params(const CommonOpts& c) {
  if (c.q < 3) throw std::invalid_argument("q must be at least 3");
  if (c.alpha == "1/lambda") return Params::make_inv_lambda(c.q);
  if (c.alpha == "rho/lambda") return Params::make_rho_over_lambda(c.q);
  return Params::make(c.q, parse_rational(c.alpha));
}

io::Meta meta_of(const CommonOpts& c) {
  io::Meta m;
  m.q = c.q;
  m.alpha = c.alpha;
  m.prec = c.prec;
  return m;
}

int cmd_expand(const CommonOpts& c, const std::string& xstr, int n) {
  Params P = make_params(c);
  AlgebraicNumber x = AlgebraicNumber::from_rational(P.field(), parse_rational(xstr));
  ExactExpansion e = expand(P, x, n);
  if (c.format == "json")
    io::write_output(c.out, io::expansion_json(P, x, e, c.prec).dump(2) + "\n");
  else
    io::write_output(c.out, io::expansion_text(P, x, e, c.prec));
  return kExitOk;
}

int cmd_verify(const CommonOpts& c) {
  Params P = make_params(c);
  OrderingCertificate oc = verify_ordering(P);
  HeightSystem hs = height_system(P);
  Domain D = build_domain(P);
  JigsawCertificate jc = verify_bijectivity(P);

  Real C = normalizing_constant(P, c.prec);
  Real mass = domain_mass(D, c.prec);
  Real residual = (mass - Real::of(1L, c.prec) / C).abs();
  bool mass_ok = residual.to_double() < 1e-12;

  bool all = oc.ok && hs.ok && jc.ok && mass_ok;

  nlohmann::json j = io::meta_json(meta_of(c));
  j["regime"] = regime_name(oc.regime);
  j["ordering"] = io::ordering_json(oc, c.prec);
  j["heights"] = io::heights_json(hs, c.prec);
  j["tiling"] = io::jigsaw_json(jc);
  j["mass_residual"] = residual.str(8);
  j["mass_ok"] = mass_ok;
  j["ok"] = all;

  EndpointOrbits eo = endpoint_orbits(P);
  nlohmann::json digs = nlohmann::json::array();
  for (const Digit& d : eo.ell_digits)
    if (!d.infinite) digs.push_back(d.d);
  j["left_endpoint_digits"] = digs;
  digs = nlohmann::json::array();
  for (const Digit& d : eo.r_digits)
    if (!d.infinite) digs.push_back(d.d);
  j["right_endpoint_digits"] = digs;

  if (c.format == "json" || !c.out.empty()) io::write_output(c.out, j.dump(2) + "\n");

  std::cout << (all ? "PASS" : "FAIL") << " q=" << c.q << " alpha=" << c.alpha
            << " regime=" << regime_name(oc.regime)
            << " comparisons=" << oc.items.size()
            << " relations=" << hs.relations.size()
            << " mass_residual=" << residual.str(8)
            << " tiling=" << (jc.ok ? "ok" : "FAILED") << "\n";
  if (!all) {
    for (const OrderingItem& it : oc.items)
      if (!it.ok)
        std::cerr << "failed: " << it.lhs << " " << it.rel << " " << it.rhs << "  ("
                  << it.lhs_value << " vs " << it.rhs_value << ")\n";
    for (const HeightRelation& r : hs.relations)
      if (!r.ok) std::cerr << "failed: " << r.name << "\n";
    for (const std::string& f : jc.failures) std::cerr << "failed: " << f << "\n";
    if (!mass_ok) std::cerr << "failed: mass residual " << residual.str(8) << "\n";
  }
  return all ? kExitOk : kExitFailedCheck;
}

int cmd_domain(const CommonOpts& c) {
  Params P = make_params(c);
  Domain D = build_domain(P);
  if (c.format == "csv") {
    io::write_output(c.out, io::domain_csv(D, meta_of(c)));
  } else {
    io::write_output(c.out, io::domain_json(D, c.prec).dump(2) + "\n");
  }
  return kExitOk;
}

struct SimOpts {
  long long n = 1000000;
  std::uint64_t seed = 1;
  int shards = 64;
  int threads = 0;
  double c_level = 0.0;
  int grid = 200;
};

int cmd_simulate(const CommonOpts& c, const std::string& experiment, const SimOpts& s) {
  Params P = make_params(c);
  McOptions opt;
  opt.seed = s.seed;
  opt.steps = s.n;
  opt.shards = s.shards;
  opt.threads = s.threads;
  opt.prec = c.prec;

  io::Meta m = meta_of(c);
  m.seed = s.seed;
  m.steps = s.n;
  m.shards = s.shards;

  if (experiment == "equidistribution") {
    Domain D = build_domain(P);
    EquidistributionResult r = run_equidistribution(D, opt);
    io::write_output(c.out, io::equidistribution_csv(D, r, m));
    std::cout << "equidistribution q=" << c.q << " alpha=" << c.alpha << " N=" << r.total
              << " rectangles=" << r.counts.size() << " outside=" << r.outside
              << " max_sigma=" << r.max_sigma << "\n";
    return kExitOk;
  }

  if (experiment == "lenstra") {
    if (P.q() % 2 != 0) {
      std::cerr << "the linear threshold law has a closed form for even q only; "
                   "odd q is not supported\n";
      return kExitUsage;
    }
    double L = lenstra_constant(P).to_double();
    double c_level = s.c_level > 0 ? s.c_level : 1.0 / L;
    if (c_level < 1.0 / L - 1e-15)
      std::cerr << "warning: c below the linear-law range (c >= " << 1.0 / L
                << "); frequencies reported anyway\n";
    std::vector<double> z = {1.0 / c_level};
    LenstraResult r = run_lenstra(P, z, opt);
    io::write_output(c.out, io::lenstra_csv(r, m));
    double p = r.expected[0];
    double emp = static_cast<double>(r.counts[0]) / static_cast<double>(r.total);
    double sig = std::sqrt(static_cast<double>(r.total) * p * (1.0 - p));
    double zscore = sig > 0 ? (static_cast<double>(r.counts[0]) -
                               static_cast<double>(r.total) * p) / sig
                            : 0.0;
    std::cout << "lenstra q=" << c.q << " alpha=" << c.alpha << " c=" << c_level
              << " N=" << r.total << " empirical=" << emp << " theory=" << p
              << " z=" << zscore << "\n";
    return kExitOk;
  }

  if (experiment == "theta2d") {
    Domain D = build_domain(P);
    Theta2dResult r = run_theta2d(D, s.grid, s.grid, opt);
    io::write_output(c.out, io::theta2d_csv(r, m));
    double worst = 0;
    for (std::size_t i = 0; i < r.counts.size(); ++i)
      worst = std::max(worst, std::abs(static_cast<double>(r.counts[i]) /
                                           static_cast<double>(r.total) -
                                       r.expected[i]));
    std::cout << "theta2d q=" << c.q << " alpha=" << c.alpha << " N=" << r.total
              << " grid=" << s.grid << "x" << s.grid << " outside=" << r.outside
              << " max_cell_error=" << worst << "\n";
    return kExitOk;
  }

  std::cerr << "unknown experiment: " << experiment
            << " (expected lenstra, theta2d or equidistribution)\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alpha-Rosen continued fractions: expansions, natural-extension "
               "domains, theorem certificates and seeded experiments"};
  app.require_subcommand(1);

  CommonOpts ce, cv, cd, cs;
  std::string xstr;
  int ndigits = 10;
  CLI::App* expand_cmd = app.add_subcommand("expand", "expand a point and list convergents");
  add_common(expand_cmd, ce, "text");
  expand_cmd->add_option("--x", xstr, "point to expand (rational or decimal)")->required();
  expand_cmd->add_option("--n", ndigits, "number of digits")->check(CLI::Range(1, 100000));

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check the ordering, height, mass and tiling certificates");
  add_common(verify_cmd, cv, "text");

  CLI::App* domain_cmd = app.add_subcommand("domain", "print the natural-extension domain");
  add_common(domain_cmd, cd, "json");

  SimOpts so;
  std::string experiment;
  CLI::App* sim_cmd = app.add_subcommand("simulate", "run a seeded experiment");
  add_common(sim_cmd, cs, "csv");
  sim_cmd->add_option("experiment", experiment, "lenstra | theta2d | equidistribution")
      ->required();
  sim_cmd->add_option("--n", so.n, "number of samples")->check(CLI::Range(1LL, 4000000000LL));
  sim_cmd->add_option("--seed", so.seed, "random seed");
  sim_cmd->add_option("--shards", so.shards, "independent sub-runs merged in order")
      ->check(CLI::Range(1, 4096));
  sim_cmd->add_option("--threads", so.threads, "worker threads (0 = all cores)")
      ->check(CLI::Range(0, 1024));
  sim_cmd->add_option("--c", so.c_level, "threshold level for the lenstra experiment");
  sim_cmd->add_option("--grid", so.grid, "histogram cells per axis")
      ->check(CLI::Range(4, 2000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (expand_cmd->parsed()) return cmd_expand(ce, xstr, ndigits);
    if (verify_cmd->parsed()) return cmd_verify(cv);
    if (domain_cmd->parsed()) return cmd_domain(cd);
    if (sim_cmd->parsed()) return cmd_simulate(cs, experiment, so);
  } catch (const std::invalid_argument& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailedCheck;
  }
  return kExitUsage;
}
