#include "rosen/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "rosen/metrics.hpp"

namespace rosen::io {

using nlohmann::json;

int digits_for(long prec) {
  int d = static_cast<int>(static_cast<double>(prec) * 0.30103) - 8;
  return std::max(10, std::min(40, d));
}

json meta_json(const Meta& m) {
  json j;
  j["schema"] = 1;
  j["q"] = m.q;
  j["alpha"] = m.alpha;
  j["precision"] = m.prec;
  j["digits"] = digits_for(m.prec);
  if (m.steps > 0) {
    j["seed"] = m.seed;
    j["steps"] = m.steps;
    j["shards"] = m.shards;
  }
  return j;
}

namespace {

json number_json(const AlgebraicNumber& x, int digits) {
  json j;
  j["exact"] = x.str();
  j["decimal"] = x.decimal(digits);
  return j;
}

std::string csv_header(const Meta& m) {
  std::ostringstream os;
  os << "# q=" << m.q << " alpha=" << m.alpha << " precision=" << m.prec;
  if (m.steps > 0) os << " N=" << m.steps << " seed=" << m.seed << " shards=" << m.shards;
  os << "\n";
  return os.str();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

json expansion_json(const Params& P, const AlgebraicNumber& x, const ExactExpansion& e,
                    long prec) {
  int digits = digits_for(prec);
  json j;
  j["schema"] = 1;
  j["q"] = P.q();
  j["alpha"] = number_json(P.alpha(), digits);
  j["x"] = number_json(x, digits);
  j["terminated"] = e.hit_zero;

  std::vector<Digit> finite;
  for (const Digit& d : e.digits)
    if (!d.infinite) finite.push_back(d);

  json dig = json::array();
  for (std::size_t k = 0; k < finite.size(); ++k)
    dig.push_back({{"n", k + 1}, {"eps", finite[k].eps}, {"d", finite[k].d}});
  j["digits"] = dig;

  ExactConvergents cv = convergents_exact(P, finite);
  Real xr = x.to_real(prec);
  Real bound_coeff = approximation_bound_coeff(P).to_real(prec);
  json rows = json::array();
  for (std::size_t k = 0; k < finite.size(); ++k) {
    long n = static_cast<long>(k) + 1;
    Real R = cv.r(n).to_real(prec), S = cv.s(n).to_real(prec);
    Real err = (xr - R / S).abs();
    json row;
    row["n"] = n;
    row["numerator"] = number_json(cv.r(n), digits);
    row["denominator"] = number_json(cv.s(n), digits);
    row["value"] = (R / S).str(digits);
    row["error"] = err.str(digits);
    row["bound"] = (bound_coeff / (S * S)).str(digits);
    rows.push_back(row);
  }
  j["convergents"] = rows;
  return j;
}

std::string expansion_text(const Params& P, const AlgebraicNumber& x,
                           const ExactExpansion& e, long prec) {
  json j = expansion_json(P, x, e, prec);
  std::ostringstream os;
  os << "expansion of x = " << j["x"]["decimal"].get<std::string>() << " (q=" << P.q()
     << ", alpha=" << j["alpha"]["decimal"].get<std::string>() << ")\n";
  const json& dig = j["digits"];
  const json& rows = j["convergents"];
  for (std::size_t k = 0; k < dig.size(); ++k) {
    const json& d = dig[k];
    const json& r = rows[k];
    os << "  n=" << d["n"] << "  (" << (d["eps"].get<int>() > 0 ? "+" : "-") << "1:"
       << d["d"].get<long>() << ")  R/S=" << r["value"].get<std::string>()
       << "  err=" << r["error"].get<std::string>()
       << "  bound=" << r["bound"].get<std::string>() << "\n";
  }
  if (e.hit_zero)
    os << "  orbit reached 0 exactly: the expansion is finite with " << dig.size()
       << " digits\n";
  return os.str();
}

json ordering_json(const OrderingCertificate& c, long prec) {
  (void)prec;
  json j;
  j["regime"] = regime_name(c.regime);
  j["adapted_for_h0"] = c.h0_adapted;
  j["ok"] = c.ok;
  json items = json::array();
  for (const OrderingItem& it : c.items)
    items.push_back({{"lhs", it.lhs},
                     {"rel", it.rel},
                     {"rhs", it.rhs},
                     {"ok", it.ok},
                     {"lhs_value", it.lhs_value},
                     {"rhs_value", it.rhs_value}});
  j["comparisons"] = items;
  j["skipped"] = c.skipped;
  return j;
}

json heights_json(const HeightSystem& h, long prec) {
  int digits = digits_for(prec);
  json j;
  j["regime"] = regime_name(h.regime);
  j["ok"] = h.ok;
  json hs = json::array();
  for (std::size_t n = 1; n < h.H.size(); ++n)
    hs.push_back({{"n", n},
                  {"exact", h.H[n].str()},
                  {"decimal", h.H[n].decimal(digits)}});
  j["heights"] = hs;
  json rel = json::array();
  for (const HeightRelation& r : h.relations) rel.push_back({{"name", r.name}, {"ok", r.ok}});
  j["relations"] = rel;
  j["skipped"] = h.skipped;
  return j;
}

json domain_json(const Domain& D, long prec) {
  int digits = digits_for(prec);
  json j;
  j["schema"] = 1;
  j["q"] = D.params.q();
  j["alpha"] = number_json(D.params.alpha(), digits);
  j["regime"] = regime_name(D.regime);
  j["rectangles"] = json::array();
  for (const Rect& r : D.rects)
    j["rectangles"].push_back({{"label", r.label},
                               {"lo", number_json(r.lo, digits)},
                               {"hi", number_json(r.hi, digits)},
                               {"height", number_json(r.height, digits)}});
  j["count"] = D.rects.size();
  j["zero_rect"] = D.zero_rect;
  Real C = normalizing_constant(D.params, prec);
  Real mass = domain_mass(D, prec);
  j["normalizing_constant"] = C.str(digits);
  j["mass"] = mass.str(digits);
  j["mass_residual"] = (mass - Real::of(1L, prec) / C).abs().str(8);
  return j;
}

json jigsaw_json(const JigsawCertificate& c) {
  json j;
  j["regime"] = regime_name(c.regime);
  j["d_star"] = c.d_star;
  j["finite_pieces"] = c.finite_pieces;
  j["slabs"] = c.slabs;
  j["tail_identity_ok"] = c.tail_lemma_ok;
  j["ok"] = c.ok;
  j["failures"] = c.failures;
  return j;
}

std::string domain_csv(const Domain& D, const Meta& m) {
  int digits = digits_for(m.prec);
  std::ostringstream os;
  os << csv_header(m);
  os << "index,label,lo,hi,height\n";
  for (std::size_t i = 0; i < D.rects.size(); ++i) {
    const Rect& r = D.rects[i];
    os << i << "," << r.label << "," << r.lo.decimal(digits) << ","
       << r.hi.decimal(digits) << "," << r.height.decimal(digits) << "\n";
  }
  return os.str();
}

std::string equidistribution_csv(const Domain& D, const EquidistributionResult& r,
                                 const Meta& m) {
  int digits = digits_for(m.prec);
  std::ostringstream os;
  os << csv_header(m);
  os << "t_lo,t_hi,height,count,empirical,theoretical\n";
  double n = static_cast<double>(r.total);
  for (std::size_t i = 0; i < r.counts.size(); ++i) {
    const Rect& rc = D.rects[i];
    os << rc.lo.decimal(digits) << "," << rc.hi.decimal(digits) << ","
       << rc.height.decimal(digits) << "," << r.counts[i] << ","
       << fmt(static_cast<double>(r.counts[i]) / n) << "," << fmt(r.expected[i]) << "\n";
  }
  return os.str();
}

std::string lenstra_csv(const LenstraResult& r, const Meta& m) {
  std::ostringstream os;
  os << csv_header(m);
  os << "threshold,count,empirical,theoretical\n";
  double n = static_cast<double>(r.total);
  for (std::size_t j = 0; j < r.thresholds.size(); ++j)
    os << fmt(r.thresholds[j]) << "," << r.counts[j] << ","
       << fmt(static_cast<double>(r.counts[j]) / n) << "," << fmt(r.expected[j]) << "\n";
  return os.str();
}

std::string theta2d_csv(const Theta2dResult& r, const Meta& m) {
  std::ostringstream os;
  os << csv_header(m);
  os << "xi_lo,xi_hi,eta_lo,eta_hi,empirical,theoretical\n";
  double n = static_cast<double>(r.total);
  double dx = r.xi_max / r.nx, dy = r.eta_max / r.ny;
  for (int iy = 0; iy < r.ny; ++iy)
    for (int ix = 0; ix < r.nx; ++ix) {
      std::size_t idx =
          static_cast<std::size_t>(ix) + static_cast<std::size_t>(r.nx) * static_cast<std::size_t>(iy);
      os << fmt(ix * dx) << "," << fmt((ix + 1) * dx) << "," << fmt(iy * dy) << ","
         << fmt((iy + 1) * dy) << "," << fmt(static_cast<double>(r.counts[idx]) / n)
         << "," << fmt(r.expected[idx]) << "\n";
    }
  return os.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
}

}  // namespace rosen::io
