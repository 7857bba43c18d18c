// Serialization of library results: JSON documents (schema version 1) and
// CSV tables with a metadata header, as consumed by the command-line tool
// and by offline plotting scripts.
#pragma once

#include <string>

#include <json.hpp>

#include "rosen/expansion.hpp"
#include "rosen/natext.hpp"
#include "rosen/simulate.hpp"

namespace rosen::io {

// Run metadata echoed into every document.
struct Meta {
  int q = 0;
  std::string alpha;  // exact token as given on the command line
  long prec = 0;
  std::uint64_t seed = 0;
  long long steps = 0;
  int shards = 0;
};

// Decimal digit count justified by a given binary precision.
int digits_for(long prec);

nlohmann::json meta_json(const Meta& m);

nlohmann::json expansion_json(const Params& P, const AlgebraicNumber& x,
                              const ExactExpansion& e, long prec);
std::string expansion_text(const Params& P, const AlgebraicNumber& x,
                           const ExactExpansion& e, long prec);

nlohmann::json ordering_json(const OrderingCertificate& c, long prec);
nlohmann::json heights_json(const HeightSystem& h, long prec);
nlohmann::json domain_json(const Domain& D, long prec);
nlohmann::json jigsaw_json(const JigsawCertificate& c);

std::string domain_csv(const Domain& D, const Meta& m);

std::string equidistribution_csv(const Domain& D, const EquidistributionResult& r,
                                 const Meta& m);
std::string lenstra_csv(const LenstraResult& r, const Meta& m);
std::string theta2d_csv(const Theta2dResult& r, const Meta& m);

// Writes content to path, or to stdout when path is "-" or empty.
void write_output(const std::string& path, const std::string& content);

}  // namespace rosen::io
