#pragma once

#include <json.hpp>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qes2d/integrals.hpp"
#include "qes2d/oracle.hpp"
#include "qes2d/qes.hpp"
#include "qes2d/sl2rep.hpp"
#include "qes2d/system.hpp"

namespace qes2d {

/// 15 significant digits, the format used for every floating value we emit.
std::string format_double(double v);
std::string format_optional(const std::optional<double>& v);

/// Value rounded to 15 significant digits, so JSON output matches the CSV text.
double round15(double v);

using Json = nlohmann::ordered_json;

Json to_json(const ChargePair& cp);
Json to_json(const DerivedParams& dp);
Json to_json(const Polynomial& p);
Json to_json(const SpectralPoint& pt);
Json to_json(const EigenPair& ep);
Json to_json(const RadialGrid& g);
Json to_json(const OracleReport& rep);
Json to_json(const ParticularIntegralReport& rep);
Json to_json(const CommutatorReport& rep);
Json to_json(const Operator<double>& op);
Json to_json(const Operator<Exact>& op);

/// Comma-separated, header row first, LF line endings.
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

}  // namespace qes2d
