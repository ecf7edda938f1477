#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "inctab/bijections.hpp"
#include "inctab/dynamics.hpp"
#include "inctab/frieze.hpp"
#include "inctab/paths.hpp"
#include "inctab/sieving.hpp"
#include "inctab/tableau.hpp"

namespace inctab {

using Json = nlohmann::json;

inline constexpr std::string_view kTableauSchema = "inctab.tableau.v1";
inline constexpr std::string_view kPartitionSchema = "inctab.ncpartition.v1";
inline constexpr std::string_view kCspSchema = "inctab.csp.v1";
inline constexpr std::string_view kFriezeSchema = "inctab.frieze.v1";
inline constexpr std::string_view kOrbitSchema = "inctab.orbits.v1";
inline constexpr std::string_view kGrowthSchema = "inctab.growth.v1";
inline constexpr std::string_view kReportSchema = "inctab.report.v1";

/// Malformed input (not a tableau problem; those raise TableauError).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Json to_json(const IncreasingTableau& t);
/// Accepts {"rows": [[...], ...]} with or without a schema tag, or a bare
/// array of rows.
IncreasingTableau tableau_from_json(const Json& j);

/// JSON text, or compact rows such as "1,2,4;3,4,5" or "124;345" (single
/// digits only in the second form).
IncreasingTableau parse_tableau(std::string_view text);

Json to_json(const NCPartition& p);
NCPartition ncpartition_from_json(const Json& j);

Json to_json(const CSPReport& r);
Json to_json(const TropicalFrieze& f);
Json to_json(const OrbitReport& r);
Json to_json(const GrowthDiagram& g);

}  // namespace inctab
