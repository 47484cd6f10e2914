#pragma once

#include <string>

#include "json.hpp"

#include "dp3/chow.hpp"
#include "dp3/detcat.hpp"
#include "dp3/geography.hpp"
#include "dp3/links.hpp"
#include "dp3/newton.hpp"
#include "dp3/scroll.hpp"

namespace dp3 {

using Json = nlohmann::ordered_json;

Json to_json(const DivClass& c);
Json to_json(const WeightMatrix& m);  // {"rows": [mu row, lambda row], "names": [...]}
Json to_json(const FamilyParams& f);
Json to_json(const NewtonTable& t);
Json to_json(const LinkTrace& t);
Json to_json(const NonrigidRow& r);
Json to_json(const DetFormat& f);
Json geography_json(const std::vector<GeographyPoint>& points);

/// The complete family report the CLI emits for `family N A B C`.
Json family_report_json(const FamilyParams& fam);

/// The complete report the CLI emits for `theta`. h0 may be empty (formats
/// built straight from a partition have no section table).
Json theta_report_json(Int degree, int e, const std::vector<Int>& h0, const DetFormat& fmt,
                       const std::vector<Int>& series, const ModuliCount& moduli);

/// Parse {"monomial": power, ...} into a divisibility profile.
DivisibilityProfile profile_from_json(const Json& j);

}  // namespace dp3
