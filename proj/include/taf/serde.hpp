#pragma once

#include <string>

#include <json.hpp>

#include "taf/autgroup.hpp"
#include "taf/cantor.hpp"
#include "taf/matrix_units.hpp"
#include "taf/profile.hpp"
#include "taf/rational.hpp"

namespace taf {

using Json = nlohmann::ordered_json;

/// Rationals travel as "num/den" strings, big integers as decimal strings.
Json rat_to_json(const Rat& v);
Rat rat_from_json(const Json& j);
Json int_to_json(const Int& v);

/// {"left": [...], "right": [...], "right_tail": "ones"|"max"}
Json point_to_json(const Point& x);
Point point_from_json(const Json& j);

/// {"preamble": [...], "cycle": [...]}
Json profile_to_json(const SequenceProfile& p);
SequenceProfile profile_from_json(const Json& j);

Json supernatural_to_json(const Supernatural& s);
Json exponent_vector_to_json(const ExponentVector& v);
ExponentVector exponent_vector_from_json(const Json& j);

Json gap_chart_to_json(const GapChart& chart);
Json density_witness_to_json(const DensityWitness& w);

/// List of {"row", "col", "coeff": {"a", "b"}} records in term order.
Json tri_element_to_json(const TriElement& x);

/// Parses "a/b" or "a"; wraps parse failures in Error(parse_error).
Rat parse_rat_arg(const std::string& text);

}  // namespace taf
