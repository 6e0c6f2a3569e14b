#pragma once

#include <json.hpp>

#include "hurwitz_atlas/algebra_a.hpp"
#include "hurwitz_atlas/bracket.hpp"
#include "hurwitz_atlas/multigraph.hpp"
#include "hurwitz_atlas/power_series.hpp"

namespace hurwitz_atlas {

// Rationals travel as strings "num/den" (or "num" for integers); map keys
// are strings, so nlohmann's ordered std::map backing keeps output sorted
// and byte-stable.

nlohmann::json series_to_json(const PowerSeries& s);
PowerSeries series_from_json(const nlohmann::json& j);

// CSV with a header row: n,numerator,denominator.
std::string series_to_csv(const PowerSeries& s);

nlohmann::json aelement_to_json(const AElement& a);
AElement aelement_from_json(const nlohmann::json& j);

nlohmann::json closed_form_to_json(const ClosedForm& cf);

nlohmann::json asymptotic_to_json(const AsymptoticTerm& term);

nlohmann::json bracket_table_to_json(const BracketTable& table);
BracketTable bracket_table_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const MultiGraph& g);
MultiGraph graph_from_json(const nlohmann::json& j);

nlohmann::json catalog_to_json(const std::vector<NamedGraph>& catalog);
std::vector<NamedGraph> catalog_from_json(const nlohmann::json& j);

}  // namespace hurwitz_atlas
