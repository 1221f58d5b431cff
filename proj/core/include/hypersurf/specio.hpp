#pragma once

#include "hypersurf/certify.hpp"
#include "hypersurf/genfam.hpp"
#include "hypersurf/invariants.hpp"
#include "hypersurf/tower.hpp"

#include <json.hpp>

#include <string>

namespace hypersurf {

using Json = nlohmann::ordered_json;

/// Parses the TOML subset used by tower documents (scalar keys, [table] and
/// [[array-of-tables]] headers, arrays, inline tables, comments) into JSON.
/// SpecError with line context on malformed input.
Json toml_to_json(const std::string& text);

/// Reads a tower specification from a TOML or JSON document (decided by a
/// leading '{' after whitespace, or by the path suffix when given).
TowerSpec parse_tower_spec(const std::string& text, const std::string& path_hint = "");
TowerSpec load_tower_spec(const std::string& path);

/// Canonical JSON echo of a specification.
Json tower_spec_json(const TowerSpec& spec);

Json resolution_json(const ResolutionData& data);
Json node_inventory_json(const Tower& t);
Json singularity_inventory_json(const Tower& t);
Json ramification_json(const RamificationReport& rep);
Json verdict_json(const Verdict& v);
Json invariants_json(const Tower& t, const std::vector<LevelInvariants>& inv);
std::string invariants_table(const std::vector<LevelInvariants>& inv);
Json equation_set_json(const EquationSet& es);
std::string equation_set_text(const EquationSet& es);
Json classification_json(const Classification& cls);

}  // namespace hypersurf
