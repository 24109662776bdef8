#pragma once

#include "futaki/localization.hpp"
#include "futaki/toric.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace futaki {

/// Polytope data attached to a scenario: one polytope per bundle, the
/// optional anticanonical polytope they should sum to, and the moment direction.
struct ToricBlock {
    std::size_t dimension = 0;
    std::vector<ParamPolytope> polytopes;
    std::optional<ParamPolytope> whole;
    IntVector direction;
};

struct ScenarioFile {
    std::string name;
    std::string description;
    std::string citation;
    LocalizationScenario scenario;
    std::vector<std::pair<std::string, Ring>> rings;  // named rings referenced by components
    std::vector<std::string> component_rings;         // ring name per component
    std::optional<ToricBlock> toric;
};

/// Parses scenario JSON. Syntax errors throw ParseError with line and column;
/// missing or mistyped fields throw ParseError naming the field; data that
/// violates a scenario invariant throws ValidationError.
ScenarioFile parse_scenario(std::string_view text);
ScenarioFile load_scenario_file(const std::filesystem::path& path);

/// Canonical JSON (fixed key order, canonical rational and polynomial strings).
std::string serialize_scenario(const ScenarioFile& file);

/// Names of the built-in scenarios, in display order.
std::vector<std::string> catalog_names();
/// JSON source of a built-in scenario; throws UsageError for an unknown name.
std::string_view catalog_source(std::string_view name);
ScenarioFile load_catalog(std::string_view name);

}  // namespace futaki
