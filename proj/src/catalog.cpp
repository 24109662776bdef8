#include "futaki/error.hpp"
#include "futaki/scenario.hpp"

#include <map>

namespace futaki {

namespace {

constexpr const char* kCp1 = R"({
  "name": "cp1",
  "description": "Projective line with the rotation field; one bundle, two isolated fixed points. Fut vanishes.",
  "citation": "sanity case",
  "dimension": 1,
  "bundles": 1,
  "components": [
    {"label": "south", "euler": {"weight": "-1"}, "bundles": [{"hamiltonian": "-1"}]},
    {"label": "north", "euler": {"weight": "1"}, "bundles": [{"hamiltonian": "1"}]}
  ],
  "toric": {
    "dimension": 1,
    "direction": [1],
    "polytopes": [{"facets": [{"normal": [1], "offset": "1"}, {"normal": [-1], "offset": "1"}]}],
    "whole": {"facets": [{"normal": [1], "offset": "1"}, {"normal": [-1], "offset": "1"}]}
  }
})";

constexpr const char* kCp1Coupled = R"({
  "name": "cp1-coupled",
  "description": "Projective line with O(2) split as O(1) + O(1); two bundles, two isolated fixed points. Fut vanishes.",
  "citation": "sanity case",
  "dimension": 1,
  "bundles": 2,
  "components": [
    {"label": "south", "euler": {"weight": "-1"},
     "bundles": [{"hamiltonian": "-1/2"}, {"hamiltonian": "-1/2"}]},
    {"label": "north", "euler": {"weight": "1"},
     "bundles": [{"hamiltonian": "1/2"}, {"hamiltonian": "1/2"}]}
  ],
  "toric": {
    "dimension": 1,
    "direction": [1],
    "polytopes": [
      {"facets": [{"normal": [1], "offset": "1/2"}, {"normal": [-1], "offset": "1/2"}]},
      {"facets": [{"normal": [1], "offset": "1/2"}, {"normal": [-1], "offset": "1/2"}]}
    ],
    "whole": {"facets": [{"normal": [1], "offset": "1"}, {"normal": [-1], "offset": "1"}]}
  }
})";

std::string bundle_polytope(const std::string& narrow, const std::string& wide) {
    return R"({"facets": [
        {"normal": [-1, -1, 0, 1], "offset": ")" + narrow + R"("},
        {"normal": [1, 0, 0, 0], "offset": ")" + narrow + R"("},
        {"normal": [0, 1, 0, 0], "offset": ")" + narrow + R"("},
        {"normal": [0, 0, -1, -1], "offset": ")" + wide + R"("},
        {"normal": [0, 0, 1, 0], "offset": ")" + wide + R"("},
        {"normal": [0, 0, 0, -1], "offset": ")" + narrow + R"("},
        {"normal": [0, 0, 0, 1], "offset": ")" + narrow + R"("}
      ]})";
}

// P^1-bundle over P^1 x P^2 with the anticanonical class split as D(c) + D(1-c);
// the zero set of the fibre rotation is two sections Z_inf and Z_0.
std::string hultgren(const std::string& name, const std::string& description, const std::string& inf_hamiltonian,
                     const std::string& inf_weight, const std::string& zero_weight) {
    return R"({
  "name": ")" + name + R"(",
  "description": ")" + description + R"(",
  "citation": "toric P^1-bundle over P^1 x P^2",
  "dimension": 4,
  "bundles": 2,
  "parameter": {"name": "c", "interval": ["1/4", "3/4"]},
  "rings": {
    "section": {
      "generators": [{"name": "a", "order": 2, "degree": 2}, {"name": "b", "order": 3, "degree": 2}],
      "top": "a*b^2",
      "dimension": 3
    }
  },
  "components": [
    {"label": "Z_inf", "ring": "section", "codimension": 1,
     "euler": {"weight": ")" + inf_weight + R"(", "chern": {"a": "-1", "b": "1"}},
     "bundles": [
       {"hamiltonian": ")" + inf_hamiltonian + R"(", "chern": {"a": "2c-1/2", "b": "2"}},
       {"hamiltonian": "-1/2", "chern": {"a": "-2c+3/2", "b": "2"}}
     ]},
    {"label": "Z_0", "ring": "section", "codimension": 1,
     "euler": {"weight": ")" + zero_weight + R"(", "chern": {"a": "1", "b": "-1"}},
     "bundles": [
       {"hamiltonian": "1/2", "chern": {"a": "2c+1/2", "b": "1"}},
       {"hamiltonian": "1/2", "chern": {"a": "-2c+5/2", "b": "1"}}
     ]}
  ],
  "toric": {
    "dimension": 4,
    "direction": [0, 0, 0, 1],
    "polytopes": [
      )" + bundle_polytope("1/2", "c") + R"(,
      )" + bundle_polytope("1/2", "-c+1") + R"(
    ],
    "whole": )" + bundle_polytope("1", "1") + R"(
  }
})";
}

const std::vector<std::pair<std::string, std::string>>& sources() {
    static const std::vector<std::pair<std::string, std::string>> all = [] {
        std::vector<std::pair<std::string, std::string>> v;
        v.emplace_back("hultgren-c",
                       hultgren("hultgren-c",
                                "P^1-bundle over P^1 x P^2, coupled split D(c) + D(1-c), normal weights -1/2 and 1/2.",
                                "-1/2", "-1/2", "1/2"));
        v.emplace_back("hultgren-c-corrupt",
                       hultgren("hultgren-c-corrupt",
                                "hultgren-c with the Z_inf Hamiltonian of D(c) shifted by 1/10 (negative control).",
                                "-2/5", "-1/2", "1/2"));
        v.emplace_back("hultgren-c-lattice",
                       hultgren("hultgren-c-lattice",
                                "hultgren-c with lattice-normalized normal weights -1 and 1.", "-1/2", "-1", "1"));
        v.emplace_back("cp1", kCp1);
        v.emplace_back("cp1-coupled", kCp1Coupled);
        return v;
    }();
    return all;
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : sources()) out.push_back(name);
    return out;
}

std::string_view catalog_source(std::string_view name) {
    for (const auto& [n, text] : sources())
        if (n == name) return text;
    throw UsageError("unknown catalog scenario \"" + std::string(name) + "\"");
}

ScenarioFile load_catalog(std::string_view name) { return parse_scenario(catalog_source(name)); }

}  // namespace futaki
