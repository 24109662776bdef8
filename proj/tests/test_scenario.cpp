#include "doctest.h"

#include "futaki/cli.hpp"
#include "futaki/error.hpp"
#include "futaki/localization.hpp"
#include "futaki/scenario.hpp"

#include "json.hpp"

#include <algorithm>
#include <string>

using namespace futaki;
using Json = nlohmann::ordered_json;

namespace {

Json catalog_json(const char* name) { return Json::parse(catalog_source(name)); }

ScenarioFile reparse(const Json& j) { return parse_scenario(j.dump()); }

cli::Output run(cli::Command cmd, const char* name, cli::RunOptions opts = {}) {
    return cli::run(cmd, load_catalog(name), opts);
}

std::vector<Rational> battery_samples() {
    return {Rational(5, 16), Rational(3, 8), Rational(1, 2), Rational(5, 8), Rational(11, 16)};
}

}  // namespace

TEST_CASE("parse_scenario examples") {
    const auto f = load_catalog("hultgren-c");
    CHECK(f.scenario.dimension == 4);
    CHECK(f.scenario.bundle_count == 2);
    REQUIRE(f.scenario.parameter.has_value());
    CHECK(f.scenario.parameter->lower == Rational(1, 4));
    CHECK(f.scenario.parameter->upper == Rational(3, 4));
    CHECK(f.scenario.components.size() == 2);

    auto one_class = catalog_json("hultgren-c");
    one_class["components"][0]["bundles"].erase(1);
    CHECK_THROWS_AS(reparse(one_class), ValidationError);

    auto reversed = catalog_json("hultgren-c");
    reversed["parameter"]["interval"] = Json::array({"3/4", "1/4"});
    CHECK_THROWS_AS(reparse(reversed), ValidationError);

    auto zero_euler = catalog_json("hultgren-c");
    zero_euler["components"][0]["euler"]["weight"] = "0";
    try {
        reparse(zero_euler);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("Z_inf") != std::string::npos);
    }
}

TEST_CASE("parse errors carry a location or field") {
    try {
        parse_scenario("{\n  \"name\": \"x\",\n  \"dimension\": ,\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    auto missing = catalog_json("cp1");
    missing.erase("components");
    try {
        reparse(missing);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("components") != std::string::npos);
    }
    auto mistyped = catalog_json("cp1");
    mistyped["dimension"] = "one";
    CHECK_THROWS_AS(reparse(mistyped), ParseError);
    CHECK_THROWS_AS(load_catalog("no-such-scenario"), UsageError);
}

TEST_CASE("serialize round-trip") {
    for (const auto& name : catalog_names()) {
        const auto f = load_catalog(name);
        const std::string once = serialize_scenario(f);
        const auto g = parse_scenario(once);
        CHECK(serialize_scenario(g) == once);
        CHECK(fut_localized(g.scenario) == fut_localized(f.scenario));
        for (std::size_t a = 0; a < static_cast<std::size_t>(f.scenario.bundle_count); ++a)
            CHECK(volume_localized(g.scenario, a) == volume_localized(f.scenario, a));
    }
    // Non-canonical spellings collapse to the same canonical form.
    auto j = catalog_json("hultgren-c");
    j["components"][0]["bundles"][0]["chern"]["a"] = "-1/2 + 2*c";
    j["components"][0]["bundles"][0]["hamiltonian"] = "-2/4";
    CHECK(serialize_scenario(reparse(j)) == serialize_scenario(load_catalog("hultgren-c")));
}

TEST_CASE("catalog integrity") {
    const auto names = catalog_names();
    for (const char* expected : {"hultgren-c", "cp1", "cp1-coupled", "hultgren-c-corrupt", "hultgren-c-lattice"})
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    for (const auto& name : names) {
        const auto f = load_catalog(name);
        CHECK(validate_scenario(f.scenario).valid);
        CHECK(cli::run(cli::Command::validate, f, {}).exit_code == 0);
    }
    // Batteries that are expected to hold exactly.
    for (const char* name : {"hultgren-c-lattice", "cp1", "cp1-coupled"}) {
        const auto f = load_catalog(name);
        CHECK(cli::run(cli::Command::verify, f, {}).exit_code == 0);
    }
    // The negative control must be rejected.
    CHECK(run(cli::Command::verify, "hultgren-c-corrupt").exit_code == 5);
}

TEST_CASE("report contents") {
    const auto out = run(cli::Command::localize, "hultgren-c");
    CHECK(out.exit_code == 0);
    CHECK(out.text.find("(56c-3)(56c-53)") != std::string::npos);
    const auto j = Json::parse(out.structured);
    CHECK(j["volumes"][0]["expanded"] == "112c-6");
    CHECK(j["volumes"][1]["expanded"] == "-112c+106");
    CHECK(j["fut"]["factored"] == "-3(112c^2-112c+23)/((56c-3)(56c-53))");
    bool prefactor = false;
    for (const auto& n : j["notes"]) prefactor |= n.get<std::string>().find("1/(m+1) = 1/5") != std::string::npos;
    CHECK(prefactor);

    const auto f = load_catalog("hultgren-c");
    const auto report = cli::build_report(f, {});
    REQUIRE(report.roots.has_value());
    for (const auto& r : report.roots->roots) {
        CHECK(r.interval.lower >= f.scenario.parameter->lower);
        CHECK(r.interval.upper <= f.scenario.parameter->upper);
    }
}

TEST_CASE("structured output is deterministic") {
    for (auto cmd : {cli::Command::localize, cli::Command::roots, cli::Command::verify, cli::Command::sample,
                     cli::Command::toric}) {
        cli::RunOptions serial;
        serial.exec = Execution::serial;
        serial.param_value = Rational(1, 2);
        cli::RunOptions parallel = serial;
        parallel.exec = Execution::parallel;
        const auto a = run(cmd, "hultgren-c-lattice", parallel);
        const auto b = run(cmd, "hultgren-c-lattice", parallel);
        const auto c = run(cmd, "hultgren-c-lattice", serial);
        CHECK(a.structured == b.structured);
        CHECK(a.structured == c.structured);
        CHECK(a.text == c.text);
        CHECK(a.csv == c.csv);
    }

    // Reordering components, rings and bundle keys does not change the result.
    auto j = catalog_json("hultgren-c");
    auto& comps = j["components"];
    std::swap(comps[0], comps[1]);
    Json rings = Json::object();
    std::vector<std::string> keys;
    for (auto it = j["rings"].begin(); it != j["rings"].end(); ++it) keys.push_back(it.key());
    for (auto k = keys.rbegin(); k != keys.rend(); ++k) rings[*k] = j["rings"][*k];
    j["rings"] = rings;
    const auto permuted = cli::run(cli::Command::localize, reparse(j), {});
    CHECK(permuted.structured == run(cli::Command::localize, "hultgren-c").structured);
}

TEST_CASE("csv output") {
    cli::RunOptions three;
    cli::parse_samples("3", three);
    const auto out = run(cli::Command::sample, "hultgren-c", three);
    CHECK(out.csv == "c,fut\n3/8,-13/768\n1/2,-3/125\n5/8,-13/768\n");

    const auto empty = run(cli::Command::roots, "cp1");
    CHECK(empty.csv == "closed_form,lower,upper,multiplicity\n");

    cli::RunOptions explicit_points;
    cli::parse_samples("5/16,1/2", explicit_points);
    REQUIRE(explicit_points.sample_points.has_value());
    CHECK(explicit_points.sample_points->size() == 2);
    try {
        cli::parse_samples("x", explicit_points);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(cli::exit_code(e.category()) == 2);
    }
}

TEST_CASE("verify on the lattice scenario") {
    cli::RunOptions opts;
    opts.sample_points = battery_samples();
    const auto out = run(cli::Command::verify, "hultgren-c-lattice", opts);
    CHECK(out.exit_code == 0);
    const auto j = Json::parse(out.structured);
    REQUIRE(j.contains("validation"));
    CHECK(j["validation"]["samples"].size() == 5);
}

TEST_CASE("exit codes") {
    CHECK(cli::exit_code(ErrorCategory::usage) == 2);
    CHECK(cli::exit_code(ErrorCategory::parse) == 2);
    CHECK(cli::exit_code(ErrorCategory::validation) == 3);
    CHECK(cli::exit_code(ErrorCategory::computation) == 4);
    CHECK(cli::exit_code(ErrorCategory::mismatch) == 5);
    CHECK(cli::error_output(ParseError("x")).exit_code == 2);
    CHECK(cli::error_output(ValidationError("x")).exit_code == 3);
    CHECK(cli::error_output(PoleError("x")).exit_code == 4);

    cli::RunOptions at_pole;
    at_pole.param_value = Rational(3, 56);
    CHECK_THROWS_AS(run(cli::Command::localize, "hultgren-c", at_pole), PoleError);

    CHECK(cli::parse_command("verify") == cli::Command::verify);
    CHECK(cli::parse_format("json") == cli::Format::structured);
    CHECK_THROWS_AS(cli::parse_command("nope"), UsageError);
    CHECK(cli::parse_direction("0,0,0,1") == IntVector{0, 0, 0, 1});
}
