#pragma once

#include "futaki/analysis.hpp"
#include "futaki/error.hpp"
#include "futaki/scenario.hpp"

#include <optional>
#include <string>
#include <vector>

namespace futaki::cli {

enum class Command { localize, toric, roots, verify, sample, validate, catalog };
enum class Format { text, structured, csv };

Command parse_command(std::string_view name);
Format parse_format(std::string_view name);

struct RunOptions {
    std::optional<Rational> param_value;
    std::size_t sample_count = 5;
    std::optional<std::vector<Rational>> sample_points;  // overrides sample_count
    Rational root_width = default_root_width();
    std::optional<IntVector> direction;                  // overrides the scenario's direction
    Execution exec = Execution::parallel;
};

/// "5" -> count 5; "5/16,3/8,1/2" -> explicit points.
void parse_samples(std::string_view text, RunOptions& options);
IntVector parse_direction(std::string_view text);

struct ObstructionReport {
    std::string scenario;
    int dimension = 0;
    int bundle_count = 0;
    std::optional<Parameter> parameter;
    std::vector<RationalFunction> volumes;     // residue sums of degree m
    std::vector<RationalFunction> numerators;  // residue sums of degree m + 1
    RationalFunction fut;
    std::optional<Rational> fut_value;         // at --param-value
    std::optional<RootReport> roots;
    std::optional<ValidationRecord> validation;
    std::vector<std::string> notes;
    std::vector<std::string> warnings;
};

ObstructionReport build_report(const ScenarioFile& file, const RunOptions& options);

/// Rendered result of one command: every format, plus the exit status.
struct Output {
    std::string text;
    std::string structured;
    std::string csv;
    int exit_code = 0;
};

Output run(Command command, const ScenarioFile& file, const RunOptions& options);
Output run_catalog();

/// Selects one rendering; structured output is byte-stable for identical input.
const std::string& emit(const Output& output, Format format);

int exit_code(ErrorCategory category);
/// Error report in the requested format; exit status from the error category.
Output error_output(const Error& error);

}  // namespace futaki::cli
