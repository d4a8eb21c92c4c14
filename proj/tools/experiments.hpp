#pragma once

// Desk-scale experiment runners behind the elasto_cli subcommands.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace elasto::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "0.1.0";

/// Exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exit code 3: a self-check or acceptance threshold failed.
struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A CSV table; cells are numbers, integers, booleans or strings.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

struct RunOutput {
  json report;
  std::vector<Table> tables;
  /// Failed validation checks; non-empty means exit code 3.
  std::vector<std::string> failures;
};

const std::vector<std::string>& experiment_names();

/// JSON Schema (draft-07 subset) for the config of one experiment.
json config_schema(const std::string& experiment);

/// Validates against config_schema; the error names the offending path.
void validate_config(const json& config, const std::string& experiment);

/// Runs one experiment. Points execute on up to `workers` threads; per-point
/// seeds come from derive_seed(seed, index), so results do not depend on the
/// worker count.
RunOutput run_experiment(const std::string& experiment, const json& config, std::uint64_t seed, int workers);

/// 17 significant digits.
std::string format_number(double v);
void write_csv(std::ostream& os, const Table& t);

/// Writes <prefix>_<table>.csv and <prefix>.json through temporary files and
/// renames them into place; on any error every file already written is removed.
std::vector<std::string> write_outputs(const std::string& prefix, const RunOutput& out);

/// Full command flow: read, validate, run, write. Returns the exit code.
int run_command(const std::string& experiment, const std::string& config_path, const std::string& out_prefix,
                int workers, const std::int64_t* seed_override, std::ostream& log);

}  // namespace elasto::cli
