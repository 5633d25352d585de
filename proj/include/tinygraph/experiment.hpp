#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "tinygraph/census.hpp"
#include "tinygraph/tinyness.hpp"

namespace tinygraph {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "tinygraph";
inline constexpr const char* kToolVersion = "1.0.0";

std::string sha256_hex(std::string_view bytes);

struct ExperimentResult {
  Json report;
  /// Sweep curve; empty for experiments without one.
  std::string csv;
};

/// Parses a JSON config (ParseError with byte offset on malformed text) and
/// dispatches on its "kind": tinyness-profile, threshold, diversity,
/// crossover or ladder-class. Output is a function of the config bytes only;
/// `threads` changes speed, never results.
ExperimentResult run_experiment(const std::string& config_text, unsigned threads = 1);

ExperimentResult run_tinyness_profile(const Json& config, unsigned threads = 1);
ExperimentResult run_threshold(const Json& config, unsigned threads = 1);
ExperimentResult run_diversity(const Json& config, unsigned threads = 1);
ExperimentResult run_crossover(const Json& config, unsigned threads = 1);
ExperimentResult run_ladder_class(const Json& config, unsigned threads = 1);

/// Pretty-printed report with a trailing newline.
std::string report_text(const Json& report);

/// {mode, n, rows: [{k, t?, certificate, count}], summary: [{k, classes}]}.
Json census_to_json(const CensusTable& table);
Json verdict_to_json(const TinynessVerdict& verdict);
/// log2 values: numbers, or the string "-inf" for zero quantities.
Json log2_json(double value);

}  // namespace tinygraph
