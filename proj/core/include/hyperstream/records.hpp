#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hyperstream/estimators.hpp"

namespace hyperstream {

inline constexpr int kRecordSchemaVersion = 1;

// One estimator run, serialized as a single JSON object per line. Field names
// are fixed; see README for the schema.
struct RunRecord {
  int schema_version = kRecordSchemaVersion;
  std::string instance;   // file path or generator label
  std::string algorithm;  // abundant | easy | simplest | coloring | shadow | onepass
  int k = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double T = 0.0;
  double eps = 0.0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  std::optional<double> estimate;  // absent when the run failed
  std::uint64_t trials = 0;
  int passes = 0;
  std::uint64_t space_peak_words = 0;
  std::uint64_t max_trial_space_words = 0;
  double wall_time_s = 0.0;
  std::optional<std::uint64_t> exact_T;  // filled when the exact count is known
  std::optional<std::string> error;      // failure message for runs that threw

  bool operator==(const RunRecord&) const = default;
};

// Fills the estimator-derived fields of a record from an Estimate.
RunRecord make_record(const Estimate& est, const EstimatorConfig& cfg, std::string instance, VertexId n,
                      std::size_t m);

// Compact single-line JSON (no trailing newline).
std::string to_json_line(const RunRecord& r);
// Throws FormatError on malformed input, missing fields or a schema mismatch.
RunRecord parse_record(std::string_view line);

}  // namespace hyperstream
