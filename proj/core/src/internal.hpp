#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "hyperstream/estimators.hpp"
#include "hyperstream/rng.hpp"

namespace hyperstream::detail {

SeededRng trial_rng(const EstimatorConfig& cfg, Algorithm a, std::uint64_t trial_id);

// Validates cfg and checks that it matches the stream's arity.
void check_arity(const EdgeStream& stream, const EstimatorConfig& cfg);

// Runs fn(0..count-1) on up to `threads` workers; rethrows the first failure.
void parallel_for(std::uint64_t count, unsigned threads, const std::function<void(std::uint64_t)>& fn);

// Effective (vertex rate p, edge rate q) of the one-pass estimator.
std::pair<double, double> one_pass_rates(const EstimatorConfig& cfg);

inline double clamp_probability(double p) { return p >= 1.0 ? 1.0 : p; }

// Keyed threshold: a replayable Bernoulli(p) decision for item.
inline bool keyed_coin(std::uint64_t key, std::uint64_t item, double p) {
  return p >= 1.0 || unit_interval(mix64(key ^ mix64(item))) < p;
}

}  // namespace hyperstream::detail
