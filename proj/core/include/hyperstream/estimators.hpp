#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hyperstream/edge_stream.hpp"
#include "hyperstream/sketches.hpp"

namespace hyperstream {

enum class Algorithm { kAbundant, kEasy, kSimplest, kColoring, kShadow, kOnePass };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::kAbundant, Algorithm::kEasy,   Algorithm::kSimplest,
                                               Algorithm::kColoring, Algorithm::kShadow, Algorithm::kOnePass};

std::string_view algorithm_name(Algorithm a);
// Accepts the names returned by algorithm_name; throws ConfigError otherwise.
Algorithm parse_algorithm(std::string_view name);
// 4 for the targeted-sampling estimators, 2 for the oblivious ones, 1 for one-pass.
int advertised_passes(Algorithm a);

struct EstimatorConfig {
  int k = 3;
  double T = 1.0;        // promised lower bound on the simplex count
  double epsilon = 0.1;  // relative accuracy, in (0, 1]
  double delta = 0.1;    // failure probability, in (0, 1)
  std::uint64_t master_seed = 1;

  // Batch size is ceil(variance_const * relvar / epsilon^2), with relvar the
  // algorithm's analytic Var/E^2 bound.
  double variance_const = 8.0;

  // Oracle sampling constant; unset means 12k(k+1). Smaller values are
  // accepted and reported as a warning.
  std::optional<double> xi;

  // One-pass promises on the max simplices through an edge / a vertex.
  std::optional<double> delta_e;
  std::optional<double> delta_v;

  F0Mode f0_mode = F0Mode::kExact;
  double f0_epsilon = 0.1;

  // Overrides of the computed sampling probabilities (still clamped to (0, 1]).
  // For the oblivious schemes p is the edge/color probability and q the
  // oracle's vertex rate; for one-pass p is the vertex rate and q the edge rate.
  std::optional<double> p_override;
  std::optional<double> q_override;

  // Abundant batch-abort: a batch whose summed R exceeds
  // abort_factor * batch_size * expected_r_bound is dropped. Unset bound means k + 1.
  double abort_factor = 16.0;
  std::optional<double> expected_r_bound;

  // Upper bound on batch_size * num_batches; larger plans are a ConfigError.
  std::uint64_t max_trials = 4'000'000;

  // Worker threads for independent trials; results do not depend on it.
  unsigned threads = 1;

  // Throws ConfigError on out-of-range values.
  void validate() const;
  double xi_value() const;
};

// Outcome of one basic-estimator trial.
struct TrialResult {
  double value = 0.0;
  double light_value = 0.0;  // oblivious schemes: A_L / p^alpha part
  double heavy_value = 0.0;  // oblivious schemes: heavy-simplex part
  std::uint64_t space_peak_words = 0;
  std::uint64_t passes = 0;
  std::uint64_t r = 0;          // targeted sampling: number of neighbor samples
  std::uint64_t q_size = 0;     // oblivious: |Q| after pass 1; one-pass: |S| at the end
  std::uint64_t s_size = 0;     // oracle sample size
  std::uint64_t detections = 0;
  std::uint64_t heavy_edges = 0;  // stream edges the oracle labeled heavy
};

struct Estimate {
  Algorithm algorithm = Algorithm::kAbundant;
  double value = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t passes = 0;
  std::uint64_t space_peak_words = 0;  // sum of per-trial peaks (trials run side by side)
  std::uint64_t max_trial_space_words = 0;
  std::uint64_t batch_size = 0;
  std::uint64_t num_batches = 0;
  std::uint64_t aborted_batches = 0;
  double mean_r = 0.0;
  std::uint64_t max_r = 0;
  double mean_q_size = 0.0;
  double mean_s_size = 0.0;
  std::uint64_t detections = 0;
  // Effective sampling parameters (NaN where not applicable).
  double p = 0.0;
  double q = 0.0;
  double theta = 0.0;
  std::vector<std::string> warnings;
  double wall_time_s = 0.0;
};

// ---------------------------------------------------------------------------
// Boosting
// ---------------------------------------------------------------------------

// ceil(12 ln(2 / delta)), rounded up to an odd number.
std::uint64_t num_batches_for(double delta);

double median(std::vector<double> values);

// Median of num_batches means of batch_size consecutive trials each.
// trial(i) is called for i = 0 .. batch_size * num_batches - 1.
// Throws ContractError when batch_size is 0 or num_batches is even.
double median_of_means(const std::function<double(std::uint64_t)>& trial, std::uint64_t batch_size,
                       std::uint64_t num_batches);
// Same over precomputed trial values laid out batch by batch.
double median_of_means(std::span<const double> values, std::uint64_t batch_size, std::uint64_t num_batches);

// ---------------------------------------------------------------------------
// Oblivious-sampling framework
// ---------------------------------------------------------------------------

// Exponents and sampling parameters of one concrete scheme. Detection
// probability is p^alpha, joint detection of two edge-sharing simplices
// p^beta, edge storage probability p^gamma.
struct ObliviousScheme {
  Algorithm algorithm = Algorithm::kSimplest;
  int k = 3;
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  double theta = 0.0;  // beta / alpha - 1
  double p = 1.0;      // requested probability, clamped to (0, 1]
  double p_eff = 1.0;  // probability actually realized (1/N for colorings)
  std::uint64_t colors = 1;
  unsigned independence = 0;  // d for the coloring hash family

  // Throws ContractError unless alpha < beta < 2 alpha and gamma <= alpha.
  ObliviousScheme(Algorithm a, int k, int alpha, int beta, int gamma);
};

// Scheme for kSimplest, kColoring or kShadow with p computed from the config
// (or p_override). Shadow needs k >= 3.
ObliviousScheme make_scheme(Algorithm a, const EstimatorConfig& cfg, VertexId n);

// Analytic Var/E^2 bound used for batch sizing.
double relative_variance_bound(Algorithm a, const EstimatorConfig& cfg, VertexId n, std::size_t m);

enum class EdgeClass { kLight, kHeavy };

// Heavy/light oracle. Z holds each vertex independently with rate q (a keyed
// hash, so membership is replayable); S holds every edge meeting Z.
// completion_count(e) is |{z in Z : e + z is a simplex}|, answered from S
// only. An edge is HEAVY iff that count reaches q * T^theta.
class HeavyLightOracle {
 public:
  HeavyLightOracle(int k, double q, double theta, double T, std::uint64_t z_key);

  double q() const noexcept { return q_; }
  double theta() const noexcept { return theta_; }
  double threshold() const noexcept { return threshold_; }
  bool in_z(VertexId v) const noexcept;

  // Pass-1 update. Returns true when e was stored in S.
  bool observe(const Hyperedge& e);
  std::size_t stored_edges() const noexcept { return s_.size(); }
  bool in_s(const Hyperedge& e) const { return s_.count(e) != 0; }

  // z in Z, outside e, with every edge of e + z other than e itself in S.
  std::vector<VertexId> completions(const Hyperedge& e) const;
  std::uint64_t completion_count(const Hyperedge& e) const { return completions(e).size(); }
  // Memoized; not safe for concurrent use.
  EdgeClass classify(const Hyperedge& e) const;

 private:
  int k_;
  double q_;
  double theta_;
  double threshold_;
  std::uint64_t z_key_;
  std::unordered_set<Hyperedge> s_;
  // (k-1)-subset -> vertices w in Z with subset + w in S
  std::unordered_map<VertexSet, std::vector<VertexId>> z_apexes_;
  mutable std::unordered_map<Hyperedge, EdgeClass> cache_;
};

// Oracle sampling rate min(1, xi eps^-2 ln n T^-theta), or q_override.
double oracle_rate(const EstimatorConfig& cfg, VertexId n, double theta);

// One pass: samples Z, collects S (charged k words per stored edge).
HeavyLightOracle build_oracle(const EdgeStream& stream, const EstimatorConfig& cfg, double theta,
                              std::uint64_t trial_id, SpaceMeter& meter);

// Heavy-simplex accumulator: for a heavy edge e, each z in Z completing e to
// a simplex with i heavy edges adds to count_i. value() = sum_i count_i / i / q.
class HeavyAccumulator {
 public:
  explicit HeavyAccumulator(const HeavyLightOracle& oracle, int k) : oracle_(&oracle), counts_(k + 2, 0) {}
  // Returns the number of completions found.
  std::uint64_t observe_heavy(const Hyperedge& e);
  double value() const;
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }

 private:
  const HeavyLightOracle* oracle_;
  std::vector<std::uint64_t> counts_;
};

// One pass over the stream feeding every HEAVY edge to a HeavyAccumulator.
double estimate_heavy(const EdgeStream& stream, const HeavyLightOracle& oracle, SpaceMeter& meter);

// ---------------------------------------------------------------------------
// Basic estimators (one trial each; trial_id selects the random stream)
// ---------------------------------------------------------------------------

// Throw NoEdgesError on an empty stream.
TrialResult abundant_basic(const EdgeStream& stream, const EstimatorConfig& cfg, std::uint64_t trial_id);
TrialResult easy_basic(const EdgeStream& stream, const EstimatorConfig& cfg, std::uint64_t trial_id);

TrialResult meager_simplest_basic(const EdgeStream& stream, const EstimatorConfig& cfg, std::uint64_t trial_id);
TrialResult meager_coloring_basic(const EdgeStream& stream, const EstimatorConfig& cfg, std::uint64_t trial_id);
// Throws UnsupportedArityError for k < 3.
TrialResult meager_shadow_basic(const EdgeStream& stream, const EstimatorConfig& cfg, std::uint64_t trial_id);
// Throws ConfigError without delta_e and delta_v.
TrialResult one_pass_basic(const EdgeStream& stream, const EstimatorConfig& cfg, std::uint64_t trial_id);

TrialResult run_basic(Algorithm a, const EdgeStream& stream, const EstimatorConfig& cfg, std::uint64_t trial_id);

// ---------------------------------------------------------------------------
// (epsilon, delta) estimators: median of means over independent trials
// ---------------------------------------------------------------------------

// Throws EstimationFailedError if every batch was aborted.
Estimate abundant_estimate(const EdgeStream& stream, const EstimatorConfig& cfg);
Estimate easy_estimate(const EdgeStream& stream, const EstimatorConfig& cfg);
Estimate meager_simplest(const EdgeStream& stream, const EstimatorConfig& cfg);
Estimate meager_coloring(const EdgeStream& stream, const EstimatorConfig& cfg);
Estimate meager_shadow(const EdgeStream& stream, const EstimatorConfig& cfg);
Estimate one_pass(const EdgeStream& stream, const EstimatorConfig& cfg);

Estimate estimate(Algorithm a, const EdgeStream& stream, const EstimatorConfig& cfg);

}  // namespace hyperstream
