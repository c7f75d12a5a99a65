#include "hyperstream/estimators.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "hyperstream/combinatorics.hpp"
#include "hyperstream/reservoir.hpp"
#include "internal.hpp"

namespace hyperstream {

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kAbundant: return "abundant";
    case Algorithm::kEasy: return "easy";
    case Algorithm::kSimplest: return "simplest";
    case Algorithm::kColoring: return "coloring";
    case Algorithm::kShadow: return "shadow";
    case Algorithm::kOnePass: return "onepass";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms)
    if (algorithm_name(a) == name) return a;
  throw ConfigError("unknown algorithm '" + std::string(name) +
                    "' (expected abundant, easy, simplest, coloring, shadow or onepass)");
}

int advertised_passes(Algorithm a) {
  switch (a) {
    case Algorithm::kAbundant:
    case Algorithm::kEasy: return 4;
    case Algorithm::kSimplest:
    case Algorithm::kColoring:
    case Algorithm::kShadow: return 2;
    case Algorithm::kOnePass: return 1;
  }
  return 0;
}

void EstimatorConfig::validate() const {
  if (k < 2 || k > kMaxArity) throw ConfigError("k must lie in [2, " + std::to_string(kMaxArity) + "]");
  if (!(T >= 1.0) || !std::isfinite(T)) throw ConfigError("T must be a finite value >= 1");
  if (!(epsilon > 0.0) || epsilon > 1.0) throw ConfigError("epsilon must lie in (0, 1]");
  if (!(delta > 0.0) || !(delta < 1.0)) throw ConfigError("delta must lie in (0, 1)");
  if (!(variance_const > 0.0)) throw ConfigError("variance_const must be positive");
  if (xi && !(*xi > 0.0)) throw ConfigError("xi must be positive");
  if (delta_e && !(*delta_e > 0.0)) throw ConfigError("delta_e must be positive");
  if (delta_v && !(*delta_v > 0.0)) throw ConfigError("delta_v must be positive");
  if (p_override && !(*p_override > 0.0)) throw ConfigError("p override must be positive");
  if (q_override && !(*q_override > 0.0)) throw ConfigError("q override must be positive");
  if (!(f0_epsilon > 0.0) || f0_epsilon > 1.0) throw ConfigError("f0 epsilon must lie in (0, 1]");
  if (!(abort_factor > 0.0)) throw ConfigError("abort factor must be positive");
  if (expected_r_bound && !(*expected_r_bound > 0.0)) throw ConfigError("expected R bound must be positive");
  if (max_trials == 0) throw ConfigError("max_trials must be positive");
}

double EstimatorConfig::xi_value() const { return xi ? *xi : 12.0 * k * (k + 1); }

// ---------------------------------------------------------------------------

std::uint64_t num_batches_for(double delta) {
  if (!(delta > 0.0) || !(delta < 1.0)) throw ContractError("delta must lie in (0, 1)");
  auto b = static_cast<std::uint64_t>(std::ceil(12.0 * std::log(2.0 / delta)));
  if (b % 2 == 0) ++b;
  return b;
}

double median(std::vector<double> values) {
  if (values.empty()) throw ContractError("median of no values");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  if (values.size() % 2 == 1) return values[mid];
  const double hi = values[mid];
  const double lo = *std::max_element(values.begin(), values.begin() + mid);
  return (lo + hi) / 2.0;
}

double median_of_means(std::span<const double> values, std::uint64_t batch_size, std::uint64_t num_batches) {
  if (batch_size == 0) throw ContractError("batch size must be at least 1");
  if (num_batches % 2 == 0) throw ContractError("number of batches must be odd");
  if (values.size() != batch_size * num_batches) throw ContractError("trial count does not match batch layout");
  std::vector<double> means;
  means.reserve(num_batches);
  for (std::uint64_t b = 0; b < num_batches; ++b) {
    double sum = 0.0;
    for (std::uint64_t j = 0; j < batch_size; ++j) sum += values[b * batch_size + j];
    means.push_back(sum / static_cast<double>(batch_size));
  }
  return median(std::move(means));
}

double median_of_means(const std::function<double(std::uint64_t)>& trial, std::uint64_t batch_size,
                       std::uint64_t num_batches) {
  if (batch_size == 0) throw ContractError("batch size must be at least 1");
  if (num_batches % 2 == 0) throw ContractError("number of batches must be odd");
  std::vector<double> values(batch_size * num_batches);
  for (std::uint64_t i = 0; i < values.size(); ++i) values[i] = trial(i);
  return median_of_means(values, batch_size, num_batches);
}

// ---------------------------------------------------------------------------

namespace detail {

SeededRng trial_rng(const EstimatorConfig& cfg, Algorithm a, std::uint64_t trial_id) {
  return SeededRng(cfg.master_seed, trial_id).child(0xa160000ULL + static_cast<std::uint64_t>(a));
}

void check_arity(const EdgeStream& stream, const EstimatorConfig& cfg) {
  cfg.validate();
  if (stream.k() != cfg.k)
    throw ConfigError("configured k=" + std::to_string(cfg.k) + " but the stream has k=" + std::to_string(stream.k()));
}

void parallel_for(std::uint64_t count, unsigned threads, const std::function<void(std::uint64_t)>& fn) {
  if (threads <= 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Targeted sampling: e-relative ordering (4 passes)
// ---------------------------------------------------------------------------

TrialResult abundant_basic(const EdgeStream& stream, const EstimatorConfig& cfg, std::uint64_t trial_id) {
  detail::check_arity(stream, cfg);
  const int k = stream.k();
  const std::uint32_t full = (1u << k) - 1;
  SeededRng rng = detail::trial_rng(cfg, Algorithm::kAbundant, trial_id);
  SpaceMeter meter;
  TrialResult out;

  // Pass 1: uniform edge and m.
  ReservoirSampler<Hyperedge> edge_sample;
  std::uint64_t m = 0;
  run_pass(stream, [&](const Hyperedge& f) { ++m; edge_sample.observe(f, rng); }, meter, 0);
  if (m == 0) throw NoEdgesError();
  const Hyperedge e = *edge_sample.current();
  meter.charge(static_cast<std::uint64_t>(k) + 1);

  auto mask_in = [&](const Hyperedge& f) {
    std::uint32_t mask = 0;
    for (int i = 0; i < k; ++i)
      if (f.contains(e[i])) mask |= 1u << i;
    return mask;
  };

  // Pass 2: codeg(S) for every nonempty proper subset S of e, indexed by mask.
  std::vector<std::uint64_t> cnt(full + 1, 0);
  meter.charge(full - 1);
  run_pass(stream, [&](const Hyperedge& f) {
    const std::uint32_t mask = mask_in(f) & full;
    for (std::uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask)
      if (sub != full) ++cnt[sub];
  }, meter, 1);

  // Chain c_1..c_k: greedily minimize (relative degree, ID).
  std::vector<int> chain;  // positions in e
  std::vector<std::uint32_t> prefix{0};
  std::uint32_t chosen = 0;
  for (int step = 0; step + 1 < k; ++step) {
    DegreeKey best{~0ULL, 0};
    int best_pos = -1;
    for (int i = 0; i < k; ++i) {
      if (chosen & (1u << i)) continue;
      const DegreeKey key{cnt[chosen | (1u << i)], e[i]};
      if (best_pos < 0 || key < best) best = key, best_pos = i;
    }
    chain.push_back(best_pos);
    chosen |= 1u << best_pos;
    prefix.push_back(chosen);
  }
  const int last_pos = std::countr_zero(~chosen & full);
  chain.push_back(last_pos);

  const std::uint64_t codeg_top = cnt[prefix[k - 1]];
  const auto r = static_cast<std::uint64_t>(
      std::ceil(static_cast<double>(codeg_top) * std::pow(static_cast<double>(m), -1.0 / k)));
  out.r = r;

  // Pass 3: R independent uniform edges through S_{k-1}; each yields a neighbor.
  VertexSet top;
  for (int i = 0; i < k; ++i)
    if (prefix[k - 1] & (1u << i)) top = top.with(e[i]);
  std::vector<ReservoirSampler<VertexId>> neighbors(r);
  meter.charge(2 * r);
  run_pass(stream, [&](const Hyperedge& f) {
    if (!top.is_subset_of(f)) return;
    VertexId x = 0;
    for (VertexId v : f)
      if (!top.contains(v)) x = v;
    for (auto& s : neighbors) s.observe(x, rng);
  }, meter, 2);

  // Pass 4: per sample, codeg(S_i + x) for i = 0..k-2 and the k companion edges.
  struct Probe {
    VertexId x;
    std::vector<std::uint64_t> codeg;  // codeg(S_i + x)
    std::uint32_t companions = 0;      // bit i: e - e[i] + x is an edge
  };
  std::vector<Probe> probes;
  for (const auto& s : neighbors) {
    const VertexId x = *s.current();
    if (e.contains(x)) continue;  // the sampled edge was e itself
    probes.push_back({x, std::vector<std::uint64_t>(k - 1, 0), 0});
  }
  meter.charge(static_cast<std::uint64_t>(2 * k - 1) * probes.size());
  run_pass(stream, [&](const Hyperedge& f) {
    std::uint32_t mask = 0;
    bool mask_ready = false;
    for (auto& pr : probes) {
      if (!f.contains(pr.x)) continue;
      if (!mask_ready) mask = mask_in(f), mask_ready = true;
      for (int i = 0; i + 1 < k; ++i)
        if ((mask & prefix[i]) == prefix[i]) ++pr.codeg[i];
      if (std::popcount(mask) == k - 1) pr.companions |= ~mask & full;
    }
  }, meter, 3);

  std::uint64_t z_sum = 0;
  for (const auto& pr : probes) {
    if (pr.companions != full) continue;
    bool label = true;
    for (int i = 0; i + 1 < k && label; ++i) {
      const DegreeKey ci{cnt[prefix[i + 1]], e[chain[i]]};
      label = ci < DegreeKey{pr.codeg[i], pr.x};
    }
    if (label) {
      const DegreeKey ck{cnt[prefix[k - 2] | (1u << last_pos)], e[last_pos]};
      label = ck < DegreeKey{pr.codeg[k - 2], pr.x};
    }
    if (label) {
      z_sum += codeg_top;
      ++out.detections;
    }
  }
  out.value = static_cast<double>(m) / static_cast<double>(r) * static_cast<double>(z_sum);
  out.space_peak_words = meter.words_peak();
  out.passes = meter.passes_used();
  return out;
}

// ---------------------------------------------------------------------------
// Targeted sampling: global degree ordering (4 passes)
// ---------------------------------------------------------------------------

TrialResult easy_basic(const EdgeStream& stream, const EstimatorConfig& cfg, std::uint64_t trial_id) {
  detail::check_arity(stream, cfg);
  const int k = stream.k();
  SeededRng rng = detail::trial_rng(cfg, Algorithm::kEasy, trial_id);
  SpaceMeter meter;
  TrialResult out;

  ReservoirSampler<Hyperedge> edge_sample;
  std::uint64_t m = 0;
  run_pass(stream, [&](const Hyperedge& f) { ++m; edge_sample.observe(f, rng); }, meter, 0);
  if (m == 0) throw NoEdgesError();
  const Hyperedge e = *edge_sample.current();
  meter.charge(static_cast<std::uint64_t>(k) + 1);

  std::vector<std::uint64_t> deg(k, 0);
  meter.charge(k);
  run_pass(stream, [&](const Hyperedge& f) {
    for (int i = 0; i < k; ++i)
      if (f.contains(e[i])) ++deg[i];
  }, meter, 1);

  std::vector<DegreeKey> order;
  for (int i = 0; i < k; ++i) order.push_back({deg[i], e[i]});
  std::sort(order.begin(), order.end());
  const VertexId u1 = order.front().id;
  const DegreeKey uk = order.back();
  const auto r = static_cast<std::uint64_t>(
      std::ceil(static_cast<double>(order.front().degree) / std::sqrt(static_cast<double>(m))));
  out.r = r;

  // Pass 3: l0-samples of Nhd(u1) - e and an F0 estimate of |Nhd(u1)|.
  std::vector<DistinctSampler> samplers;
  samplers.reserve(r);
  for (std::uint64_t j = 0; j < r; ++j) samplers.emplace_back(rng());
  F0Estimator f0(cfg.f0_mode, cfg.f0_epsilon, rng());
  meter.charge(2 * r);
  run_pass(stream, [&](const Hyperedge& f) {
    if (!f.contains(u1)) return;
    for (VertexId v : f) {
      if (v == u1) continue;
      f0.observe(v);
      if (!e.contains(v))
        for (auto& s : samplers) s.observe(v);
    }
  }, meter, 2);
  meter.charge(f0.words());
  const double nhd_size = f0.estimate();

  // Pass 4: deg(x_j) and the companion edges of e + x_j.
  struct Probe {
    VertexId x;
    std::uint64_t degree = 0;
    std::uint32_t companions = 0;
  };
  std::vector<Probe> probes;
  for (const auto& s : samplers)
    if (!s.empty()) probes.push_back({static_cast<VertexId>(s.sample())});
  meter.charge(static_cast<std::uint64_t>(k + 1) * probes.size());
  const std::uint32_t full = (1u << k) - 1;
  run_pass(stream, [&](const Hyperedge& f) {
    for (auto& pr : probes) {
      if (!f.contains(pr.x)) continue;
      ++pr.degree;
      std::uint32_t mask = 0;
      for (int i = 0; i < k; ++i)
        if (f.contains(e[i])) mask |= 1u << i;
      if (std::popcount(mask) == k - 1) pr.companions |= ~mask & full;
    }
  }, meter, 3);

  double z_sum = 0.0;
  for (const auto& pr : probes) {
    if (pr.companions == full && uk < DegreeKey{pr.degree, pr.x}) {
      z_sum += nhd_size - k + 1;
      ++out.detections;
    }
  }
  out.value = static_cast<double>(m) / static_cast<double>(r) * z_sum;
  out.space_peak_words = meter.words_peak();
  out.passes = meter.passes_used();
  return out;
}

// ---------------------------------------------------------------------------

TrialResult run_basic(Algorithm a, const EdgeStream& stream, const EstimatorConfig& cfg, std::uint64_t trial_id) {
  switch (a) {
    case Algorithm::kAbundant: return abundant_basic(stream, cfg, trial_id);
    case Algorithm::kEasy: return easy_basic(stream, cfg, trial_id);
    case Algorithm::kSimplest: return meager_simplest_basic(stream, cfg, trial_id);
    case Algorithm::kColoring: return meager_coloring_basic(stream, cfg, trial_id);
    case Algorithm::kShadow: return meager_shadow_basic(stream, cfg, trial_id);
    case Algorithm::kOnePass: return one_pass_basic(stream, cfg, trial_id);
  }
  throw ConfigError("unknown algorithm");
}

namespace {

Estimate boosted(Algorithm a, const EdgeStream& stream, const EstimatorConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  detail::check_arity(stream, cfg);
  Estimate est;
  est.algorithm = a;
  const VertexId n = stream.n();
  const std::size_t m = stream.m();
  if (cfg.xi && *cfg.xi < 12.0 * cfg.k * (cfg.k + 1))
    est.warnings.push_back("xi below 12k(k+1); oracle correctness guarantee does not apply");

  est.p = est.q = est.theta = std::numeric_limits<double>::quiet_NaN();
  if (a == Algorithm::kSimplest || a == Algorithm::kColoring || a == Algorithm::kShadow) {
    const ObliviousScheme scheme = make_scheme(a, cfg, n);
    est.p = scheme.p_eff;
    est.theta = scheme.theta;
    est.q = oracle_rate(cfg, n, scheme.theta);
  } else if (a == Algorithm::kOnePass) {
    const auto [p, q] = detail::one_pass_rates(cfg);
    est.p = p;
    est.q = q;
  }

  const double relvar = relative_variance_bound(a, cfg, n, m);
  const double raw = std::ceil(cfg.variance_const * relvar / (cfg.epsilon * cfg.epsilon));
  est.batch_size = static_cast<std::uint64_t>(std::max(1.0, std::min(raw, 1e18)));
  est.num_batches = num_batches_for(cfg.delta);
  if (raw > static_cast<double>(cfg.max_trials) ||
      est.batch_size * est.num_batches > cfg.max_trials)
    throw ConfigError("median-of-means needs " + std::to_string(raw) + " trials per batch, above the cap of " +
                      std::to_string(cfg.max_trials) + " trials");
  const std::uint64_t total = est.batch_size * est.num_batches;

  std::vector<TrialResult> results(total);
  detail::parallel_for(total, cfg.threads, [&](std::uint64_t i) { results[i] = run_basic(a, stream, cfg, i); });

  const double r_bound = cfg.expected_r_bound ? *cfg.expected_r_bound : cfg.k + 1.0;
  std::vector<double> means;
  std::uint64_t r_sum = 0;
  double q_sum = 0.0, s_sum = 0.0;
  for (std::uint64_t b = 0; b < est.num_batches; ++b) {
    double sum = 0.0;
    std::uint64_t batch_r = 0;
    for (std::uint64_t j = 0; j < est.batch_size; ++j) {
      const TrialResult& t = results[b * est.batch_size + j];
      sum += t.value;
      batch_r += t.r;
      est.space_peak_words += t.space_peak_words;
      est.max_trial_space_words = std::max(est.max_trial_space_words, t.space_peak_words);
      est.max_r = std::max(est.max_r, t.r);
      est.detections += t.detections;
      q_sum += static_cast<double>(t.q_size);
      s_sum += static_cast<double>(t.s_size);
      if (est.passes == 0) est.passes = t.passes;
      if (t.passes != est.passes) throw std::logic_error("trials disagree on the pass count");
    }
    r_sum += batch_r;
    const bool abort = a == Algorithm::kAbundant &&
                       static_cast<double>(batch_r) > cfg.abort_factor * static_cast<double>(est.batch_size) * r_bound;
    if (abort)
      ++est.aborted_batches;
    else
      means.push_back(sum / static_cast<double>(est.batch_size));
  }
  if (means.empty()) throw EstimationFailedError("every batch exceeded its space budget and was aborted");
  est.value = median(std::move(means));
  est.trials = total;
  est.mean_r = static_cast<double>(r_sum) / static_cast<double>(total);
  est.mean_q_size = q_sum / static_cast<double>(total);
  est.mean_s_size = s_sum / static_cast<double>(total);
  est.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return est;
}

}  // namespace

Estimate abundant_estimate(const EdgeStream& s, const EstimatorConfig& c) { return boosted(Algorithm::kAbundant, s, c); }
Estimate easy_estimate(const EdgeStream& s, const EstimatorConfig& c) { return boosted(Algorithm::kEasy, s, c); }
Estimate meager_simplest(const EdgeStream& s, const EstimatorConfig& c) { return boosted(Algorithm::kSimplest, s, c); }
Estimate meager_coloring(const EdgeStream& s, const EstimatorConfig& c) { return boosted(Algorithm::kColoring, s, c); }
Estimate meager_shadow(const EdgeStream& s, const EstimatorConfig& c) { return boosted(Algorithm::kShadow, s, c); }
Estimate one_pass(const EdgeStream& s, const EstimatorConfig& c) { return boosted(Algorithm::kOnePass, s, c); }

Estimate estimate(Algorithm a, const EdgeStream& stream, const EstimatorConfig& cfg) { return boosted(a, stream, cfg); }

}  // namespace hyperstream
