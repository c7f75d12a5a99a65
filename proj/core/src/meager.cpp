#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <memory>
#include <unordered_map>
#include <unordered_set>

#include "hyperstream/estimators.hpp"
#include "internal.hpp"

namespace hyperstream {
namespace {

// Stored edge set with a (k-1)-subset -> apex index over it.
class ApexIndex {
 public:
  // Indexes e under e - w for every w in e, or only for w = min(e).
  void insert(const Hyperedge& e, bool min_apex_only) {
    edges_.insert(e);
    if (min_apex_only) {
      apexes_[e.without_index(0)].push_back(e[0]);
    } else {
      for (std::size_t i = 0; i < e.size(); ++i) apexes_[e.without_index(i)].push_back(e[i]);
    }
  }
  bool contains(const Hyperedge& e) const { return edges_.count(e) != 0; }
  std::size_t size() const noexcept { return edges_.size(); }

  // Calls fn(z) for each z outside e with z < bound and e - e[i] + z stored for
  // every i. Candidates come from the smallest of the k apex lists.
  template <class Accept, class Fn>
  void for_each_completion(const Hyperedge& e, Accept&& accept, Fn&& fn) const {
    const std::vector<VertexId>* smallest = nullptr;
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto it = apexes_.find(e.without_index(i));
      if (it == apexes_.end()) return;
      if (!smallest || it->second.size() < smallest->size()) smallest = &it->second;
    }
    for (VertexId z : *smallest) {
      if (e.contains(z) || !accept(z)) continue;
      bool all = true;
      for (std::size_t i = 0; i < e.size() && all; ++i) all = contains(e.without_index(i).with(z));
      if (all) fn(z);
    }
  }

 private:
  std::unordered_set<Hyperedge> edges_;
  std::unordered_map<VertexSet, std::vector<VertexId>> apexes_;
};

// Scheme hooks: whether an arriving pass-1 edge enters Q, how Q^L is indexed,
// how an arriving light edge is matched in pass 2, and the final scaling.
struct SchemeOps {
  std::function<bool(const Hyperedge&)> store;
  bool min_apex_only = false;
  // Counts detections for a light edge e against the light sample.
  std::function<std::uint64_t(const Hyperedge&, const ApexIndex&)> detect;
  double scale = 1.0;  // A_L / scale estimates the light count
};

TrialResult oblivious_trial(const EdgeStream& stream, const EstimatorConfig& cfg, const ObliviousScheme& scheme,
                            std::uint64_t trial_id, const SchemeOps& ops) {
  const auto k = static_cast<std::uint64_t>(stream.k());
  SpaceMeter meter;
  TrialResult out;

  HeavyLightOracle oracle(stream.k(), oracle_rate(cfg, stream.n(), scheme.theta), scheme.theta, cfg.T,
                          detail::trial_rng(cfg, scheme.algorithm, trial_id).child(0x0bac1eULL)());

  // Pass 1: oblivious sample Q and oracle sample S.
  std::vector<Hyperedge> q;
  run_pass(stream, [&](const Hyperedge& e) {
    if (oracle.observe(e)) meter.charge(k);
    if (ops.store(e)) {
      q.push_back(e);
      meter.charge(k);
    }
  }, meter, 0);
  out.q_size = q.size();
  out.s_size = oracle.stored_edges();

  // Drop heavy edges from Q.
  ApexIndex light;
  for (const auto& e : q) {
    if (oracle.classify(e) == EdgeClass::kHeavy)
      meter.release(k);
    else
      light.insert(e, ops.min_apex_only);
  }
  q.clear();
  q.shrink_to_fit();

  // Pass 2: light edges go to detection, heavy edges to the heavy estimator.
  std::uint64_t a_light = 0;
  HeavyAccumulator heavy(oracle, stream.k());
  meter.charge(k + 3);
  run_pass(stream, [&](const Hyperedge& e) {
    if (oracle.classify(e) == EdgeClass::kLight) {
      a_light += ops.detect(e, light);
    } else {
      ++out.heavy_edges;
      heavy.observe_heavy(e);
    }
  }, meter, 1);

  out.detections = a_light;
  out.light_value = static_cast<double>(a_light) / ops.scale;
  out.heavy_value = heavy.value();
  out.value = out.light_value + out.heavy_value;
  out.space_peak_words = meter.words_peak();
  out.passes = meter.passes_used();
  return out;
}

// Color of every r-subset of `items` under h must agree; `encode` maps a
// subset (given as a bitmask over items) to its key.
template <class Encode>
bool monochromatic(std::size_t items, std::size_t r, const KwiseHashFamily& h, Encode&& encode) {
  std::uint64_t first = 0;
  bool have = false;
  const std::uint32_t full = 1u << items;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != r) continue;
    const std::uint64_t c = h.color(encode(mask));
    if (!have) {
      first = c;
      have = true;
    } else if (c != first) {
      return false;
    }
  }
  return true;
}

}  // namespace

TrialResult meager_simplest_basic(const EdgeStream& stream, const EstimatorConfig& cfg, std::uint64_t trial_id) {
  detail::check_arity(stream, cfg);
  const ObliviousScheme scheme = make_scheme(Algorithm::kSimplest, cfg, stream.n());
  SeededRng rng = detail::trial_rng(cfg, Algorithm::kSimplest, trial_id);
  SchemeOps ops;
  ops.store = [&](const Hyperedge&) { return rng.bernoulli(scheme.p_eff); };
  ops.detect = [](const Hyperedge& e, const ApexIndex& light) {
    std::uint64_t found = 0;
    light.for_each_completion(e, [](VertexId) { return true; }, [&](VertexId) { ++found; });
    return found;
  };
  ops.scale = (cfg.k + 1) * std::pow(scheme.p_eff, cfg.k);
  return oblivious_trial(stream, cfg, scheme, trial_id, ops);
}

TrialResult meager_coloring_basic(const EdgeStream& stream, const EstimatorConfig& cfg, std::uint64_t trial_id) {
  detail::check_arity(stream, cfg);
  const ObliviousScheme scheme = make_scheme(Algorithm::kColoring, cfg, stream.n());
  SeededRng rng = detail::trial_rng(cfg, Algorithm::kColoring, trial_id);
  const int k = cfg.k;
  const VertexId n = std::max<VertexId>(stream.n(), 1);
  const KwiseHashFamily h(scheme.independence, subset_domain_size(n, k - 1), scheme.colors, rng);
  SchemeOps ops;
  ops.store = [&](const Hyperedge& e) {
    return monochromatic(e.size(), k - 1, h, [&](std::uint32_t mask) { return encode_vertex_subset(e.select(mask), n); });
  };
  // Each simplex once: the arriving edge is the one avoiding the minimum vertex.
  ops.detect = [](const Hyperedge& e, const ApexIndex& light) {
    if (!light.contains(e)) return std::uint64_t{0};
    std::uint64_t found = 0;
    const VertexId lo = e.min();
    light.for_each_completion(e, [lo](VertexId z) { return z < lo; }, [&](VertexId) { ++found; });
    return found;
  };
  ops.scale = std::pow(scheme.p_eff, scheme.alpha);
  return oblivious_trial(stream, cfg, scheme, trial_id, ops);
}

TrialResult meager_shadow_basic(const EdgeStream& stream, const EstimatorConfig& cfg, std::uint64_t trial_id) {
  detail::check_arity(stream, cfg);
  if (cfg.k < 3) throw UnsupportedArityError("shadow-hypergraph sampling needs k >= 3");
  const ObliviousScheme scheme = make_scheme(Algorithm::kShadow, cfg, stream.n());
  SeededRng rng = detail::trial_rng(cfg, Algorithm::kShadow, trial_id);
  const int k = cfg.k;
  const VertexId n = std::max<VertexId>(stream.n(), 1);
  const std::uint64_t radix = static_cast<std::uint64_t>(n) * n;
  const KwiseHashFamily h(scheme.independence, subset_domain_size(radix, k - 2), scheme.colors, rng);
  SchemeOps ops;
  // Shadow edge of e: flavor min(e), base e - min(e). Stored iff all its
  // (k-2)-subsets of flavored vertices share a color.
  ops.store = [&](const Hyperedge& e) {
    const VertexId flavor = e.min();
    const VertexSet base = e.without_index(0);
    return monochromatic(base.size(), k - 2, h, [&](std::uint32_t mask) {
      const VertexSet sub = base.select(mask);
      return encode_shadow_subset(flavor, sub.ids(), n);
    });
  };
  ops.min_apex_only = true;
  // Flavors z < min(e) whose k shadow edges z:(e - u_i) all lie in Q^L.
  ops.detect = [](const Hyperedge& e, const ApexIndex& light) {
    std::uint64_t found = 0;
    const VertexId lo = e.min();
    light.for_each_completion(e, [lo](VertexId z) { return z < lo; }, [&](VertexId) { ++found; });
    return found;
  };
  ops.scale = std::pow(scheme.p_eff, scheme.alpha);
  return oblivious_trial(stream, cfg, scheme, trial_id, ops);
}

// ---------------------------------------------------------------------------

namespace detail {

std::pair<double, double> one_pass_rates(const EstimatorConfig& cfg) {
  if (!cfg.delta_e || !cfg.delta_v) throw ConfigError("one-pass estimation needs the delta_e and delta_v promises");
  const double de = *cfg.delta_e;
  const double dv = *cfg.delta_v;
  const double eps2 = cfg.epsilon * cfg.epsilon;
  const double p = cfg.p_override ? *cfg.p_override : 9.0 * dv / (eps2 * cfg.T);
  const double q = cfg.q_override ? *cfg.q_override : std::max(de / dv, std::pow(dv, -1.0 / cfg.k));
  return {clamp_probability(p), clamp_probability(q)};
}

}  // namespace detail

TrialResult one_pass_basic(const EdgeStream& stream, const EstimatorConfig& cfg, std::uint64_t trial_id) {
  detail::check_arity(stream, cfg);
  const auto [p, q] = detail::one_pass_rates(cfg);
  SeededRng rng = detail::trial_rng(cfg, Algorithm::kOnePass, trial_id);
  const std::uint64_t f_key = rng();
  auto active = [&](VertexId v) { return detail::keyed_coin(f_key, v, p); };
  const double weight = 1.0 / (p * std::pow(q, cfg.k));
  const auto k = static_cast<std::uint64_t>(cfg.k);

  SpaceMeter meter;
  TrialResult out;
  ApexIndex sample;
  double estimate = 0.0;
  meter.charge(1);
  run_pass(stream, [&](const Hyperedge& e) {
    sample.for_each_completion(e, active, [&](VertexId) {
      estimate += weight;
      ++out.detections;
    });
    const bool edge_active = rng.bernoulli(q);
    if (edge_active && std::any_of(e.begin(), e.end(), active)) {
      sample.insert(e, false);
      meter.charge(k);
    }
  }, meter, 0);

  out.value = estimate;
  out.q_size = sample.size();
  out.space_peak_words = meter.words_peak();
  out.passes = meter.passes_used();
  return out;
}

}  // namespace hyperstream
