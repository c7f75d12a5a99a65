#include <algorithm>
#include <cmath>

#include "hyperstream/estimators.hpp"
#include "internal.hpp"

namespace hyperstream {

ObliviousScheme::ObliviousScheme(Algorithm a, int k_, int alpha_, int beta_, int gamma_)
    : algorithm(a), k(k_), alpha(alpha_), beta(beta_), gamma(gamma_) {
  if (!(alpha < beta && beta < 2 * alpha))
    throw ContractError("oblivious scheme needs alpha < beta < 2 alpha");
  if (gamma > alpha) throw ContractError("oblivious scheme needs gamma <= alpha");
  theta = static_cast<double>(beta) / alpha - 1.0;
}

namespace {

double log_n(VertexId n) { return std::log(std::max<double>(n, 2.0)); }

}  // namespace

ObliviousScheme make_scheme(Algorithm a, const EstimatorConfig& cfg, VertexId n) {
  const int k = cfg.k;
  ObliviousScheme s = [&] {
    switch (a) {
      case Algorithm::kSimplest: return ObliviousScheme(a, k, k, 2 * k - 1, 1);
      case Algorithm::kColoring: {
        const auto c = static_cast<int>(binomial(k + 1, k - 1));
        ObliviousScheme out(a, k, c - 1, k * k - 1, k - 1);
        out.independence = static_cast<unsigned>(2 * c);
        return out;
      }
      case Algorithm::kShadow: {
        if (k < 3) throw UnsupportedArityError("shadow-hypergraph sampling needs k >= 3");
        const auto c = static_cast<int>(binomial(k, 2));
        ObliviousScheme out(a, k, c - 1, 2 * c - k, k - 2);
        out.independence = static_cast<unsigned>(2 * c);
        return out;
      }
      default: throw ContractError("not an oblivious-sampling algorithm");
    }
  }();
  const double raw = cfg.p_override
                         ? *cfg.p_override
                         : std::pow(log_n(n) / (cfg.epsilon * cfg.epsilon * cfg.T), 1.0 / s.alpha);
  s.p = detail::clamp_probability(raw);
  if (a == Algorithm::kSimplest) {
    s.p_eff = s.p;
    s.colors = 0;
  } else {
    const double colors = std::ceil(1.0 / s.p);
    if (colors > 1e15) throw ConfigError("coloring needs more than 1e15 colors; T is too large for this scheme");
    s.colors = static_cast<std::uint64_t>(colors);
    s.p_eff = 1.0 / static_cast<double>(s.colors);
  }
  return s;
}

double oracle_rate(const EstimatorConfig& cfg, VertexId n, double theta) {
  if (cfg.q_override) return detail::clamp_probability(*cfg.q_override);
  return detail::clamp_probability(cfg.xi_value() / (cfg.epsilon * cfg.epsilon) * log_n(n) *
                                   std::pow(cfg.T, -theta));
}

double relative_variance_bound(Algorithm a, const EstimatorConfig& cfg, VertexId n, std::size_t m) {
  const double k = cfg.k;
  const double md = std::max<double>(static_cast<double>(m), 1.0);
  switch (a) {
    case Algorithm::kAbundant: return std::pow(md, 1.0 + 1.0 / k) / cfg.T;
    case Algorithm::kEasy: return (k - 1.0) * std::pow(md, 1.5) / cfg.T;
    case Algorithm::kSimplest:
    case Algorithm::kColoring:
    case Algorithm::kShadow: {
      const ObliviousScheme s = make_scheme(a, cfg, n);
      return 1.0 / (std::pow(s.p_eff, s.alpha) * cfg.T) +
             (k + 1.0) * std::pow(cfg.T, s.theta) / (std::pow(s.p_eff, 2 * s.alpha - s.beta) * cfg.T);
    }
    case Algorithm::kOnePass: {
      const auto [p, q] = detail::one_pass_rates(cfg);
      return 1.0 / (cfg.T * p * std::pow(q, k)) + *cfg.delta_e / (p * q * cfg.T) + *cfg.delta_v / (p * cfg.T);
    }
  }
  return 1.0;
}

// ---------------------------------------------------------------------------

HeavyLightOracle::HeavyLightOracle(int k, double q, double theta, double T, std::uint64_t z_key)
    : k_(k), q_(q), theta_(theta), threshold_(q * std::pow(T, theta)), z_key_(z_key) {
  if (!(q > 0.0) || q > 1.0) throw ContractError("oracle rate must lie in (0, 1]");
}

bool HeavyLightOracle::in_z(VertexId v) const noexcept { return detail::keyed_coin(z_key_, v, q_); }

bool HeavyLightOracle::observe(const Hyperedge& e) {
  bool meets = false;
  for (VertexId v : e)
    if (in_z(v)) {
      meets = true;
      z_apexes_[e.without(v)].push_back(v);
    }
  if (meets) s_.insert(e);
  return meets;
}

std::vector<VertexId> HeavyLightOracle::completions(const Hyperedge& e) const {
  std::vector<VertexId> out;
  const std::vector<VertexId>* smallest = nullptr;
  for (std::size_t i = 0; i < e.size(); ++i) {
    auto it = z_apexes_.find(e.without_index(i));
    if (it == z_apexes_.end()) return out;
    if (!smallest || it->second.size() < smallest->size()) smallest = &it->second;
  }
  for (VertexId z : *smallest) {
    if (e.contains(z)) continue;
    bool all = true;
    for (std::size_t i = 0; i < e.size() && all; ++i) all = s_.count(e.without_index(i).with(z)) != 0;
    if (all) out.push_back(z);
  }
  return out;
}

EdgeClass HeavyLightOracle::classify(const Hyperedge& e) const {
  if (auto it = cache_.find(e); it != cache_.end()) return it->second;
  const auto count = static_cast<double>(completion_count(e));
  const EdgeClass c = count >= threshold_ ? EdgeClass::kHeavy : EdgeClass::kLight;
  cache_.emplace(e, c);
  return c;
}

HeavyLightOracle build_oracle(const EdgeStream& stream, const EstimatorConfig& cfg, double theta,
                              std::uint64_t trial_id, SpaceMeter& meter) {
  cfg.validate();
  SeededRng rng = SeededRng(cfg.master_seed, trial_id).child(0x0bac1eULL);
  HeavyLightOracle oracle(stream.k(), oracle_rate(cfg, stream.n(), theta), theta, cfg.T, rng());
  const auto k = static_cast<std::uint64_t>(stream.k());
  run_pass(stream, [&](const Hyperedge& e) {
    if (oracle.observe(e)) meter.charge(k);
  }, meter, 0);
  return oracle;
}

std::uint64_t HeavyAccumulator::observe_heavy(const Hyperedge& e) {
  const auto zs = oracle_->completions(e);
  for (VertexId z : zs) {
    const VertexSet x = e.with(z);
    std::size_t heavy = 1;  // e itself
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == z) continue;
      if (oracle_->classify(x.without_index(i)) == EdgeClass::kHeavy) ++heavy;
    }
    ++counts_[heavy];
  }
  return zs.size();
}

double HeavyAccumulator::value() const {
  double sum = 0.0;
  for (std::size_t i = 1; i < counts_.size(); ++i) sum += static_cast<double>(counts_[i]) / static_cast<double>(i);
  return sum / oracle_->q();
}

double estimate_heavy(const EdgeStream& stream, const HeavyLightOracle& oracle, SpaceMeter& meter) {
  HeavyAccumulator acc(oracle, stream.k());
  meter.charge(static_cast<std::uint64_t>(stream.k()) + 1);
  run_pass(stream, [&](const Hyperedge& e) {
    if (oracle.classify(e) == EdgeClass::kHeavy) acc.observe_heavy(e);
  }, meter, 0);
  return acc.value();
}

}  // namespace hyperstream
