#include "hyperstream/sketches.hpp"

#include <cmath>
#include <string>

namespace hyperstream {
namespace {

std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kMersenne61);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t r = lo + hi;
  if (r >= kMersenne61) r -= kMersenne61;
  return r;
}

std::uint64_t addmod61(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r >= kMersenne61) r -= kMersenne61;
  return r;
}

}  // namespace

KwiseHashFamily::KwiseHashFamily(unsigned d, std::uint64_t domain_size, std::uint64_t colors, SeededRng& rng)
    : domain_size_(domain_size), colors_(colors) {
  if (d == 0) throw ContractError("hash family needs independence d >= 1");
  if (colors == 0) throw ContractError("hash family needs at least one color");
  if (domain_size == 0 || domain_size > kMersenne61) throw ContractError("hash domain must lie in [1, 2^61 - 1]");
  coefficients_.resize(d);
  for (auto& c : coefficients_) c = rng.below(kMersenne61);
}

std::uint64_t KwiseHashFamily::color(std::uint64_t key) const {
  if (key >= domain_size_) throw ContractError("hash key " + std::to_string(key) + " outside the domain");
  // Horner evaluation of a_{d-1} x^{d-1} + ... + a_0.
  std::uint64_t acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = addmod61(mulmod61(acc, key), *it);
  return 1 + acc % colors_;
}

std::uint64_t subset_domain_size(std::uint64_t radix, std::size_t r) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (radix != 0 && size > kMersenne61 / radix)
      throw ContractError("subset encoding does not fit in the hash field; instance too large");
    size *= radix;
  }
  return size;
}

std::uint64_t encode_vertex_subset(const VertexSet& s, VertexId n) {
  std::uint64_t code = 0;
  std::uint64_t scale = 1;
  for (VertexId v : s) {
    code += static_cast<std::uint64_t>(v - 1) * scale;
    scale *= n;
  }
  return code;
}

std::uint64_t encode_shadow_vertex(VertexId flavor, VertexId base, VertexId n) {
  return static_cast<std::uint64_t>(flavor - 1) * n + (base - 1);
}

std::uint64_t encode_shadow_subset(VertexId flavor, std::span<const VertexId> bases, VertexId n) {
  const std::uint64_t radix = static_cast<std::uint64_t>(n) * n;
  std::uint64_t code = 0;
  std::uint64_t scale = 1;
  for (VertexId b : bases) {
    code += encode_shadow_vertex(flavor, b, n) * scale;
    scale *= radix;
  }
  return code;
}

void DistinctSampler::observe(std::uint64_t item) {
  const std::uint64_t priority = mix64(key_ ^ mix64(item));
  if (!best_ || priority < best_priority_ || (priority == best_priority_ && item < *best_)) {
    best_ = item;
    best_priority_ = priority;
  }
}

std::uint64_t DistinctSampler::sample() const {
  if (!best_) throw EmptySamplerError("distinct sampler observed no items");
  return *best_;
}

F0Estimator::F0Estimator(F0Mode mode, double eps, std::uint64_t key) : mode_(mode), key_(key) {
  if (mode == F0Mode::kProbabilistic) {
    if (!(eps > 0.0) || eps > 1.0) throw ContractError("F0 accuracy must lie in (0, 1]");
    capacity_ = static_cast<std::size_t>(std::ceil(3.0 / (eps * eps)));
  }
}

void F0Estimator::observe(std::uint64_t item) {
  if (mode_ == F0Mode::kExact) {
    exact_.insert(item);
    return;
  }
  const std::uint64_t h = mix64(key_ ^ mix64(item));
  if (smallest_.size() < capacity_) {
    smallest_.insert(h);
  } else if (h < *smallest_.rbegin() && !smallest_.count(h)) {
    smallest_.erase(std::prev(smallest_.end()));
    smallest_.insert(h);
  }
}

double F0Estimator::estimate() const {
  if (mode_ == F0Mode::kExact) return static_cast<double>(exact_.size());
  if (smallest_.size() < capacity_) return static_cast<double>(smallest_.size());
  // (K - 1) / v_K with v_K the K-th smallest hash scaled to (0, 1].
  const double vk = (static_cast<double>(*smallest_.rbegin()) + 1.0) * 0x1.0p-64;
  return static_cast<double>(capacity_ - 1) / vk;
}

std::size_t F0Estimator::words() const noexcept {
  return mode_ == F0Mode::kExact ? exact_.size() : smallest_.size();
}

}  // namespace hyperstream
