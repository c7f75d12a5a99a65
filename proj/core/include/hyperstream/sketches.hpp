#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <unordered_set>
#include <vector>

#include "hyperstream/rng.hpp"
#include "hyperstream/vertex_set.hpp"

namespace hyperstream {

// Field modulus for all polynomial hashing.
inline constexpr std::uint64_t kMersenne61 = (1ULL << 61) - 1;

// d-wise independent family h: [domain_size] -> {1..N}, realized as a random
// polynomial of degree d - 1 over GF(2^61 - 1) reduced mod N. The reduction
// leaves a bias of at most N / (2^61 - 1) per color, which is not corrected.
class KwiseHashFamily {
 public:
  KwiseHashFamily(unsigned d, std::uint64_t domain_size, std::uint64_t colors, SeededRng& rng);

  unsigned independence() const noexcept { return static_cast<unsigned>(coefficients_.size()); }
  std::uint64_t domain_size() const noexcept { return domain_size_; }
  std::uint64_t colors() const noexcept { return colors_; }
  std::span<const std::uint64_t> coefficients() const noexcept { return coefficients_; }

  // Color in [1, N]. Throws ContractError when key >= domain_size.
  std::uint64_t color(std::uint64_t key) const;

 private:
  std::uint64_t domain_size_;
  std::uint64_t colors_;
  std::vector<std::uint64_t> coefficients_;
};

// Injective mixed-radix encoding of a sorted vertex subset over [n]:
// sum_i (v_i - 1) * n^i. Domain size is n^|s|.
std::uint64_t encode_vertex_subset(const VertexSet& s, VertexId n);
// n^r, or ContractError when it does not fit below 2^61 - 1.
std::uint64_t subset_domain_size(std::uint64_t radix, std::size_t r);

// Flavored vertex u:x as one integer in [n^2]: (u - 1) * n + (x - 1).
std::uint64_t encode_shadow_vertex(VertexId flavor, VertexId base, VertexId n);
// Mixed-radix encoding over [n^2] of a set of shadow vertices sharing one
// flavor; bases must be sorted ascending (so the codes are too).
std::uint64_t encode_shadow_subset(VertexId flavor, std::span<const VertexId> bases, VertexId n);

// Insert-only l0 sampler: keeps the distinct item of minimum keyed priority,
// ties to the smaller item. Repeated items never change the outcome.
class DistinctSampler {
 public:
  explicit DistinctSampler(std::uint64_t key) : key_(key) {}

  void observe(std::uint64_t item);
  bool empty() const noexcept { return !best_; }
  // Throws EmptySamplerError when nothing was observed.
  std::uint64_t sample() const;
  std::uint64_t min_priority() const noexcept { return best_priority_; }

 private:
  std::uint64_t key_;
  std::optional<std::uint64_t> best_;
  std::uint64_t best_priority_ = ~0ULL;
};

enum class F0Mode { kExact, kProbabilistic };

// Distinct-element counter: an exact set, or a k-minimum-values sketch with
// ceil(3 / eps^2) slots.
class F0Estimator {
 public:
  explicit F0Estimator(F0Mode mode = F0Mode::kExact, double eps = 0.1, std::uint64_t key = 0);

  void observe(std::uint64_t item);
  double estimate() const;
  F0Mode mode() const noexcept { return mode_; }
  std::size_t sketch_size() const noexcept { return capacity_; }
  // Stored words: distinct items (exact) or retained hashes (sketch).
  std::size_t words() const noexcept;

 private:
  F0Mode mode_;
  std::uint64_t key_;
  std::size_t capacity_ = 0;
  std::unordered_set<std::uint64_t> exact_;
  std::set<std::uint64_t> smallest_;
};

}  // namespace hyperstream
