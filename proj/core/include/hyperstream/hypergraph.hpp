#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "hyperstream/vertex_set.hpp"

namespace hyperstream {

enum class DuplicatePolicy {
  kReject,  // duplicate hyperedges are a ContractError
  kDedup,   // duplicates are dropped and counted
};

// In-memory k-uniform hypergraph over vertices 1..n. Edges keep the order in
// which they were supplied; streams built from a Hypergraph replay that order.
//
// Immutable after construction. Degree, codegree and apex indices are built
// eagerly so concurrent readers never race on a lazy cache.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Throws ContractError on arity mismatch, IDs outside [1, n], repeated
  // vertices, k outside [2, kMaxArity], or duplicates under kReject.
  Hypergraph(int k, VertexId n, std::vector<Hyperedge> edges,
             DuplicatePolicy policy = DuplicatePolicy::kReject);

  int k() const noexcept { return k_; }
  VertexId n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }
  std::size_t duplicates_dropped() const noexcept { return duplicates_dropped_; }

  std::span<const Hyperedge> edges() const noexcept { return edges_; }
  const Hyperedge& edge(std::size_t i) const { return edges_.at(i); }

  bool has_edge(const VertexSet& e) const;
  // Position of e in edges(); throws ContractError if absent.
  std::size_t edge_index(const Hyperedge& e) const;

  std::uint64_t degree(VertexId v) const;
  std::span<const std::uint32_t> incident_edges(VertexId v) const;

  // Number of edges strictly containing s; requires |s| < k.
  std::uint64_t codegree(const VertexSet& s) const;

  // Vertices w such that s + {w} is an edge; requires |s| = k - 1. Sorted.
  std::span<const VertexId> apexes(const VertexSet& s) const;

 private:
  void check_vertex(VertexId v) const;

  int k_ = 2;
  VertexId n_ = 0;
  std::size_t duplicates_dropped_ = 0;
  std::vector<Hyperedge> edges_;
  std::unordered_map<Hyperedge, std::uint32_t> index_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::unordered_map<VertexSet, std::uint64_t> codegree_;
  std::unordered_map<VertexSet, std::vector<VertexId>> apexes_;
};

// Calls fn(subset) for every non-empty proper subset of s.
template <class Fn>
void for_each_proper_subset(const VertexSet& s, Fn&& fn) {
  const std::uint32_t full = (1u << s.size()) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) fn(s.select(mask));
}

// Calls fn(subset) for every subset of s with exactly r elements.
template <class Fn>
void for_each_subset_of_size(const VertexSet& s, std::size_t r, Fn&& fn) {
  const std::uint32_t full = 1u << s.size();
  for (std::uint32_t mask = 0; mask < full; ++mask)
    if (static_cast<std::size_t>(__builtin_popcount(mask)) == r) fn(s.select(mask));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

}  // namespace hyperstream
