#include "hyperstream/hypergraph.hpp"

#include <algorithm>
#include <string>

namespace hyperstream {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

Hypergraph::Hypergraph(int k, VertexId n, std::vector<Hyperedge> edges, DuplicatePolicy policy)
    : k_(k), n_(n) {
  if (k < 2 || k > kMaxArity)
    throw ContractError("arity k=" + std::to_string(k) + " outside [2, " + std::to_string(kMaxArity) + "]");
  edges_.reserve(edges.size());
  index_.reserve(edges.size());
  for (auto& e : edges) {
    if (static_cast<int>(e.size()) != k)
      throw ContractError("edge of size " + std::to_string(e.size()) + " in a " + std::to_string(k) + "-graph");
    if (e.max() > n) throw ContractError("vertex " + std::to_string(e.max()) + " exceeds n=" + std::to_string(n));
    auto [it, inserted] = index_.emplace(e, static_cast<std::uint32_t>(edges_.size()));
    if (!inserted) {
      if (policy == DuplicatePolicy::kReject) {
        std::string s = "duplicate edge {";
        for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
        throw ContractError(s + "}");
      }
      ++duplicates_dropped_;
      continue;
    }
    edges_.push_back(e);
  }

  incident_.assign(static_cast<std::size_t>(n) + 1, {});
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    for (VertexId v : e) incident_[v].push_back(i);
    for_each_proper_subset(e, [&](const VertexSet& s) { ++codegree_[s]; });
    for (std::size_t j = 0; j < e.size(); ++j) apexes_[e.without_index(j)].push_back(e[j]);
  }
  for (auto& [key, list] : apexes_) std::sort(list.begin(), list.end());
}

void Hypergraph::check_vertex(VertexId v) const {
  if (v == 0 || v > n_) throw ContractError("vertex " + std::to_string(v) + " outside [1, n]");
}

bool Hypergraph::has_edge(const VertexSet& e) const { return index_.find(e) != index_.end(); }

std::size_t Hypergraph::edge_index(const Hyperedge& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw ContractError("edge is not in the hypergraph");
  return it->second;
}

std::uint64_t Hypergraph::degree(VertexId v) const {
  check_vertex(v);
  return incident_[v].size();
}

std::span<const std::uint32_t> Hypergraph::incident_edges(VertexId v) const {
  check_vertex(v);
  return incident_[v];
}

std::uint64_t Hypergraph::codegree(const VertexSet& s) const {
  if (static_cast<int>(s.size()) >= k_)
    throw ContractError("codegree needs |S| < k (got |S|=" + std::to_string(s.size()) + ")");
  if (s.empty()) return edges_.size();
  for (VertexId v : s) check_vertex(v);
  auto it = codegree_.find(s);
  return it == codegree_.end() ? 0 : it->second;
}

std::span<const VertexId> Hypergraph::apexes(const VertexSet& s) const {
  if (static_cast<int>(s.size()) != k_ - 1) throw ContractError("apex lookup needs |S| = k - 1");
  auto it = apexes_.find(s);
  if (it == apexes_.end()) return {};
  return it->second;
}

}  // namespace hyperstream
