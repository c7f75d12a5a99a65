#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hyperstream/combinatorics.hpp"
#include "hyperstream/hypergraph.hpp"

namespace hyperstream {

// Exact simplex statistics. Per-edge vectors are aligned with h.edges();
// per_vertex is indexed by vertex ID (entry 0 unused).
struct SimplexStats {
  std::uint64_t t_k = 0;
  std::uint64_t delta_e = 0;
  std::uint64_t delta_v = 0;
  std::vector<std::uint64_t> per_edge_nsimp;  // simplices labeled (e, .)
  std::vector<std::uint64_t> per_edge_Nsimp;  // simplices containing e
  std::vector<std::uint64_t> per_vertex;      // simplices containing v
  std::vector<VertexSet> simplices;           // each simplex once, sorted
};

enum class CountMethod {
  kAuto,               // subset enumeration for tiny instances, edge-driven otherwise
  kEdgeDriven,         // per edge, intersect apex candidates of its (k-1)-subsets
  kSubsetEnumeration,  // every (k+1)-subset of non-isolated vertices
};

// kAuto uses subset enumeration while C(#non-isolated vertices, k+1) stays below this.
inline constexpr std::uint64_t kSubsetEnumerationThreshold = 4096;

// Calls fn(X) once per simplex. The edge-driven path reports each simplex
// from its base X \ {max X}.
void enumerate_simplices(const Hypergraph& h, const std::function<void(const VertexSet&)>& fn,
                         CountMethod method = CountMethod::kAuto);

SimplexStats count_simplices_exact(const Hypergraph& h, CountMethod method = CountMethod::kAuto);

// Number of (k-1)-simplices of the shadow hypergraph, within one flavor
// component, whose base vertices form an edge of h (so that base + flavor is a
// simplex of h). Equals T_k(h). Requires k >= 3.
std::uint64_t count_shadow_simplices(const Hypergraph& h);

}  // namespace hyperstream
