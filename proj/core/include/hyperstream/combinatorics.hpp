#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hyperstream/hypergraph.hpp"

namespace hyperstream {

// Number of edges strictly containing s. Requires |s| < k and every vertex
// of s in [1, n].
std::uint64_t codeg(const Hypergraph& h, const VertexSet& s);

// Vertices outside s that share an edge with s, sorted by ID.
std::vector<VertexId> neighborhood(const Hypergraph& h, const VertexSet& s);

// s-relative degree of x: codeg(s + {x}). Requires |s| <= k - 2 and x not in s.
std::uint64_t reldeg(const Hypergraph& h, const VertexSet& s, VertexId x);

// Ordering key used for every degree comparison: smaller degree first,
// then smaller ID.
struct DegreeKey {
  std::uint64_t degree;
  VertexId id;
  friend auto operator<=>(const DegreeKey&, const DegreeKey&) = default;
};

// The e-relative ordering of one hyperedge: chain[i] is the vertex chosen at
// step i + 1, prefix_codegs[i] is codeg(S_i + {chain[i]}), i.e. the relative
// degree that won step i + 1. The final entry is 0 because no edge strictly
// contains a whole edge.
struct RelativeOrdering {
  Hyperedge base_edge;
  std::vector<VertexId> chain;
  std::vector<std::uint64_t> prefix_codegs;

  // S_i: the first i chain vertices.
  VertexSet prefix(std::size_t i) const;
};

RelativeOrdering e_relative_order(const Hypergraph& h, const Hyperedge& e);

// Whether the last chain vertex of e precedes z in the e-relative order.
// Throws ContractError when z is in e or e is not an edge of h.
bool precedes(const Hypergraph& h, const Hyperedge& e, VertexId z);
bool precedes(const Hypergraph& h, const RelativeOrdering& order, VertexId z);

bool is_simplex(const Hypergraph& h, const VertexSet& x);

struct SimplexLabel {
  Hyperedge base;
  VertexId apex = 0;
  friend bool operator==(const SimplexLabel&, const SimplexLabel&) = default;
};

// Unique label (e(X), z(X)) of the simplex at x. Throws ContractError if h
// has no simplex at x.
SimplexLabel simplex_label(const Hypergraph& h, const VertexSet& x);

struct Hyperwedge {
  VertexId apex = 0;
  Hyperedge base;
  std::vector<Hyperedge> edges;  // the k edges through the apex
};

// The |x| hyperwedges of a simplex on x, one per apex in ascending apex order.
std::vector<Hyperwedge> hyperwedges_of(const VertexSet& x);

// (k-1)-graph of the edges through u with u removed. Vertex IDs are kept, so
// the result has the same n; its non-isolated vertices are Nhd(u).
Hypergraph neighborhood_hypergraph(const Hypergraph& h, VertexId u);

// Vertex x of the copy of V flavored by u (written u:x).
struct ShadowVertex {
  VertexId flavor = 0;
  VertexId base = 0;
  friend auto operator<=>(const ShadowVertex&, const ShadowVertex&) = default;
};

// A shadow edge: k - 1 vertices sharing one flavor.
struct ShadowEdge {
  VertexId flavor = 0;
  VertexSet base;
  std::vector<ShadowVertex> vertices() const;
  friend bool operator==(const ShadowEdge&, const ShadowEdge&) = default;
};

// Each input edge e yields one shadow edge, flavored by min(e), whose base is
// e without its minimum. origin[i] is the input edge behind edges[i].
struct ShadowHypergraph {
  int arity = 0;
  std::vector<ShadowEdge> edges;
  std::vector<Hyperedge> origin;
  // Flavored vertices that occur in some shadow edge, sorted.
  std::vector<ShadowVertex> vertices;
};

ShadowHypergraph shadow_hypergraph(const Hypergraph& h);

inline constexpr VertexId kDefaultArboricityCap = 16;

// max over vertex subsets S with |S| >= 2 of ceil(|E(S)| / (|S| - 1)), with
// E(S) the edges induced by S; 0 for an edgeless hypergraph. Exponential in n;
// throws ResourceError when n exceeds cap.
std::uint64_t hyperarboricity_exact(const Hypergraph& h, VertexId cap = kDefaultArboricityCap);

// Number of edges induced by the vertex subset given as a bitmask over IDs
// 1..n (bit v-1 stands for vertex v). Requires n <= 63.
std::uint64_t induced_edge_count(const Hypergraph& h, std::uint64_t vertex_mask);

// Sum over edges of the minimum vertex degree.
std::uint64_t sum_min_degrees(const Hypergraph& h);

// Sum over edges e of codeg(S_{k-1}(e)) under the e-relative ordering.
std::uint64_t sum_prefix_codegs(const Hypergraph& h);

}  // namespace hyperstream
