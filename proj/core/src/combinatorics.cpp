#include "hyperstream/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace hyperstream {

std::uint64_t codeg(const Hypergraph& h, const VertexSet& s) { return h.codegree(s); }

std::vector<VertexId> neighborhood(const Hypergraph& h, const VertexSet& s) {
  if (static_cast<int>(s.size()) >= h.k()) throw ContractError("neighborhood needs |S| < k");
  std::vector<VertexId> out;
  auto absorb = [&](const Hyperedge& e) {
    for (VertexId v : e)
      if (!s.contains(v)) out.push_back(v);
  };
  if (s.empty()) {
    for (const auto& e : h.edges()) absorb(e);
  } else {
    for (std::uint32_t idx : h.incident_edges(s[0])) {
      const auto& e = h.edges()[idx];
      if (s.is_subset_of(e)) absorb(e);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t reldeg(const Hypergraph& h, const VertexSet& s, VertexId x) {
  if (static_cast<int>(s.size()) > h.k() - 2) throw ContractError("relative degree needs |S| <= k - 2");
  if (s.contains(x)) throw ContractError("relative degree of a vertex inside S");
  return h.codegree(s.with(x));
}

VertexSet RelativeOrdering::prefix(std::size_t i) const {
  return VertexSet(std::span<const VertexId>(chain.data(), i));
}

RelativeOrdering e_relative_order(const Hypergraph& h, const Hyperedge& e) {
  if (!h.has_edge(e)) throw ContractError("e-relative ordering of an edge not in the hypergraph");
  const auto k = static_cast<std::size_t>(h.k());
  RelativeOrdering out;
  out.base_edge = e;
  VertexSet chosen;
  VertexSet remaining = e;
  for (std::size_t step = 0; step + 1 < k; ++step) {
    DegreeKey best{~0ULL, 0};
    for (VertexId v : remaining) best = std::min(best, DegreeKey{h.codegree(chosen.with(v)), v});
    out.chain.push_back(best.id);
    out.prefix_codegs.push_back(best.degree);
    chosen = chosen.with(best.id);
    remaining = remaining.without(best.id);
  }
  out.chain.push_back(remaining[0]);
  out.prefix_codegs.push_back(0);
  return out;
}

bool precedes(const Hypergraph& h, const RelativeOrdering& order, VertexId z) {
  if (order.base_edge.contains(z)) throw ContractError("precedes: z lies in e");
  const auto k = order.chain.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const VertexSet s = order.prefix(i);
    const DegreeKey ci{reldeg(h, s, order.chain[i]), order.chain[i]};
    const DegreeKey zk{reldeg(h, s, z), z};
    if (!(ci < zk)) return false;
  }
  const VertexSet s = order.prefix(k - 2);
  const DegreeKey last{reldeg(h, s, order.chain[k - 1]), order.chain[k - 1]};
  const DegreeKey zk{reldeg(h, s, z), z};
  return last < zk;
}

bool precedes(const Hypergraph& h, const Hyperedge& e, VertexId z) {
  if (e.contains(z)) throw ContractError("precedes: z lies in e");
  return precedes(h, e_relative_order(h, e), z);
}

bool is_simplex(const Hypergraph& h, const VertexSet& x) {
  if (static_cast<int>(x.size()) != h.k() + 1) return false;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!h.has_edge(x.without_index(j))) return false;
  return true;
}

SimplexLabel simplex_label(const Hypergraph& h, const VertexSet& x) {
  if (!is_simplex(h, x)) throw ContractError("simplex_label: no simplex at the given vertex set");
  const auto k = static_cast<std::size_t>(h.k());
  VertexSet chosen;
  VertexSet before_last;  // S_{k-2}
  VertexSet remaining = x;
  for (std::size_t step = 0; step + 1 < k; ++step) {
    DegreeKey best{~0ULL, 0};
    for (VertexId v : remaining) best = std::min(best, DegreeKey{h.codegree(chosen.with(v)), v});
    before_last = chosen;
    chosen = chosen.with(best.id);
    remaining = remaining.without(best.id);
  }
  // Two candidates left; the smaller one under the S_{k-2}-relative degree
  // closes the base, the other is the apex.
  const DegreeKey a{h.codegree(before_last.with(remaining[0])), remaining[0]};
  const DegreeKey b{h.codegree(before_last.with(remaining[1])), remaining[1]};
  const VertexId apex = a < b ? b.id : a.id;
  return SimplexLabel{x.without(apex), apex};
}

std::vector<Hyperwedge> hyperwedges_of(const VertexSet& x) {
  if (x.size() < 3) throw ContractError("hyperwedges need a simplex on at least 3 vertices");
  std::vector<Hyperwedge> out;
  out.reserve(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    Hyperwedge w;
    w.apex = x[j];
    w.base = x.without_index(j);
    for (std::size_t b = 0; b < x.size(); ++b)
      if (b != j) w.edges.push_back(x.without_index(b));
    out.push_back(std::move(w));
  }
  return out;
}

Hypergraph neighborhood_hypergraph(const Hypergraph& h, VertexId u) {
  if (h.k() < 3) throw UnsupportedArityError("neighborhood hypergraph needs k >= 3");
  std::vector<Hyperedge> edges;
  for (std::uint32_t idx : h.incident_edges(u)) edges.push_back(h.edges()[idx].without(u));
  return Hypergraph(h.k() - 1, h.n(), std::move(edges));
}

std::vector<ShadowVertex> ShadowEdge::vertices() const {
  std::vector<ShadowVertex> out;
  for (VertexId b : base) out.push_back({flavor, b});
  return out;
}

ShadowHypergraph shadow_hypergraph(const Hypergraph& h) {
  if (h.k() < 3) throw UnsupportedArityError("shadow hypergraph needs k >= 3");
  ShadowHypergraph out;
  out.arity = h.k() - 1;
  std::set<ShadowVertex> vertices;
  for (const auto& e : h.edges()) {
    ShadowEdge se{e.min(), e.without_index(0)};
    for (VertexId b : se.base) vertices.insert({se.flavor, b});
    out.edges.push_back(se);
    out.origin.push_back(e);
  }
  out.vertices.assign(vertices.begin(), vertices.end());
  return out;
}

std::uint64_t induced_edge_count(const Hypergraph& h, std::uint64_t vertex_mask) {
  if (h.n() > 63) throw ResourceError("induced_edge_count supports n <= 63");
  std::uint64_t count = 0;
  for (const auto& e : h.edges()) {
    std::uint64_t em = 0;
    for (VertexId v : e) em |= 1ULL << (v - 1);
    if ((em & ~vertex_mask) == 0) ++count;
  }
  return count;
}

std::uint64_t hyperarboricity_exact(const Hypergraph& h, VertexId cap) {
  if (h.n() > cap)
    throw ResourceError("hyperarboricity_exact: n=" + std::to_string(h.n()) + " exceeds cap " + std::to_string(cap));
  if (h.m() == 0) return 0;
  const std::size_t n = h.n();
  // Sum over subsets: induced[S] = number of edges whose vertex mask lies in S.
  std::vector<std::uint32_t> induced(std::size_t{1} << n, 0);
  for (const auto& e : h.edges()) {
    std::size_t em = 0;
    for (VertexId v : e) em |= std::size_t{1} << (v - 1);
    ++induced[em];
  }
  for (std::size_t bit = 0; bit < n; ++bit)
    for (std::size_t mask = 0; mask < induced.size(); ++mask)
      if (mask & (std::size_t{1} << bit)) induced[mask] += induced[mask ^ (std::size_t{1} << bit)];
  std::uint64_t best = 0;
  for (std::size_t mask = 0; mask < induced.size(); ++mask) {
    const auto size = static_cast<std::uint64_t>(std::popcount(mask));
    if (size < 2 || induced[mask] == 0) continue;
    best = std::max<std::uint64_t>(best, (induced[mask] + size - 2) / (size - 1));
  }
  return best;
}

std::uint64_t sum_min_degrees(const Hypergraph& h) {
  std::uint64_t total = 0;
  for (const auto& e : h.edges()) {
    std::uint64_t lo = ~0ULL;
    for (VertexId v : e) lo = std::min(lo, h.degree(v));
    total += lo;
  }
  return total;
}

std::uint64_t sum_prefix_codegs(const Hypergraph& h) {
  std::uint64_t total = 0;
  const auto k = static_cast<std::size_t>(h.k());
  for (const auto& e : h.edges()) total += e_relative_order(h, e).prefix_codegs[k - 2];
  return total;
}

}  // namespace hyperstream
