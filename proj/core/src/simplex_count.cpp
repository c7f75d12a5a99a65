#include "hyperstream/simplex_count.hpp"

#include <algorithm>
#include <map>

namespace hyperstream {
namespace {

std::vector<VertexId> active_vertices(const Hypergraph& h) {
  std::vector<VertexId> out;
  for (VertexId v = 1; v <= h.n(); ++v)
    if (h.degree(v) > 0) out.push_back(v);
  return out;
}

void enumerate_edge_driven(const Hypergraph& h, const std::function<void(const VertexSet&)>& fn) {
  const auto k = static_cast<std::size_t>(h.k());
  std::vector<std::span<const VertexId>> lists(k);
  std::vector<VertexId> candidates;
  std::vector<VertexId> scratch;
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < k; ++i) lists[i] = h.apexes(e.without_index(i));
    std::sort(lists.begin(), lists.end(), [](auto a, auto b) { return a.size() < b.size(); });
    // Apexes above max(e) only, so each simplex is reported from one base.
    auto first = std::upper_bound(lists[0].begin(), lists[0].end(), e.max());
    candidates.assign(first, lists[0].end());
    for (std::size_t i = 1; i < k && !candidates.empty(); ++i) {
      scratch.clear();
      std::set_intersection(candidates.begin(), candidates.end(), lists[i].begin(), lists[i].end(),
                            std::back_inserter(scratch));
      candidates.swap(scratch);
    }
    for (VertexId z : candidates) fn(e.with(z));
  }
}

void enumerate_subsets(const Hypergraph& h, const std::function<void(const VertexSet&)>& fn) {
  const auto verts = active_vertices(h);
  const auto r = static_cast<std::size_t>(h.k()) + 1;
  if (verts.size() < r) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  std::vector<VertexId> pick(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) pick[i] = verts[idx[i]];
    const VertexSet x{std::span<const VertexId>(pick)};
    if (is_simplex(h, x)) fn(x);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == verts.size() - r + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

void enumerate_simplices(const Hypergraph& h, const std::function<void(const VertexSet&)>& fn, CountMethod method) {
  if (method == CountMethod::kAuto) {
    const auto n_active = active_vertices(h).size();
    method = binomial(n_active, static_cast<std::uint64_t>(h.k()) + 1) <= kSubsetEnumerationThreshold
                 ? CountMethod::kSubsetEnumeration
                 : CountMethod::kEdgeDriven;
  }
  if (method == CountMethod::kSubsetEnumeration)
    enumerate_subsets(h, fn);
  else
    enumerate_edge_driven(h, fn);
}

SimplexStats count_simplices_exact(const Hypergraph& h, CountMethod method) {
  SimplexStats st;
  st.per_edge_nsimp.assign(h.m(), 0);
  st.per_edge_Nsimp.assign(h.m(), 0);
  st.per_vertex.assign(static_cast<std::size_t>(h.n()) + 1, 0);
  enumerate_simplices(
      h, [&](const VertexSet& x) { st.simplices.push_back(x); }, method);
  std::sort(st.simplices.begin(), st.simplices.end());
  st.t_k = st.simplices.size();
  for (const auto& x : st.simplices) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      ++st.per_edge_Nsimp[h.edge_index(x.without_index(j))];
      ++st.per_vertex[x[j]];
    }
    ++st.per_edge_nsimp[h.edge_index(simplex_label(h, x).base)];
  }
  for (auto c : st.per_edge_Nsimp) st.delta_e = std::max(st.delta_e, c);
  for (auto c : st.per_vertex) st.delta_v = std::max(st.delta_v, c);
  return st;
}

std::uint64_t count_shadow_simplices(const Hypergraph& h) {
  const ShadowHypergraph shadow = shadow_hypergraph(h);
  std::map<VertexId, std::vector<Hyperedge>> by_flavor;
  for (const auto& se : shadow.edges) by_flavor[se.flavor].push_back(se.base);
  std::uint64_t total = 0;
  for (auto& [flavor, bases] : by_flavor) {
    const Hypergraph component(shadow.arity, h.n(), std::move(bases));
    enumerate_simplices(
        component,
        [&](const VertexSet& y) {
          if (h.has_edge(y)) ++total;
        },
        CountMethod::kEdgeDriven);
  }
  return total;
}

}  // namespace hyperstream
