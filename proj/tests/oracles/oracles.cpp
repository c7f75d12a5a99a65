#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <tuple>

namespace oracle {

Instance from_hypergraph(const hyperstream::Hypergraph& h) {
  Instance out;
  out.k = h.k();
  out.n = h.n();
  for (const auto& e : h.edges()) out.edges.emplace_back(e.begin(), e.end());
  return out;
}

hyperstream::Hypergraph to_hypergraph(const Instance& inst) {
  std::vector<hyperstream::Hyperedge> edges;
  for (const auto& e : inst.edges) edges.emplace_back(std::span<const Vertex>(e));
  return hyperstream::Hypergraph(inst.k, inst.n, std::move(edges));
}

std::vector<Set> subsets(Vertex n, int r) {
  Set all;
  for (Vertex v = 1; v <= n; ++v) all.push_back(v);
  return subsets_of(all, r);
}

std::vector<Set> subsets_of(const Set& s, int r) {
  std::vector<Set> out;
  if (r < 0 || static_cast<std::size_t>(r) > s.size()) return out;
  std::vector<bool> pick(s.size(), false);
  std::fill(pick.begin(), pick.begin() + r, true);
  do {
    Set cur;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (pick[i]) cur.push_back(s[i]);
    out.push_back(cur);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

Instance random_instance(int k, Vertex n, std::uint64_t m, std::uint64_t seed) {
  std::vector<Set> all = subsets(n, k);
  std::mt19937_64 gen(seed);
  std::shuffle(all.begin(), all.end(), gen);
  if (all.size() > m) all.resize(m);
  return Instance{k, n, all};
}

Instance random_density_instance(int k, Vertex n, double density, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::bernoulli_distribution keep(density);
  Instance out{k, n, {}};
  for (auto& s : subsets(n, k))
    if (keep(gen)) out.edges.push_back(s);
  std::shuffle(out.edges.begin(), out.edges.end(), gen);
  return out;
}

bool contains_all(const Set& big, const Set& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Set with(Set s, Vertex v) {
  s.insert(std::upper_bound(s.begin(), s.end(), v), v);
  return s;
}

Set without(const Set& s, Vertex v) {
  Set out;
  for (Vertex x : s)
    if (x != v) out.push_back(x);
  return out;
}

std::uint64_t codeg(const Instance& h, const Set& s) {
  std::uint64_t c = 0;
  for (const auto& e : h.edges)
    if (e.size() > s.size() && contains_all(e, s)) ++c;
  return c;
}

Set nhd(const Instance& h, const Set& s) {
  std::set<Vertex> out;
  for (const auto& e : h.edges)
    if (contains_all(e, s))
      for (Vertex v : e)
        if (!std::binary_search(s.begin(), s.end(), v)) out.insert(v);
  return Set(out.begin(), out.end());
}

std::uint64_t degree(const Instance& h, Vertex v) { return codeg(h, Set{v}); }

std::vector<Set> simplices(const Instance& h) {
  const EdgeSet edges(h.edges.begin(), h.edges.end());
  std::vector<Set> out;
  for (const auto& x : subsets(h.n, h.k + 1)) {
    bool all = true;
    for (const auto& e : subsets_of(x, h.k))
      if (!edges.count(e)) {
        all = false;
        break;
      }
    if (all) out.push_back(x);
  }
  return out;
}

std::uint64_t simplex_count(const Instance& h) { return simplices(h).size(); }

std::pair<std::uint64_t, std::uint64_t> simplex_maxima(const Instance& h) {
  std::map<Set, std::uint64_t> per_edge;
  std::map<Vertex, std::uint64_t> per_vertex;
  for (const auto& x : simplices(h)) {
    for (const auto& e : subsets_of(x, h.k)) ++per_edge[e];
    for (Vertex v : x) ++per_vertex[v];
  }
  std::uint64_t de = 0, dv = 0;
  for (const auto& [e, c] : per_edge) de = std::max(de, c);
  for (const auto& [v, c] : per_vertex) dv = std::max(dv, c);
  return {de, dv};
}

std::uint64_t simplices_through(const Instance& h, const Set& e) {
  std::uint64_t c = 0;
  for (const auto& x : simplices(h))
    if (contains_all(x, e)) ++c;
  return c;
}

namespace {

// Smallest (relative degree, ID) among candidates against prefix s.
Vertex argmin_reldeg(const Instance& h, const Set& s, const Set& candidates) {
  std::tuple<std::uint64_t, Vertex> best{~0ULL, 0};
  for (Vertex v : candidates) best = std::min(best, std::make_tuple(codeg(h, with(s, v)), v));
  return std::get<1>(best);
}

bool key_le(const Instance& h, const Set& s, Vertex a, Vertex b) {
  return std::make_tuple(codeg(h, with(s, a)), a) <= std::make_tuple(codeg(h, with(s, b)), b);
}

}  // namespace

std::pair<Set, Vertex> label(const Instance& h, const Set& x) {
  Set prefix;
  Set rest = x;
  Set prefix_before_last;
  for (int i = 1; i <= h.k - 1; ++i) {
    const Vertex u = argmin_reldeg(h, prefix, rest);
    prefix_before_last = prefix;
    prefix = with(prefix, u);
    rest = without(rest, u);
  }
  const Vertex uk = argmin_reldeg(h, prefix_before_last, rest);
  const Vertex apex = rest[0] == uk ? rest[1] : rest[0];
  return {without(x, apex), apex};
}

Set chain(const Instance& h, const Set& e) {
  Set order;
  Set prefix;
  Set rest = e;
  for (int i = 1; i <= h.k; ++i) {
    const Vertex c = argmin_reldeg(h, prefix, rest);
    order.push_back(c);
    prefix = with(prefix, c);
    rest = without(rest, c);
  }
  return order;
}

bool precedes(const Instance& h, const Set& e, Vertex z) {
  const Set c = chain(h, e);
  Set prefix;
  for (int i = 0; i < h.k - 1; ++i) {
    if (!key_le(h, prefix, c[i], z)) return false;
    prefix = with(prefix, c[i]);
  }
  Set s_k2(c.begin(), c.begin() + (h.k - 2));
  std::sort(s_k2.begin(), s_k2.end());
  return key_le(h, s_k2, c[h.k - 1], z);
}

std::vector<std::uint64_t> labels_per_edge(const Instance& h) {
  std::map<Set, std::uint64_t> count;
  for (const auto& x : simplices(h)) ++count[label(h, x).first];
  std::vector<std::uint64_t> out;
  for (const auto& e : h.edges) out.push_back(count.count(e) ? count.at(e) : 0);
  return out;
}

std::uint64_t arboricity(const Instance& h) {
  std::uint64_t best = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << h.n); ++mask) {
    const auto size = static_cast<std::uint64_t>(__builtin_popcountll(mask));
    if (size < 2) continue;
    std::uint64_t inside = 0;
    for (const auto& e : h.edges) {
      bool in = true;
      for (Vertex v : e) in = in && ((mask >> (v - 1)) & 1ULL);
      if (in) ++inside;
    }
    best = std::max(best, (inside + size - 2) / (size - 1));
  }
  return best;
}

std::uint64_t min_degree_sum(const Instance& h) {
  std::uint64_t total = 0;
  for (const auto& e : h.edges) {
    std::uint64_t lo = ~0ULL;
    for (Vertex v : e) lo = std::min(lo, degree(h, v));
    total += lo;
  }
  return total;
}

std::uint64_t shadow_simplex_count(const Instance& h) {
  // Shadow edges as (flavor, base) with base = e minus its minimum.
  std::set<std::pair<Vertex, Set>> shadow;
  for (const auto& e : h.edges) shadow.insert({e[0], Set(e.begin() + 1, e.end())});
  const EdgeSet edges(h.edges.begin(), h.edges.end());
  std::uint64_t count = 0;
  for (Vertex z = 1; z <= h.n; ++z) {
    Set above;
    for (Vertex v = z + 1; v <= h.n; ++v) above.push_back(v);
    for (const auto& b : subsets_of(above, h.k)) {
      bool all = true;
      for (const auto& f : subsets_of(b, h.k - 1)) all = all && shadow.count({z, f});
      if (all && edges.count(b)) ++count;
    }
  }
  return count;
}

Split heavy_light_split(const Instance& h, double threshold) {
  Split out;
  std::map<Set, std::uint64_t> through;
  const auto xs = simplices(h);
  for (const auto& x : xs)
    for (const auto& e : subsets_of(x, h.k)) ++through[e];
  for (const auto& x : xs) {
    bool heavy = false;
    for (const auto& e : subsets_of(x, h.k)) heavy = heavy || static_cast<double>(through[e]) >= threshold;
    (heavy ? out.heavy : out.light)++;
  }
  return out;
}

}  // namespace oracle
