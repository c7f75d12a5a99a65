#include "hyperstream/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <unordered_map>
#include <unordered_set>

#include "hyperstream/rng.hpp"

namespace hyperstream {
namespace {

constexpr std::uint64_t kTagRandom = 0x7a11;
constexpr std::uint64_t kTagPlanted = 0x91a7;
constexpr std::uint64_t kTagBits = 0xb175;
constexpr std::uint64_t kTagOrder = 0x0dde;

double binomial_real(double n, double r) {
  if (r < 0 || r > n) return 0.0;
  return std::exp(std::lgamma(n + 1) - std::lgamma(r + 1) - std::lgamma(n - r + 1));
}

void check_arity(int k) {
  if (k < 2 || k > kMaxArity) throw ContractError("arity k=" + std::to_string(k) + " unsupported");
}

// Calls fn(c) for every r-combination c of 1..n in lexicographic order.
template <class Fn>
void for_each_combination(VertexId n, int r, Fn&& fn) {
  if (r < 0 || static_cast<VertexId>(r) > n) return;
  std::vector<VertexId> c(r);
  for (int i = 0; i < r; ++i) c[i] = i + 1;
  for (;;) {
    fn(std::as_const(c));
    int i = r - 1;
    while (i >= 0 && c[i] == n - (r - 1 - i)) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
  }
}

// Calls fn(t) for every tuple t in [n]^len in row-major order (1-based).
template <class Fn>
void for_each_tuple(VertexId n, int len, Fn&& fn) {
  std::vector<VertexId> t(len, 1);
  for (;;) {
    fn(std::as_const(t));
    int i = len - 1;
    while (i >= 0 && t[i] == n) t[i--] = 1;
    if (i < 0) return;
    ++t[i];
  }
}

std::uint64_t power(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > (1ULL << 40) / base) throw ContractError("gadget size exceeds 2^40");
    out *= base;
  }
  return out;
}

Hyperedge make_edge(std::vector<VertexId> ids) { return Hyperedge(std::span<const VertexId>(ids)); }

// Edge set with a (k-1)-subset -> apex index, used to refuse edges that would
// close a simplex.
class ClosureGuard {
 public:
  bool contains(const Hyperedge& e) const { return edges_.count(e) != 0; }
  bool closes_simplex(const Hyperedge& e) const {
    const std::vector<VertexId>* smallest = nullptr;
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto it = apexes_.find(e.without_index(i));
      if (it == apexes_.end()) return false;
      if (!smallest || it->second.size() < smallest->size()) smallest = &it->second;
    }
    for (VertexId z : *smallest) {
      if (e.contains(z)) continue;
      bool all = true;
      for (std::size_t i = 0; i < e.size() && all; ++i) all = contains(e.without_index(i).with(z));
      if (all) return true;
    }
    return false;
  }
  void insert(const Hyperedge& e) {
    edges_.insert(e);
    for (std::size_t i = 0; i < e.size(); ++i) apexes_[e.without_index(i)].push_back(e[i]);
  }

 private:
  std::unordered_set<Hyperedge> edges_;
  std::unordered_map<VertexSet, std::vector<VertexId>> apexes_;
};

Hyperedge random_edge(int k, VertexId n, SeededRng& rng) {
  std::vector<VertexId> ids;
  while (ids.size() < static_cast<std::size_t>(k)) {
    const auto v = static_cast<VertexId>(rng.below(n) + 1);
    if (std::find(ids.begin(), ids.end(), v) == ids.end()) ids.push_back(v);
  }
  return make_edge(std::move(ids));
}

Gadget to_gadget(int k, VertexId n_total, std::vector<Hyperedge> alice, std::vector<Hyperedge> bob) {
  Gadget g;
  g.k = k;
  g.n = n_total;
  g.alice_edges = alice.size();
  g.edges = std::move(alice);
  g.edges.insert(g.edges.end(), bob.begin(), bob.end());
  return g;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kComplete: return "complete";
    case Family::kRandom: return "random";
    case Family::kPlanted: return "planted";
    case Family::kLbNk: return "lb-nk";
    case Family::kLbIndex: return "lb-index";
    case Family::kLbDisj: return "lb-disj";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  std::string s(name);
  std::replace(s.begin(), s.end(), '_', '-');
  for (Family f : {Family::kComplete, Family::kRandom, Family::kPlanted, Family::kLbNk, Family::kLbIndex,
                   Family::kLbDisj})
    if (family_name(f) == s) return f;
  throw ConfigError("unknown generator family '" + std::string(name) + "'");
}

Hypergraph gen_complete(int k, VertexId n) {
  check_arity(k);
  if (n < static_cast<VertexId>(k)) throw ContractError("complete hypergraph needs n >= k");
  if (binomial_real(n, k) > 5e7) throw ContractError("complete hypergraph too large");
  std::vector<Hyperedge> edges;
  for_each_combination(n, k, [&](const std::vector<VertexId>& c) { edges.push_back(make_edge(c)); });
  return Hypergraph(k, n, std::move(edges));
}

Hypergraph gen_random(int k, VertexId n, std::uint64_t m, std::uint64_t seed) {
  check_arity(k);
  const double total = binomial_real(n, k);
  if (static_cast<double>(m) > total + 0.5)
    throw ContractError("cannot draw " + std::to_string(m) + " distinct edges from C(n, k)");
  SeededRng rng(seed, kTagRandom);
  std::vector<Hyperedge> edges;
  if (static_cast<double>(m) * 2 > total) {
    // Dense: shuffle all combinations and keep a prefix.
    std::vector<Hyperedge> all;
    for_each_combination(n, k, [&](const std::vector<VertexId>& c) { all.push_back(make_edge(c)); });
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(m);
    edges = std::move(all);
  } else {
    std::unordered_set<Hyperedge> seen;
    while (edges.size() < m) {
      Hyperedge e = random_edge(k, n, rng);
      if (seen.insert(e).second) edges.push_back(e);
    }
  }
  std::sort(edges.begin(), edges.end());
  return Hypergraph(k, n, std::move(edges));
}

Hypergraph gen_planted(int k, VertexId n, std::uint64_t m, std::uint64_t t_target, std::uint64_t seed) {
  check_arity(k);
  const std::uint64_t group = k + 1;
  if (t_target * group > n) throw ContractError("planted: not enough vertices for disjoint simplices");
  if (m < t_target * group) throw ContractError("planted: m is smaller than the planted edges");
  if (static_cast<double>(m) > binomial_real(n, k)) throw ContractError("planted: m exceeds C(n, k)");
  SeededRng rng(seed, kTagPlanted);

  std::vector<VertexId> perm(n);
  for (VertexId v = 0; v < n; ++v) perm[v] = v + 1;
  std::shuffle(perm.begin(), perm.end(), rng);

  ClosureGuard guard;
  std::vector<Hyperedge> edges;
  for (std::uint64_t t = 0; t < t_target; ++t) {
    const VertexSet x(std::span<const VertexId>(perm.data() + t * group, group));
    for (std::size_t j = 0; j < x.size(); ++j) {
      const Hyperedge e = x.without_index(j);
      guard.insert(e);
      edges.push_back(e);
    }
  }
  const std::uint64_t max_attempts = 200 * m + 10000;
  std::uint64_t attempts = 0;
  while (edges.size() < m) {
    if (++attempts > max_attempts) throw ContractError("planted: could not place filler edges without new simplices");
    const Hyperedge e = random_edge(k, n, rng);
    if (guard.contains(e) || guard.closes_simplex(e)) continue;
    guard.insert(e);
    edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end());
  return Hypergraph(k, n, std::move(edges));
}

std::vector<bool> random_bits(std::size_t size, std::uint64_t seed, double density) {
  if (!(density >= 0.0) || density > 1.0) throw ContractError("density must lie in [0, 1]");
  SeededRng rng(seed, kTagBits);
  std::vector<bool> out(size);
  for (std::size_t i = 0; i < size; ++i) out[i] = density > 0.0 && rng.bernoulli(density);
  return out;
}

// ---------------------------------------------------------------------------

std::size_t lb_nk_domain(int k, VertexId n) { return static_cast<std::size_t>(n) * binomial(n, k - 1); }

Gadget lb_nk_gadget(int k, VertexId n, const std::vector<bool>& x, const std::vector<bool>& y) {
  check_arity(k);
  if (n < static_cast<VertexId>(k)) throw ContractError("lb-nk needs n >= k");
  const std::size_t domain = lb_nk_domain(k, n);
  if (x.size() != domain || y.size() != domain) throw ContractError("lb-nk vectors must have length n * C(n, k-1)");
  auto a = [](VertexId i) { return i; };
  auto b = [n](VertexId i) { return n + i; };
  auto c = [n](VertexId j) { return 2 * n + j; };

  std::vector<Hyperedge> alice, bob;
  std::size_t idx = 0;
  for (VertexId i = 1; i <= n; ++i) {
    for_each_combination(n, k - 1, [&](const std::vector<VertexId>& cs) {
      std::vector<VertexId> tail;
      for (VertexId j : cs) tail.push_back(c(j));
      if (x[idx]) {
        auto ids = tail;
        ids.push_back(a(i));
        alice.push_back(make_edge(std::move(ids)));
      }
      if (y[idx]) {
        auto ids = tail;
        ids.push_back(b(i));
        bob.push_back(make_edge(std::move(ids)));
      }
      ++idx;
    });
  }
  for (VertexId i = 1; i <= n; ++i) {
    for_each_combination(n, k - 2, [&](const std::vector<VertexId>& cs) {
      std::vector<VertexId> ids{a(i), b(i)};
      for (VertexId j : cs) ids.push_back(c(j));
      bob.push_back(make_edge(std::move(ids)));
    });
  }
  return to_gadget(k, 3 * n, std::move(alice), std::move(bob));
}

Gadget lb_index_gadget(int k, VertexId n, const std::vector<bool>& x, const std::vector<VertexId>& y_index) {
  check_arity(k);
  if (n < 1) throw ContractError("lb-index needs n >= 1");
  const std::uint64_t cube = power(n, k);
  if (x.size() != cube) throw ContractError("lb-index vector must have length n^k");
  if (y_index.size() != static_cast<std::size_t>(k)) throw ContractError("lb-index needs k coordinates");
  for (VertexId t : y_index)
    if (t < 1 || t > n) throw ContractError("lb-index coordinate outside [1, n]");
  auto v = [n](int row, VertexId col) { return static_cast<VertexId>(row - 1) * n + col; };

  std::vector<Hyperedge> alice, bob;
  std::size_t idx = 0;
  for_each_tuple(n, k, [&](const std::vector<VertexId>& t) {
    if (x[idx++]) {
      std::vector<VertexId> ids;
      for (int r = 1; r <= k; ++r) ids.push_back(v(r, t[r - 1]));
      alice.push_back(make_edge(std::move(ids)));
    }
  });
  std::vector<VertexId> base;
  for (int r = 1; r <= k; ++r) base.push_back(v(r, y_index[r - 1]));
  const VertexId first_c = static_cast<VertexId>(k) * n;
  for (std::uint64_t c = 1; c <= cube; ++c) {
    for (int skip = 0; skip < k; ++skip) {
      std::vector<VertexId> ids{static_cast<VertexId>(first_c + c)};
      for (int r = 0; r < k; ++r)
        if (r != skip) ids.push_back(base[r]);
      bob.push_back(make_edge(std::move(ids)));
    }
  }
  return to_gadget(k, static_cast<VertexId>(first_c + cube), std::move(alice), std::move(bob));
}

Gadget lb_disj_gadget(int k, VertexId n, const std::vector<bool>& x, const std::vector<bool>& y) {
  check_arity(k);
  if (n < 2) throw ContractError("lb-disj needs n >= 2");
  if (x.size() != n || y.size() != n) throw ContractError("lb-disj vectors must have length n");
  power(n, k);
  auto a = [n](int group, VertexId t) { return static_cast<VertexId>(group - 1) * n + t; };
  auto d = [n, k](VertexId i) { return static_cast<VertexId>(k) * n + i; };

  // {d_i} plus one vertex from every group except `skip`.
  auto wedge_edges = [&](VertexId i, int skip, std::vector<Hyperedge>& out) {
    for_each_tuple(n, k - 1, [&](const std::vector<VertexId>& t) {
      std::vector<VertexId> ids{d(i)};
      int pos = 0;
      for (int g = 1; g <= k; ++g)
        if (g != skip) ids.push_back(a(g, t[pos++]));
      out.push_back(make_edge(std::move(ids)));
    });
  };

  std::vector<Hyperedge> alice, bob;
  for (VertexId i = 1; i <= n; ++i)
    if (x[i - 1]) wedge_edges(i, k, alice);
  for (VertexId i = 1; i <= n; ++i)
    if (y[i - 1])
      for (int j = 1; j <= k - 1; ++j) wedge_edges(i, j, bob);
  for_each_tuple(n, k, [&](const std::vector<VertexId>& t) {
    std::vector<VertexId> ids;
    for (int g = 1; g <= k; ++g) ids.push_back(a(g, t[g - 1]));
    bob.push_back(make_edge(std::move(ids)));
  });
  return to_gadget(k, static_cast<VertexId>(k + 1) * n, std::move(alice), std::move(bob));
}

namespace {

Hypergraph from_gadget(Gadget g) { return Hypergraph(g.k, g.n, std::move(g.edges)); }

Gadget make_gadget(const GeneratorSpec& s) {
  switch (s.family) {
    case Family::kLbNk: {
      const std::size_t domain = lb_nk_domain(s.k, s.n);
      return lb_nk_gadget(s.k, s.n, random_bits(domain, s.x_seed, s.density), random_bits(domain, s.y_seed, s.density));
    }
    case Family::kLbIndex:
      return lb_index_gadget(s.k, s.n, random_bits(power(s.n, s.k), s.x_seed, s.density), s.y_index);
    case Family::kLbDisj:
      return lb_disj_gadget(s.k, s.n, random_bits(s.n, s.x_seed, s.density), random_bits(s.n, s.y_seed, s.density));
    default: break;
  }
  throw ContractError("not a gadget family");
}

}  // namespace

Hypergraph gen_lb_nk(int k, VertexId n, std::uint64_t x_seed, std::uint64_t y_seed, double density) {
  GeneratorSpec s;
  s.family = Family::kLbNk, s.k = k, s.n = n, s.x_seed = x_seed, s.y_seed = y_seed, s.density = density;
  return from_gadget(make_gadget(s));
}

Hypergraph gen_lb_index(int k, VertexId n, std::uint64_t x_seed, const std::vector<VertexId>& y_index,
                        double density) {
  GeneratorSpec s;
  s.family = Family::kLbIndex, s.k = k, s.n = n, s.x_seed = x_seed, s.y_index = y_index, s.density = density;
  return from_gadget(make_gadget(s));
}

Hypergraph gen_lb_disj(int k, VertexId n, std::uint64_t x_seed, std::uint64_t y_seed, double density) {
  GeneratorSpec s;
  s.family = Family::kLbDisj, s.k = k, s.n = n, s.x_seed = x_seed, s.y_seed = y_seed, s.density = density;
  return from_gadget(make_gadget(s));
}

Hypergraph generate(const GeneratorSpec& spec) {
  std::vector<Hyperedge> edges;
  std::size_t alice = 0;
  VertexId n = spec.n;
  switch (spec.family) {
    case Family::kComplete: {
      const Hypergraph h = gen_complete(spec.k, spec.n);
      edges.assign(h.edges().begin(), h.edges().end());
      break;
    }
    case Family::kRandom: {
      const Hypergraph h = gen_random(spec.k, spec.n, spec.m, spec.seed);
      edges.assign(h.edges().begin(), h.edges().end());
      break;
    }
    case Family::kPlanted: {
      const Hypergraph h = gen_planted(spec.k, spec.n, spec.m, spec.t_target, spec.seed);
      edges.assign(h.edges().begin(), h.edges().end());
      break;
    }
    case Family::kLbNk:
    case Family::kLbIndex:
    case Family::kLbDisj: {
      Gadget g = make_gadget(spec);
      n = g.n;
      alice = g.alice_edges;
      edges = std::move(g.edges);
      break;
    }
  }
  // Alice's segment (empty for plain families) precedes Bob's.
  const auto mid = edges.begin() + static_cast<std::ptrdiff_t>(alice);
  if (spec.order == ArrivalOrder::kSorted) {
    std::sort(edges.begin(), mid);
    std::sort(mid, edges.end());
  } else {
    SeededRng rng(spec.seed, kTagOrder);
    std::shuffle(edges.begin(), mid, rng);
    std::shuffle(mid, edges.end(), rng);
  }
  return Hypergraph(spec.k, n, std::move(edges));
}

EdgeStream open_stream(const GeneratorSpec& spec) {
  return EdgeStream(std::make_shared<const Hypergraph>(generate(spec)), StreamSource::kGenerator,
                    std::string(family_name(spec.family)));
}

}  // namespace hyperstream
