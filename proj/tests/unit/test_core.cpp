#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "hyperstream/combinatorics.hpp"
#include "hyperstream/hypergraph.hpp"
#include "hyperstream/simplex_count.hpp"
#include "oracles.hpp"

using namespace hyperstream;

namespace {

Hypergraph make(int k, VertexId n, std::vector<std::vector<VertexId>> edges) {
  std::vector<Hyperedge> es;
  for (auto& e : edges) es.emplace_back(std::span<const VertexId>(e));
  return Hypergraph(k, n, std::move(es));
}

Hypergraph simplex3() { return make(3, 4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}); }
Hypergraph triangle() { return make(2, 3, {{1, 2}, {1, 3}, {2, 3}}); }

Hypergraph complete(int k, VertexId n) {
  std::vector<std::vector<VertexId>> edges;
  for (auto& s : oracle::subsets(n, k)) edges.push_back(s);
  return make(k, n, edges);
}

oracle::Set ids(const VertexSet& s) { return oracle::Set(s.begin(), s.end()); }

}  // namespace

TEST(VertexSet, SortsAndRejectsRepeats) {
  const VertexSet s{5, 2, 9};
  EXPECT_EQ(ids(s), (oracle::Set{2, 5, 9}));
  EXPECT_THROW((VertexSet{1, 1}), ContractError);
  EXPECT_THROW((VertexSet{0, 1}), ContractError);
  EXPECT_EQ(s.without(5), (VertexSet{2, 9}));
  EXPECT_EQ(s.with(1), (VertexSet{1, 2, 5, 9}));
  EXPECT_TRUE((VertexSet{2, 9}).is_subset_of(s));
  EXPECT_EQ((VertexSet{3, 1, 2}), (VertexSet{1, 2, 3}));
}

TEST(Hypergraph, ValidatesEdges) {
  EXPECT_THROW(make(3, 4, {{1, 2}}), ContractError);
  EXPECT_THROW(make(3, 4, {{1, 2, 5}}), ContractError);
  EXPECT_THROW(make(3, 4, {{1, 2, 3}, {3, 2, 1}}), ContractError);
  EXPECT_THROW(make(1, 4, {}), ContractError);
  std::vector<Hyperedge> dup{Hyperedge{1, 2, 3}, Hyperedge{1, 2, 3}};
  const Hypergraph h(3, 4, dup, DuplicatePolicy::kDedup);
  EXPECT_EQ(h.m(), 1u);
  EXPECT_EQ(h.duplicates_dropped(), 1u);
}

TEST(Codeg, SpecExamples) {
  const Hypergraph h = simplex3();
  EXPECT_EQ(codeg(h, VertexSet{1, 2}), 2u);
  const Hypergraph sparse = make(3, 6, {{1, 2, 3}});
  EXPECT_EQ(codeg(sparse, VertexSet{4, 5}), 0u);
  EXPECT_THROW(codeg(h, VertexSet{1, 2, 3}), ContractError);
}

TEST(Codeg, RandomMatchesLinearScan) {
  const auto inst = oracle::random_instance(3, 10, 30, 7);
  const Hypergraph h = oracle::to_hypergraph(inst);
  EXPECT_EQ(codeg(h, VertexSet{3, 5}), oracle::codeg(inst, {3, 5}));
  for (const auto& s : oracle::subsets(10, 1)) EXPECT_EQ(codeg(h, VertexSet{s[0]}), oracle::codeg(inst, s));
  for (const auto& s : oracle::subsets(10, 2)) EXPECT_EQ(codeg(h, VertexSet{s[0], s[1]}), oracle::codeg(inst, s));
}

TEST(Neighborhood, SpecExamples) {
  const Hypergraph h = simplex3();
  EXPECT_EQ(neighborhood(h, VertexSet{1, 2}), (std::vector<VertexId>{3, 4}));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = oracle::random_instance(4, 9, 40, seed);
    const Hypergraph g = oracle::to_hypergraph(inst);
    for (const auto& s : oracle::subsets(9, 2)) {
      const VertexSet vs{s[0], s[1]};
      EXPECT_EQ(neighborhood(g, vs), oracle::nhd(inst, s));
    }
    for (const auto& s : oracle::subsets(9, 3)) {
      const VertexSet vs{s[0], s[1], s[2]};
      EXPECT_EQ(neighborhood(g, vs).size(), codeg(g, vs));
    }
  }
}

TEST(Reldeg, SpecExamples) {
  const Hypergraph h = simplex3();
  EXPECT_EQ(reldeg(h, VertexSet{}, 1), 3u);
  EXPECT_EQ(h.degree(1), 3u);
  EXPECT_EQ(reldeg(h, VertexSet{1}, 2), 2u);
  EXPECT_THROW(reldeg(h, VertexSet{1, 2}, 3), ContractError);
  EXPECT_THROW(reldeg(h, VertexSet{1}, 1), ContractError);
}

TEST(CountExact, SpecExamples) {
  EXPECT_EQ(count_simplices_exact(complete(3, 5)).t_k, 5u);
  const SimplexStats t = count_simplices_exact(triangle());
  EXPECT_EQ(t.t_k, 1u);
  EXPECT_EQ(t.delta_e, 1u);
  EXPECT_EQ(t.delta_v, 1u);
  EXPECT_EQ(count_simplices_exact(Hypergraph(3, 0, {})).t_k, 0u);
}

TEST(CountExact, MatchesBruteForceAndBothPathsAgree) {
  const auto inst = oracle::random_instance(3, 12, 80, 42);
  const Hypergraph h = oracle::to_hypergraph(inst);
  const auto brute = oracle::simplex_count(inst);
  EXPECT_EQ(count_simplices_exact(h).t_k, brute);
  EXPECT_EQ(count_simplices_exact(h, CountMethod::kEdgeDriven).t_k, brute);
  EXPECT_EQ(count_simplices_exact(h, CountMethod::kSubsetEnumeration).t_k, brute);
}

TEST(CountExact, StatsInvariants) {
  for (int k = 2; k <= 4; ++k) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const auto inst = oracle::random_density_instance(k, 8, 0.6, seed * 31 + k);
      const Hypergraph h = oracle::to_hypergraph(inst);
      const SimplexStats s = count_simplices_exact(h);
      ASSERT_EQ(s.t_k, oracle::simplex_count(inst));
      const auto [de, dv] = oracle::simplex_maxima(inst);
      EXPECT_EQ(s.delta_e, de);
      EXPECT_EQ(s.delta_v, dv);
      std::uint64_t sum_n = 0, sum_N = 0, max_N = 0;
      for (auto c : s.per_edge_nsimp) sum_n += c;
      for (auto c : s.per_edge_Nsimp) {
        sum_N += c;
        max_N = std::max(max_N, c);
      }
      EXPECT_EQ(sum_n, s.t_k);
      EXPECT_EQ(sum_N, (k + 1) * s.t_k);
      EXPECT_EQ(max_N, s.delta_e);
      EXPECT_EQ(s.per_edge_nsimp, oracle::labels_per_edge(inst));
      for (std::size_t i = 0; i < h.m(); ++i)
        EXPECT_EQ(s.per_edge_Nsimp[i], oracle::simplices_through(inst, inst.edges[i]));
    }
  }
}

TEST(RelativeOrder, SpecExamples) {
  const Hypergraph h = simplex3();
  const RelativeOrdering o = e_relative_order(h, Hyperedge{1, 2, 3});
  EXPECT_EQ(o.chain, (std::vector<VertexId>{1, 2, 3}));
  // k = 2: smaller-degree endpoint first.
  const Hypergraph star = make(2, 4, {{1, 2}, {2, 3}, {2, 4}});
  EXPECT_EQ(e_relative_order(star, Hyperedge{1, 2}).chain, (std::vector<VertexId>{1, 2}));
  EXPECT_THROW(e_relative_order(h, Hyperedge{1, 2, 5}), ContractError);
}

TEST(RelativeOrder, MatchesStepwiseRecomputation) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = oracle::random_density_instance(3, 8, 0.5, 100 + seed);
    const Hypergraph h = oracle::to_hypergraph(inst);
    for (const auto& e : inst.edges) {
      const Hyperedge he{std::span<const VertexId>(e)};
      const auto o = e_relative_order(h, he);
      EXPECT_EQ(oracle::Set(o.chain.begin(), o.chain.end()), oracle::chain(inst, e));
      for (VertexId z = 1; z <= h.n(); ++z) {
        if (he.contains(z)) continue;
        EXPECT_EQ(precedes(h, he, z), oracle::precedes(inst, e, z)) << "seed " << seed << " z " << z;
      }
    }
  }
}

TEST(Precedes, SpecExamples) {
  const Hypergraph h = simplex3();
  EXPECT_TRUE(precedes(h, Hyperedge{1, 2, 3}, 4));
  EXPECT_THROW(precedes(h, Hyperedge{1, 2, 3}, 2), ContractError);
  // Vertex 5 has degree 1, below deg(c_1) = deg(1) = 3, and a larger ID.
  const Hypergraph g = make(3, 6, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {4, 5, 6}});
  EXPECT_FALSE(precedes(g, Hyperedge{1, 2, 3}, 5));
}

TEST(SimplexLabel, SpecExamples) {
  const Hypergraph h = simplex3();
  const SimplexLabel l = simplex_label(h, VertexSet{1, 2, 3, 4});
  EXPECT_EQ(l.base, (Hyperedge{1, 2, 3}));
  EXPECT_EQ(l.apex, 4u);
  // Triangle a=3, b=1, c=2 by degree: pendant edges raise deg(2) and deg(1).
  const Hypergraph t = make(2, 6, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {1, 6}});
  const SimplexLabel tl = simplex_label(t, VertexSet{1, 2, 3});
  EXPECT_EQ(tl.base, (Hyperedge{1, 3}));
  EXPECT_EQ(tl.apex, 2u);
  EXPECT_THROW(simplex_label(h, VertexSet{1, 2, 3}), ContractError);
}

TEST(SimplexLabel, MatchesLabelingRuleAndPrecedes) {
  for (int k = 2; k <= 4; ++k) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const auto inst = oracle::random_density_instance(k, 8, 0.65, 7 * seed + k);
      const Hypergraph h = oracle::to_hypergraph(inst);
      std::set<std::pair<oracle::Set, VertexId>> seen;
      for (const auto& x : oracle::simplices(inst)) {
        const VertexSet vx{std::span<const VertexId>(x)};
        const SimplexLabel l = simplex_label(h, vx);
        const auto [base, apex] = oracle::label(inst, x);
        EXPECT_EQ(ids(l.base), base);
        EXPECT_EQ(l.apex, apex);
        EXPECT_TRUE(oracle::precedes(inst, base, apex));
        EXPECT_TRUE(seen.insert({base, apex}).second);
      }
    }
  }
}

TEST(Neighborhood, Hypergraph) {
  const Hypergraph h = simplex3();
  const Hypergraph n1 = neighborhood_hypergraph(h, 1);
  EXPECT_EQ(n1.k(), 2);
  std::set<oracle::Set> got;
  for (const auto& e : n1.edges()) got.insert(ids(e));
  EXPECT_EQ(got, (std::set<oracle::Set>{{2, 3}, {2, 4}, {3, 4}}));
  const Hypergraph iso = make(3, 5, {{1, 2, 3}});
  EXPECT_EQ(neighborhood_hypergraph(iso, 5).m(), 0u);
  EXPECT_THROW(neighborhood_hypergraph(triangle(), 1), UnsupportedArityError);
  const auto inst = oracle::random_instance(3, 9, 40, 3);
  const Hypergraph g = oracle::to_hypergraph(inst);
  for (VertexId u = 1; u <= 9; ++u) EXPECT_EQ(neighborhood_hypergraph(g, u).m(), oracle::degree(inst, u));
}

TEST(Shadow, SpecExamples) {
  const ShadowHypergraph s = shadow_hypergraph(simplex3());
  ASSERT_EQ(s.edges.size(), 4u);
  std::set<std::pair<VertexId, oracle::Set>> got;
  for (const auto& e : s.edges) got.insert({e.flavor, ids(e.base)});
  EXPECT_EQ(got, (std::set<std::pair<VertexId, oracle::Set>>{{1, {2, 3}}, {1, {2, 4}}, {1, {3, 4}}, {2, {3, 4}}}));
  const ShadowHypergraph one = shadow_hypergraph(make(3, 9, {{5, 7, 9}}));
  ASSERT_EQ(one.edges.size(), 1u);
  EXPECT_EQ(one.edges[0].flavor, 5u);
  EXPECT_EQ(ids(one.edges[0].base), (oracle::Set{7, 9}));
  EXPECT_THROW(shadow_hypergraph(triangle()), UnsupportedArityError);
}

TEST(Shadow, InvariantsAndCorrespondence) {
  for (int k = 3; k <= 4; ++k) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const auto inst = oracle::random_density_instance(k, 8, 0.6, 11 * seed + k);
      const Hypergraph h = oracle::to_hypergraph(inst);
      const ShadowHypergraph s = shadow_hypergraph(h);
      ASSERT_EQ(s.edges.size(), h.m());
      for (std::size_t i = 0; i < s.edges.size(); ++i) {
        EXPECT_EQ(s.edges[i].flavor, s.origin[i].min());
        EXPECT_EQ(s.edges[i].base.with(s.edges[i].flavor), s.origin[i]);
      }
      EXPECT_EQ(count_shadow_simplices(h), oracle::shadow_simplex_count(inst));
      EXPECT_EQ(count_shadow_simplices(h), oracle::simplex_count(inst));
    }
  }
}

TEST(Hyperwedges, SpecExamples) {
  const auto w2 = hyperwedges_of(VertexSet{1, 2, 3});
  ASSERT_EQ(w2.size(), 3u);
  EXPECT_EQ(w2[0].apex, 1u);
  EXPECT_EQ(w2[0].base, (VertexSet{2, 3}));
  EXPECT_EQ(w2[2].base, (VertexSet{1, 2}));
  const auto w3 = hyperwedges_of(VertexSet{1, 2, 3, 4});
  const auto& apex4 = w3[3];
  EXPECT_EQ(apex4.apex, 4u);
  EXPECT_EQ(apex4.base, (VertexSet{1, 2, 3}));
  std::set<oracle::Set> edges;
  for (const auto& e : apex4.edges) edges.insert(ids(e));
  EXPECT_EQ(edges, (std::set<oracle::Set>{{1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  for (const auto& w : w3)
    for (const auto& e : w.edges) EXPECT_TRUE(e.contains(w.apex));
  EXPECT_THROW(hyperwedges_of(VertexSet{1, 2}), ContractError);
}

TEST(Arboricity, SpecExamples) {
  EXPECT_EQ(hyperarboricity_exact(complete(2, 4)), 2u);
  EXPECT_EQ(hyperarboricity_exact(simplex3()), 2u);
  EXPECT_EQ(hyperarboricity_exact(Hypergraph(3, 5, {})), 0u);
  EXPECT_THROW(hyperarboricity_exact(Hypergraph(3, 17, {})), ResourceError);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = oracle::random_density_instance(2 + seed % 3, 9, 0.4, seed);
    EXPECT_EQ(hyperarboricity_exact(oracle::to_hypergraph(inst)), oracle::arboricity(inst));
  }
}

TEST(SumMinDegrees, SpecExamples) {
  EXPECT_EQ(sum_min_degrees(triangle()), 6u);
  EXPECT_LE(sum_min_degrees(triangle()), 2u * 3u * hyperarboricity_exact(triangle()));
  EXPECT_EQ(sum_min_degrees(Hypergraph(3, 4, {})), 0u);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = oracle::random_instance(3, 10, 50, seed);
    EXPECT_EQ(sum_min_degrees(oracle::to_hypergraph(inst)), oracle::min_degree_sum(inst));
  }
}

TEST(SumPrefixCodegs, SpecExamples) {
  EXPECT_EQ(sum_prefix_codegs(simplex3()), 8u);
  EXPECT_EQ(sum_prefix_codegs(triangle()), 6u);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = oracle::random_instance(3, 10, 50, seed);
    std::uint64_t want = 0;
    for (const auto& e : inst.edges) {
      const auto c = oracle::chain(inst, e);
      oracle::Set s(c.begin(), c.end() - 1);
      std::sort(s.begin(), s.end());
      want += oracle::codeg(inst, s);
    }
    EXPECT_EQ(sum_prefix_codegs(oracle::to_hypergraph(inst)), want);
  }
}

TEST(Properties, CompleteGraphWitness) {
  for (int k = 2; k <= 4; ++k)
    for (VertexId n = static_cast<VertexId>(k); n <= 8; ++n) {
      const Hypergraph h = complete(k, n);
      EXPECT_EQ(h.m(), binomial(n, k));
      EXPECT_EQ(count_simplices_exact(h).t_k, binomial(n, k + 1));
    }
}

TEST(Properties, HandshakeAndLabelBound) {
  for (int k = 2; k <= 4; ++k) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto inst = oracle::random_density_instance(k, 9, 0.5, seed + 77);
      const Hypergraph h = oracle::to_hypergraph(inst);
      for (int r = 1; r < k; ++r) {
        std::uint64_t sum = 0;
        for (const auto& s : oracle::subsets(9, r)) sum += codeg(h, VertexSet(std::span<const VertexId>(s)));
        EXPECT_EQ(sum, binomial(k, r) * h.m());
      }
      const SimplexStats st = count_simplices_exact(h);
      const double bound = k * std::pow(static_cast<double>(h.m()), 1.0 / k);
      for (auto c : st.per_edge_nsimp) EXPECT_LE(static_cast<double>(c), bound);
    }
  }
}

TEST(Properties, ForestPacking) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = oracle::random_density_instance(3, 8, 0.5, seed + 5);
    const Hypergraph h = oracle::to_hypergraph(inst);
    const std::uint64_t rho = hyperarboricity_exact(h);
    for (std::uint64_t mask = 1; mask < (1u << 8); ++mask) {
      const auto size = static_cast<std::uint64_t>(__builtin_popcountll(mask));
      if (size >= 2) {
        EXPECT_LE(induced_edge_count(h, mask), rho * (size - 1));
      }
    }
  }
}
