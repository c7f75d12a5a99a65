#include <gtest/gtest.h>

#include <sstream>

#include "hyperstream/edge_stream.hpp"
#include "hyperstream/generators.hpp"
#include "hyperstream/simplex_count.hpp"
#include "oracles.hpp"

using namespace hyperstream;

namespace {

std::uint64_t oracle_t(const Hypergraph& h) { return oracle::simplex_count(oracle::from_hypergraph(h)); }

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<bool> bits_of(std::uint64_t mask, std::size_t size) {
  std::vector<bool> v(size);
  for (std::size_t i = 0; i < size; ++i) v[i] = (mask >> i) & 1;
  return v;
}

Hypergraph from_gadget(const Gadget& g) { return Hypergraph(g.k, g.n, g.edges); }

std::string serialize(const Hypergraph& h) {
  std::ostringstream out;
  write_edge_list(out, h);
  return out.str();
}

}  // namespace

TEST(Complete, SpecExamples) {
  EXPECT_EQ(gen_complete(3, 4).m(), 4u);
  EXPECT_EQ(count_simplices_exact(gen_complete(3, 4)).t_k, 1u);
  EXPECT_EQ(gen_complete(2, 4).m(), 6u);
  EXPECT_EQ(count_simplices_exact(gen_complete(2, 4)).t_k, 4u);
  EXPECT_EQ(gen_complete(3, 8).m(), 56u);
  EXPECT_EQ(count_simplices_exact(gen_complete(3, 8)).t_k, 70u);
  EXPECT_THROW(gen_complete(4, 3), ContractError);
}

TEST(Random, SpecExamples) {
  const Hypergraph all = gen_random(3, 7, 35, 4);
  EXPECT_EQ(serialize(all), serialize(gen_complete(3, 7)));
  EXPECT_EQ(gen_random(3, 7, 0, 4).m(), 0u);
  EXPECT_EQ(serialize(gen_random(3, 20, 300, 8)), serialize(gen_random(3, 20, 300, 8)));
  EXPECT_NE(serialize(gen_random(3, 20, 300, 8)), serialize(gen_random(3, 20, 300, 9)));
  EXPECT_THROW(gen_random(3, 7, 36, 4), ContractError);
  const Hypergraph sparse = gen_random(4, 200, 1000, 2);
  EXPECT_EQ(sparse.m(), 1000u);
}

TEST(Planted, SpecExamples) {
  EXPECT_EQ(gen_planted(3, 40, 0, 0, 3).m(), 0u);
  const Hypergraph h = gen_planted(3, 40, 100, 5, 3);
  EXPECT_EQ(h.m(), 100u);
  EXPECT_GE(oracle_t(h), 5u);
  EXPECT_EQ(serialize(h), serialize(gen_planted(3, 40, 100, 5, 3)));
  EXPECT_THROW(gen_planted(3, 10, 20, 5, 3), ContractError);
  EXPECT_THROW(gen_planted(3, 40, 10, 5, 3), ContractError);
}

TEST(Planted, FillerClosesNoSimplex) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Hypergraph h = gen_planted(3, 30, 150, 4, seed);
    EXPECT_EQ(count_simplices_exact(h).t_k, 4u) << "seed " << seed;
  }
}

TEST(LbNk, SpecExamples) {
  for (int k = 2; k <= 3; ++k) {
    const VertexId n = 3;
    const std::size_t d = lb_nk_domain(k, n);
    const std::vector<bool> zero(d, false);
    EXPECT_EQ(oracle_t(from_gadget(lb_nk_gadget(k, n, zero, zero))), 0u);
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<bool> one(d, false);
      one[i] = true;
      EXPECT_GE(oracle_t(from_gadget(lb_nk_gadget(k, n, one, one))), 1u);
    }
  }
}

TEST(LbNk, IntersectionIffSimplex) {
  for (int k = 2; k <= 3; ++k) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const VertexId n = 3;
      const std::size_t d = lb_nk_domain(k, n);
      const auto x = random_bits(d, seed * 2 + 1, 0.3);
      const auto y = random_bits(d, seed * 2 + 2, 0.3);
      bool meet = false;
      for (std::size_t i = 0; i < d; ++i) meet = meet || (x[i] && y[i]);
      const Gadget g = lb_nk_gadget(k, n, x, y);
      EXPECT_EQ(oracle_t(from_gadget(g)) > 0, meet) << "k=" << k << " seed=" << seed;
    }
  }
  const Hypergraph h = gen_lb_nk(3, 4, 1, 2);
  EXPECT_EQ(h.n(), 12u);
}

TEST(LbIndex, ExhaustiveSmall) {
  for (int k = 2; k <= 3; ++k) {
    const VertexId n = 2;
    const std::size_t d = ipow(n, k);
    for (std::uint64_t mask = 0; mask < (1ULL << d); ++mask) {
      const auto x = bits_of(mask, d);
      for (std::size_t pos = 0; pos < d; ++pos) {
        std::vector<VertexId> y(k);
        std::size_t rest = pos;
        for (int j = k - 1; j >= 0; --j) {
          y[j] = static_cast<VertexId>(rest % n + 1);
          rest /= n;
        }
        const Gadget g = lb_index_gadget(k, n, x, y);
        EXPECT_EQ(oracle_t(from_gadget(g)), x[pos] ? d : 0u);
      }
    }
  }
  EXPECT_THROW(gen_lb_index(2, 2, 1, {3, 1}), ContractError);
}

TEST(LbDisj, ExhaustiveSmall) {
  for (int k = 2; k <= 3; ++k) {
    for (VertexId n = 2; n <= 3; ++n) {
      for (std::uint64_t xm = 0; xm < (1ULL << n); ++xm)
        for (std::uint64_t ym = 0; ym < (1ULL << n); ++ym) {
          const Gadget g = lb_disj_gadget(k, n, bits_of(xm, n), bits_of(ym, n));
          const auto common = static_cast<std::uint64_t>(__builtin_popcountll(xm & ym));
          EXPECT_EQ(oracle_t(from_gadget(g)), ipow(n, k) * common) << "k=" << k << " n=" << n;
        }
    }
  }
}

TEST(LbDisj, SharedVertexDegree) {
  const Gadget g = lb_disj_gadget(3, 2, {true, false}, {true, false});
  const SimplexStats st = count_simplices_exact(from_gadget(g));
  EXPECT_EQ(st.t_k, 8u);
  EXPECT_EQ(st.delta_v, 8u);
}

TEST(Generate, ArrivalOrderAndDeterminism) {
  GeneratorSpec spec;
  spec.family = Family::kLbDisj;
  spec.k = 3;
  spec.n = 3;
  spec.x_seed = 5;
  spec.y_seed = 6;
  const Hypergraph a = generate(spec);
  EXPECT_EQ(serialize(a), serialize(generate(spec)));
  const Gadget g = lb_disj_gadget(3, 3, random_bits(3, 5), random_bits(3, 6));
  ASSERT_EQ(a.m(), g.edges.size());
  // The Alice segment stays first under shuffling.
  std::vector<Hyperedge> alice(g.edges.begin(), g.edges.begin() + static_cast<std::ptrdiff_t>(g.alice_edges));
  std::vector<Hyperedge> head(a.edges().begin(), a.edges().begin() + static_cast<std::ptrdiff_t>(g.alice_edges));
  std::sort(alice.begin(), alice.end());
  std::sort(head.begin(), head.end());
  EXPECT_EQ(alice, head);

  spec.order = ArrivalOrder::kSorted;
  const Hypergraph s = generate(spec);
  EXPECT_TRUE(std::is_sorted(s.edges().begin(), s.edges().begin() + static_cast<std::ptrdiff_t>(g.alice_edges)));
  EXPECT_EQ(parse_family("lb_disj"), Family::kLbDisj);
  EXPECT_EQ(family_name(Family::kLbIndex), "lb-index");
  EXPECT_THROW(parse_family("grid"), ConfigError);
}
