#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hyperstream/edge_stream.hpp"
#include "hyperstream/hypergraph.hpp"

namespace hyperstream {

enum class Family { kComplete, kRandom, kPlanted, kLbNk, kLbIndex, kLbDisj };
enum class ArrivalOrder { kSorted, kShuffled };

std::string_view family_name(Family f);
// Accepts complete, random, planted, lb-nk, lb-index, lb-disj (underscores also).
Family parse_family(std::string_view name);

struct GeneratorSpec {
  Family family = Family::kComplete;
  int k = 3;
  VertexId n = 0;
  std::uint64_t m = 0;         // random, planted
  std::uint64_t t_target = 0;  // planted
  std::uint64_t seed = 1;      // random, planted, and the arrival shuffle
  std::uint64_t x_seed = 1;    // gadgets
  std::uint64_t y_seed = 2;    // lb-nk, lb-disj
  std::vector<VertexId> y_index;  // lb-index: coordinates (t_1..t_k), each in [1, n]
  double density = 0.5;           // gadgets: probability of a one in x and y
  ArrivalOrder order = ArrivalOrder::kShuffled;
};

// Every generator is a pure function of its arguments. Edges come out in
// canonical sorted order; generate() applies the spec's arrival order.

// All C(n, k) edges. Throws ContractError when n < k.
Hypergraph gen_complete(int k, VertexId n);
// m distinct edges uniform without replacement. Throws ContractError when m > C(n, k).
Hypergraph gen_random(int k, VertexId n, std::uint64_t m, std::uint64_t seed);
// t_target simplices on disjoint (k+1)-vertex groups plus random filler
// edges that never close a further simplex, m edges in total.
Hypergraph gen_planted(int k, VertexId n, std::uint64_t m, std::uint64_t t_target, std::uint64_t seed);

// Seeded 0/1 vector with P[1] = density.
std::vector<bool> random_bits(std::size_t size, std::uint64_t seed, double density = 0.5);

// Lower-bound gadgets. Each returns the Alice segment followed by the Bob
// segment; `alice_edges` marks the boundary.
struct Gadget {
  int k = 0;
  VertexId n = 0;  // total vertex count
  std::vector<Hyperedge> edges;
  std::size_t alice_edges = 0;
};

// Groups A = 1..n, B = n+1..2n, C = 2n+1..3n. x and y are indexed by
// (i, C'') with i in [n] and C'' a (k-1)-subset of [n] in lexicographic order,
// entry i * C(n, k-1) + rank(C''). T_k = |x and y|.
std::size_t lb_nk_domain(int k, VertexId n);
Gadget lb_nk_gadget(int k, VertexId n, const std::vector<bool>& x, const std::vector<bool>& y);
// Matrix vertices v_{i,j} = (i-1)n + j, then n^k apex vertices. x is indexed
// by coordinates (i_1..i_k) in row-major order. T_k = n^k x[y].
Gadget lb_index_gadget(int k, VertexId n, const std::vector<bool>& x, const std::vector<VertexId>& y_index);
// Groups A_j = (j-1)n+1..jn for j in [k], D = kn+1..(k+1)n. T_k = n^k |x and y|.
Gadget lb_disj_gadget(int k, VertexId n, const std::vector<bool>& x, const std::vector<bool>& y);

Hypergraph gen_lb_nk(int k, VertexId n, std::uint64_t x_seed, std::uint64_t y_seed, double density = 0.5);
Hypergraph gen_lb_index(int k, VertexId n, std::uint64_t x_seed, const std::vector<VertexId>& y_index,
                        double density = 0.5);
Hypergraph gen_lb_disj(int k, VertexId n, std::uint64_t x_seed, std::uint64_t y_seed, double density = 0.5);

// Builds the instance in its arrival order: shuffled by seed or sorted; the
// gadgets' Alice segment always precedes the Bob segment.
Hypergraph generate(const GeneratorSpec& spec);
EdgeStream open_stream(const GeneratorSpec& spec);

}  // namespace hyperstream
