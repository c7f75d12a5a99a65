#include "hyperstream/verify.hpp"

#include <bit>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "hyperstream/combinatorics.hpp"
#include "hyperstream/errors.hpp"
#include "hyperstream/simplex_count.hpp"

namespace hyperstream {
namespace {

std::string str(const VertexSet& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

CheckResult equality(std::string name, std::uint64_t lhs, std::uint64_t rhs) {
  CheckResult c{std::move(name), lhs == rhs, false, std::to_string(lhs) + " vs " + std::to_string(rhs)};
  return c;
}

// Every vertex set strictly inside some edge, grouped by size (index 0 is the empty set).
std::vector<std::set<VertexSet>> edge_subsets(const Hypergraph& h) {
  std::vector<std::set<VertexSet>> out(h.k());
  for (const auto& e : h.edges()) for_each_proper_subset(e, [&](const VertexSet& s) { out[s.size()].insert(s); });
  return out;
}

}  // namespace

std::vector<CheckResult> verify_hypergraph(const Hypergraph& h, const VerifyOptions& opts) {
  if (h.n() > opts.arboricity_cap)
    throw ResourceError("verify needs n <= " + std::to_string(opts.arboricity_cap) + " (got n = " +
                        std::to_string(h.n()) + ")");
  const int k = h.k();
  const std::uint64_t m = h.m();
  const SimplexStats stats = count_simplices_exact(h);
  std::vector<CheckResult> out;

  std::uint64_t label_sum = 0;
  for (auto c : stats.per_edge_nsimp) label_sum += c;
  out.push_back(equality("label-sum", label_sum, stats.t_k));

  const auto subsets = edge_subsets(h);
  {
    CheckResult c{"handshake", true, false, ""};
    for (int r = 1; r < k; ++r) {
      std::uint64_t sum = 0;
      for (const auto& s : subsets[r]) sum += h.codegree(s);
      const std::uint64_t want = binomial(k, r) * m;
      if (sum != want) {
        c.passed = false;
        c.detail = "r=" + std::to_string(r) + ": " + std::to_string(sum) + " vs " + std::to_string(want);
        break;
      }
    }
    if (c.passed) c.detail = "all r in [1, k-1]";
    out.push_back(c);
  }
  {
    // Upper bound always; lower bound as equality at |S| = k-1 and, below
    // that, C(|Nhd|, k-|S|) >= codeg since each extending edge picks k-|S|
    // neighbors. codeg <= |Nhd| itself fails for |S| <= k-2 and is only counted.
    CheckResult c{"neighborhood-sandwich", true, false, "all nonempty S inside an edge"};
    std::uint64_t literal_violations = 0;
    std::string literal_witness;
    for (int r = 1; r < k; ++r) {
      for (const auto& s : subsets[r]) {
        const std::uint64_t cd = h.codegree(s);
        const std::uint64_t nb = neighborhood(h, s).size();
        const bool ok = nb <= static_cast<std::uint64_t>(k - r) * cd && (r != k - 1 || nb == cd) &&
                        binomial(nb, k - r) >= cd;
        if (!ok && c.passed) {
          c.passed = false;
          c.detail = "S=" + str(s) + " codeg=" + std::to_string(cd) + " |Nhd|=" + std::to_string(nb);
        }
        if (cd > nb && literal_violations++ == 0)
          literal_witness = " (first: S=" + str(s) + " codeg=" + std::to_string(cd) + " |Nhd|=" + std::to_string(nb) + ")";
      }
    }
    out.push_back(c);
    out.push_back({"codegree-below-neighborhood", true, true,
                   std::to_string(literal_violations) + " sets with codeg > |Nhd|" + literal_witness});
  }
  {
    const double bound = k * std::pow(static_cast<double>(m), 1.0 / k);
    CheckResult c{"label-bound", true, false, "max nsimp_e <= " + std::to_string(bound)};
    for (std::size_t i = 0; i < stats.per_edge_nsimp.size(); ++i)
      if (static_cast<double>(stats.per_edge_nsimp[i]) > bound) {
        c.passed = false;
        c.detail = "e=" + str(h.edge(i)) + " nsimp=" + std::to_string(stats.per_edge_nsimp[i]);
        break;
      }
    out.push_back(c);
  }
  {
    const std::uint64_t prefix = sum_prefix_codegs(h);
    const double scale = std::pow(static_cast<double>(std::max<std::uint64_t>(m, 1)), 1.0 + 1.0 / k);
    out.push_back({"prefix-codegree-sum", true, true,
                   std::to_string(prefix) + " = " + std::to_string(prefix / scale) + " * m^(1+1/k)"});
  }
  const std::uint64_t rho = hyperarboricity_exact(h, opts.arboricity_cap);
  {
    const std::uint64_t smd = sum_min_degrees(h);
    CheckResult c{"min-degree-sum", smd <= k * m * rho, false,
                  std::to_string(smd) + " <= " + std::to_string(k * m * rho) + " (rho=" + std::to_string(rho) + ")"};
    out.push_back(c);
  }
  {
    CheckResult c{"forest-packing", true, false, "|E(X)| <= rho (|X| - 1) for all X"};
    const std::uint64_t full = h.n() >= 64 ? ~0ULL : (1ULL << h.n());
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      const auto size = static_cast<std::uint64_t>(std::popcount(mask));
      if (size < 2) continue;
      const std::uint64_t edges = induced_edge_count(h, mask);
      if (edges > rho * (size - 1)) {
        c.passed = false;
        c.detail = "vertex mask " + std::to_string(mask) + " induces " + std::to_string(edges) + " edges";
        break;
      }
    }
    out.push_back(c);
  }
  if (k >= 3) out.push_back(equality("shadow-correspondence", count_shadow_simplices(h), stats.t_k));
  {
    std::uint64_t wedges = 0;
    for (const auto& x : stats.simplices) wedges += hyperwedges_of(x).size();
    out.push_back(equality("hyperwedge-census", wedges, (k + 1) * stats.t_k));
  }
  {
    CheckResult c{"label-consistency", true, false, "every simplex"};
    std::set<std::pair<Hyperedge, VertexId>> seen;
    for (const auto& x : stats.simplices) {
      const SimplexLabel l = simplex_label(h, x);
      const bool ok = !l.base.contains(l.apex) && l.base.with(l.apex) == x && h.has_edge(l.base) &&
                      precedes(h, l.base, l.apex) && seen.emplace(l.base, l.apex).second;
      if (!ok) {
        c.passed = false;
        c.detail = "simplex " + str(x) + " labeled (" + str(l.base) + ", " + std::to_string(l.apex) + ")";
        break;
      }
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace hyperstream
