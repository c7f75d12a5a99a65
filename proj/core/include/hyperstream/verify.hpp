#pragma once

#include <string>
#include <vector>

#include "hyperstream/hypergraph.hpp"

namespace hyperstream {

struct CheckResult {
  std::string name;
  bool passed = true;
  bool informational = false;  // trend quantities with no pass/fail meaning
  std::string detail;          // measured values, or the first witness on failure
};

struct VerifyOptions {
  // Exact hyperarboricity is exponential in n; larger instances are a ResourceError.
  VertexId arboricity_cap = 16;
};

// Runs the exact structural checks on h: per-edge label sum, handshake,
// neighborhood sandwich, per-edge label bound, min-degree sum bound, forest
// packing, shadow correspondence (k >= 3), hyperwedge census and label
// consistency. Throws ResourceError when n exceeds the arboricity cap.
std::vector<CheckResult> verify_hypergraph(const Hypergraph& h, const VerifyOptions& opts = {});

}  // namespace hyperstream
