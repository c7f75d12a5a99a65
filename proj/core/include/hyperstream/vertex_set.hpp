#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>

#include "hyperstream/errors.hpp"

namespace hyperstream {

// Vertex IDs are 1-based and totally ordered; every tie-break in the library
// resolves toward the smaller ID.
using VertexId = std::uint32_t;

// Largest supported vertex-set size. Simplices need k + 1 slots, so k <= 7.
inline constexpr std::size_t kMaxSetSize = 8;
inline constexpr int kMaxArity = static_cast<int>(kMaxSetSize) - 1;

// Small sorted set of distinct vertex IDs stored inline. Used both for
// hyperedges and for the proper subsets of hyperedges that codegrees,
// relative degrees and sample indices are keyed on.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids) : VertexSet(std::span<const VertexId>(ids.begin(), ids.size())) {}

  // Sorts the input; throws ContractError on repeated vertices, ID 0, or
  // more than kMaxSetSize entries.
  explicit VertexSet(std::span<const VertexId> ids) {
    if (ids.size() > kMaxSetSize) throw ContractError("vertex set larger than supported maximum");
    size_ = static_cast<std::uint8_t>(ids.size());
    std::copy(ids.begin(), ids.end(), v_.begin());
    std::sort(v_.begin(), v_.begin() + size_);
    for (std::size_t i = 0; i < size_; ++i) {
      if (v_[i] == 0) throw ContractError("vertex IDs are 1-based");
      if (i > 0 && v_[i] == v_[i - 1]) throw ContractError("repeated vertex " + std::to_string(v_[i]));
    }
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  VertexId operator[](std::size_t i) const noexcept { return v_[i]; }
  const VertexId* begin() const noexcept { return v_.data(); }
  const VertexId* end() const noexcept { return v_.data() + size_; }
  std::span<const VertexId> ids() const noexcept { return {v_.data(), size_}; }
  VertexId min() const noexcept { return v_[0]; }
  VertexId max() const noexcept { return v_[size_ - 1]; }

  bool contains(VertexId x) const noexcept { return std::binary_search(begin(), end(), x); }

  std::size_t index_of(VertexId x) const noexcept {
    return static_cast<std::size_t>(std::lower_bound(begin(), end(), x) - begin());
  }

  bool is_subset_of(const VertexSet& other) const noexcept {
    return std::includes(other.begin(), other.end(), begin(), end());
  }

  // Copy with x inserted; x must not already be present.
  VertexSet with(VertexId x) const {
    if (size_ == kMaxSetSize) throw ContractError("vertex set larger than supported maximum");
    if (x == 0 || contains(x)) throw ContractError("cannot insert vertex " + std::to_string(x));
    VertexSet out;
    std::size_t j = 0;
    bool placed = false;
    for (std::size_t i = 0; i < size_; ++i) {
      if (!placed && x < v_[i]) {
        out.v_[j++] = x;
        placed = true;
      }
      out.v_[j++] = v_[i];
    }
    if (!placed) out.v_[j++] = x;
    out.size_ = static_cast<std::uint8_t>(j);
    return out;
  }

  // Copy with x removed (no-op if absent).
  VertexSet without(VertexId x) const noexcept {
    VertexSet out;
    std::size_t j = 0;
    for (std::size_t i = 0; i < size_; ++i)
      if (v_[i] != x) out.v_[j++] = v_[i];
    out.size_ = static_cast<std::uint8_t>(j);
    return out;
  }

  VertexSet without_index(std::size_t idx) const noexcept {
    VertexSet out;
    std::size_t j = 0;
    for (std::size_t i = 0; i < size_; ++i)
      if (i != idx) out.v_[j++] = v_[i];
    out.size_ = static_cast<std::uint8_t>(j);
    return out;
  }

  // Sub-set selected by the bits of mask (bit i keeps the i-th smallest vertex).
  VertexSet select(std::uint32_t mask) const noexcept {
    VertexSet out;
    std::size_t j = 0;
    for (std::size_t i = 0; i < size_; ++i)
      if (mask & (1u << i)) out.v_[j++] = v_[i];
    out.size_ = static_cast<std::uint8_t>(j);
    return out;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
  }

  // Lexicographic on the sorted ID sequence.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) noexcept {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

  std::uint64_t hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
    for (std::size_t i = 0; i < size_; ++i) {
      h ^= v_[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return h ^ (h >> 33);
  }

 private:
  std::array<VertexId, kMaxSetSize> v_{};
  std::uint8_t size_ = 0;
};

// Hyperedges are vertex sets of size k; the owning Hypergraph enforces k.
using Hyperedge = VertexSet;

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return static_cast<std::size_t>(s.hash()); }
};

inline std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  return os << '}';
}

}  // namespace hyperstream

template <>
struct std::hash<hyperstream::VertexSet> {
  std::size_t operator()(const hyperstream::VertexSet& s) const noexcept { return static_cast<std::size_t>(s.hash()); }
};
