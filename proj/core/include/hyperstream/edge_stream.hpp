#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperstream/hypergraph.hpp"

namespace hyperstream {

// ---------------------------------------------------------------------------
// Edge-list text format
//
//   # comment            ('#' starts a comment anywhere on a line)
//   k n m                optional header
//   v1 v2 ... vk         one edge per line, positive IDs
//
// A leading 3-integer line is read as a header when its first value equals
// the width of every following data line. With a header, vertex IDs must be
// <= n and the edge count must equal m. Without one, k is the width of the
// first line and n the largest ID seen.
// ---------------------------------------------------------------------------

struct EdgeList {
  int k = 0;
  VertexId n = 0;
  bool had_header = false;
  std::vector<Hyperedge> edges;
  std::size_t duplicates_dropped = 0;
};

// Throws ParseError (with a 1-based line number) on malformed tokens or
// repeated vertices inside an edge, FormatError on arity/range/count
// mismatches. Duplicate edges are an error under kReject and dropped under
// kDedup.
EdgeList parse_edge_list(std::istream& in, DuplicatePolicy policy = DuplicatePolicy::kReject,
                         std::optional<int> expected_k = std::nullopt);
EdgeList read_edge_list(const std::filesystem::path& path, DuplicatePolicy policy = DuplicatePolicy::kReject,
                        std::optional<int> expected_k = std::nullopt);

// Canonical form: header line, then each edge with ascending IDs, in edge order.
void write_edge_list(std::ostream& out, const Hypergraph& h);
void write_edge_list(const std::filesystem::path& path, const Hypergraph& h);

// ---------------------------------------------------------------------------
// Streams
// ---------------------------------------------------------------------------

enum class StreamSource { kFile, kMemory, kGenerator };

// Rewindable insert-only hyperedge stream. Every pass yields the same edges in
// the same order. Copies share the underlying edge sequence; each Cursor is an
// independent single-owner read position.
class EdgeStream {
 public:
  class Cursor {
   public:
    explicit Cursor(const EdgeStream& s) : edges_(s.edges_->edges()) {}
    // Next edge of the current pass, or nullptr at its end.
    const Hyperedge* next() noexcept { return pos_ < edges_.size() ? &edges_[pos_++] : nullptr; }
    void rewind() noexcept { pos_ = 0; }
    std::size_t position() const noexcept { return pos_; }

   private:
    std::span<const Hyperedge> edges_;
    std::size_t pos_ = 0;
  };

  EdgeStream(std::shared_ptr<const Hypergraph> graph, StreamSource source, std::string label = {});

  int k() const noexcept { return edges_->k(); }
  VertexId n() const noexcept { return edges_->n(); }
  std::size_t m() const noexcept { return edges_->m(); }
  StreamSource source() const noexcept { return source_; }
  const std::string& label() const noexcept { return label_; }

  Cursor cursor() const { return Cursor(*this); }

  // Engine-side access to the materialized instance. Estimators must not
  // use this; they only read passes.
  const Hypergraph& materialized() const noexcept { return *edges_; }

 private:
  std::shared_ptr<const Hypergraph> edges_;
  StreamSource source_;
  std::string label_;
};

EdgeStream open_stream(const Hypergraph& h);
EdgeStream open_stream(const std::filesystem::path& path, DuplicatePolicy policy = DuplicatePolicy::kReject);

// Order-sensitive checksum of one full pass.
std::uint64_t pass_checksum(const EdgeStream& stream);

// ---------------------------------------------------------------------------
// Space accounting
// ---------------------------------------------------------------------------

// Machine words held as streaming state. A stored hyperedge costs k words, a
// stored vertex or counter one word. Only charged state counts; the engine's
// own copy of the input does not.
class SpaceMeter {
 public:
  explicit SpaceMeter(bool keep_log = false) : keep_log_(keep_log) {}

  void charge(std::uint64_t words);
  // Throws ContractError if words exceeds the current balance.
  void release(std::uint64_t words);
  void begin_pass() noexcept { ++passes_; }

  std::uint64_t words_current() const noexcept { return current_; }
  std::uint64_t words_peak() const noexcept { return peak_; }
  std::uint64_t passes_used() const noexcept { return passes_; }
  // Signed charge/release events, when logging was requested.
  const std::vector<std::int64_t>& events() const noexcept { return log_; }

 private:
  bool keep_log_;
  std::uint64_t current_ = 0;
  std::uint64_t peak_ = 0;
  std::uint64_t passes_ = 0;
  std::vector<std::int64_t> log_;
};

using PassFn = std::function<void(const Hyperedge&)>;

// Runs one full pass per callback, in order, counting each on the meter. An
// exception from a callback is rethrown as PassError naming the pass.
void run_passes(const EdgeStream& stream, std::span<const PassFn> passes, SpaceMeter& meter);
void run_pass(const EdgeStream& stream, const PassFn& pass, SpaceMeter& meter, std::size_t pass_index = 0);

}  // namespace hyperstream
