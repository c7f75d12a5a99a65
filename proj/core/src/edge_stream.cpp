#include "hyperstream/edge_stream.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "hyperstream/rng.hpp"

namespace hyperstream {
namespace {

struct DataLine {
  std::size_t line_no;
  std::vector<std::uint64_t> values;
};

std::vector<std::uint64_t> tokenize(const std::string& raw, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  const auto hash = raw.find('#');
  const std::string_view line = std::string_view(raw).substr(0, hash);
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !(line[j] == ' ' || line[j] == '\t' || line[j] == '\r' || line[j] == ',')) ++j;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, v);
    if (ec != std::errc() || ptr != line.data() + j)
      throw ParseError(line_no, "not a non-negative integer: '" + std::string(line.substr(i, j - i)) + "'");
    out.push_back(v);
    i = j;
  }
  return out;
}

}  // namespace

EdgeList parse_edge_list(std::istream& in, DuplicatePolicy policy, std::optional<int> expected_k) {
  std::vector<DataLine> lines;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto values = tokenize(raw, line_no);
    if (!values.empty()) lines.push_back({line_no, std::move(values)});
  }

  EdgeList out;
  std::size_t first_edge = 0;
  std::optional<std::uint64_t> declared_m;
  if (!lines.empty() && lines[0].values.size() == 3) {
    const auto& hv = lines[0].values;
    bool widths_match = hv[0] >= 1;
    for (std::size_t i = 1; i < lines.size() && widths_match; ++i) widths_match = lines[i].values.size() == hv[0];
    // With 3-wide data lines a header is indistinguishable from an edge unless
    // the declared count also matches.
    const bool ambiguous = hv[0] == 3;
    if (widths_match && (!ambiguous || hv[2] == lines.size() - 1)) {
      out.had_header = true;
      out.k = static_cast<int>(hv[0]);
      if (hv[1] > 0xffffffffULL) throw FormatError(lines[0].line_no, "n too large");
      out.n = static_cast<VertexId>(hv[1]);
      declared_m = hv[2];
      first_edge = 1;
    }
  }
  if (!out.had_header) {
    if (lines.empty()) {
      if (!expected_k) throw ParseError(0, "empty edge list without header; arity unknown");
      out.k = *expected_k;
    } else {
      out.k = static_cast<int>(lines[0].values.size());
    }
  }
  if (expected_k && out.k != *expected_k)
    throw FormatError(out.had_header ? lines[0].line_no : (lines.empty() ? 0 : lines[0].line_no),
                      "arity " + std::to_string(out.k) + " does not match expected " + std::to_string(*expected_k));
  if (out.k < 2 || out.k > kMaxArity)
    throw FormatError(lines.empty() ? 0 : lines[0].line_no, "unsupported arity " + std::to_string(out.k));

  std::unordered_set<Hyperedge> seen;
  VertexId max_id = 0;
  for (std::size_t i = first_edge; i < lines.size(); ++i) {
    const auto& [ln, values] = lines[i];
    if (values.size() != static_cast<std::size_t>(out.k))
      throw FormatError(ln, "expected " + std::to_string(out.k) + " vertices, found " + std::to_string(values.size()));
    std::vector<VertexId> ids;
    for (auto v : values) {
      if (v == 0) throw ParseError(ln, "vertex IDs are 1-based");
      if (v > 0xffffffffULL) throw ParseError(ln, "vertex ID too large");
      if (out.had_header && v > out.n)
        throw FormatError(ln, "vertex " + std::to_string(v) + " exceeds n=" + std::to_string(out.n));
      ids.push_back(static_cast<VertexId>(v));
    }
    Hyperedge e;
    try {
      e = Hyperedge(std::span<const VertexId>(ids));
    } catch (const ContractError& err) {
      throw ParseError(ln, err.what());
    }
    if (!seen.insert(e).second) {
      if (policy == DuplicatePolicy::kReject) throw ParseError(ln, "duplicate edge");
      ++out.duplicates_dropped;
      continue;
    }
    max_id = std::max(max_id, e.max());
    out.edges.push_back(e);
  }
  if (declared_m && *declared_m != out.edges.size() + out.duplicates_dropped)
    throw FormatError(lines[0].line_no, "header declares m=" + std::to_string(*declared_m) + " but found " +
                                            std::to_string(out.edges.size() + out.duplicates_dropped) + " edges");
  if (!out.had_header) out.n = max_id;
  return out;
}

EdgeList read_edge_list(const std::filesystem::path& path, DuplicatePolicy policy, std::optional<int> expected_k) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_edge_list(in, policy, expected_k);
}

void write_edge_list(std::ostream& out, const Hypergraph& h) {
  out << h.k() << ' ' << h.n() << ' ' << h.m() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

void write_edge_list(const std::filesystem::path& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_edge_list(out, h);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

EdgeStream::EdgeStream(std::shared_ptr<const Hypergraph> graph, StreamSource source, std::string label)
    : edges_(std::move(graph)), source_(source), label_(std::move(label)) {
  if (!edges_) throw ContractError("stream over a null hypergraph");
}

EdgeStream open_stream(const Hypergraph& h) {
  return EdgeStream(std::make_shared<const Hypergraph>(h), StreamSource::kMemory, "memory");
}

EdgeStream open_stream(const std::filesystem::path& path, DuplicatePolicy policy) {
  EdgeList list = read_edge_list(path, policy);
  auto graph = std::make_shared<const Hypergraph>(list.k, list.n, std::move(list.edges));
  return EdgeStream(std::move(graph), StreamSource::kFile, path.string());
}

std::uint64_t pass_checksum(const EdgeStream& stream) {
  std::uint64_t acc = 0;
  auto cur = stream.cursor();
  while (const Hyperedge* e = cur.next()) acc = mix64(acc ^ e->hash());
  return acc;
}

void SpaceMeter::charge(std::uint64_t words) {
  current_ += words;
  if (current_ > peak_) peak_ = current_;
  if (keep_log_) log_.push_back(static_cast<std::int64_t>(words));
}

void SpaceMeter::release(std::uint64_t words) {
  if (words > current_) throw ContractError("space meter released more words than were charged");
  current_ -= words;
  if (keep_log_) log_.push_back(-static_cast<std::int64_t>(words));
}

void run_pass(const EdgeStream& stream, const PassFn& pass, SpaceMeter& meter, std::size_t pass_index) {
  meter.begin_pass();
  auto cur = stream.cursor();
  try {
    while (const Hyperedge* e = cur.next()) pass(*e);
  } catch (const std::exception& err) {
    throw PassError(pass_index, err.what());
  }
}

void run_passes(const EdgeStream& stream, std::span<const PassFn> passes, SpaceMeter& meter) {
  for (std::size_t i = 0; i < passes.size(); ++i) run_pass(stream, passes[i], meter, i);
}

}  // namespace hyperstream
