#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "hyperstream/edge_stream.hpp"
#include "hyperstream/errors.hpp"
#include "hyperstream/estimators.hpp"
#include "hyperstream/generators.hpp"
#include "hyperstream/records.hpp"
#include "hyperstream/simplex_count.hpp"
#include "hyperstream/verify.hpp"

namespace hyperstream::cli {
namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
  }
  return out;
}

ArrivalOrder parse_order(const std::string& s) {
  if (s == "sorted") return ArrivalOrder::kSorted;
  if (s == "shuffled") return ArrivalOrder::kShuffled;
  throw ConfigError("unknown arrival order '" + s + "' (expected sorted or shuffled)");
}

F0Mode parse_f0_mode(const std::string& s) {
  if (s == "exact") return F0Mode::kExact;
  if (s == "kmv") return F0Mode::kProbabilistic;
  throw ConfigError("unknown F0 mode '" + s + "' (expected exact or kmv)");
}

// ---------------------------------------------------------------------------
// Option bundles
// ---------------------------------------------------------------------------

struct GenerateOpts {
  std::string family;
  int k = 0;
  VertexId n = 0;
  std::uint64_t m = 0;
  std::uint64_t t = 0;
  std::uint64_t seed = 0;
  std::uint64_t x_seed = 1;
  std::uint64_t y_seed = 2;
  std::vector<VertexId> y_index;
  double density = 0.5;
  std::string order = "shuffled";
  std::string out;

  GeneratorSpec spec() const {
    GeneratorSpec s;
    s.family = parse_family(family);
    s.k = k;
    s.n = n;
    s.m = m;
    s.t_target = t;
    s.seed = seed;
    s.x_seed = x_seed;
    s.y_seed = y_seed;
    s.y_index = y_index;
    s.density = density;
    s.order = parse_order(order);
    if (s.family == Family::kLbIndex && s.y_index.empty()) s.y_index.assign(static_cast<std::size_t>(k), 1);
    return s;
  }
};

struct EstimateOpts {
  std::string in;
  std::string algo;
  std::optional<int> k;
  double T = 0.0;
  double eps = 0.1;
  double delta = 0.1;
  std::uint64_t seed = 0;
  std::optional<double> delta_e, delta_v, xi, p, q, r_bound;
  double variance_const = 8.0;
  double abort_factor = 16.0;
  std::string f0_mode = "exact";
  double f0_eps = 0.1;
  std::uint64_t max_trials = 4'000'000;
  unsigned threads = 1;
  bool dedup = false;
  bool exact = false;
  bool details = false;

  EstimatorConfig config(int k_value) const {
    EstimatorConfig c;
    c.k = k_value;
    c.T = T;
    c.epsilon = eps;
    c.delta = delta;
    c.master_seed = seed;
    c.delta_e = delta_e;
    c.delta_v = delta_v;
    c.xi = xi;
    c.p_override = p;
    c.q_override = q;
    c.expected_r_bound = r_bound;
    c.variance_const = variance_const;
    c.abort_factor = abort_factor;
    c.f0_mode = parse_f0_mode(f0_mode);
    c.f0_epsilon = f0_eps;
    c.max_trials = max_trials;
    c.threads = threads;
    return c;
  }
};

struct VerifyOpts {
  std::string in;
  std::string suite;
  int k = 3;
  std::uint64_t count = 500;
  VertexId n_max = 12;
  std::uint64_t seed = 0;
};

struct BenchOpts {
  std::string sweep;
  std::string algos;
  std::uint64_t runs = 1;
  std::string out;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool exact = false;
  unsigned threads = 1;
  double variance_const = 8.0;
  std::uint64_t max_trials = 4'000'000;
};

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

int cmd_generate(const GenerateOpts& o, std::ostream& out) {
  const GeneratorSpec spec = o.spec();
  const Hypergraph h = generate(spec);
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw std::ios_base::failure("cannot open '" + o.out + "' for writing");
  write_edge_list(file, h);
  file.flush();
  if (!file) throw std::ios_base::failure("write to '" + o.out + "' failed");
  out << json{{"out", o.out}, {"family", family_name(spec.family)}, {"k", h.k()}, {"n", h.n()}, {"m", h.m()}}.dump()
      << '\n';
  return kOk;
}

Hypergraph load(const std::string& path, bool dedup, std::optional<int> k = std::nullopt) {
  EdgeList list = read_edge_list(path, dedup ? DuplicatePolicy::kDedup : DuplicatePolicy::kReject, k);
  return Hypergraph(list.k, list.n, std::move(list.edges));
}

json exact_json(const Hypergraph& h, const SimplexStats& s) {
  return json{{"k", h.k()},       {"n", h.n()},           {"m", h.m()},
              {"T_k", s.t_k},     {"delta_E", s.delta_e}, {"delta_V", s.delta_v}};
}

int cmd_exact(const std::string& in, bool dedup, std::ostream& out) {
  const Hypergraph h = load(in, dedup);
  out << exact_json(h, count_simplices_exact(h)).dump() << '\n';
  return kOk;
}

int cmd_estimate(const EstimateOpts& o, std::ostream& out, std::ostream& err) {
  // Validate everything that does not need the instance before touching the file.
  const Algorithm algo = parse_algorithm(o.algo);
  o.config(o.k.value_or(3)).validate();
  if (algo == Algorithm::kOnePass && (!o.delta_e || !o.delta_v))
    throw ConfigError("onepass needs --delta-e and --delta-v");

  auto graph = std::make_shared<const Hypergraph>(load(o.in, o.dedup, o.k));
  const EdgeStream stream(graph, StreamSource::kFile, o.in);
  const EstimatorConfig cfg = o.config(stream.k());
  const Estimate est = estimate(algo, stream, cfg);
  RunRecord rec = make_record(est, cfg, o.in, stream.n(), stream.m());
  if (o.exact) rec.exact_T = count_simplices_exact(*graph).t_k;
  out << to_json_line(rec) << '\n';
  for (const auto& w : est.warnings) err << "warning: " << w << '\n';
  if (o.details) {
    err << json{{"batch_size", est.batch_size},     {"num_batches", est.num_batches},
                {"aborted_batches", est.aborted_batches}, {"mean_r", est.mean_r},
                {"max_r", est.max_r},               {"mean_q_size", est.mean_q_size},
                {"mean_s_size", est.mean_s_size},   {"detections", est.detections},
                {"p", est.p},                       {"q", est.q},
                {"theta", est.theta}}
               .dump()
        << '\n';
  }
  return kOk;
}

// Prints the checks of one instance; returns the number of failures.
std::size_t report_checks(const std::vector<CheckResult>& checks, std::ostream& out) {
  std::size_t failures = 0;
  for (const auto& c : checks) {
    const char* tag = c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL");
    out << tag << ' ' << c.name << ": " << c.detail << '\n';
    if (!c.passed) ++failures;
  }
  return failures;
}

Hypergraph single_simplex(int k) {
  std::vector<Hyperedge> edges;
  std::vector<VertexId> all;
  for (int v = 1; v <= k + 1; ++v) all.push_back(static_cast<VertexId>(v));
  const VertexSet x{std::span<const VertexId>(all)};
  for (std::size_t i = 0; i < x.size(); ++i) edges.push_back(x.without_index(i));
  return Hypergraph(k, static_cast<VertexId>(k + 1), std::move(edges));
}

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
  if (!o.in.empty()) {
    const Hypergraph h = load(o.in, false);
    const std::size_t failures = report_checks(verify_hypergraph(h), out);
    out << (failures == 0 ? "OK" : "FAILED") << " checks_failed=" << failures << '\n';
    return failures == 0 ? kOk : kCheckFailed;
  }
  if (o.suite == "simplex") {
    const std::size_t failures = report_checks(verify_hypergraph(single_simplex(o.k)), out);
    out << (failures == 0 ? "OK" : "FAILED") << " checks_failed=" << failures << '\n';
    return failures == 0 ? kOk : kCheckFailed;
  }
  if (o.suite != "random") throw ConfigError("unknown suite '" + o.suite + "' (expected random or simplex)");
  if (o.n_max < static_cast<VertexId>(o.k + 1)) throw ConfigError("--n-max must be at least k + 1");

  // Random instances with n in [k+1, n_max] and a random density.
  SeededRng rng(o.seed, 0x5e71f);
  std::map<std::string, std::uint64_t> failed;
  std::string first_witness;
  for (std::uint64_t i = 0; i < o.count; ++i) {
    const auto n = static_cast<VertexId>(o.k + 1 + rng.below(o.n_max - o.k));
    const std::uint64_t total = binomial(n, o.k);
    const std::uint64_t m = rng.below(total + 1);
    const Hypergraph h = gen_random(o.k, n, m, rng());
    for (const auto& c : verify_hypergraph(h)) {
      if (c.passed) continue;
      ++failed[c.name];
      if (first_witness.empty())
        first_witness = "instance " + std::to_string(i) + " (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                        ") " + c.name + ": " + c.detail;
    }
  }
  std::uint64_t total_failures = 0;
  for (const auto& [name, count] : failed) {
    out << "FAIL " << name << ": " << count << " instances\n";
    total_failures += count;
  }
  if (!first_witness.empty()) out << "first witness: " << first_witness << '\n';
  out << (total_failures == 0 ? "OK" : "FAILED") << " instances=" << o.count << " failures=" << total_failures << '\n';
  return total_failures == 0 ? kOk : kCheckFailed;
}

// One instance of a bench sweep.
struct BenchCell {
  std::map<std::string, std::string> params;
  std::string label;
};

std::string get(const std::map<std::string, std::string>& p, const std::string& key, const std::string& fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

const std::vector<std::string> kSweepKeys = {"in",    "family", "k",       "n",       "m",       "t",
                                             "seed",  "x_seed", "y_seed",  "density", "order",   "T",
                                             "eps",   "delta",  "delta_e", "delta_v", "y_index"};

Hypergraph build_instance(const std::map<std::string, std::string>& p) {
  if (p.count("in")) return load(p.at("in"), false);
  GeneratorSpec s;
  s.family = parse_family(get(p, "family", "random"));
  s.k = std::stoi(get(p, "k", "3"));
  s.n = static_cast<VertexId>(std::stoull(get(p, "n", "0")));
  s.m = std::stoull(get(p, "m", "0"));
  s.t_target = std::stoull(get(p, "t", "0"));
  s.seed = std::stoull(get(p, "seed", "1"));
  s.x_seed = std::stoull(get(p, "x_seed", "1"));
  s.y_seed = std::stoull(get(p, "y_seed", "2"));
  s.density = std::stod(get(p, "density", "0.5"));
  s.order = parse_order(get(p, "order", "shuffled"));
  if (s.family == Family::kLbIndex) {
    for (const auto& t : split(get(p, "y_index", ""), ':'))
      if (!t.empty()) s.y_index.push_back(static_cast<VertexId>(std::stoul(t)));
    if (s.y_index.empty()) s.y_index.assign(static_cast<std::size_t>(s.k), 1);
  }
  return generate(s);
}

std::string cell_label(const std::map<std::string, std::string>& p) {
  std::string out;
  for (const auto& key : kSweepKeys) {
    auto it = p.find(key);
    if (it == p.end() || key == "T" || key == "eps" || key == "delta" || key == "delta_e" || key == "delta_v")
      continue;
    if (!out.empty()) out += ';';
    out += key + '=' + it->second;
  }
  return out;
}

int cmd_bench(const BenchOpts& o, std::ostream& out) {
  std::vector<Algorithm> algos;
  for (const auto& name : split(o.algos, ',')) algos.push_back(parse_algorithm(name));
  if (algos.empty()) throw ConfigError("--algos is empty");
  if (o.runs == 0) throw ConfigError("--runs must be positive");
  const auto grid = expand_sweep(parse_sweep(o.sweep));
  for (const auto& cell : grid)
    for (const auto& [key, value] : cell)
      if (std::find(kSweepKeys.begin(), kSweepKeys.end(), key) == kSweepKeys.end())
        throw ConfigError("unknown sweep key '" + key + "'");

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::binary);
    if (!file) throw std::ios_base::failure("cannot open '" + o.out + "' for writing");
    sink = &file;
  }

  struct Job {
    std::size_t cell;
    Algorithm algo;
    std::uint64_t run;
  };
  std::vector<Job> jobs;
  for (std::size_t c = 0; c < grid.size(); ++c)
    for (Algorithm a : algos)
      for (std::uint64_t r = 0; r < o.runs; ++r) jobs.push_back({c, a, r});

  // Instances are built lazily once per cell; build failures land in every record of the cell.
  struct Instance {
    std::once_flag once;
    std::shared_ptr<const Hypergraph> graph;
    std::optional<SimplexStats> stats;
    std::string error;
  };
  std::vector<Instance> instances(grid.size());
  const bool need_exact = o.exact;
  auto instance = [&](std::size_t c) -> Instance& {
    Instance& inst = instances[c];
    std::call_once(inst.once, [&] {
      try {
        inst.graph = std::make_shared<const Hypergraph>(build_instance(grid[c]));
        const bool wants_stats = need_exact || !grid[c].count("T") ||
                                 std::find(algos.begin(), algos.end(), Algorithm::kOnePass) != algos.end();
        if (wants_stats) inst.stats = count_simplices_exact(*inst.graph);
      } catch (const std::exception& e) {
        inst.error = e.what();
      }
    });
    return inst;
  };

  std::vector<RunRecord> records(jobs.size());
  auto run_job = [&](std::size_t j) {
    const Job& job = jobs[j];
    const auto& p = grid[job.cell];
    RunRecord& rec = records[j];
    rec.instance = cell_label(p);
    rec.algorithm = std::string(algorithm_name(job.algo));
    rec.seed = o.seed + job.run;
    try {
      Instance& inst = instance(job.cell);
      if (!inst.error.empty()) throw std::runtime_error(inst.error);
      const Hypergraph& h = *inst.graph;
      rec.k = h.k();
      rec.n = h.n();
      rec.m = h.m();
      if (inst.stats) rec.exact_T = inst.stats->t_k;
      EstimatorConfig cfg;
      cfg.k = h.k();
      cfg.T = p.count("T") ? std::stod(p.at("T")) : std::max<double>(1.0, static_cast<double>(inst.stats->t_k));
      cfg.epsilon = std::stod(get(p, "eps", "0.2"));
      cfg.delta = std::stod(get(p, "delta", "0.2"));
      cfg.master_seed = rec.seed;
      cfg.variance_const = o.variance_const;
      cfg.max_trials = o.max_trials;
      cfg.threads = o.threads;
      if (p.count("delta_e")) cfg.delta_e = std::stod(p.at("delta_e"));
      if (p.count("delta_v")) cfg.delta_v = std::stod(p.at("delta_v"));
      if (job.algo == Algorithm::kOnePass && inst.stats) {
        if (!cfg.delta_e) cfg.delta_e = std::max<double>(1.0, static_cast<double>(inst.stats->delta_e));
        if (!cfg.delta_v) cfg.delta_v = std::max<double>(1.0, static_cast<double>(inst.stats->delta_v));
      }
      rec.T = cfg.T;
      rec.eps = cfg.epsilon;
      rec.delta = cfg.delta;
      const EdgeStream stream(inst.graph, StreamSource::kGenerator, rec.instance);
      const Estimate est = estimate(job.algo, stream, cfg);
      RunRecord full = make_record(est, cfg, rec.instance, h.n(), h.m());
      full.exact_T = rec.exact_T;
      rec = std::move(full);
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
  };

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) run_job(j);
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t failures = 0;
  for (const auto& rec : records) {
    *sink << to_json_line(rec) << '\n';
    if (rec.error) ++failures;
  }
  sink->flush();
  if (!o.out.empty())
    out << json{{"out", o.out}, {"records", records.size()}, {"failed_runs", failures}}.dump() << '\n';
  return kOk;
}

}  // namespace

std::vector<std::pair<std::string, std::vector<std::string>>> parse_sweep(const std::string& text) {
  std::vector<std::pair<std::string, std::vector<std::string>>> out;
  for (const auto& part : split(text, ';')) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("sweep entry '" + part + "' is not key=values");
    std::string key = part.substr(0, eq);
    key.erase(key.find_last_not_of(" \t") + 1);
    std::vector<std::string> values;
    for (const auto& v : split(part.substr(eq + 1), ','))
      if (!v.empty()) values.push_back(v);
    if (values.empty()) throw ConfigError("sweep key '" + key + "' has no values");
    for (const auto& [k, _] : out)
      if (k == key) throw ConfigError("sweep key '" + key + "' repeated");
    out.emplace_back(std::move(key), std::move(values));
  }
  if (out.empty()) throw ConfigError("empty sweep");
  return out;
}

std::vector<std::map<std::string, std::string>> expand_sweep(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& sweep) {
  std::vector<std::map<std::string, std::string>> out{{}};
  for (const auto& [key, values] : sweep) {
    std::vector<std::map<std::string, std::string>> next;
    for (const auto& partial : out)
      for (const auto& v : values) {
        auto cell = partial;
        cell[key] = v;
        next.push_back(std::move(cell));
      }
    out = std::move(next);
  }
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HYPERSTREAM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ConfigError(std::string("HYPERSTREAM_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return 1;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Streaming k-simplex counting in hypergraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hyperstream 0.1.0");

  std::uint64_t env_seed = 1;
  try {
    env_seed = default_seed();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  GenerateOpts gen;
  gen.seed = env_seed;
  auto* g = app.add_subcommand("generate", "Write a generated instance as an edge-list file");
  g->add_option("--family", gen.family, "complete, random, planted, lb-nk, lb-index or lb-disj")->required();
  g->add_option("--k", gen.k, "Edge arity")->required();
  g->add_option("--n", gen.n, "Vertex count (group size for the gadgets)")->required();
  g->add_option("--m", gen.m, "Edge count (random, planted)");
  g->add_option("--t", gen.t, "Planted simplex count");
  g->add_option("--seed", gen.seed, "Instance and arrival-order seed");
  g->add_option("--x-seed", gen.x_seed, "Seed of Alice's vector");
  g->add_option("--y-seed", gen.y_seed, "Seed of Bob's vector");
  g->add_option("--y-index", gen.y_index, "lb-index coordinates t_1 .. t_k")->delimiter(',');
  g->add_option("--density", gen.density, "Probability of a one in the gadget vectors");
  g->add_option("--order", gen.order, "Arrival order: shuffled or sorted");
  g->add_option("--out", gen.out, "Output path")->required();

  std::string exact_in;
  bool exact_dedup = false;
  auto* x = app.add_subcommand("exact", "Exact simplex count and maxima");
  x->add_option("--in", exact_in, "Edge-list file")->required();
  x->add_flag("--dedup", exact_dedup, "Drop duplicate edges instead of failing");

  EstimateOpts est;
  est.seed = env_seed;
  auto* e = app.add_subcommand("estimate", "Run one streaming estimator");
  e->add_option("--in", est.in, "Edge-list file")->required();
  e->add_option("--algo", est.algo, "abundant, easy, simplest, coloring, shadow or onepass")->required();
  e->add_option("--k", est.k, "Expected arity (defaults to the file's)");
  e->add_option("--T", est.T, "Promised lower bound on the simplex count")->required();
  e->add_option("--eps", est.eps, "Relative accuracy");
  e->add_option("--delta", est.delta, "Failure probability");
  e->add_option("--seed", est.seed, "Master seed");
  e->add_option("--delta-e", est.delta_e, "Promise: max simplices through one edge");
  e->add_option("--delta-v", est.delta_v, "Promise: max simplices through one vertex");
  e->add_option("--xi", est.xi, "Oracle sampling constant");
  e->add_option("--p", est.p, "Override of the sampling probability p");
  e->add_option("--q", est.q, "Override of the sampling probability q");
  e->add_option("--variance-const", est.variance_const, "Batch-size constant");
  e->add_option("--abort-factor", est.abort_factor, "Abundant batch-abort factor");
  e->add_option("--r-bound", est.r_bound, "Abundant expected neighbor-sample bound");
  e->add_option("--f0-mode", est.f0_mode, "Distinct counting: exact or kmv");
  e->add_option("--f0-eps", est.f0_eps, "KMV accuracy");
  e->add_option("--max-trials", est.max_trials, "Cap on total trials");
  e->add_option("--threads", est.threads, "Worker threads");
  e->add_flag("--dedup", est.dedup, "Drop duplicate edges instead of failing");
  e->add_flag("--exact", est.exact, "Also compute the exact count into the record");
  e->add_flag("--details", est.details, "Print sampling details to stderr");

  VerifyOpts ver;
  ver.seed = env_seed;
  auto* v = app.add_subcommand("verify", "Check the structural identities and bounds");
  auto* vin = v->add_option("--in", ver.in, "Edge-list file");
  auto* vsuite = v->add_option("--suite", ver.suite, "random or simplex");
  vin->excludes(vsuite);
  v->add_option("--k", ver.k, "Suite arity");
  v->add_option("--count", ver.count, "Random suite size");
  v->add_option("--n-max", ver.n_max, "Random suite vertex bound");
  v->add_option("--seed", ver.seed, "Random suite seed");

  BenchOpts bench;
  bench.seed = env_seed;
  auto* b = app.add_subcommand("bench", "Run estimators over a parameter sweep");
  b->add_option("--sweep", bench.sweep, "Grid such as 'family=random;k=3;n=60;m=100,1000;T=50'")->required();
  b->add_option("--algos", bench.algos, "Comma-separated algorithm list")->required();
  b->add_option("--runs", bench.runs, "Seeds per cell");
  b->add_option("--out", bench.out, "Records file (stdout when absent)");
  b->add_option("--seed", bench.seed, "Base seed; run r uses seed + r");
  b->add_option("--jobs", bench.jobs, "Parallel cells");
  b->add_option("--threads", bench.threads, "Worker threads per estimate");
  b->add_option("--variance-const", bench.variance_const, "Batch-size constant");
  b->add_option("--max-trials", bench.max_trials, "Cap on total trials per estimate");
  b->add_flag("--exact", bench.exact, "Attach the exact count to every record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& pe) {
    return app.exit(pe, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*g) return cmd_generate(gen, out);
    if (*x) return cmd_exact(exact_in, exact_dedup, out);
    if (*e) return cmd_estimate(est, out, err);
    if (*v) {
      if (ver.in.empty() && ver.suite.empty()) throw ConfigError("verify needs --in or --suite");
      return cmd_verify(ver, out);
    }
    if (*b) return cmd_bench(bench, out);
  } catch (const ConfigError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const ContractError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kInputError;
  } catch (const std::ios_base::failure& ex) {
    err << "error: " << ex.what() << '\n';
    return kInputError;
  } catch (const ResourceError& ex) {
    err << "error: " << ex.what() << '\n';
    return kResourceError;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kRuntimeError;
  }
  return kUsage;
}

}  // namespace hyperstream::cli
