#include "hyperstream/records.hpp"

#include <json.hpp>

#include "hyperstream/errors.hpp"

namespace hyperstream {

using nlohmann::json;

RunRecord make_record(const Estimate& est, const EstimatorConfig& cfg, std::string instance, VertexId n,
                      std::size_t m) {
  RunRecord r;
  r.instance = std::move(instance);
  r.algorithm = std::string(algorithm_name(est.algorithm));
  r.k = cfg.k;
  r.n = n;
  r.m = m;
  r.T = cfg.T;
  r.eps = cfg.epsilon;
  r.delta = cfg.delta;
  r.seed = cfg.master_seed;
  r.estimate = est.value;
  r.trials = est.trials;
  r.passes = est.passes;
  r.space_peak_words = est.space_peak_words;
  r.max_trial_space_words = est.max_trial_space_words;
  r.wall_time_s = est.wall_time_s;
  return r;
}

std::string to_json_line(const RunRecord& r) {
  json j = {
      {"schema_version", r.schema_version},
      {"instance", r.instance},
      {"algorithm", r.algorithm},
      {"k", r.k},
      {"n", r.n},
      {"m", r.m},
      {"T", r.T},
      {"eps", r.eps},
      {"delta", r.delta},
      {"seed", r.seed},
      {"estimate", r.estimate ? json(*r.estimate) : json(nullptr)},
      {"trials", r.trials},
      {"passes", r.passes},
      {"space_peak_words", r.space_peak_words},
      {"max_trial_space_words", r.max_trial_space_words},
      {"wall_time_s", r.wall_time_s},
      {"exact_T", r.exact_T ? json(*r.exact_T) : json(nullptr)},
      {"error", r.error ? json(*r.error) : json(nullptr)},
  };
  return j.dump();
}

RunRecord parse_record(std::string_view line) {
  try {
    const json j = json::parse(line);
    RunRecord r;
    j.at("schema_version").get_to(r.schema_version);
    if (r.schema_version != kRecordSchemaVersion)
      throw FormatError(0, "unsupported record schema_version " + std::to_string(r.schema_version));
    j.at("instance").get_to(r.instance);
    j.at("algorithm").get_to(r.algorithm);
    j.at("k").get_to(r.k);
    j.at("n").get_to(r.n);
    j.at("m").get_to(r.m);
    j.at("T").get_to(r.T);
    j.at("eps").get_to(r.eps);
    j.at("delta").get_to(r.delta);
    j.at("seed").get_to(r.seed);
    if (!j.at("estimate").is_null()) r.estimate = j.at("estimate").get<double>();
    j.at("trials").get_to(r.trials);
    j.at("passes").get_to(r.passes);
    j.at("space_peak_words").get_to(r.space_peak_words);
    j.at("max_trial_space_words").get_to(r.max_trial_space_words);
    j.at("wall_time_s").get_to(r.wall_time_s);
    if (!j.at("exact_T").is_null()) r.exact_T = j.at("exact_T").get<std::uint64_t>();
    if (!j.at("error").is_null()) r.error = j.at("error").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw FormatError(0, std::string("malformed record: ") + e.what());
  }
}

}  // namespace hyperstream
