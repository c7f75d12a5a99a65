#pragma once

#include <cstdint>
#include <random>

namespace hyperstream {

// splitmix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Maps a 64-bit hash to [0, 1) using its top 53 bits.
constexpr double unit_interval(std::uint64_t h) noexcept {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Deterministic child generator derived from (master_seed, stream_id).
// Distinct stream IDs give independent-looking streams.
class SeededRng {
 public:
  using result_type = std::uint64_t;

  SeededRng(std::uint64_t master_seed, std::uint64_t stream_id)
      : master_seed_(master_seed), stream_id_(stream_id), engine_(derive(master_seed, stream_id)) {}

  static constexpr std::uint64_t derive(std::uint64_t master_seed, std::uint64_t stream_id) noexcept {
    return mix64(mix64(master_seed) ^ mix64(stream_id + 0x632be59bd9b4e019ULL));
  }

  // Child generator for a sub-task; same (seed, stream, label) -> same child.
  SeededRng child(std::uint64_t label) const { return SeededRng(derive(master_seed_, stream_id_), label); }

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  double uniform() { return unit_interval(engine_()); }
  bool bernoulli(double p) { return p >= 1.0 || uniform() < p; }
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_); }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

}  // namespace hyperstream
