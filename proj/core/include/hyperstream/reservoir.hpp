#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "hyperstream/rng.hpp"

namespace hyperstream {

// Size-one reservoir: after t observations each one is held with probability 1/t.
template <class T>
class ReservoirSampler {
 public:
  void observe(const T& item, SeededRng& rng) {
    ++seen_;
    if (seen_ == 1 || rng.below(seen_) == 0) current_ = item;
  }

  const std::optional<T>& current() const noexcept { return current_; }
  std::uint64_t seen() const noexcept { return seen_; }

 private:
  std::optional<T> current_;
  std::uint64_t seen_ = 0;
};

}  // namespace hyperstream
