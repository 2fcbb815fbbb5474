#pragma once

#include <cstdint>

namespace cvb {

/// Counter-based generator: the stream is a pure function of the key, so a
/// draw keyed by (seed, trial index) is reproducible regardless of how
/// trials are scheduled across threads.
class CounterRng {
public:
  explicit CounterRng(std::uint64_t key) : state_(splitmix(key ^ 0x9e3779b97f4a7c15ull)) {}

  CounterRng(std::uint64_t seed, std::uint64_t index)
      : CounterRng(splitmix(seed + 0x632be59bd9b4e019ull * (index + 1))) {}

  CounterRng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream)
      : CounterRng(splitmix(seed + 0x632be59bd9b4e019ull * (index + 1)) ^
                   splitmix(stream + 0x9e3779b97f4a7c15ull)) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return splitmix(state_);
  }

  /// Uniform in [0, 1).
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform integer in [lo, hi] inclusive.
  long uniform_int(long lo, long hi) {
    return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin(double p = 0.5) { return next_double() < p; }

private:
  static std::uint64_t splitmix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace cvb
