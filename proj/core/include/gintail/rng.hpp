#pragma once

#include <cstdint>

namespace gintail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based per-sample stream: the state is a pure function of
// (seed, stream), so the worker that happens to run a sample cannot change
// its draws. One stream per Monte Carlo sample index.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) {
    state_ = seed ^ (stream + 0x9e3779b97f4a7c15ULL) * 0xbf58476d1ce4e5b9ULL;
    splitmix64(state_);
    splitmix64(state_);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform on (0, 1), never exactly 0 or 1.
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; the second value of each pair is cached.
  double next_gaussian();

 private:
  std::uint64_t state_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace gintail
