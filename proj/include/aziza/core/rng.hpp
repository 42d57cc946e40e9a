#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace aziza {

/// Deterministic random stream keyed by (seed, label).
///
/// Raw bits come from std::mt19937_64, whose output sequence is fixed by the
/// standard. Distributions are implemented here rather than with the <random>
/// distribution classes, whose algorithms are implementation-defined, so the
/// same (seed, label) yields bit-identical draws on every platform.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::string_view label);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t index(std::uint64_t n);
  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  bool bernoulli(double p) { return uniform() < p; }
  /// Exponential with the given rate (mean 1/rate).
  double exponential(double rate);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t fnv1a64(std::string_view text);
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace aziza
