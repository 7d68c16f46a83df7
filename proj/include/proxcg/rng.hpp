#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace proxcg {

/// Deterministic xoshiro256++ generator seeded through splitmix64.
///
/// The library owns all randomness so that benchmark instances are
/// bit-reproducible across platforms and standard libraries; std::random
/// distributions are implementation-defined and are deliberately not used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform draw in [0, 1) with 53-bit resolution.
  double uniform();

  /// Uniform draw in [lo, hi).
  double uniform_range(double lo, double hi);

  /// Standard normal draw (Box-Muller, second value cached).
  double normal();

  /// Student's t draw with 5 degrees of freedom, built as z / sqrt(chi2_5/5).
  double student_t5();

  /// Unbiased-enough integer draw in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  /// First k entries of a Fisher-Yates shuffle of {0, ..., n-1}
  /// (sampling without replacement).
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

 private:
  std::uint64_t state_[4];
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace proxcg
