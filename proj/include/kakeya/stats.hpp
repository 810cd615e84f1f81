#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kakeya/gf.hpp"

namespace kakeya {

/// Mean and variance of the cardinality |B| under the uniform measure that
/// gives every configuration probability q^-(q+1).
struct ExactMoments {
  mpq_class mean;
  mpq_class variance;
};

/// E|B| = (1 - (1 - 1/q)^(q+1)) q^2.
mpq_class expected_cardinality(unsigned long q);

/// Var|B| = q(q+1)(q-1)^2 (1 - 2/q)^q
///        + q^2 (1 - 1/q)^(q+1) (1 - q^2 (1 - 1/q)^(q+1)).
mpq_class variance_cardinality(unsigned long q);

/// P{P in B} when distinct is false, P{P in B and Q in B} for P != Q when
/// distinct is true. Neither depends on the chosen points.
mpq_class joint_point_probability(unsigned long q, bool distinct);

/// Largest configuration count exact_moments_by_enumeration accepts.
inline constexpr std::uint64_t kEnumerationCap = 10'000'000;

/// Mean and variance over every one of the q^(q+1) configurations. Throws
/// TooLarge above kEnumerationCap.
ExactMoments exact_moments_by_enumeration(const FieldTable& field);

/// Var / (q ln q)^2, the Chebyshev tail bound at eps = q ln q. Needs q >= 3.
double chebyshev_bound(unsigned long q);

/// "num/den", always with an explicit denominator.
std::string to_fraction_string(const mpq_class& value);

/// xoshiro256** (Blackman and Vigna) seeded through splitmix64.
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed) noexcept;
  explicit Xoshiro256StarStar(const std::array<std::uint64_t, 4>& state) noexcept : s_(state) {}

  std::uint64_t next() noexcept;
  std::uint64_t operator()() noexcept { return next(); }

  /// Uniform integer in [0, bound) by rejection on the top ceil(log2 bound)
  /// bits.
  std::uint64_t uniform_below(std::uint64_t bound) noexcept;

  /// Substream for one sample: a generator seeded by a mix of (seed, index).
  static Xoshiro256StarStar for_sample(std::uint64_t seed, std::uint64_t index) noexcept;

 private:
  std::array<std::uint64_t, 4> s_{};
};

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept;

struct SampleReport {
  unsigned q = 0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  double empirical_mean = 0.0;
  double empirical_variance = 0.0;  ///< unbiased (n - 1 denominator); 0 when n = 1
  double closed_form_mean = 0.0;
  double closed_form_variance = 0.0;
  /// Fraction of samples with | |B| - (1 - 1/e) q^2 | >= 2 q ln q.
  double band_violation_fraction = 0.0;
  std::vector<std::int64_t> cardinalities;  ///< per sample, in sample order
};

/// Draws n uniform configurations. Sample i uses its own substream, so the
/// report depends only on (field, n, seed) and not on worker_count.
SampleReport monte_carlo(const FieldTable& field, std::uint64_t n, std::uint64_t seed, unsigned worker_count = 1);

}  // namespace kakeya
