#pragma once

#include <cstdint>
#include <random>

namespace scr {

/// Seedable generator wrapping std::mt19937_64 with explicit variate
/// mappings (inverse-CDF normal, Marsaglia-Tsang gamma) so that draws are
/// bit-identical under a fixed seed independent of the standard library.
///
/// Callers own one Rng per execution unit; nothing here is shared.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Derived stream for (master seed, stream index), e.g. one per chain or
  /// per simulation repetition. Distinct indices give decorrelated streams.
  static Rng substream(std::uint64_t master, std::uint64_t stream);

  /// Uniform on the open interval (0, 1).
  double uniform();
  /// Uniform on (lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal via inverse CDF.
  double normal();
  double normal(double mu, double sd);
  /// Gamma(shape, rate); mean shape/rate.
  double gamma(double shape, double rate);
  double beta(double a, double b);
  double chisq(double df);
  /// Bernoulli(p) as 0/1.
  int bernoulli(double p);

  std::uint64_t next_u64();

 private:
  std::mt19937_64 eng_;
};

/// splitmix64 step; used for seed mixing.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace scr
