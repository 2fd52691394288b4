#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace wiretap {

/// splitmix64 mix; used to derive independent streams from (seed, stream id).
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic RNG wrapper. All conversions from raw 64-bit draws are done
/// here so that sequences are identical regardless of standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed), seed_of_(seed) {}

  /// Independent substream derived from this generator's seed (not its state).
  Rng stream(std::uint64_t id) const { return Rng(mix_seed(seed_of_, id)); }

  std::uint64_t seed() const { return seed_of_; }

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    // rejection sampling to avoid modulo bias
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  double exponential() { return -std::log(1.0 - uniform01()); }

  /// Standard normal via Box-Muller (one value per call, cached pair).
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  /// Index drawn from an unnormalized nonnegative weight table.
  std::size_t categorical(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double u = uniform01() * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      u -= weights[i];
      if (u < 0.0) return i;
    }
    return weights.size() - 1;
  }

  /// Dirichlet(1) draw: uniform over the simplex of dimension n.
  std::vector<double> simplex_uniform(std::size_t n) {
    std::vector<double> v(n);
    double sum = 0.0;
    for (auto& x : v) {
      x = exponential();
      sum += x;
    }
    for (auto& x : v) x /= sum;
    return v;
  }

 private:
  std::mt19937_64 gen_;
  std::uint64_t seed_of_ = 0;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace wiretap
