#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace sbot {

/// Mixes a sequence of 64-bit values into one seed (splitmix64 finalizer).
inline std::uint64_t mix_seed(std::uint64_t a) {
  a += 0x9e3779b97f4a7c15ull;
  a = (a ^ (a >> 30)) * 0xbf58476d1ce4e5b9ull;
  a = (a ^ (a >> 27)) * 0x94d049bb133111ebull;
  return a ^ (a >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  return mix_seed(mix_seed(mix_seed(master ^ mix_seed(a)) ^ mix_seed(b)) ^
                  mix_seed(c));
}

/// Deterministic random stream. Gaussian draws use the polar method with an
/// explicit cached spare so the draw sequence is fully pinned by this code,
/// not by the standard library's distribution internals.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed = 0) : gen_(seed) {}

  void reseed(std::uint64_t seed) {
    gen_.seed(seed);
    has_spare_ = false;
  }

  /// Uniform in [0, 1).
  double uniform() {
    // 53 random bits -> double in [0,1)
    return (gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal draw (polar Box-Muller).
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

  double gaussian(double mean, double stddev) {
    return mean + stddev * gaussian();
  }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) {
    return gen_() % n;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace sbot
