#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace crank {

/// Deterministic random source. mt19937_64 is bit-exact across platforms by
/// the standard; the distribution transforms below are our own so that
/// generated streams are identical everywhere (std:: distributions are
/// implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(splitmix(seed)) {}

  /// Named sub-stream: all randomness flows from one root seed.
  static Rng substream(std::uint64_t seed, std::string_view name) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (char c : name) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    return Rng(splitmix(seed ^ h));
  }
  static Rng substream(std::uint64_t seed, std::string_view name, std::uint64_t index) {
    Rng r = substream(seed, name);
    return Rng(splitmix(r.next_u64() ^ splitmix(index + 0x9e3779b97f4a7c15ull)));
  }

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, m); rejection sampling, unbiased.
  std::uint64_t below(std::uint64_t m) {
    if (m == 0) return 0;
    std::uint64_t mask = ~std::uint64_t{0};
    std::uint64_t r = m - 1;
    mask >>= (r == 0) ? 63 : __builtin_clzll(r);
    for (;;) {
      std::uint64_t v = eng_() & mask;
      if (v < m) return v;
    }
  }

  int below_int(int m) { return static_cast<int>(below(static_cast<std::uint64_t>(m))); }

  /// Standard normal via Box-Muller; the paired value is cached.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform01();
    } while (u1 <= 0.0);
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t k = v.size(); k > 1; --k) {
      std::size_t idx = static_cast<std::size_t>(below(k));
      std::swap(v[k - 1], v[idx]);
    }
  }

 private:
  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::mt19937_64 eng_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace crank
