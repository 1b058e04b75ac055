#pragma once

// Seeded generators. All draws go through Rng so that a seed fully determines
// every matrix on every platform (std:: distributions are implementation-defined).

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "pcmtk/pcm.hpp"

namespace pcmtk {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Uniform integer in [0, bound).
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(uniform01() * static_cast<double>(bound)); }
  bool coin() { return (engine_() >> 63) != 0; }
  std::uint64_t next() { return engine_(); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Per-task seed derived from a master seed and labels.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view a, std::string_view b = {}) {
  return splitmix64(master ^ splitmix64(fnv1a(a) ^ (fnv1a(b) << 1)));
}

/// The 17-value Saaty scale {1/9, ..., 1/2, 1, 2, ..., 9}.
inline const std::array<double, 17>& saaty_scale() {
  static const std::array<double, 17> scale = [] {
    std::array<double, 17> s{};
    for (int v = 9; v >= 2; --v) s[9 - v] = 1.0 / v;
    for (int v = 1; v <= 9; ++v) s[7 + v] = v;
    return s;
  }();
  return scale;
}

inline Pcm random_pcm(std::size_t n, Rng& rng) {
  const auto& scale = saaty_scale();
  std::vector<double> upper(upper_size(n));
  for (double& x : upper) x = scale[rng.below(scale.size())];
  return Pcm(n, std::move(upper));
}

inline Pcm random_pcm(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_pcm(n, rng);
}

/// Log-weights uniform on [-ln 9, ln 9], then a_ij = w_i / w_j.
inline Pcm random_consistent(std::size_t n, Rng& rng) {
  const double span = std::log(9.0);
  std::vector<double> w(n);
  for (double& x : w) x = std::exp(rng.uniform(-span, span));
  return from_weights(WeightVector::normalized(std::move(w)));
}

inline Pcm random_consistent(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_consistent(n, rng);
}

}  // namespace pcmtk
