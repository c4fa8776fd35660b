#pragma once

#include <cmath>
#include <cstdint>

namespace nodim {

// Project-wide deterministic generator. SplitMix64 (Vigna's public-domain
// mixer) is small enough to re-implement bit-for-bit in any language, which
// is what keeps generated instances reproducible across ports. Uniform
// doubles take the top 53 bits; Gaussians use the Marsaglia polar method.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [-1, 1).
  double uniform_symmetric() { return 2.0 * uniform() - 1.0; }

  // Uniform integer in [0, n). Plain modulo reduction; the bias is
  // irrelevant at the n used here and keeps ports trivial.
  int uniform_int(int n) {
    return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
  }

  double gaussian();

  // Derived stream for sub-tasks: re-seeds a fresh generator from the
  // current state and a tag, without disturbing this stream's sequence.
  SplitMix64 fork(std::uint64_t tag) const {
    return SplitMix64(state_ ^ (0x632be59bd9b4e019ULL * (tag + 1)));
  }

private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

inline double SplitMix64::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = uniform_symmetric();
    v = uniform_symmetric();
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

}  // namespace nodim
