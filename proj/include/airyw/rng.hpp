#pragma once

#include <cmath>
#include <cstdint>

namespace airyw {

// splitmix64, used to expand a (seed, stream) pair into xoshiro state.
inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256++ with all distributions implemented locally so that sample
// streams are bit-stable across standard library versions. Monte Carlo code
// derives one generator per sample index from (seed, index), which makes
// results independent of thread count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t x = seed ^ (0xa3c59ac2ULL + 0x9e3779b97f4a7c15ULL * stream);
    for (auto& s : s_) s = splitmix64(x);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in (0,1); never returns 0 so logs are safe.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Marsaglia polar method; cached second variate.
  double normal() {
    if (have_cache_) {
      have_cache_ = false;
      return cache_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    cache_ = v * f;
    have_cache_ = true;
    return u * f;
  }

  double exponential(double rate) { return -std::log(uniform()) / rate; }

  // Geometric on {0,1,2,...} with P(k) = (1-q)^k q.
  long long geometric(double q) {
    const double u = uniform();
    return static_cast<long long>(std::floor(std::log(u) / std::log1p(-q)));
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
  double cache_ = 0.0;
  bool have_cache_ = false;
};

}  // namespace airyw
