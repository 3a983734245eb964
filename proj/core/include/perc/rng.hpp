#pragma once

#include <cstdint>

namespace perc::rng {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11 constants).
// Pure function of (counter, key): lets every site draw be keyed by
// (site ordinal, draw index, sample index, seed) so that results do not
// depend on exploration order, worker count, or scheduling.
struct Counter {
  std::uint32_t v[4];
};
struct Key {
  std::uint32_t k[2];
};

Counter philox4x32(Counter ctr, Key key);

// 53-bit uniform in [0, 1) from two 32-bit words.
inline double u01(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t x = (static_cast<std::uint64_t>(hi) << 32) | lo;
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// splitmix64 finalizer; used to derive per-evaluation seeds.
std::uint64_t mix64(std::uint64_t x);

// All draws of one estimator sample. Counter layout:
//   (site ordinal, draw index, sample_lo, sample_hi), key = (seed_lo, seed_hi).
// draw 0 is the site's neighborhood mask (or site coin); draw 1+dir is the
// bond coin of the edge leaving the site's canonical endpoint in direction dir.
struct SampleStream {
  std::uint64_t seed;
  std::uint64_t sample;

  double site_uniform(std::uint32_t site, std::uint32_t draw) const {
    Counter c{{site, draw, static_cast<std::uint32_t>(sample),
               static_cast<std::uint32_t>(sample >> 32)}};
    Key k{{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}};
    const Counter r = philox4x32(c, k);
    return u01(r.v[0], r.v[1]);
  }
};

}  // namespace perc::rng
