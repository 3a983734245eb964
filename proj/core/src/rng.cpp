#include "perc/rng.hpp"

namespace perc::rng {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(Counter& x, const Key& k) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * x.v[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * x.v[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  x = Counter{{hi1 ^ x.v[1] ^ k.k[0], lo1, hi0 ^ x.v[3] ^ k.k[1], lo0}};
}

}  // namespace

Counter philox4x32(Counter ctr, Key key) {
  for (int r = 0; r < 10; ++r) {
    round_once(ctr, key);
    key.k[0] += kWeyl0;
    key.k[1] += kWeyl1;
  }
  return ctr;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace perc::rng
