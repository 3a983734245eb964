#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace perc {

// A set of neighbor directions packed into a bitmask. Direction order is
// +e1, -e1, +e2, -e2, ...: bit 2*(j-1) is +ej, bit 2*(j-1)+1 is -ej.
using mask_t = std::uint32_t;

inline constexpr int kMaxDim = 12;

namespace masks {

constexpr int bits(int dim) { return 2 * dim; }
constexpr mask_t full(int dim) { return (mask_t{1} << (2 * dim)) - 1; }
constexpr mask_t count(int dim) { return mask_t{1} << (2 * dim); }  // 2^(2d)
constexpr int size(mask_t a) { return std::popcount(a); }
constexpr bool contains(mask_t a, int dir) { return (a >> dir) & 1u; }
constexpr int opposite(int dir) { return dir ^ 1; }
constexpr int axis(int dir) { return dir >> 1; }
constexpr bool is_positive(int dir) { return (dir & 1) == 0; }

inline void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim)
    throw std::invalid_argument("dimension must be in [1, " + std::to_string(kMaxDim) +
                                "], got " + std::to_string(dim));
}

// "+x", "-x", "+y", "-y", "+z", "-z", then "+e4", "-e4", ...
std::string direction_name(int dir);
int parse_direction(const std::string& name, int dim);
std::vector<std::string> direction_names(mask_t a, int dim);
std::string mask_to_string(mask_t a, int dim);  // "{+x,-y}"

}  // namespace masks

// Exact binomial coefficient; n <= 62 keeps every intermediate in uint64.
std::uint64_t binomial(int n, int k);

}  // namespace perc
