#include "perc/masks.hpp"

namespace perc {
namespace masks {

std::string direction_name(int dir) {
  static const char* named[] = {"+x", "-x", "+y", "-y", "+z", "-z"};
  if (dir < 0) throw std::invalid_argument("negative direction index");
  if (dir < 6) return named[dir];
  return std::string(is_positive(dir) ? "+e" : "-e") + std::to_string(axis(dir) + 1);
}

int parse_direction(const std::string& name, int dim) {
  for (int dir = 0; dir < bits(dim); ++dir)
    if (direction_name(dir) == name) return dir;
  throw std::invalid_argument("unknown direction '" + name + "' for d=" + std::to_string(dim));
}

std::vector<std::string> direction_names(mask_t a, int dim) {
  std::vector<std::string> names;
  for (int dir = 0; dir < bits(dim); ++dir)
    if (contains(a, dir)) names.push_back(direction_name(dir));
  return names;
}

std::string mask_to_string(mask_t a, int dim) {
  std::string out = "{";
  bool first = true;
  for (const auto& name : direction_names(a, dim)) {
    if (!first) out += ",";
    out += name;
    first = false;
  }
  return out + "}";
}

}  // namespace masks

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > 62) throw std::invalid_argument("binomial: n out of range");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace perc
