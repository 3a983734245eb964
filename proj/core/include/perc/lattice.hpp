#pragma once

#include <cstdint>
#include <vector>

#include "perc/masks.hpp"

namespace perc {

using Point = std::vector<int>;

// The 2d neighbors of x in direction order (+e1, -e1, +e2, -e2, ...).
std::vector<Point> neighbors(const Point& x);

int l1_norm(const Point& x);

// |B_r| = sum_k 2^k C(d,k) C(r,k).
std::int64_t ball_size(int dim, int radius);

// Points of B_r = {x : |x|_1 <= r} in lexicographic order.
std::vector<Point> ball(int dim, int radius);

inline constexpr std::int64_t kDefaultSiteCap = std::int64_t{1} << 26;

// Index of B_r: ordinals follow the lexicographic point order, with a
// precomputed ordinal-valued neighbor table (-1 for neighbors outside B_r).
// Exploration out to radius n uses BallIndex(d, n+1); sites with norm n+1
// form the boundary.
class BallIndex {
 public:
  BallIndex(int dim, int radius, std::int64_t site_cap = kDefaultSiteCap);

  int dim() const { return dim_; }
  int radius() const { return radius_; }
  std::int64_t size() const { return size_; }
  std::int64_t origin() const { return origin_; }

  Point point(std::int64_t ordinal) const;
  std::int64_t ordinal(const Point& x) const;  // -1 if outside B_r
  int norm(std::int64_t ordinal) const { return norms_[ordinal]; }

  // Ordinal of point(ordinal) + e_dir, or -1 if outside B_r.
  std::int64_t neighbor(std::int64_t ordinal, int dir) const {
    return nbr_[ordinal * 2 * dim_ + dir];
  }

 private:
  std::int64_t ordinal_by_search(const Point& x) const;

  int dim_;
  int radius_;
  std::int64_t size_;
  std::int64_t origin_;
  std::vector<int> coords_;  // size_ * dim_, lex order
  std::vector<int> norms_;
  std::vector<std::int64_t> nbr_;
};

}  // namespace perc
