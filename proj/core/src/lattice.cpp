#include "perc/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace perc {

std::vector<Point> neighbors(const Point& x) {
  const int dim = static_cast<int>(x.size());
  masks::check_dim(dim);
  std::vector<Point> out;
  out.reserve(2 * dim);
  for (int dir = 0; dir < 2 * dim; ++dir) {
    Point y = x;
    y[masks::axis(dir)] += masks::is_positive(dir) ? 1 : -1;
    out.push_back(std::move(y));
  }
  return out;
}

int l1_norm(const Point& x) {
  int s = 0;
  for (int c : x) s += std::abs(c);
  return s;
}

std::int64_t ball_size(int dim, int radius) {
  masks::check_dim(dim);
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  // C(radius, k) via the stepwise product: radius routinely exceeds the
  // lookup-table range of binomial().
  auto choose_radius = [radius](int k) {
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * (radius - i) / (i + 1);
    return r;
  };
  std::int64_t total = 0;
  for (int k = 0; k <= dim && k <= radius; ++k) {
    const std::int64_t ways = (std::int64_t{1} << k) *
                              static_cast<std::int64_t>(binomial(dim, k)) *
                              choose_radius(k);
    total += ways;
  }
  return total;
}

std::vector<Point> ball(int dim, int radius) {
  masks::check_dim(dim);
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(ball_size(dim, radius)));
  Point x(dim, 0);
  auto rec = [&](auto&& self, int axis, int budget) -> void {
    if (axis == dim - 1) {
      for (int c = -budget; c <= budget; ++c) {
        x[axis] = c;
        pts.push_back(x);
      }
      return;
    }
    for (int c = -budget; c <= budget; ++c) {
      x[axis] = c;
      self(self, axis + 1, budget - std::abs(c));
    }
  };
  rec(rec, 0, radius);
  return pts;
}

BallIndex::BallIndex(int dim, int radius, std::int64_t site_cap) : dim_(dim), radius_(radius) {
  masks::check_dim(dim);
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  size_ = ball_size(dim, radius);
  if (size_ > site_cap)
    throw std::invalid_argument("ball of radius " + std::to_string(radius) + " in d=" +
                                std::to_string(dim) + " has " + std::to_string(size_) +
                                " sites, over the cap of " + std::to_string(site_cap));
  const auto pts = ball(dim, radius);
  coords_.resize(static_cast<size_t>(size_) * dim);
  norms_.resize(static_cast<size_t>(size_));
  for (std::int64_t i = 0; i < size_; ++i) {
    for (int j = 0; j < dim; ++j) coords_[i * dim + j] = pts[i][j];
    norms_[i] = l1_norm(pts[i]);
  }
  origin_ = ordinal_by_search(Point(dim, 0));
  nbr_.resize(static_cast<size_t>(size_) * 2 * dim);
  Point y(dim);
  for (std::int64_t i = 0; i < size_; ++i) {
    for (int dir = 0; dir < 2 * dim; ++dir) {
      for (int j = 0; j < dim; ++j) y[j] = coords_[i * dim + j];
      y[masks::axis(dir)] += masks::is_positive(dir) ? 1 : -1;
      nbr_[i * 2 * dim + dir] = ordinal_by_search(y);
    }
  }
}

Point BallIndex::point(std::int64_t ordinal) const {
  Point x(dim_);
  for (int j = 0; j < dim_; ++j) x[j] = coords_[ordinal * dim_ + j];
  return x;
}

std::int64_t BallIndex::ordinal_by_search(const Point& x) const {
  if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("point has wrong dimension");
  if (l1_norm(x) > radius_) return -1;
  std::int64_t lo = 0, hi = size_ - 1;
  while (lo <= hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    int cmp = 0;
    for (int j = 0; j < dim_; ++j) {
      const int c = coords_[mid * dim_ + j];
      if (c != x[j]) {
        cmp = c < x[j] ? -1 : 1;
        break;
      }
    }
    if (cmp == 0) return mid;
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return -1;
}

std::int64_t BallIndex::ordinal(const Point& x) const { return ordinal_by_search(x); }

}  // namespace perc
