#pragma once

// Finite pointed metric spaces with exact rational distances. Construction
// validates every metric axiom and names the offending entries on failure.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "freelip/error.hpp"
#include "freelip/rational.hpp"

namespace freelip {

class FiniteMetricSpace {
 public:
  // Validates squareness, identity (zero diagonal, positive off-diagonal),
  // symmetry, triangle inequality and base membership, in that order.
  static FiniteMetricSpace build(std::vector<std::string> points, const std::string& base,
                                 std::vector<std::vector<Rational>> dist) {
    const std::size_t n = points.size();
    if (n == 0) fail("InvalidParams", "a metric space needs at least one point");
    if (dist.size() != n) {
      fail("InvalidParams", "distance matrix has " + std::to_string(dist.size()) +
                                " rows for " + std::to_string(n) + " points");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (dist[i].size() != n) {
        fail("InvalidParams", "distance matrix row " + std::to_string(i) + " has " +
                                  std::to_string(dist[i].size()) + " entries, expected " +
                                  std::to_string(n));
      }
    }
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
      if (!index.emplace(points[i], i).second) {
        fail("InvalidParams", "duplicate point identifier '" + points[i] + "'");
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      if (dist[p][p] != 0) {
        fail("IdentityViolation", "d(" + points[p] + "," + points[p] + ") = " +
                                      format_rational(dist[p][p]) + ", expected 0");
      }
      for (std::size_t q = 0; q < n; ++q) {
        if (p != q && dist[p][q] <= 0) {
          fail("IdentityViolation", "d(" + points[p] + "," + points[q] + ") = " +
                                        format_rational(dist[p][q]) +
                                        ", distinct points need positive distance");
        }
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (dist[p][q] != dist[q][p]) {
          fail("SymmetryViolation", "d(" + points[p] + "," + points[q] + ") = " +
                                        format_rational(dist[p][q]) + " but d(" + points[q] +
                                        "," + points[p] + ") = " + format_rational(dist[q][p]));
        }
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t q = 0; q < n; ++q) {
          if (dist[p][r] > dist[p][q] + dist[q][r]) {
            fail("TriangleViolation",
                 "d(" + points[p] + "," + points[r] + ") = " + format_rational(dist[p][r]) +
                     " > d(" + points[p] + "," + points[q] + ") + d(" + points[q] + "," +
                     points[r] + ") = " + format_rational(dist[p][q] + dist[q][r]) +
                     " via " + points[q]);
          }
        }
      }
    }
    const auto base_it = index.find(base);
    if (base_it == index.end()) {
      fail("UnknownBase", "base point '" + base + "' is not among the points");
    }
    FiniteMetricSpace space;
    space.points_ = std::move(points);
    space.index_ = std::move(index);
    space.base_ = base_it->second;
    space.dist_ = std::move(dist);
    return space;
  }

  const std::vector<std::string>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const std::string& base() const { return points_[base_]; }
  std::size_t base_index() const { return base_; }

  bool contains(const std::string& id) const { return index_.count(id) != 0; }

  std::size_t index_of(const std::string& id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) fail("UnknownPoint", "point '" + id + "' is not in the space");
    return it->second;
  }

  const Rational& dist(std::size_t i, std::size_t j) const { return dist_[i][j]; }
  const Rational& dist(const std::string& p, const std::string& q) const {
    return dist_[index_of(p)][index_of(q)];
  }
  const std::vector<std::vector<Rational>>& matrix() const { return dist_; }

  friend bool operator==(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
    return a.points_ == b.points_ && a.base_ == b.base_ && a.dist_ == b.dist_;
  }

 private:
  FiniteMetricSpace() = default;

  std::vector<std::string> points_;
  std::map<std::string, std::size_t> index_;
  std::size_t base_ = 0;
  std::vector<std::vector<Rational>> dist_;
};

using SpacePtr = std::shared_ptr<const FiniteMetricSpace>;

inline SpacePtr make_space(FiniteMetricSpace space) {
  return std::make_shared<const FiniteMetricSpace>(std::move(space));
}

// Two handles denote the same space when they share storage or compare equal
// entry for entry; molecules and functions over either are interoperable.
inline bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace detail {
inline std::vector<std::string> default_point_ids(std::size_t n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  return ids;
}
}  // namespace detail

// n >= 2 points, every off-diagonal distance 1, base p0.
inline FiniteMetricSpace uniform_discrete(std::size_t n) {
  if (n < 2) fail("InvalidParams", "uniform_discrete needs at least 2 points");
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n, Rational(1)));
  for (std::size_t i = 0; i < n; ++i) dist[i][i] = 0;
  return FiniteMetricSpace::build(detail::default_point_ids(n), "p0", std::move(dist));
}

// Points on the rational line with d = |x_i - x_j|; coordinates must be
// pairwise distinct. Base is the first coordinate's point.
inline FiniteMetricSpace line_space(const std::vector<Rational>& coords) {
  const std::size_t n = coords.size();
  if (n < 2) fail("InvalidParams", "line needs at least 2 coordinates");
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dist[i][j] = abs(coords[i] - coords[j]);
      if (i != j && dist[i][j] == 0) {
        fail("InvalidParams", "duplicate line coordinate " + format_rational(coords[i]));
      }
    }
  }
  return FiniteMetricSpace::build(detail::default_point_ids(n), "p0", std::move(dist));
}

namespace detail {
inline FiniteMetricSpace coordinate_space(const std::vector<std::vector<Rational>>& pts,
                                          bool max_metric) {
  const std::size_t n = pts.size();
  if (n < 2) fail("InvalidParams", "coordinate space needs at least 2 points");
  const std::size_t dim = pts[0].size();
  if (dim == 0) fail("InvalidParams", "coordinate points need at least one coordinate");
  for (const auto& p : pts) {
    if (p.size() != dim) fail("InvalidParams", "coordinate points have mixed dimensions");
  }
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational d(0);
      for (std::size_t k = 0; k < dim; ++k) {
        const Rational delta = abs(pts[i][k] - pts[j][k]);
        d = max_metric ? (delta > d ? delta : d) : Rational(d + delta);
      }
      if (d == 0) fail("InvalidParams", "duplicate coordinate point at indices " +
                                            std::to_string(i) + " and " + std::to_string(j));
      dist[i][j] = d;
      dist[j][i] = d;
    }
  }
  return FiniteMetricSpace::build(default_point_ids(n), "p0", std::move(dist));
}
}  // namespace detail

// Coordinate-wise sum metric over rational points.
inline FiniteMetricSpace l1_space(const std::vector<std::vector<Rational>>& pts) {
  return detail::coordinate_space(pts, /*max_metric=*/false);
}

// Coordinate-wise max metric over rational points.
inline FiniteMetricSpace linf_space(const std::vector<std::vector<Rational>>& pts) {
  return detail::coordinate_space(pts, /*max_metric=*/true);
}

}  // namespace freelip
