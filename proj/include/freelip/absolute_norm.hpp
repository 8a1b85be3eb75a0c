#pragma once

// Absolute normalized norms on the plane, represented by the vertex polyline
// of the unit sphere inside the closed positive quadrant, from (1,0) to
// (0,1). The full ball is the reflection of that polyline across both axes.
// Evaluation is the support form over quadrant facets, which equals the
// gauge for these balls.

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "freelip/error.hpp"
#include "freelip/rational.hpp"

namespace freelip {

class AbsoluteNorm {
 public:
  using Point = std::array<Rational, 2>;

  // The polyline must run from (1,0) to (0,1) with x nonincreasing, y
  // nondecreasing, turning left (convex ball); no segment may be collinear
  // with the origin.
  static AbsoluteNorm from_quadrant_vertices(std::vector<Point> vertices,
                                             std::string label = "polygon",
                                             bool approximate = false) {
    if (vertices.size() < 2) fail("DegeneratePolygon", "need at least two vertices");
    if (vertices.front() != Point{Rational(1), Rational(0)} ||
        vertices.back() != Point{Rational(0), Rational(1)}) {
      fail("DegeneratePolygon", "vertex list must start at (1,0) and end at (0,1)");
    }
    for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
      const auto& v = vertices[k];
      const auto& w = vertices[k + 1];
      if (v[0] < 0 || v[1] < 0 || w[0] < 0 || w[1] < 0) {
        fail("DegeneratePolygon", "vertices must lie in the closed positive quadrant");
      }
      if (w[0] > v[0] || w[1] < v[1] || (w[0] == v[0] && w[1] == v[1])) {
        fail("DegeneratePolygon",
             "vertices must move strictly toward (0,1): x nonincreasing, y nondecreasing");
      }
    }
    for (std::size_t k = 0; k + 2 < vertices.size(); ++k) {
      const Rational ax = vertices[k + 1][0] - vertices[k][0];
      const Rational ay = vertices[k + 1][1] - vertices[k][1];
      const Rational bx = vertices[k + 2][0] - vertices[k + 1][0];
      const Rational by = vertices[k + 2][1] - vertices[k + 1][1];
      if (ax * by - ay * bx < 0) {
        fail("DegeneratePolygon", "vertex " + std::to_string(k + 1) +
                                      " makes the quadrant boundary non-convex");
      }
    }
    AbsoluteNorm norm;
    for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
      const auto& v = vertices[k];
      const auto& w = vertices[k + 1];
      // Facet line alpha x + beta y = 1 through v and w.
      const Rational det = v[0] * w[1] - v[1] * w[0];
      if (det == 0) fail("DegeneratePolygon", "facet through vertex " + std::to_string(k) +
                                                  " is collinear with the origin");
      const Rational alpha = (w[1] - v[1]) / det;
      const Rational beta = (v[0] - w[0]) / det;
      if (alpha < 0 || beta < 0) {
        fail("DegeneratePolygon", "facet normals must be nonnegative");
      }
      norm.facets_.push_back({alpha, beta});
    }
    norm.vertices_ = std::move(vertices);
    norm.label_ = std::move(label);
    norm.approximate_ = approximate;
    return norm;
  }

  static AbsoluteNorm l1() {
    return from_quadrant_vertices({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}, "l1");
  }

  static AbsoluteNorm linf() {
    return from_quadrant_vertices({{Rational(1), Rational(0)},
                                   {Rational(1), Rational(1)},
                                   {Rational(0), Rational(1)}},
                                  "linf");
  }

  // Inscribed polygonal approximant of the lp ball for an integer p >= 2.
  // The result is a genuine absolute normalized norm; only its relation to
  // lp is approximate, and it is labeled as such.
  static AbsoluteNorm lp_inscribed(unsigned p, unsigned arcs = 8) {
    if (p < 2) fail("InvalidParams", "lp_inscribed needs integer p >= 2");
    if (arcs < 1) fail("InvalidParams", "lp_inscribed needs at least one arc");
    const Integer scale = Integer(1) << 20;
    std::vector<Point> raw;
    for (unsigned k = 0; k <= arcs; ++k) {
      const Rational x = Rational(arcs - k) / arcs;
      // Largest y = t/scale with y^p <= 1 - x^p.
      Rational xp(1);
      for (unsigned e = 0; e < p; ++e) xp *= x;
      const Rational rest = 1 - xp;
      Integer lo(0), hi(scale);
      while (lo < hi) {
        const Integer mid = (lo + hi + 1) / 2;
        Rational yp(1);
        const Rational y = Rational(mid) / Rational(scale);
        for (unsigned e = 0; e < p; ++e) yp *= y;
        if (yp <= rest) {
          lo = mid;
        } else {
          hi = mid - 1;
        }
      }
      raw.push_back({x, Rational(lo) / Rational(scale)});
    }
    // Upper convex hull; rounding can dent convexity.
    std::vector<Point> hull;
    for (const auto& pt : raw) {
      while (hull.size() >= 2) {
        const auto& a = hull[hull.size() - 2];
        const auto& b = hull[hull.size() - 1];
        const Rational cross = (b[0] - a[0]) * (pt[1] - a[1]) - (b[1] - a[1]) * (pt[0] - a[0]);
        if (cross <= 0) {
          hull.pop_back();
        } else {
          break;
        }
      }
      hull.push_back(pt);
    }
    return from_quadrant_vertices(std::move(hull), "lp(" + std::to_string(p) + ")-inscribed",
                                  /*approximate=*/true);
  }

  const std::vector<Point>& quadrant_vertices() const { return vertices_; }
  const std::vector<Point>& facets() const { return facets_; }  // (alpha, beta)
  const std::string& label() const { return label_; }
  bool approximate() const { return approximate_; }

  // Support form over quadrant facets; arguments must be nonnegative.
  Rational eval_abs(const Rational& a, const Rational& b) const {
    Rational best(0);
    for (const auto& f : facets_) {
      const Rational v = f[0] * a + f[1] * b;
      if (v > best) best = v;
    }
    return best;
  }

  Rational eval(const Rational& a, const Rational& b) const {
    return eval_abs(abs(a), abs(b));
  }

  // Dual norm restricted to nonnegative arguments: support of the quadrant
  // vertices. This is all the composed sum-space dual ever needs.
  Rational dual_abs(const Rational& c, const Rational& d) const {
    Rational best(0);
    for (const auto& v : vertices_) {
      const Rational s = v[0] * c + v[1] * d;
      if (s > best) best = s;
    }
    return best;
  }

  friend bool operator==(const AbsoluteNorm& a, const AbsoluteNorm& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  AbsoluteNorm() = default;

  std::vector<Point> vertices_;
  std::vector<Point> facets_;
  std::string label_;
  bool approximate_ = false;
};

}  // namespace freelip
