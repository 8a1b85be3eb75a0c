#pragma once

// Continuous piecewise polynomials of degree <= 2 on [0,1] with rational
// breakpoints and coefficients, and their exact sup norm. Degree 2 is all
// the C[0,1] gallery ever needs: cutoff ramps times affine pieces.

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "freelip/error.hpp"
#include "freelip/rational.hpp"

namespace freelip {

class PiecewisePolynomial {
 public:
  using Coeffs = std::array<Rational, 3>;  // c0 + c1 x + c2 x^2, global coordinate

  PiecewisePolynomial(std::vector<Rational> breaks, std::vector<Coeffs> pieces)
      : breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
    if (breaks_.size() < 2 || pieces_.size() + 1 != breaks_.size()) {
      fail("InvalidParams", "piecewise data needs k+1 breakpoints for k pieces");
    }
    if (breaks_.front() != 0 || breaks_.back() != 1) {
      fail("InvalidParams", "domain must be [0,1]");
    }
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
      if (breaks_[i] >= breaks_[i + 1]) {
        fail("InvalidParams", "breakpoints must be strictly increasing");
      }
    }
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
      if (value_of(pieces_[i], breaks_[i + 1]) != value_of(pieces_[i + 1], breaks_[i + 1])) {
        fail("InvalidParams", "pieces disagree at breakpoint " + format_rational(breaks_[i + 1]));
      }
    }
  }

  static PiecewisePolynomial constant(const Rational& c) {
    return PiecewisePolynomial({Rational(0), Rational(1)}, {{c, Rational(0), Rational(0)}});
  }

  static PiecewisePolynomial zero() { return constant(Rational(0)); }

  const std::vector<Rational>& breaks() const { return breaks_; }
  const std::vector<Coeffs>& pieces() const { return pieces_; }

  int degree() const {
    int deg = 0;
    for (const auto& p : pieces_) {
      if (p[2] != 0) {
        deg = deg < 2 ? 2 : deg;
      } else if (p[1] != 0) {
        deg = deg < 1 ? 1 : deg;
      }
    }
    return deg;
  }

  Rational eval(const Rational& x) const {
    if (x < 0 || x > 1) fail("InvalidParams", "evaluation outside [0,1]");
    std::size_t piece = pieces_.size() - 1;
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
      if (x <= breaks_[i + 1]) {
        piece = i;
        break;
      }
    }
    return value_of(pieces_[piece], x);
  }

  friend PiecewisePolynomial operator+(const PiecewisePolynomial& a,
                                       const PiecewisePolynomial& b) {
    return combine(a, b, false);
  }

  friend PiecewisePolynomial operator-(const PiecewisePolynomial& a,
                                       const PiecewisePolynomial& b) {
    return combine(a, b, true);
  }

  PiecewisePolynomial scaled(const Rational& c) const {
    std::vector<Coeffs> pieces;
    for (const auto& p : pieces_) pieces.push_back({c * p[0], c * p[1], c * p[2]});
    return PiecewisePolynomial(breaks_, std::move(pieces));
  }

  // Product; the degrees must not add past 2.
  friend PiecewisePolynomial operator*(const PiecewisePolynomial& a,
                                       const PiecewisePolynomial& b) {
    const auto grid = merged_breaks(a, b);
    std::vector<Coeffs> pieces;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      const auto pa = a.piece_on(grid[i], grid[i + 1]);
      const auto pb = b.piece_on(grid[i], grid[i + 1]);
      Rational prod[5] = {Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)};
      for (int s = 0; s < 3; ++s) {
        for (int t = 0; t < 3; ++t) {
          prod[s + t] += pa[static_cast<std::size_t>(s)] * pb[static_cast<std::size_t>(t)];
        }
      }
      if (prod[3] != 0 || prod[4] != 0) {
        fail("InvalidParams", "product exceeds the degree-2 cap");
      }
      pieces.push_back({prod[0], prod[1], prod[2]});
    }
    return PiecewisePolynomial(grid, std::move(pieces));
  }

  // Exact sup of |f| over [0,1]: piece endpoints plus, for quadratic pieces,
  // the interior critical point -c1/(2 c2) when it falls inside the piece.
  Rational sup_norm() const {
    Rational best(0);
    const auto feed = [&](const Rational& v) {
      const Rational a = abs(v);
      if (a > best) best = a;
    };
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      feed(value_of(pieces_[i], breaks_[i]));
      feed(value_of(pieces_[i], breaks_[i + 1]));
      if (pieces_[i][2] != 0) {
        const Rational crit = -pieces_[i][1] / (2 * pieces_[i][2]);
        if (crit > breaks_[i] && crit < breaks_[i + 1]) feed(value_of(pieces_[i], crit));
      }
    }
    return best;
  }

  // Exact check that the function vanishes identically on [lo, hi].
  bool vanishes_on(const Rational& lo, const Rational& hi) const {
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      const Rational a = breaks_[i] > lo ? breaks_[i] : lo;
      const Rational b = breaks_[i + 1] < hi ? breaks_[i + 1] : hi;
      if (a >= b) continue;
      // a nonzero quadratic has at most two roots, so check three points
      const Rational mid = (a + b) / 2;
      if (value_of(pieces_[i], a) != 0 || value_of(pieces_[i], mid) != 0 ||
          value_of(pieces_[i], b) != 0) {
        return false;
      }
    }
    return true;
  }

 private:
  static Rational value_of(const Coeffs& c, const Rational& x) {
    return c[0] + c[1] * x + c[2] * x * x;
  }

  Coeffs piece_on(const Rational& lo, const Rational& hi) const {
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
      if (breaks_[i] <= lo && hi <= breaks_[i + 1]) return pieces_[i];
    }
    throw InternalError("merged grid interval missed every piece");
  }

  static std::vector<Rational> merged_breaks(const PiecewisePolynomial& a,
                                             const PiecewisePolynomial& b) {
    std::vector<Rational> grid;
    std::size_t i = 0, j = 0;
    while (i < a.breaks_.size() || j < b.breaks_.size()) {
      Rational next;
      if (i < a.breaks_.size() && (j == b.breaks_.size() || a.breaks_[i] <= b.breaks_[j])) {
        next = a.breaks_[i];
      } else {
        next = b.breaks_[j];
      }
      while (i < a.breaks_.size() && a.breaks_[i] == next) ++i;
      while (j < b.breaks_.size() && b.breaks_[j] == next) ++j;
      grid.push_back(next);
    }
    return grid;
  }

  static PiecewisePolynomial combine(const PiecewisePolynomial& a, const PiecewisePolynomial& b,
                                     bool subtract) {
    const auto grid = merged_breaks(a, b);
    std::vector<Coeffs> pieces;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      const auto pa = a.piece_on(grid[i], grid[i + 1]);
      const auto pb = b.piece_on(grid[i], grid[i + 1]);
      Coeffs c;
      for (std::size_t k = 0; k < 3; ++k) c[k] = subtract ? pa[k] - pb[k] : pa[k] + pb[k];
      pieces.push_back(c);
    }
    return PiecewisePolynomial(grid, std::move(pieces));
  }

  std::vector<Rational> breaks_;
  std::vector<Coeffs> pieces_;
};

}  // namespace freelip
