#pragma once

// Deterministic instance generators for property tests and the embedded
// acceptance suite. The generator is a fixed splitmix64 stream, so every
// "random" suite is reproducible bit for bit on any platform.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "freelip/lipschitz.hpp"
#include "freelip/metric_space.hpp"
#include "freelip/molecule.hpp"
#include "freelip/rational.hpp"

namespace freelip {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  // Uniform-ish small rational in [lo, hi] with denominator up to max_den.
  Rational rational(long long lo, long long hi, long long max_den = 6) {
    const long long den = range(1, max_den);
    const long long num = range(lo * den, hi * den);
    return Rational(num) / Rational(den);
  }

  Rational nonzero_rational(long long lo, long long hi, long long max_den = 6) {
    while (true) {
      const Rational r = rational(lo, hi, max_den);
      if (r != 0) return r;
    }
  }

 private:
  std::uint64_t state_;
};

// Random metric space on n points: random symmetric edge weights in [1, 4]
// tightened by Floyd-Warshall closure, so triangle inequalities are often
// tight; occasionally a uniform or line metric instead.
inline FiniteMetricSpace random_space(Rng& rng, std::size_t n) {
  const auto kind = rng.below(4);
  if (kind == 0) return uniform_discrete(n);
  if (kind == 1) {
    std::vector<Rational> coords;
    Rational x(0);
    coords.push_back(x);
    for (std::size_t i = 1; i < n; ++i) {
      x += rng.rational(1, 3, 4);
      coords.push_back(x);
    }
    return line_space(coords);
  }
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i][j] = d[j][i] = Rational(1) + rng.rational(0, 3, 4);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return FiniteMetricSpace::build(detail::default_point_ids(n), "p0", std::move(d));
}

// Nonzero molecule with support of at most max_support points.
inline Molecule random_molecule(Rng& rng, const SpacePtr& space, std::size_t max_support) {
  const std::size_t n = space->size();
  while (true) {
    const std::size_t k =
        static_cast<std::size_t>(rng.range(2, static_cast<long long>(std::min(max_support, n))));
    std::vector<std::size_t> picks;
    while (picks.size() < k) {
      const std::size_t cand = rng.below(n);
      bool fresh = true;
      for (const std::size_t p : picks) fresh = fresh && p != cand;
      if (fresh) picks.push_back(cand);
    }
    std::map<std::string, Rational> w;
    Rational sum(0);
    for (std::size_t i = 0; i + 1 < picks.size(); ++i) {
      const Rational v = rng.nonzero_rational(-3, 3, 4);
      w[space->points()[picks[i]]] = v;
      sum += v;
    }
    w[space->points()[picks.back()]] = -sum;
    Molecule mol(space, w);
    if (!mol.is_zero()) return mol;
  }
}

// Molecule whose positive and negative supports both stay within the given
// bound (for the brute-force oracle's 4x4 limit).
inline Molecule random_molecule_bounded_sides(Rng& rng, const SpacePtr& space,
                                              std::size_t max_side) {
  while (true) {
    const Molecule mol = random_molecule(rng, space, std::min<std::size_t>(2 * max_side, space->size()));
    std::size_t pos = 0, neg = 0;
    for (const auto& [id, w] : mol.weights()) (w > 0 ? pos : neg) += 1;
    if (pos <= max_side && neg <= max_side) return mol;
  }
}

// Arbitrary base-anchored function values (no Lipschitz bound intended).
inline LipschitzFunction random_function(Rng& rng, const SpacePtr& space) {
  std::map<std::string, Rational> values;
  for (const auto& id : space->points()) {
    values[id] = id == space->base() ? Rational(0) : rng.rational(-4, 4, 4);
  }
  return LipschitzFunction(space, values);
}

}  // namespace freelip
