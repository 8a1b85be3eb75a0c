#pragma once

// Molecules: finitely supported rational weight functions with total weight
// zero, the vectors of the free space over a finite pointed metric space.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "freelip/error.hpp"
#include "freelip/metric_space.hpp"
#include "freelip/rational.hpp"

namespace freelip {

class Molecule {
 public:
  Molecule(SpacePtr space, const std::map<std::string, Rational>& weights)
      : space_(std::move(space)) {
    Rational total(0);
    for (const auto& [id, w] : weights) {
      space_->index_of(id);  // throws UnknownPoint
      if (w == 0) continue;
      weights_.emplace(id, w);
      total += w;
    }
    if (total != 0) {
      fail("NotZeroSum", "molecule weights sum to " + format_rational(total) + ", expected 0");
    }
  }

  static Molecule zero(SpacePtr space) { return Molecule(std::move(space), {}); }

  static Molecule elementary(SpacePtr space, const std::string& p, const std::string& q) {
    if (p == q) fail("InvalidParams", "elementary molecule needs distinct points");
    return Molecule(std::move(space), {{p, Rational(1)}, {q, Rational(-1)}});
  }

  const SpacePtr& space() const { return space_; }
  // Canonical: zero entries are never stored.
  const std::map<std::string, Rational>& weights() const { return weights_; }

  Rational weight(const std::string& id) const {
    const auto it = weights_.find(id);
    return it == weights_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return weights_.empty(); }
  std::size_t support_size() const { return weights_.size(); }

  Molecule scaled(const Rational& c) const {
    std::map<std::string, Rational> w;
    if (c != 0) {
      for (const auto& [id, v] : weights_) w.emplace(id, c * v);
    }
    return Molecule(space_, w);
  }

  Molecule negated() const { return scaled(Rational(-1)); }

  friend Molecule operator+(const Molecule& a, const Molecule& b) {
    if (!same_space(a.space_, b.space_)) {
      fail("SpaceMismatch", "molecules live over different spaces");
    }
    std::map<std::string, Rational> w = a.weights_;
    for (const auto& [id, v] : b.weights_) w[id] += v;
    return Molecule(a.space_, w);
  }

  friend Molecule operator-(const Molecule& a, const Molecule& b) {
    return a + b.negated();
  }

  friend bool operator==(const Molecule& a, const Molecule& b) {
    return same_space(a.space_, b.space_) && a.weights_ == b.weights_;
  }

 private:
  SpacePtr space_;
  std::map<std::string, Rational> weights_;
};

// One expression of a molecule as a positive combination of elementary
// molecules: sum of lambda_i (delta_{p_i} - delta_{q_i}).
struct DecompositionTerm {
  Rational lambda;  // > 0
  std::string p, q;  // p != q
};

struct MoleculeDecomposition {
  std::vector<DecompositionTerm> terms;
  Rational cost;  // sum of lambda_i * d(p_i, q_i)
};

inline Molecule reconstruct(const SpacePtr& space, const std::vector<DecompositionTerm>& terms) {
  std::map<std::string, Rational> w;
  for (const auto& t : terms) {
    w[t.p] += t.lambda;
    w[t.q] -= t.lambda;
  }
  return Molecule(space, w);
}

inline Rational decomposition_cost(const SpacePtr& space,
                                   const std::vector<DecompositionTerm>& terms) {
  Rational cost(0);
  for (const auto& t : terms) {
    if (t.lambda <= 0) fail("InvalidParams", "decomposition coefficients must be positive");
    if (t.p == t.q) fail("InvalidParams", "decomposition terms need distinct endpoints");
    cost += t.lambda * space->dist(t.p, t.q);
  }
  return cost;
}

}  // namespace freelip
