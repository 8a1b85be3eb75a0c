#pragma once

// Lipschitz functions vanishing at the base point, their exact norm, the
// duality pairing with molecules, McShane extension, and optimal dual
// witnesses realizing Kantorovich-Rubinstein attainment on finite spaces.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "freelip/error.hpp"
#include "freelip/freespace.hpp"
#include "freelip/metric_space.hpp"
#include "freelip/molecule.hpp"
#include "freelip/simplex.hpp"

namespace freelip {

class LipschitzFunction {
 public:
  // values must be total on the space's points and vanish at the base.
  LipschitzFunction(SpacePtr space, const std::map<std::string, Rational>& values)
      : space_(std::move(space)) {
    values_.resize(space_->size());
    std::size_t seen = 0;
    for (const auto& [id, v] : values) {
      values_[space_->index_of(id)] = v;
      ++seen;
    }
    if (seen != space_->size()) {
      fail("InvalidParams", "function values must be total on the space");
    }
    if (values_[space_->base_index()] != 0) {
      fail("InvalidParams", "function must vanish at the base point " + space_->base());
    }
  }

  static LipschitzFunction zero(SpacePtr space) {
    std::map<std::string, Rational> v;
    for (const auto& id : space->points()) v[id] = 0;
    return LipschitzFunction(std::move(space), v);
  }

  const SpacePtr& space() const { return space_; }
  const Rational& value(std::size_t i) const { return values_[i]; }
  const Rational& value(const std::string& id) const { return values_[space_->index_of(id)]; }
  const std::vector<Rational>& values() const { return values_; }

  std::map<std::string, Rational> value_map() const {
    std::map<std::string, Rational> out;
    for (std::size_t i = 0; i < values_.size(); ++i) out[space_->points()[i]] = values_[i];
    return out;
  }

 private:
  SpacePtr space_;
  std::vector<Rational> values_;
};

// Exact best Lipschitz constant. The running maximum is kept as a
// numerator/denominator pair and candidates are compared by
// cross-multiplication, never through reduced quotients.
inline Rational lip_norm(const LipschitzFunction& f) {
  const auto& space = *f.space();
  Rational best_num(0), best_den(1);
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      const Rational num = abs(f.value(i) - f.value(j));
      const Rational& den = space.dist(i, j);
      if (num * best_den > best_num * den) {
        best_num = num;
        best_den = den;
      }
    }
  }
  return best_num / best_den;
}

// Duality pairing sum f(p) mu(p). Adding a constant to f does not change it
// because molecule weights sum to zero.
inline Rational pairing(const LipschitzFunction& f, const Molecule& mol) {
  if (!same_space(f.space(), mol.space())) {
    fail("SpaceMismatch", "function and molecule live over different spaces");
  }
  Rational out(0);
  for (const auto& [id, w] : mol.weights()) out += f.value(id) * w;
  return out;
}

// McShane extension: x -> min over p in S of partial(p) + L d(x,p), shifted
// afterwards so the base point maps to 0. The pre-shift extension agrees
// with partial on S and is L-Lipschitz on the whole space.
inline LipschitzFunction mcshane_extend(const SpacePtr& space,
                                        const std::map<std::string, Rational>& partial,
                                        const Rational& L) {
  if (partial.empty()) fail("InvalidParams", "extension needs a nonempty subset");
  if (L < 0) fail("InvalidParams", "Lipschitz constant must be nonnegative");
  for (const auto& [p, vp] : partial) {
    for (const auto& [q, vq] : partial) {
      if (p < q && abs(vp - vq) > L * space->dist(p, q)) {
        fail("NotLipschitzOnSubset", "|f(" + p + ")-f(" + q + ")| = " + format_rational(abs(vp - vq)) +
                                         " exceeds L*d = " + format_rational(L * space->dist(p, q)));
      }
    }
  }
  std::vector<Rational> extended(space->size());
  for (std::size_t i = 0; i < space->size(); ++i) {
    std::optional<Rational> best;
    for (const auto& [p, vp] : partial) {
      const Rational cand = vp + L * space->dist(space->points()[i], p);
      if (!best || cand < *best) best = cand;
    }
    extended[i] = *best;
  }
  const Rational shift = extended[space->base_index()];
  std::map<std::string, Rational> out;
  for (std::size_t i = 0; i < space->size(); ++i) {
    out[space->points()[i]] = extended[i] - shift;
  }
  return LipschitzFunction(space, out);
}

// Optimal dual witness: f with lip_norm(f) <= 1 and pairing(f, mol) equal to
// aenorm(mol). Solves the dual LP with two-sided Lipschitz constraints over
// supp(mol) and the base point, McShane-extends with L = 1, and verifies the
// result before returning it.
inline LipschitzFunction dual_witness(const Molecule& mol) {
  if (mol.is_zero()) fail("ZeroMolecule", "the zero molecule has no dual witness");
  const SpacePtr& space = mol.space();

  std::set<std::size_t> support_idx;
  support_idx.insert(space->base_index());
  for (const auto& [id, w] : mol.weights()) support_idx.insert(space->index_of(id));
  const std::vector<std::size_t> nodes(support_idx.begin(), support_idx.end());

  LpModel lp;
  std::map<std::size_t, int> var;  // space index -> LP var; base pinned to 0
  for (const std::size_t i : nodes) {
    if (i != space->base_index()) var[i] = lp.add_var(/*nonneg=*/false);
  }
  const auto value_expr = [&](std::size_t i) {
    return i == space->base_index() ? LinExpr() : LinExpr::term(var.at(i));
  };
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      const std::size_t i = nodes[a], j = nodes[b];
      const LinExpr diff = value_expr(i) - value_expr(j);
      lp.add_le(diff, space->dist(i, j));
      lp.add_ge(diff, -space->dist(i, j));
    }
  }
  LinExpr objective;
  for (const auto& [id, w] : mol.weights()) {
    const std::size_t i = space->index_of(id);
    objective += w * value_expr(i);
  }
  lp.minimize(Rational(-1) * objective);
  const LpResult sol = lp.solve();
  if (sol.status != LpStatus::optimal) {
    throw InternalError("Lipschitz dual LP must be feasible and bounded");
  }

  std::map<std::string, Rational> partial;
  partial[space->base()] = 0;
  for (const auto& [i, v] : var) partial[space->points()[i]] = sol.value(v);
  const LipschitzFunction witness = mcshane_extend(space, partial, Rational(1));

  const Rational norm = aenorm(mol);
  if (lip_norm(witness) > 1 || pairing(witness, mol) != norm) {
    throw InternalError("dual witness failed post-verification");
  }
  return witness;
}

}  // namespace freelip
