#pragma once

// Norm oracles: a handle for a polyhedral normed space exposing exact norm
// evaluation, an LP epigraph (linear constraints making t >= ||v|| for
// affine coordinate expressions v), and the exact dual norm. Oracles for
// free spaces, plane polygon norms, coordinate l1/linf, and absolute sums.

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "freelip/absolute_norm.hpp"
#include "freelip/error.hpp"
#include "freelip/freespace.hpp"
#include "freelip/metric_space.hpp"
#include "freelip/molecule.hpp"
#include "freelip/simplex.hpp"

namespace freelip {

class NormOracle {
 public:
  virtual ~NormOracle() = default;

  virtual std::size_t dimension() const = 0;
  virtual std::string tag() const = 0;
  virtual bool polyhedral() const { return true; }

  virtual Rational eval(const std::vector<Rational>& v) const = 0;

  // Adds constraints to lp under which feasibility of (v, t) is exactly
  // t >= ||v||; minimizing t therefore recovers the norm.
  virtual void emit_epigraph(LpModel& lp, const std::vector<LinExpr>& v,
                             const LinExpr& t) const = 0;

  virtual Rational dual_norm(const std::vector<Rational>& phi) const = 0;

  // Functional application of a dual vector: the plain dot product.
  Rational apply_dual(const std::vector<Rational>& phi, const std::vector<Rational>& v) const {
    check_dim(phi.size());
    check_dim(v.size());
    Rational out(0);
    for (std::size_t i = 0; i < v.size(); ++i) out += phi[i] * v[i];
    return out;
  }

  // Norm via the epigraph: LP-minimize t. Used as the second route in the
  // dual-route soundness checks; everyday evaluation goes through eval().
  Rational eval_by_lp(const std::vector<Rational>& v) const {
    check_dim(v.size());
    LpModel lp;
    const int t = lp.add_var();
    std::vector<LinExpr> coords;
    for (const auto& c : v) coords.emplace_back(c);
    emit_epigraph(lp, coords, LinExpr::term(t));
    lp.minimize(LinExpr::term(t));
    const auto r = lp.solve();
    if (r.status != LpStatus::optimal) {
      throw InternalError("epigraph LP for " + tag() + " was " +
                          (r.status == LpStatus::infeasible ? "infeasible" : "unbounded"));
    }
    return r.objective;
  }

 protected:
  void check_dim(std::size_t got) const {
    if (got != dimension()) {
      fail("InvalidParams", tag() + " expects dimension " + std::to_string(dimension()) +
                                ", got " + std::to_string(got));
    }
  }
};

using OraclePtr = std::shared_ptr<const NormOracle>;

namespace vec {

inline std::vector<Rational> add(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline std::vector<Rational> sub(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline std::vector<Rational> scale(const Rational& c, const std::vector<Rational>& a) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

inline bool is_zero(const std::vector<Rational>& a) {
  for (const auto& x : a) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace vec

// Free space over a finite metric space, restricted to a ground set of
// points. Coordinates are molecule weights in ground order and must sum to
// zero. The epigraph routes mass over the complete digraph on the ground
// set with conservation at every node.
class FreeSpaceOracle final : public NormOracle {
 public:
  FreeSpaceOracle(SpacePtr space, std::vector<std::string> ground)
      : space_(std::move(space)), ground_(std::move(ground)) {
    if (ground_.empty()) {
      for (const auto& id : space_->points()) ground_.push_back(id);
    }
    if (ground_.size() < 2) fail("InvalidParams", "free-space oracle needs >= 2 ground points");
    for (std::size_t i = 0; i < ground_.size(); ++i) {
      space_->index_of(ground_[i]);
      for (std::size_t j = i + 1; j < ground_.size(); ++j) {
        if (ground_[i] == ground_[j]) {
          fail("InvalidParams", "duplicate ground point '" + ground_[i] + "'");
        }
      }
    }
  }

  explicit FreeSpaceOracle(SpacePtr space) : FreeSpaceOracle(std::move(space), {}) {}

  std::size_t dimension() const override { return ground_.size(); }

  std::string tag() const override {
    std::string g;
    for (const auto& id : ground_) g += (g.empty() ? "" : ",") + id;
    return "free-space-over-M[ground=" + g + "]";
  }

  Rational eval(const std::vector<Rational>& v) const override {
    return aenorm(to_molecule(v));
  }

  void emit_epigraph(LpModel& lp, const std::vector<LinExpr>& v,
                     const LinExpr& t) const override {
    check_dim(v.size());
    const std::size_t n = ground_.size();
    std::vector<std::vector<int>> flow(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) flow[i][j] = lp.add_var();
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      LinExpr conservation;
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        conservation.add(flow[i][j], Rational(1));
        conservation.add(flow[j][i], Rational(-1));
      }
      conservation -= v[i];
      lp.add_eq(conservation, Rational(0));
    }
    LinExpr cost;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) cost.add(flow[i][j], space_->dist(ground_[i], ground_[j]));
      }
    }
    lp.add_le(cost - t, Rational(0));
  }

  // Dual vectors are potentials on the ground points; the dual norm is the
  // Lipschitz constant over the ground set.
  Rational dual_norm(const std::vector<Rational>& phi) const override {
    check_dim(phi.size());
    Rational best(0);
    for (std::size_t i = 0; i < ground_.size(); ++i) {
      for (std::size_t j = i + 1; j < ground_.size(); ++j) {
        const Rational cand = abs(phi[i] - phi[j]) / space_->dist(ground_[i], ground_[j]);
        if (cand > best) best = cand;
      }
    }
    return best;
  }

  const SpacePtr& space() const { return space_; }
  const std::vector<std::string>& ground() const { return ground_; }

  Molecule to_molecule(const std::vector<Rational>& v) const {
    check_dim(v.size());
    std::map<std::string, Rational> w;
    for (std::size_t i = 0; i < ground_.size(); ++i) {
      if (v[i] != 0) w[ground_[i]] = v[i];
    }
    return Molecule(space_, w);  // throws NotZeroSum for non-molecules
  }

  std::vector<Rational> from_molecule(const Molecule& mol) const {
    std::vector<Rational> v(ground_.size(), Rational(0));
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < ground_.size(); ++i) pos[ground_[i]] = i;
    for (const auto& [id, w] : mol.weights()) {
      const auto it = pos.find(id);
      if (it == pos.end()) {
        fail("InvalidParams", "molecule support leaves the oracle ground set at '" + id + "'");
      }
      v[it->second] = w;
    }
    return v;
  }

 private:
  SpacePtr space_;
  std::vector<std::string> ground_;
};

// Plane norm given by an absolute polygon.
class PolygonNormOracle final : public NormOracle {
 public:
  explicit PolygonNormOracle(AbsoluteNorm norm) : norm_(std::move(norm)) {}

  std::size_t dimension() const override { return 2; }
  std::string tag() const override { return "polygonal-plane-norm[" + norm_.label() + "]"; }

  Rational eval(const std::vector<Rational>& v) const override {
    check_dim(v.size());
    return norm_.eval(v[0], v[1]);
  }

  void emit_epigraph(LpModel& lp, const std::vector<LinExpr>& v,
                     const LinExpr& t) const override {
    check_dim(v.size());
    for (const auto& f : norm_.facets()) {
      for (const int s0 : {1, -1}) {
        for (const int s1 : {1, -1}) {
          lp.add_le(Rational(s0) * f[0] * v[0] + Rational(s1) * f[1] * v[1] - t, Rational(0));
        }
      }
    }
  }

  Rational dual_norm(const std::vector<Rational>& phi) const override {
    check_dim(phi.size());
    return norm_.dual_abs(abs(phi[0]), abs(phi[1]));
  }

  const AbsoluteNorm& norm() const { return norm_; }

 private:
  AbsoluteNorm norm_;
};

// Coordinate l1 norm in n dimensions.
class L1Oracle final : public NormOracle {
 public:
  explicit L1Oracle(std::size_t dim) : dim_(dim) {
    if (dim_ == 0) fail("InvalidParams", "l1 oracle needs dimension >= 1");
  }

  std::size_t dimension() const override { return dim_; }
  std::string tag() const override { return "l1[" + std::to_string(dim_) + "]"; }

  Rational eval(const std::vector<Rational>& v) const override {
    check_dim(v.size());
    Rational out(0);
    for (const auto& x : v) out += abs(x);
    return out;
  }

  void emit_epigraph(LpModel& lp, const std::vector<LinExpr>& v,
                     const LinExpr& t) const override {
    check_dim(v.size());
    LinExpr total;
    for (const auto& x : v) {
      const int s = lp.add_var();
      lp.add_le(x - LinExpr::term(s), Rational(0));
      lp.add_le(Rational(-1) * x - LinExpr::term(s), Rational(0));
      total.add(s, Rational(1));
    }
    lp.add_le(total - t, Rational(0));
  }

  Rational dual_norm(const std::vector<Rational>& phi) const override {
    check_dim(phi.size());
    Rational best(0);
    for (const auto& x : phi) {
      if (abs(x) > best) best = abs(x);
    }
    return best;
  }

 private:
  std::size_t dim_;
};

// Coordinate linf norm in n dimensions.
class LinfOracle final : public NormOracle {
 public:
  explicit LinfOracle(std::size_t dim) : dim_(dim) {
    if (dim_ == 0) fail("InvalidParams", "linf oracle needs dimension >= 1");
  }

  std::size_t dimension() const override { return dim_; }
  std::string tag() const override { return "linf[" + std::to_string(dim_) + "]"; }

  Rational eval(const std::vector<Rational>& v) const override {
    check_dim(v.size());
    Rational best(0);
    for (const auto& x : v) {
      if (abs(x) > best) best = abs(x);
    }
    return best;
  }

  void emit_epigraph(LpModel& lp, const std::vector<LinExpr>& v,
                     const LinExpr& t) const override {
    check_dim(v.size());
    for (const auto& x : v) {
      lp.add_le(x - t, Rational(0));
      lp.add_le(Rational(-1) * x - t, Rational(0));
    }
  }

  Rational dual_norm(const std::vector<Rational>& phi) const override {
    check_dim(phi.size());
    Rational out(0);
    for (const auto& x : phi) out += abs(x);
    return out;
  }

 private:
  std::size_t dim_;
};

// Absolute sum X +_N Y: coordinates are X's followed by Y's, the norm is
// N(||x||_X, ||y||_Y). Monotonicity of absolute norms on the quadrant makes
// the composed epigraph (component slacks fed into N's facets) exact.
class SumSpaceOracle final : public NormOracle {
 public:
  SumSpaceOracle(OraclePtr x, OraclePtr y, AbsoluteNorm norm)
      : x_(std::move(x)), y_(std::move(y)), norm_(std::move(norm)) {}

  std::size_t dimension() const override { return x_->dimension() + y_->dimension(); }

  std::string tag() const override {
    return "absolute-sum[" + norm_.label() + "; " + x_->tag() + "; " + y_->tag() + "]";
  }

  bool polyhedral() const override { return x_->polyhedral() && y_->polyhedral(); }

  Rational eval(const std::vector<Rational>& v) const override {
    check_dim(v.size());
    const auto [vx, vy] = split_values(v);
    return norm_.eval_abs(x_->eval(vx), y_->eval(vy));
  }

  void emit_epigraph(LpModel& lp, const std::vector<LinExpr>& v,
                     const LinExpr& t) const override {
    check_dim(v.size());
    const std::vector<LinExpr> vx(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(x_->dimension()));
    const std::vector<LinExpr> vy(v.begin() + static_cast<std::ptrdiff_t>(x_->dimension()), v.end());
    const int sx = lp.add_var();
    const int sy = lp.add_var();
    x_->emit_epigraph(lp, vx, LinExpr::term(sx));
    y_->emit_epigraph(lp, vy, LinExpr::term(sy));
    for (const auto& f : norm_.facets()) {
      lp.add_le(f[0] * LinExpr::term(sx) + f[1] * LinExpr::term(sy) - t, Rational(0));
    }
  }

  Rational dual_norm(const std::vector<Rational>& phi) const override {
    check_dim(phi.size());
    const auto [px, py] = split_values(phi);
    return norm_.dual_abs(x_->dual_norm(px), y_->dual_norm(py));
  }

  const OraclePtr& x() const { return x_; }
  const OraclePtr& y() const { return y_; }
  const AbsoluteNorm& norm() const { return norm_; }

  std::pair<std::vector<Rational>, std::vector<Rational>> split_values(
      const std::vector<Rational>& v) const {
    check_dim(v.size());
    return {std::vector<Rational>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(x_->dimension())),
            std::vector<Rational>(v.begin() + static_cast<std::ptrdiff_t>(x_->dimension()), v.end())};
  }

  std::vector<Rational> join(const std::vector<Rational>& vx,
                             const std::vector<Rational>& vy) const {
    std::vector<Rational> v = vx;
    v.insert(v.end(), vy.begin(), vy.end());
    check_dim(v.size());
    return v;
  }

 private:
  OraclePtr x_, y_;
  AbsoluteNorm norm_;
};

}  // namespace freelip
