#pragma once

// Dense exact-rational linear programming: a small modeling layer plus a
// two-phase primal simplex with Bland's rule. Deterministic and exact; the
// models in this library stay within a few hundred variables.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "freelip/error.hpp"
#include "freelip/rational.hpp"

namespace freelip {

// Sparse affine expression over model variables.
class LinExpr {
 public:
  LinExpr() = default;
  /*implicit*/ LinExpr(const Rational& constant) : constant_(constant) {}

  LinExpr& add(int var, const Rational& coef) {
    if (coef != 0) {
      const auto [it, fresh] = coef_.emplace(var, coef);
      if (!fresh) {
        it->second += coef;
        if (it->second == 0) coef_.erase(it);
      }
    }
    return *this;
  }

  LinExpr& add_constant(const Rational& c) {
    constant_ += c;
    return *this;
  }

  static LinExpr term(int var, const Rational& coef = Rational(1)) {
    LinExpr e;
    e.add(var, coef);
    return e;
  }

  LinExpr& operator+=(const LinExpr& other) {
    for (const auto& [v, c] : other.coef_) add(v, c);
    constant_ += other.constant_;
    return *this;
  }

  LinExpr& operator-=(const LinExpr& other) {
    for (const auto& [v, c] : other.coef_) add(v, -c);
    constant_ -= other.constant_;
    return *this;
  }

  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }

  friend LinExpr operator*(const Rational& c, LinExpr e) {
    LinExpr out;
    if (c != 0) {
      for (const auto& [v, k] : e.coef_) out.coef_.emplace(v, c * k);
      out.constant_ = c * e.constant_;
    }
    return out;
  }

  const std::map<int, Rational>& coefficients() const { return coef_; }
  const Rational& constant() const { return constant_; }

  Rational evaluate(const std::vector<Rational>& values) const {
    Rational out = constant_;
    for (const auto& [v, c] : coef_) out += c * values.at(static_cast<std::size_t>(v));
    return out;
  }

 private:
  std::map<int, Rational> coef_;
  Rational constant_{0};
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational objective;              // valid when optimal
  std::vector<Rational> values;    // one per model variable, valid when optimal

  const Rational& value(int var) const { return values.at(static_cast<std::size_t>(var)); }
};

class LpModel {
 public:
  int add_var(bool nonneg = true) {
    nonneg_.push_back(nonneg);
    return static_cast<int>(nonneg_.size()) - 1;
  }

  std::size_t num_vars() const { return nonneg_.size(); }

  void add_le(const LinExpr& e, const Rational& rhs) { add_con(e, '<', rhs); }
  void add_ge(const LinExpr& e, const Rational& rhs) { add_con(e, '>', rhs); }
  void add_eq(const LinExpr& e, const Rational& rhs) { add_con(e, '=', rhs); }

  void minimize(const LinExpr& objective) { objective_ = objective; }

  LpResult solve() const;

 private:
  struct Con {
    std::map<int, Rational> coef;
    char rel;
    Rational rhs;
  };

  void add_con(const LinExpr& e, char rel, const Rational& rhs) {
    cons_.push_back({e.coefficients(), rel, rhs - e.constant()});
  }

  std::vector<bool> nonneg_;
  std::vector<Con> cons_;
  LinExpr objective_;
};

namespace detail {

// Full-tableau simplex over rows of [A | b] plus a maintained reduced-cost
// row. Bland's rule on both the entering and leaving choice prevents
// cycling; every comparison is exact.
class SimplexTableau {
 public:
  SimplexTableau(std::vector<std::vector<Rational>> rows, std::vector<int> basis,
                 std::size_t num_cols)
      : rows_(std::move(rows)), basis_(std::move(basis)), num_cols_(num_cols) {}

  // cost[j] for each column; returns status. allowed_cols limits entering
  // candidates (used to bar artificial columns in phase 2).
  LpStatus run(const std::vector<Rational>& cost, std::size_t allowed_cols) {
    load_cost_row(cost);
    while (true) {
      int enter = -1;
      for (std::size_t j = 0; j < allowed_cols; ++j) {
        if (cost_row_[j] < 0) {
          enter = static_cast<int>(j);
          break;
        }
      }
      if (enter < 0) return LpStatus::optimal;
      int leave = -1;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][static_cast<std::size_t>(enter)];
        if (a <= 0) continue;
        if (leave < 0) {
          leave = static_cast<int>(i);
          continue;
        }
        const std::size_t l = static_cast<std::size_t>(leave);
        const Rational lhs = rhs(i) * rows_[l][static_cast<std::size_t>(enter)];
        const Rational rhs_v = rhs(l) * a;
        if (lhs < rhs_v || (lhs == rhs_v && basis_[i] < basis_[l])) {
          leave = static_cast<int>(i);
        }
      }
      if (leave < 0) return LpStatus::unbounded;
      pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
    }
  }

  const Rational& rhs(std::size_t row) const { return rows_[row][num_cols_]; }
  const std::vector<int>& basis() const { return basis_; }
  std::size_t num_rows() const { return rows_.size(); }
  const Rational& entry(std::size_t row, std::size_t col) const { return rows_[row][col]; }
  const Rational& cost_rhs() const { return cost_row_[num_cols_]; }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = Rational(1) / rows_[row][col];
    for (auto& v : rows_[row]) v *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == row) continue;
      const Rational factor = rows_[i][col];
      if (factor == 0) continue;
      for (std::size_t j = 0; j <= num_cols_; ++j) rows_[i][j] -= factor * rows_[row][j];
    }
    const Rational factor = cost_row_[col];
    if (factor != 0) {
      for (std::size_t j = 0; j <= num_cols_; ++j) cost_row_[j] -= factor * rows_[row][j];
    }
    basis_[row] = static_cast<int>(col);
  }

  void drop_row(std::size_t row) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

 private:
  void load_cost_row(const std::vector<Rational>& cost) {
    cost_row_.assign(num_cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < num_cols_; ++j) cost_row_[j] = cost[j];
    // Reduce against the current basis: subtract c_B times each row.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational cb = cost[static_cast<std::size_t>(basis_[i])];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= num_cols_; ++j) cost_row_[j] -= cb * rows_[i][j];
    }
  }

  std::vector<std::vector<Rational>> rows_;
  std::vector<int> basis_;
  std::size_t num_cols_;
  std::vector<Rational> cost_row_;
};

}  // namespace detail

inline LpResult LpModel::solve() const {
  // Standard form: free variables split as plus-minus, a slack per
  // inequality, rows normalized to nonnegative right-hand sides, then one
  // artificial column per row for phase 1.
  std::vector<int> col_plus(nonneg_.size()), col_minus(nonneg_.size(), -1);
  std::size_t n_struct = 0;
  for (std::size_t v = 0; v < nonneg_.size(); ++v) {
    col_plus[v] = static_cast<int>(n_struct++);
    if (!nonneg_[v]) col_minus[v] = static_cast<int>(n_struct++);
  }
  const std::size_t n_slack = [&] {
    std::size_t k = 0;
    for (const auto& c : cons_) k += c.rel != '=';
    return k;
  }();
  const std::size_t m = cons_.size();
  const std::size_t n_real = n_struct + n_slack;
  const std::size_t n_total = n_real + m;  // + artificials

  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(n_total + 1, Rational(0)));
  std::vector<int> basis(m);
  std::size_t slack_at = n_struct;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& con = cons_[i];
    for (const auto& [v, c] : con.coef) {
      rows[i][static_cast<std::size_t>(col_plus[static_cast<std::size_t>(v)])] += c;
      if (col_minus[static_cast<std::size_t>(v)] >= 0) {
        rows[i][static_cast<std::size_t>(col_minus[static_cast<std::size_t>(v)])] -= c;
      }
    }
    if (con.rel == '<') {
      rows[i][slack_at++] = 1;
    } else if (con.rel == '>') {
      rows[i][slack_at++] = -1;
    }
    rows[i][n_total] = con.rhs;
    if (rows[i][n_total] < 0) {
      for (auto& x : rows[i]) x = -x;
    }
    rows[i][n_real + i] = 1;  // artificial
    basis[i] = static_cast<int>(n_real + i);
  }

  detail::SimplexTableau tableau(std::move(rows), std::move(basis), n_total);

  {
    std::vector<Rational> phase1(n_total, Rational(0));
    for (std::size_t j = n_real; j < n_total; ++j) phase1[j] = 1;
    const LpStatus st = tableau.run(phase1, n_total);
    if (st != LpStatus::optimal) throw InternalError("phase 1 cannot be unbounded");
    if (tableau.cost_rhs() != 0) {
      // Phase-1 objective is minimized; its negated value sits in the cost
      // row rhs cell. Nonzero means some artificial is stuck positive.
      LpResult r;
      r.status = LpStatus::infeasible;
      return r;
    }
  }

  // Drive leftover artificials out of the (degenerate) basis.
  for (std::size_t i = tableau.num_rows(); i-- > 0;) {
    if (static_cast<std::size_t>(tableau.basis()[i]) < n_real) continue;
    std::size_t col = n_real;
    for (std::size_t j = 0; j < n_real; ++j) {
      if (tableau.entry(i, j) != 0) {
        col = j;
        break;
      }
    }
    if (col == n_real) {
      tableau.drop_row(i);  // redundant constraint
    } else {
      tableau.pivot(i, col);
    }
  }

  std::vector<Rational> cost(n_total, Rational(0));
  for (const auto& [v, c] : objective_.coefficients()) {
    cost[static_cast<std::size_t>(col_plus[static_cast<std::size_t>(v)])] += c;
    if (col_minus[static_cast<std::size_t>(v)] >= 0) {
      cost[static_cast<std::size_t>(col_minus[static_cast<std::size_t>(v)])] -= c;
    }
  }
  const LpStatus st = tableau.run(cost, n_real);
  LpResult result;
  result.status = st;
  if (st != LpStatus::optimal) return result;

  std::vector<Rational> col_values(n_total, Rational(0));
  for (std::size_t i = 0; i < tableau.num_rows(); ++i) {
    col_values[static_cast<std::size_t>(tableau.basis()[i])] = tableau.rhs(i);
  }
  result.values.resize(nonneg_.size());
  for (std::size_t v = 0; v < nonneg_.size(); ++v) {
    result.values[v] = col_values[static_cast<std::size_t>(col_plus[v])];
    if (col_minus[v] >= 0) result.values[v] -= col_values[static_cast<std::size_t>(col_minus[v])];
  }
  result.objective = objective_.evaluate(result.values);
  return result;
}

}  // namespace freelip
