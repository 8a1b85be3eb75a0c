#pragma once

// Finite-resolution long-trapezoid checks. A candidate pair (u,v) witnesses
// the property when, for every x,y in N,
//   (1-eps) (d(x,y) + d(u,v)) <= d(x,u) + d(y,v)                       (1)
// and, for the strong variant, for every x,y,z,w in N,
//   (1-eps) (d(x,y) + d(z,w) + 2 d(u,v))
//        <= d(x,u) + d(y,u) + d(z,v) + d(w,v).                        (2)
// Both inequalities are evaluated non-strictly and exactly. The checker
// quantifies (u,v) over a caller-supplied pool; a Failure with the full pool
// on a finite space is the expected theoretical outcome, since (1) fails at
// (x,y) = (u,v) whenever both endpoints lie in N.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freelip/error.hpp"
#include "freelip/metric_space.hpp"
#include "freelip/rational.hpp"

namespace freelip {

struct TrapezoidInstance {
  SpacePtr space;
  std::vector<std::string> n_set;
  std::vector<std::pair<std::string, std::string>> pool;
  Rational eps;  // in [0, 1)
};

struct TrapezoidViolation {
  int family = 1;                        // inequality (1) or (2)
  std::array<std::string, 4> tuple;      // (x,y) or (x,y,z,w)
  std::size_t tuple_len = 2;
  Rational lhs, rhs;                     // evaluated sides, lhs > rhs
};

struct PoolPairEvidence {
  std::string u, v;
  std::optional<TrapezoidViolation> violation;  // nullopt: the pair works
};

struct TrapezoidReport {
  bool strong = false;
  Rational eps;
  std::optional<std::pair<std::string, std::string>> witness;  // first working pool pair
  std::vector<PoolPairEvidence> evidence;                      // one entry per pool pair
};

// Every ordered pair of distinct points, in point order.
inline std::vector<std::pair<std::string, std::string>> all_pairs_pool(
    const FiniteMetricSpace& space) {
  std::vector<std::pair<std::string, std::string>> pool;
  for (const auto& u : space.points()) {
    for (const auto& v : space.points()) {
      if (u != v) pool.emplace_back(u, v);
    }
  }
  return pool;
}

namespace detail {

inline void validate_trapezoid(const TrapezoidInstance& inst, bool eps_matters) {
  if (inst.n_set.empty()) fail("EmptyN", "the test subset N is empty");
  if (inst.pool.empty()) fail("EmptyPool", "the candidate pool is empty");
  for (const auto& p : inst.n_set) inst.space->index_of(p);
  for (const auto& [u, v] : inst.pool) {
    inst.space->index_of(u);
    inst.space->index_of(v);
    if (u == v) fail("InvalidParams", "pool pair (" + u + "," + v + ") is degenerate");
  }
  if (eps_matters && (inst.eps < 0 || inst.eps >= 1)) {
    fail("InvalidParams", "eps must lie in [0,1), got " + format_rational(inst.eps));
  }
}

// Scan order for inequality (1): the pair (x,y) = (u,v) first when both lie
// in N (the canonical always-violating tuple), then lexicographic in N.
inline std::vector<std::pair<std::size_t, std::size_t>> family1_order(
    const std::vector<std::size_t>& n_idx, std::size_t u, std::size_t v) {
  std::vector<std::pair<std::size_t, std::size_t>> order;
  bool u_in = false, v_in = false;
  for (const std::size_t i : n_idx) {
    u_in = u_in || i == u;
    v_in = v_in || i == v;
  }
  if (u_in && v_in) order.emplace_back(u, v);
  for (const std::size_t x : n_idx) {
    for (const std::size_t y : n_idx) {
      if (x == u && y == v) continue;
      order.emplace_back(x, y);
    }
  }
  return order;
}

inline std::optional<TrapezoidViolation> find_violation(const FiniteMetricSpace& s,
                                                        const std::vector<std::size_t>& n_idx,
                                                        std::size_t u, std::size_t v,
                                                        const Rational& eps, bool strong) {
  const Rational one_minus(Rational(1) - eps);
  for (const auto& [x, y] : family1_order(n_idx, u, v)) {
    const Rational lhs = one_minus * (s.dist(x, y) + s.dist(u, v));
    const Rational rhs = s.dist(x, u) + s.dist(y, v);
    if (lhs > rhs) {
      TrapezoidViolation viol;
      viol.family = 1;
      viol.tuple = {s.points()[x], s.points()[y], "", ""};
      viol.tuple_len = 2;
      viol.lhs = lhs;
      viol.rhs = rhs;
      return viol;
    }
  }
  if (strong) {
    for (const std::size_t x : n_idx) {
      for (const std::size_t y : n_idx) {
        for (const std::size_t z : n_idx) {
          for (const std::size_t w : n_idx) {
            const Rational lhs =
                one_minus * (s.dist(x, y) + s.dist(z, w) + 2 * s.dist(u, v));
            const Rational rhs = s.dist(x, u) + s.dist(y, u) + s.dist(z, v) + s.dist(w, v);
            if (lhs > rhs) {
              TrapezoidViolation viol;
              viol.family = 2;
              viol.tuple = {s.points()[x], s.points()[y], s.points()[z], s.points()[w]};
              viol.tuple_len = 4;
              viol.lhs = lhs;
              viol.rhs = rhs;
              return viol;
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

inline TrapezoidReport check(const TrapezoidInstance& inst, bool strong) {
  validate_trapezoid(inst, /*eps_matters=*/true);
  const auto& s = *inst.space;
  std::vector<std::size_t> n_idx;
  for (const auto& p : inst.n_set) n_idx.push_back(s.index_of(p));

  TrapezoidReport report;
  report.strong = strong;
  report.eps = inst.eps;
  for (const auto& [us, vs] : inst.pool) {
    const std::size_t u = s.index_of(us), v = s.index_of(vs);
    PoolPairEvidence ev;
    ev.u = us;
    ev.v = vs;
    ev.violation = find_violation(s, n_idx, u, v, inst.eps, strong);
    if (!ev.violation && !report.witness) report.witness = std::make_pair(us, vs);
    report.evidence.push_back(std::move(ev));
  }
  return report;
}

}  // namespace detail

inline TrapezoidReport check_ltp(const TrapezoidInstance& inst) {
  return detail::check(inst, /*strong=*/false);
}

inline TrapezoidReport check_sltp(const TrapezoidInstance& inst) {
  return detail::check(inst, /*strong=*/true);
}

// Quantitative form: the smallest eps at which check_sltp returns a witness,
// as an exact rational. For each pool pair the best resolution is
// 1 - min(rhs/lhs-base) over both constraint families; the modulus is the
// best over the pool, clamped at 0. The lhs bases are positive because
// u != v.
inline Rational sltp_modulus(const SpacePtr& space, const std::vector<std::string>& n_set,
                             const std::vector<std::pair<std::string, std::string>>& pool) {
  TrapezoidInstance inst{space, n_set, pool, Rational(0)};
  detail::validate_trapezoid(inst, /*eps_matters=*/false);
  const auto& s = *space;
  std::vector<std::size_t> n_idx;
  for (const auto& p : n_set) n_idx.push_back(s.index_of(p));

  std::optional<Rational> best_ratio;  // max over pool of min ratio
  for (const auto& [us, vs] : pool) {
    const std::size_t u = s.index_of(us), v = s.index_of(vs);
    std::optional<Rational> ratio;  // min over constraints of rhs/base
    const auto feed = [&](const Rational& rhs, const Rational& base) {
      const Rational r = rhs / base;
      if (!ratio || r < *ratio) ratio = r;
    };
    for (const std::size_t x : n_idx) {
      for (const std::size_t y : n_idx) {
        feed(s.dist(x, u) + s.dist(y, v), s.dist(x, y) + s.dist(u, v));
      }
    }
    for (const std::size_t x : n_idx) {
      for (const std::size_t y : n_idx) {
        for (const std::size_t z : n_idx) {
          for (const std::size_t w : n_idx) {
            feed(s.dist(x, u) + s.dist(y, u) + s.dist(z, v) + s.dist(w, v),
                 s.dist(x, y) + s.dist(z, w) + 2 * s.dist(u, v));
          }
        }
      }
    }
    if (!best_ratio || *ratio > *best_ratio) best_ratio = ratio;
  }
  const Rational modulus = Rational(1) - *best_ratio;
  return modulus > 0 ? modulus : Rational(0);
}

}  // namespace freelip
