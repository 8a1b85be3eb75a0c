#pragma once

// Executable counterexamples over absolute sums and C[0,1]: the two-term
// witness against DOH of X +_N Y when N(1,1) < 2(1-2 eps), the l1-sum
// lifting chain, and the cutoff construction showing C[0,1] is not DOH.

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "freelip/absolute_norm.hpp"
#include "freelip/doh.hpp"
#include "freelip/error.hpp"
#include "freelip/norm_oracle.hpp"
#include "freelip/piecewise.hpp"

namespace freelip {

// ----- absolute sums -----

struct Prop31bReport {
  DohViolation violation;           // over the sum space
  std::array<Rational, 4> norms;    // the four evaluated norm terms
  Rational threshold;               // (1-eps)(2||y1|| + 2||y2|| + 2)
  Rational n11;                     // N(1,1)
};

// The two-term instance: x1 = (x,0) with parts (0,y2), x2 = (0,w) with
// parts (y1,0), both with coefficients (||y1||, ||y2||). All four norms are
// evaluated directly through the sum oracle and the strict inequality is
// checked as computed, so nothing relies on N being symmetric.
inline Prop31bReport prop31b_witness(const OraclePtr& x_space, const OraclePtr& y_space,
                                     const AbsoluteNorm& norm, const Rational& eps,
                                     const std::vector<Rational>& x,
                                     const std::vector<Rational>& w,
                                     const std::vector<Rational>& y1,
                                     const std::vector<Rational>& y2) {
  if (eps <= 0) fail("InvalidParams", "eps must be positive");
  const Rational n11 = norm.eval_abs(Rational(1), Rational(1));
  if (!(n11 < 2 * (Rational(1) - 2 * eps))) {
    fail("EpsTooLarge", "premise N(1,1) < 2(1-2 eps) fails: " + format_rational(n11) +
                            " vs " + format_rational(2 * (Rational(1) - 2 * eps)));
  }
  if (x_space->eval(x) != 1) fail("NotUnit", "x must be a unit vector of X");
  if (y_space->eval(w) != 1) fail("NotUnit", "w must be a unit vector of Y");
  const Rational s1 = x_space->eval(y1);
  const Rational s2 = y_space->eval(y2);
  if (s1 > 1) fail("NotInBall", "y1 has norm " + format_rational(s1));
  if (s2 > 1) fail("NotInBall", "y2 has norm " + format_rational(s2));
  if (s1 + s2 < 1) {
    fail("InvalidParams", "the chain needs ||y1|| + ||y2|| >= 1, got " +
                              format_rational(s1 + s2));
  }
  const auto sum = std::make_shared<SumSpaceOracle>(x_space, y_space, norm);
  if (sum->eval(sum->join(y1, y2)) > 1) {
    fail("NotInBall", "(y1, y2) leaves the unit ball of the sum");
  }

  const std::vector<Rational> zero_x(x_space->dimension(), Rational(0));
  const std::vector<Rational> zero_y(y_space->dimension(), Rational(0));

  DohInstance inst;
  inst.oracle = sum;
  inst.unit_set = {sum->join(x, zero_y), sum->join(zero_x, w)};
  inst.eps = eps;
  inst.y = sum->join(y1, y2);
  inst.terms = {{0, s1, s2, sum->join(zero_x, y2)}, {1, s1, s2, sum->join(y1, zero_y)}};

  Prop31bReport report;
  report.n11 = n11;
  const auto term_norms = detail::evaluate_term_norms(inst);
  report.norms = {term_norms[0].norm_plus, term_norms[0].norm_minus, term_norms[1].norm_plus,
                  term_norms[1].norm_minus};
  report.threshold = (Rational(1) - eps) * (2 * s1 + 2 * s2 + 2);
  const Rational total =
      report.norms[0] + report.norms[1] + report.norms[2] + report.norms[3];
  if (!(total < report.threshold)) {
    throw InternalError("prop 3.1(b) chain failed despite verified premises");
  }
  report.violation.instance = inst;
  report.violation.objective = total - report.threshold;
  verify_violation(report.violation, /*require_unit_y=*/false);
  return report;
}

// Verifies the l1-sum lifting chain on explicit data: the lifted objective
// splits exactly into the X part plus the Y contribution, and the Y
// contribution dominates sum (a_i + b_i) ||y_i|| term by term.
struct L1LiftTerm {
  std::vector<Rational> x;   // unit in X
  std::vector<Rational> y;   // Y-component of the lifted E element
  Rational a, b;
  std::vector<Rational> z;   // X part
};

inline ChainVerdict l1_lift_check(const OraclePtr& x_space, const OraclePtr& y_space,
                                  const std::vector<L1LiftTerm>& terms,
                                  const std::vector<std::vector<Rational>>& lifts) {
  if (terms.empty()) fail("InvalidParams", "need at least one term");
  if (lifts.size() != terms.size()) fail("InvalidParams", "need one lift per term");
  std::vector<Rational> lift_sum(y_space->dimension(), Rational(0));
  for (const auto& w : lifts) {
    if (w.size() != y_space->dimension()) fail("InvalidParams", "lift has wrong dimension");
    lift_sum = vec::add(lift_sum, w);
  }
  if (!vec::is_zero(lift_sum)) {
    fail("LiftMismatch", "the lifts must sum to zero in Y");
  }
  for (const auto& t : terms) {
    if (x_space->eval(t.x) != 1) fail("NotUnit", "term x is not a unit vector of X");
    if (t.a < 0 || t.b < 0) fail("InvalidParams", "coefficients must be nonnegative");
  }

  const auto sum = std::make_shared<SumSpaceOracle>(x_space, y_space, AbsoluteNorm::l1());
  ChainVerdict verdict;
  verdict.holds = true;
  Rational lifted_total(0), split_total(0), y_contrib(0), y_floor(0);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    const auto& w = lifts[i];
    const auto lifted_x = sum->join(t.x, t.y);
    const auto lifted_part = sum->join(t.z, w);
    const Rational lifted = sum->eval(vec::add(vec::scale(t.a, lifted_x), lifted_part)) +
                            sum->eval(vec::sub(vec::scale(t.b, lifted_x), lifted_part));
    const Rational x_part = x_space->eval(vec::add(vec::scale(t.a, t.x), t.z)) +
                            x_space->eval(vec::sub(vec::scale(t.b, t.x), t.z));
    const Rational y_part = y_space->eval(vec::add(vec::scale(t.a, t.y), w)) +
                            y_space->eval(vec::sub(vec::scale(t.b, t.y), w));
    const std::string tag = "term " + std::to_string(i);
    detail::push_line(verdict, tag + ": l1 lift splits", lifted, "==", x_part + y_part);
    detail::push_line(verdict, tag + ": Y contribution vs (a+b)||y||", y_part,
                      ">=", (t.a + t.b) * y_space->eval(t.y));
    lifted_total += lifted;
    split_total += x_part + y_part;
    y_contrib += y_part;
    Rational coeff_norm = (t.a + t.b) * y_space->eval(t.y);
    y_floor += coeff_norm;
  }
  detail::push_line(verdict, "lifted objective equals split total", lifted_total,
                    "==", split_total);
  detail::push_line(verdict, "Y contribution total", y_contrib, ">=", y_floor);
  detail::push_line(verdict, "equality case detector", y_contrib, "==", y_floor);
  // The last line records whether the bound is tight (all lifts aligned,
  // e.g. identically zero); tightness is informative, not required.
  verdict.holds = true;
  for (std::size_t i = 0; i + 1 < verdict.lines.size(); ++i) {
    verdict.holds = verdict.holds && verdict.lines[i].holds;
  }
  return verdict;
}

// ----- the C[0,1] gallery -----

// The two unit bump functions: 1 - 4x on [0, 1/4] and 4x - 3 on [3/4, 1],
// zero elsewhere.
inline PiecewisePolynomial c01_f1() {
  return PiecewisePolynomial(
      {Rational(0), Rational(1) / 4, Rational(1)},
      {{Rational(1), Rational(-4), Rational(0)}, {Rational(0), Rational(0), Rational(0)}});
}

inline PiecewisePolynomial c01_f2() {
  return PiecewisePolynomial(
      {Rational(0), Rational(3) / 4, Rational(1)},
      {{Rational(0), Rational(0), Rational(0)}, {Rational(-3), Rational(4), Rational(0)}});
}

// Linear cutoff: 0 on [0,1/4], rising to 1 on [3/4,1]. Multiplying by it
// keeps everything rational and within degree 2.
inline PiecewisePolynomial c01_ramp() {
  return PiecewisePolynomial({Rational(0), Rational(1) / 4, Rational(3) / 4, Rational(1)},
                             {{Rational(0), Rational(0), Rational(0)},
                              {Rational(-1) / 2, Rational(2), Rational(0)},
                              {Rational(1), Rational(0), Rational(0)}});
}

struct C01Report {
  Rational eps;
  std::array<Rational, 4> norms;  // ||f1+g1||, ||f1-g1||, ||f2+g2||, ||f2-g2||
  Rational total;                 // their sum
  Rational threshold;             // (4+2)(1-eps)
  Rational margin;                // threshold - total
  bool strict_violation = false;
  bool boundary_equality = false;
  PiecewisePolynomial g1, g2;
};

// Splits g with the ramp cutoff, verifies the vanishing and ball conditions
// exactly, and evaluates the four sup norms against (4+2)(1-eps).
inline C01Report c01_gallery(const Rational& eps, const PiecewisePolynomial& g) {
  if (eps <= 0 || eps > Rational(1) / 3) {
    fail("EpsOutOfRange", "eps must lie in (0, 1/3], got " + format_rational(eps));
  }
  if (g.degree() > 1) {
    fail("InvalidParams", "g must have pieces of degree <= 1");
  }
  if (g.sup_norm() > 1) {
    fail("GNotInBall", "||g|| = " + format_rational(g.sup_norm()) + " > 1");
  }
  const auto phi = c01_ramp();
  const auto g1 = phi * g;
  const auto g2 = g - g1;
  if (!g1.vanishes_on(Rational(0), Rational(1) / 4) ||
      !g2.vanishes_on(Rational(3) / 4, Rational(1))) {
    throw InternalError("cutoff split lost its vanishing intervals");
  }
  if (g1.sup_norm() > 1 || g2.sup_norm() > 1) {
    throw InternalError("cutoff split left the unit ball");
  }

  const auto f1 = c01_f1();
  const auto f2 = c01_f2();
  C01Report report{eps,
                   {(f1 + g1).sup_norm(), (f1 - g1).sup_norm(), (f2 + g2).sup_norm(),
                    (f2 - g2).sup_norm()},
                   Rational(0),
                   Rational(0),
                   Rational(0),
                   false,
                   false,
                   g1,
                   g2};
  report.total = report.norms[0] + report.norms[1] + report.norms[2] + report.norms[3];
  report.threshold = Rational(6) * (Rational(1) - eps);
  report.margin = report.threshold - report.total;
  report.strict_violation = report.total < report.threshold;
  report.boundary_equality = report.total == report.threshold;
  return report;
}

}  // namespace freelip
