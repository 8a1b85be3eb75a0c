#pragma once

// Decomposable-octahedrality probes. The central quantity for an instance
// with unit vectors x_i from E, coefficients a_i, b_i >= 0 and parts y_i
// summing to y is
//
//   sum_i (||a_i x_i + y_i|| + ||b_i x_i - y_i||) - (1-eps) (sum_i (a_i+b_i) + 2).
//
// A candidate y certifies (E, eps) when no decomposition drives this
// negative; a negative value is a machine-checkable DOH violation.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "freelip/error.hpp"
#include "freelip/freespace.hpp"
#include "freelip/metric_space.hpp"
#include "freelip/molecule.hpp"
#include "freelip/norm_oracle.hpp"
#include "freelip/simplex.hpp"

namespace freelip {

struct DohTerm {
  std::size_t x_index = 0;           // into the instance's unit set E
  Rational a, b;                     // both >= 0
  std::vector<Rational> part;        // y_i
};

struct DohInstance {
  OraclePtr oracle;
  std::vector<std::vector<Rational>> unit_set;  // E, each of norm 1
  Rational eps;                                 // in (0, 1]
  std::vector<Rational> y;
  std::vector<DohTerm> terms;
};

struct DohTermNorms {
  Rational norm_plus, norm_minus;  // ||a x + part||, ||b x - part||
  Rational a, b;
};

inline Rational doh_objective_from_norms(const std::vector<DohTermNorms>& terms,
                                         const Rational& eps) {
  Rational norms(0), coeffs(0);
  for (const auto& t : terms) {
    norms += t.norm_plus + t.norm_minus;
    coeffs += t.a + t.b;
  }
  return norms - (Rational(1) - eps) * (coeffs + 2);
}

namespace detail {

inline void validate_doh_instance(const DohInstance& inst, bool require_unit_y) {
  if (inst.eps <= 0 || inst.eps > 1) {
    fail("InvalidParams", "eps must lie in (0,1], got " + format_rational(inst.eps));
  }
  if (inst.unit_set.empty()) fail("InvalidParams", "the unit set E is empty");
  if (inst.terms.empty()) fail("InvalidParams", "the instance has no terms");
  const std::size_t dim = inst.oracle->dimension();
  for (const auto& e : inst.unit_set) {
    if (e.size() != dim) fail("InvalidParams", "unit-set vector has wrong dimension");
    if (inst.oracle->eval(e) != 1) {
      fail("NotUnit", "unit-set vector has norm " + format_rational(inst.oracle->eval(e)));
    }
  }
  if (inst.y.size() != dim) fail("InvalidParams", "y has wrong dimension");
  const Rational ynorm = inst.oracle->eval(inst.y);
  if (require_unit_y ? ynorm != 1 : ynorm > 1) {
    fail("NotUnit", "candidate y has norm " + format_rational(ynorm) +
                        (require_unit_y ? ", expected 1" : ", expected <= 1"));
  }
  std::vector<Rational> total(dim, Rational(0));
  for (const auto& t : inst.terms) {
    if (t.x_index >= inst.unit_set.size()) fail("InvalidParams", "term references missing E index");
    if (t.a < 0 || t.b < 0) fail("InvalidParams", "term coefficients must be nonnegative");
    if (t.part.size() != dim) fail("InvalidParams", "term part has wrong dimension");
    total = vec::add(total, t.part);
  }
  if (total != inst.y) {
    fail("DecompositionMismatch", "the parts do not sum to y");
  }
}

inline std::vector<DohTermNorms> evaluate_term_norms(const DohInstance& inst) {
  std::vector<DohTermNorms> out;
  for (const auto& t : inst.terms) {
    const auto& x = inst.unit_set[t.x_index];
    DohTermNorms n;
    n.norm_plus = inst.oracle->eval(vec::add(vec::scale(t.a, x), t.part));
    n.norm_minus = inst.oracle->eval(vec::sub(vec::scale(t.b, x), t.part));
    n.a = t.a;
    n.b = t.b;
    out.push_back(std::move(n));
  }
  return out;
}

}  // namespace detail

// Exact objective of an explicit instance. require_unit_y is relaxed for
// instances produced by the theorem transformer below, whose target vector
// only satisfies ||y|| <= 1.
inline Rational doh_objective(const DohInstance& inst, bool require_unit_y = true) {
  detail::validate_doh_instance(inst, require_unit_y);
  return doh_objective_from_norms(detail::evaluate_term_norms(inst), inst.eps);
}

struct DohViolation {
  DohInstance instance;
  Rational objective;  // negative
};

// Re-derives the objective from the raw instance data; certificates are
// never trusted on their stored conclusion alone.
inline void verify_violation(const DohViolation& v, bool require_unit_y = true) {
  const Rational obj = doh_objective(v.instance, require_unit_y);
  if (obj != v.objective || obj >= 0) {
    throw InternalError("DOH violation certificate failed re-evaluation");
  }
}

struct MinViolationOutcome {
  Rational value;       // exact minimum of the objective for the assignment
  DohInstance argmin;   // attaining instance
};

// Exact minimum of the objective over all a_i, b_i >= 0 and parts y_i with
// sum y_i = y, for a fixed assignment of E elements to terms. Coordinates of
// the parts range over the oracle's ground space, so for free-space oracles
// "no violation" is relative to the ground set; a found violation is
// unconditional.
inline MinViolationOutcome min_violation_lp(const OraclePtr& oracle,
                                            const std::vector<std::vector<Rational>>& unit_set,
                                            const Rational& eps, const std::vector<Rational>& y,
                                            const std::vector<std::size_t>& assignment) {
  if (!oracle->polyhedral()) {
    fail("NonPolyhedralOracle", "LP search needs an epigraph; " + oracle->tag() +
                                    " does not provide one");
  }
  if (assignment.empty()) fail("InvalidParams", "assignment must name at least one term");
  const std::size_t dim = oracle->dimension();
  if (y.size() != dim) fail("InvalidParams", "y has wrong dimension");
  for (const auto& e : unit_set) {
    if (e.size() != dim) fail("InvalidParams", "unit-set vector has wrong dimension");
    if (oracle->eval(e) != 1) {
      fail("NotUnit", "unit-set vector has norm " + format_rational(oracle->eval(e)));
    }
  }
  if (oracle->eval(y) != 1) {
    fail("NotUnit", "candidate y has norm " + format_rational(oracle->eval(y)));
  }
  if (eps <= 0 || eps > 1) {
    fail("InvalidParams", "eps must lie in (0,1], got " + format_rational(eps));
  }
  for (const std::size_t k : assignment) {
    if (k >= unit_set.size()) fail("InvalidParams", "assignment references missing E index");
  }

  const std::size_t n = assignment.size();
  LpModel lp;
  std::vector<int> a_var(n), b_var(n), tp_var(n), tm_var(n);
  std::vector<std::vector<int>> part_var(n, std::vector<int>(dim));
  for (std::size_t i = 0; i < n; ++i) {
    a_var[i] = lp.add_var();
    b_var[i] = lp.add_var();
    tp_var[i] = lp.add_var();
    tm_var[i] = lp.add_var();
    for (std::size_t c = 0; c < dim; ++c) part_var[i][c] = lp.add_var(/*nonneg=*/false);
  }
  for (std::size_t c = 0; c < dim; ++c) {
    LinExpr sum;
    for (std::size_t i = 0; i < n; ++i) sum.add(part_var[i][c], Rational(1));
    lp.add_eq(sum, y[c]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = unit_set[assignment[i]];
    std::vector<LinExpr> plus(dim), minus(dim);
    for (std::size_t c = 0; c < dim; ++c) {
      plus[c] = LinExpr::term(a_var[i], x[c]) + LinExpr::term(part_var[i][c]);
      minus[c] = LinExpr::term(b_var[i], x[c]) - LinExpr::term(part_var[i][c]);
    }
    oracle->emit_epigraph(lp, plus, LinExpr::term(tp_var[i]));
    oracle->emit_epigraph(lp, minus, LinExpr::term(tm_var[i]));
  }
  LinExpr objective;
  const Rational one_minus = Rational(1) - eps;
  for (std::size_t i = 0; i < n; ++i) {
    objective.add(tp_var[i], Rational(1));
    objective.add(tm_var[i], Rational(1));
    objective.add(a_var[i], -one_minus);
    objective.add(b_var[i], -one_minus);
  }
  objective.add_constant(-2 * one_minus);
  lp.minimize(objective);

  const LpResult sol = lp.solve();
  if (sol.status == LpStatus::unbounded) {
    throw InternalError("UnboundedModel: epigraph of " + oracle->tag() +
                        " admits an unbounded violation ray");
  }
  if (sol.status == LpStatus::infeasible) {
    throw InternalError("violation LP cannot be infeasible: y/n splits are feasible");
  }

  MinViolationOutcome out;
  out.value = sol.objective;
  out.argmin.oracle = oracle;
  out.argmin.unit_set = unit_set;
  out.argmin.eps = eps;
  out.argmin.y = y;
  for (std::size_t i = 0; i < n; ++i) {
    DohTerm term;
    term.x_index = assignment[i];
    term.a = sol.value(a_var[i]);
    term.b = sol.value(b_var[i]);
    for (std::size_t c = 0; c < dim; ++c) term.part.push_back(sol.value(part_var[i][c]));
    out.argmin.terms.push_back(std::move(term));
  }
  if (doh_objective(out.argmin) != out.value) {
    throw InternalError("LP minimum disagrees with direct objective evaluation");
  }
  return out;
}

// Outcome of a truncated search. Ok is NOT a proof that y works in the full
// space: it records exactly what was searched.
struct DohSearchOk {
  std::size_t n_max = 0;
  std::string ground;            // oracle description the search ran against
  Rational min_objective;        // smallest objective seen, >= 0
  std::size_t assignments = 0;   // multisets examined
};

using DohSearchResult = std::variant<DohSearchOk, DohViolation>;

// Enumerates multisets of E of size 1..n_max (the objective is symmetric
// under term permutation) and minimizes each via the LP. Returns the first
// violation in enumeration order, for reproducibility.
inline DohSearchResult doh_candidate_check(const OraclePtr& oracle,
                                           const std::vector<std::vector<Rational>>& unit_set,
                                           const Rational& eps, const std::vector<Rational>& y,
                                           std::size_t n_max) {
  if (n_max < 1) fail("InvalidParams", "n_max must be at least 1");
  std::optional<Rational> min_seen;
  std::size_t examined = 0;
  std::optional<DohViolation> found;

  std::vector<std::size_t> assignment;
  const auto recurse = [&](auto&& self, std::size_t from) -> void {
    if (found) return;
    if (!assignment.empty()) {
      const auto outcome = min_violation_lp(oracle, unit_set, eps, y, assignment);
      ++examined;
      if (!min_seen || outcome.value < *min_seen) min_seen = outcome.value;
      if (outcome.value < 0) {
        found = DohViolation{outcome.argmin, outcome.value};
        return;
      }
    }
    if (assignment.size() == n_max) return;
    for (std::size_t k = from; k < unit_set.size(); ++k) {
      assignment.push_back(k);
      self(self, k);
      assignment.pop_back();
      if (found) return;
    }
  };
  recurse(recurse, 0);

  if (found) {
    verify_violation(*found);
    return *found;
  }
  DohSearchOk ok;
  ok.n_max = n_max;
  ok.ground = oracle->tag();
  ok.min_objective = *min_seen;
  ok.assignments = examined;
  return ok;
}

// --- Theorem (ii) => (iii): turning SLTP failures into a DOH violation ---

// Per-index certificate against a decomposition term (u_i, v_i): either a
// pair (x,y) violating inequality (1) or a quadruple (x,y,z,w) violating
// inequality (2), both at resolution eps.
struct SltpCert {
  bool quad = false;
  std::array<std::string, 4> pts;  // x,y[,z,w]
};

struct FromSltpResult {
  DohInstance instance;  // eps field holds delta; ||y|| <= 1
  Rational objective;    // objective at delta
  bool violates = false; // objective < 0
  Rational r, big_r;     // distance range over certificate points
  Rational delta_bound;  // r*eps/(2R)
};

// Builds the proof's DOH instance from a cost-one decomposition of nu and
// per-term trapezoid violations. E-elements are normalized elementary
// molecules over certificate pairs; inequality-(1) indices contribute one
// term, inequality-(2) indices three, with parts telescoping to -nu. The
// norm grouping routes u -> y, y -> z, z -> v; the displayed regrouping in
// the source text telescopes identically either way.
inline FromSltpResult sltp_failure_to_doh(const SpacePtr& space,
                                          const std::vector<DecompositionTerm>& nu_decomp,
                                          const std::vector<SltpCert>& certs, const Rational& eps,
                                          const Rational& delta) {
  if (nu_decomp.empty()) fail("InvalidParams", "the decomposition is empty");
  if (certs.size() != nu_decomp.size()) {
    fail("InvalidParams", "need exactly one certificate per decomposition term");
  }
  if (eps <= 0 || eps >= 1) {
    fail("InvalidParams", "eps must lie in (0,1), got " + format_rational(eps));
  }
  const Rational cost = decomposition_cost(space, nu_decomp);
  if (cost != 1) {
    fail("CostNotOne", "decomposition cost is " + format_rational(cost) + ", expected exactly 1");
  }

  // Verify that each certificate strictly violates its inequality.
  const Rational one_minus = Rational(1) - eps;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const auto& c = certs[i];
    const auto& u = nu_decomp[i].p;
    const auto& v = nu_decomp[i].q;
    for (std::size_t k = 0; k < (c.quad ? 4u : 2u); ++k) space->index_of(c.pts[k]);
    if (!c.quad) {
      const Rational lhs = one_minus * (space->dist(c.pts[0], c.pts[1]) + space->dist(u, v));
      const Rational rhs = space->dist(c.pts[0], u) + space->dist(c.pts[1], v);
      if (!(lhs > rhs)) {
        fail("CertificateNotViolating",
             "index " + std::to_string(i) + ": inequality (1) holds, " + format_rational(lhs) +
                 " <= " + format_rational(rhs));
      }
    } else {
      const Rational lhs = one_minus * (space->dist(c.pts[0], c.pts[1]) +
                                        space->dist(c.pts[2], c.pts[3]) + 2 * space->dist(u, v));
      const Rational rhs = space->dist(c.pts[0], u) + space->dist(c.pts[1], u) +
                           space->dist(c.pts[2], v) + space->dist(c.pts[3], v);
      if (!(lhs > rhs)) {
        fail("CertificateNotViolating",
             "index " + std::to_string(i) + ": inequality (2) holds, " + format_rational(lhs) +
                 " <= " + format_rational(rhs));
      }
    }
  }

  // Distance range over the certificate points stands in for the r < d < R
  // window over N.
  std::set<std::string> cert_points;
  for (const auto& c : certs) {
    for (std::size_t k = 0; k < (c.quad ? 4u : 2u); ++k) cert_points.insert(c.pts[k]);
  }
  std::optional<Rational> r_min, r_max;
  for (auto it = cert_points.begin(); it != cert_points.end(); ++it) {
    for (auto jt = std::next(it); jt != cert_points.end(); ++jt) {
      const Rational d = space->dist(*it, *jt);
      if (!r_min || d < *r_min) r_min = d;
      if (!r_max || d > *r_max) r_max = d;
    }
  }
  if (!r_min) {
    fail("InvalidParams", "certificates contain no pair of distinct points");
  }
  const Rational bound = *r_min * eps / (2 * *r_max);
  if (delta <= 0 || delta >= bound) {
    fail("DeltaTooLarge", "delta must satisfy 0 < delta < r*eps/(2R) = " +
                              format_rational(bound) + ", got " + format_rational(delta));
  }

  // Ground set: all certificate points plus decomposition endpoints.
  std::set<std::string> ground_set = cert_points;
  for (const auto& t : nu_decomp) {
    ground_set.insert(t.p);
    ground_set.insert(t.q);
  }
  std::vector<std::string> ground;
  for (const auto& id : space->points()) {
    if (ground_set.count(id)) ground.push_back(id);
  }
  const auto oracle = std::make_shared<FreeSpaceOracle>(space, ground);

  // E elements, deduplicated, first occurrence order.
  std::vector<std::vector<Rational>> unit_set;
  const auto e_index = [&](const std::string& p, const std::string& q) -> std::size_t {
    const Molecule m =
        Molecule::elementary(space, p, q).scaled(Rational(1) / space->dist(p, q));
    const auto v = oracle->from_molecule(m);
    for (std::size_t k = 0; k < unit_set.size(); ++k) {
      if (unit_set[k] == v) return k;
    }
    unit_set.push_back(v);
    return unit_set.size() - 1;
  };

  struct RawTerm {
    std::optional<std::pair<std::string, std::string>> e_pair;  // nullopt: coefficient is 0
    Rational a;
    Molecule part;
  };
  std::vector<RawTerm> raw;
  Molecule parts_sum = Molecule::zero(space);
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const auto& c = certs[i];
    const Rational lambda = nu_decomp[i].lambda;
    const auto& u = nu_decomp[i].p;
    const auto& v = nu_decomp[i].q;
    const auto group = [&](const std::string& gp, const std::string& gq, const std::string& rp,
                           const std::string& rq) {
      // Contributes ||a e + part|| + ||0 e - part|| with e = (d_gp - d_gq)/d,
      // a = lambda d(gp,gq), part = -lambda (d_rp - d_rq).
      RawTerm t{std::nullopt, Rational(0), Molecule::zero(space)};
      if (gp != gq) {
        t.e_pair = std::make_pair(gp, gq);
        t.a = lambda * space->dist(gp, gq);
      }
      if (rp != rq) t.part = Molecule::elementary(space, rp, rq).scaled(-lambda);
      if (t.a != 0 || !t.part.is_zero()) {
        parts_sum = parts_sum + t.part;
        raw.push_back(std::move(t));
      }
    };
    if (!c.quad) {
      group(c.pts[0], c.pts[1], u, v);
    } else {
      group(c.pts[0], c.pts[1], u, c.pts[1]);
      group(c.pts[1], c.pts[2], c.pts[1], c.pts[2]);
      group(c.pts[2], c.pts[3], c.pts[2], v);
    }
  }
  if (raw.empty()) fail("InvalidParams", "certificates degenerate to an empty instance");

  // The parts must telescope to -nu exactly.
  const Molecule minus_nu = reconstruct(space, nu_decomp).negated();
  if (!(parts_sum == minus_nu)) {
    fail("TelescopeMismatch", "constructed parts do not telescope to the negated target");
  }

  FromSltpResult result;
  result.r = *r_min;
  result.big_r = *r_max;
  result.delta_bound = bound;
  result.instance.oracle = oracle;
  result.instance.eps = delta;
  result.instance.y = oracle->from_molecule(minus_nu);
  // Zero-coefficient terms park on E index 0; make sure E is inhabited even
  // when every certificate pair is degenerate (any distinct pair of
  // certificate points qualifies).
  for (const auto& t : raw) {
    if (t.e_pair) e_index(t.e_pair->first, t.e_pair->second);
  }
  if (unit_set.empty()) {
    const auto first = cert_points.begin();
    e_index(*first, *std::next(first));
  }
  for (const auto& t : raw) {
    DohTerm term;
    term.x_index = t.e_pair ? e_index(t.e_pair->first, t.e_pair->second) : 0;
    term.a = t.a;
    term.b = 0;
    term.part = oracle->from_molecule(t.part);
    result.instance.terms.push_back(std::move(term));
  }
  result.instance.unit_set = std::move(unit_set);

  if (oracle->eval(result.instance.y) > 1) {
    throw InternalError("telescoped target exceeded the unit ball");
  }
  result.objective = doh_objective(result.instance, /*require_unit_y=*/false);
  result.violates = result.objective < 0;
  return result;
}

// --- Proposition: w*-SSD2P of the dual forces DOH, on explicit data ---

struct ChainLine {
  std::string label;
  Rational lhs;
  std::string rel;  // "<=", ">=", "=="
  Rational rhs;
  bool holds = false;
};

struct ChainVerdict {
  std::vector<ChainLine> lines;
  bool holds = false;
};

namespace detail {

inline void push_line(ChainVerdict& verdict, std::string label, const Rational& lhs,
                      const char* rel, const Rational& rhs) {
  const bool ok = std::string(rel) == "<="   ? lhs <= rhs
                  : std::string(rel) == ">=" ? lhs >= rhs
                                             : lhs == rhs;
  verdict.lines.push_back({std::move(label), lhs, rel, rhs, ok});
  verdict.holds = verdict.holds && ok;
}

}  // namespace detail

// Verifies the premises of the dual-slice argument on explicit functionals
// (one f per E element, a common symmetric g) and re-derives its conclusion
// on the supplied instance: every chain line is computed exactly and the
// objective at eps is certified nonnegative.
inline ChainVerdict ssd2p_chain_verify(const OraclePtr& oracle,
                                       const std::vector<std::vector<Rational>>& unit_set,
                                       const Rational& eps,
                                       const std::vector<std::vector<Rational>>& f_map,
                                       const std::vector<Rational>& g, const DohInstance& inst) {
  if (f_map.size() != unit_set.size()) {
    fail("InvalidParams", "need exactly one functional f per E element");
  }
  if (!(inst.oracle == oracle) && inst.oracle->tag() != oracle->tag()) {
    fail("InvalidParams", "instance oracle differs from the verification oracle");
  }
  if (inst.unit_set != unit_set) {
    fail("InvalidParams", "instance unit set differs from E");
  }
  detail::validate_doh_instance(inst, /*require_unit_y=*/false);
  const Rational half_eps = eps / 2;

  // Premises.
  for (std::size_t k = 0; k < unit_set.size(); ++k) {
    const Rational fx = oracle->apply_dual(f_map[k], unit_set[k]);
    if (fx < 1 - half_eps) {
      fail("PremiseViolated", "f_" + std::to_string(k) + "(x) = " + format_rational(fx) +
                                  " < 1 - eps/2 = " + format_rational(Rational(1) - half_eps));
    }
    for (const int sign : {1, -1}) {
      const auto combo = sign > 0 ? vec::add(f_map[k], g) : vec::sub(f_map[k], g);
      const Rational dn = oracle->dual_norm(combo);
      if (dn > 1) {
        fail("PremiseViolated", std::string("dual_norm(f_") + std::to_string(k) +
                                    (sign > 0 ? " + g)" : " - g)") + " = " + format_rational(dn) +
                                    " > 1");
      }
    }
  }
  const Rational gy = oracle->apply_dual(g, inst.y);
  if (gy < 1 - eps) {
    fail("PremiseViolated", "g(y) = " + format_rational(gy) +
                                " < 1 - eps = " + format_rational(Rational(1) - eps));
  }

  ChainVerdict verdict;
  verdict.holds = true;
  // Derived bound |g(x)| <= eps/2, forced by the premises on unit vectors.
  for (std::size_t k = 0; k < unit_set.size(); ++k) {
    detail::push_line(verdict, "|g(x_" + std::to_string(k) + ")|",
                      abs(oracle->apply_dual(g, unit_set[k])), "<=", half_eps);
  }

  const auto norms = detail::evaluate_term_norms(inst);
  Rational mid_total(0), coeff_total(0), parts_g(0);
  for (std::size_t i = 0; i < inst.terms.size(); ++i) {
    const auto& t = inst.terms[i];
    const auto& x = inst.unit_set[t.x_index];
    const auto plus_vec = vec::add(vec::scale(t.a, x), t.part);
    const auto minus_vec = vec::sub(vec::scale(t.b, x), t.part);
    const Rational functional = oracle->apply_dual(vec::add(f_map[t.x_index], g), plus_vec) +
                                oracle->apply_dual(vec::sub(f_map[t.x_index], g), minus_vec);
    const Rational mid = (t.a + t.b) * oracle->apply_dual(f_map[t.x_index], x) +
                         (t.a - t.b) * oracle->apply_dual(g, x) +
                         2 * oracle->apply_dual(g, t.part);
    if (functional != mid) {
      throw InternalError("chain line algebra must be an identity");
    }
    const std::string tag = "term " + std::to_string(i);
    detail::push_line(verdict, tag + ": norms vs functionals",
                      norms[i].norm_plus + norms[i].norm_minus, ">=", functional);
    detail::push_line(verdict, tag + ": (a+b) f(x) + (a-b) g(x) + 2 g(y_i)", mid,
                      ">=", (Rational(1) - eps) * (t.a + t.b) + 2 * oracle->apply_dual(g, t.part));
    mid_total += mid;
    coeff_total += t.a + t.b;
    parts_g += oracle->apply_dual(g, t.part);
  }
  detail::push_line(verdict, "sum of g(y_i) equals g(y)", parts_g, "==", gy);
  detail::push_line(verdict, "chain total", mid_total,
                    ">=", (Rational(1) - eps) * coeff_total + 2 * gy);
  detail::push_line(verdict, "g(y) vs 1 - eps", gy, ">=", Rational(1) - eps);
  detail::push_line(verdict, "objective at eps",
                    doh_objective_from_norms(norms, eps), ">=", Rational(0));
  return verdict;
}

}  // namespace freelip
