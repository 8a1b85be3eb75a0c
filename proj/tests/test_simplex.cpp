#include <catch2/catch_amalgamated.hpp>

#include "freelip/simplex.hpp"

using namespace freelip;

TEST_CASE("simplex solves a textbook minimum") {
  // min x + 2y  s.t.  x + y >= 3, x <= 2, x,y >= 0  ->  x=2, y=1, value 4
  LpModel lp;
  const int x = lp.add_var();
  const int y = lp.add_var();
  lp.add_ge(LinExpr::term(x) + LinExpr::term(y), Rational(3));
  lp.add_le(LinExpr::term(x), Rational(2));
  lp.minimize(LinExpr::term(x) + Rational(2) * LinExpr::term(y));
  const auto r = lp.solve();
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == 4);
  CHECK(r.value(x) == 2);
  CHECK(r.value(y) == 1);
}

TEST_CASE("simplex handles free variables and equalities") {
  // min |t| modeled as min s with s >= t, s >= -t, t free, t + 2 = 1/2
  LpModel lp;
  const int t = lp.add_var(/*nonneg=*/false);
  const int s = lp.add_var();
  lp.add_eq(LinExpr::term(t), Rational(1) / 2 - 2);
  lp.add_ge(LinExpr::term(s) - LinExpr::term(t), Rational(0));
  lp.add_ge(LinExpr::term(s) + LinExpr::term(t), Rational(0));
  lp.minimize(LinExpr::term(s));
  const auto r = lp.solve();
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value(t) == Rational(-3) / 2);
  CHECK(r.objective == Rational(3) / 2);
}

TEST_CASE("simplex detects infeasibility") {
  LpModel lp;
  const int x = lp.add_var();
  lp.add_le(LinExpr::term(x), Rational(1));
  lp.add_ge(LinExpr::term(x), Rational(2));
  lp.minimize(LinExpr::term(x));
  CHECK(lp.solve().status == LpStatus::infeasible);
}

TEST_CASE("simplex detects unboundedness") {
  LpModel lp;
  const int x = lp.add_var();
  const int y = lp.add_var();
  lp.add_ge(LinExpr::term(x) - LinExpr::term(y), Rational(0));
  lp.minimize(LinExpr::term(y) - LinExpr::term(x));
  CHECK(lp.solve().status == LpStatus::unbounded);
}

TEST_CASE("simplex survives a degenerate cycle-prone instance") {
  // Beale's classic cycling example; Bland's rule must terminate.
  LpModel lp;
  const int x1 = lp.add_var();
  const int x2 = lp.add_var();
  const int x3 = lp.add_var();
  const int x4 = lp.add_var();
  lp.add_le(Rational(1) / 4 * LinExpr::term(x1) - Rational(60) * LinExpr::term(x2) -
                Rational(1) / 25 * LinExpr::term(x3) + Rational(9) * LinExpr::term(x4),
            Rational(0));
  lp.add_le(Rational(1) / 2 * LinExpr::term(x1) - Rational(90) * LinExpr::term(x2) -
                Rational(1) / 50 * LinExpr::term(x3) + Rational(3) * LinExpr::term(x4),
            Rational(0));
  lp.add_le(LinExpr::term(x3), Rational(1));
  lp.minimize(Rational(-3) / 4 * LinExpr::term(x1) + Rational(150) * LinExpr::term(x2) -
              Rational(1) / 50 * LinExpr::term(x3) + Rational(6) * LinExpr::term(x4));
  const auto r = lp.solve();
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == Rational(-1) / 20);
}

TEST_CASE("redundant equalities are tolerated") {
  LpModel lp;
  const int x = lp.add_var();
  const int y = lp.add_var();
  lp.add_eq(LinExpr::term(x) + LinExpr::term(y), Rational(2));
  lp.add_eq(Rational(2) * LinExpr::term(x) + Rational(2) * LinExpr::term(y), Rational(4));
  lp.minimize(LinExpr::term(x));
  const auto r = lp.solve();
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == 0);
  CHECK(r.value(y) == 2);
}

TEST_CASE("constant terms in constraints and objective are honored") {
  LpModel lp;
  const int x = lp.add_var();
  LinExpr e = LinExpr::term(x);
  e.add_constant(Rational(5));
  lp.add_ge(e, Rational(7));  // x >= 2
  LinExpr obj = LinExpr::term(x);
  obj.add_constant(Rational(1));
  lp.minimize(obj);
  const auto r = lp.solve();
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value(x) == 2);
  CHECK(r.objective == 3);
}
