#include <catch2/catch_amalgamated.hpp>

#include "freelip/trapezoid.hpp"
#include "freelip/testgen.hpp"

using namespace freelip;

namespace {

std::vector<std::string> ids(const SpacePtr& s, std::initializer_list<std::size_t> idx) {
  std::vector<std::string> out;
  for (const std::size_t i : idx) out.push_back(s->points()[i]);
  return out;
}

std::vector<std::pair<std::string, std::string>> random_pool(Rng& rng, const SpacePtr& s,
                                                             std::size_t count) {
  std::vector<std::pair<std::string, std::string>> pool;
  while (pool.size() < count) {
    const std::size_t u = rng.below(s->size());
    const std::size_t v = rng.below(s->size());
    if (u != v) pool.emplace_back(s->points()[u], s->points()[v]);
  }
  return pool;
}

}  // namespace

TEST_CASE("pool pairs inside N always fail inequality (1) with the (u,v) certificate") {
  Rng rng(1001);
  for (int trial = 0; trial < 12; ++trial) {
    const auto space = make_space(random_space(rng, static_cast<std::size_t>(rng.range(3, 6))));
    TrapezoidInstance inst{space, space->points(), all_pairs_pool(*space),
                           rng.rational(0, 0, 1) + Rational(rng.range(0, 9)) / 10};
    for (const auto& report : {check_ltp(inst), check_sltp(inst)}) {
      CHECK_FALSE(report.witness);
      for (const auto& ev : report.evidence) {
        REQUIRE(ev.violation);
        CHECK(ev.violation->family == 1);
        CHECK(ev.violation->tuple[0] == ev.u);
        CHECK(ev.violation->tuple[1] == ev.v);
        CHECK(ev.violation->lhs > ev.violation->rhs);
      }
    }
  }
}

TEST_CASE("uniform space with fresh pair is a witness at every eps") {
  const auto space = make_space(uniform_discrete(6));
  for (const auto& eps : {Rational(0), Rational(1) / 2, Rational(9) / 10}) {
    TrapezoidInstance inst{space, ids(space, {0, 1, 2}), {{"p4", "p5"}}, eps};
    const auto ltp = check_ltp(inst);
    REQUIRE(ltp.witness);
    CHECK(*ltp.witness == std::make_pair(std::string("p4"), std::string("p5")));
  }
  // SLTP on 8 points at eps = 0: inequality (2) right side is exactly 4
  const auto big = make_space(uniform_discrete(8));
  TrapezoidInstance inst{big, ids(big, {0, 1, 2}), {{"p6", "p7"}}, Rational(0)};
  const auto sltp = check_sltp(inst);
  REQUIRE(sltp.witness);
  CHECK(sltp_modulus(big, inst.n_set, inst.pool) == 0);
}

TEST_CASE("line example: N={0,1}, pool={(3,4)} is a strong witness at eps 0") {
  const auto space =
      make_space(line_space({Rational(0), Rational(1), Rational(3), Rational(4)}));
  TrapezoidInstance inst{space, ids(space, {0, 1}), {{"p2", "p3"}}, Rational(0)};
  CHECK(check_ltp(inst).witness);
  CHECK(check_sltp(inst).witness);
  CHECK(sltp_modulus(space, inst.n_set, inst.pool) == 0);
}

TEST_CASE("modulus is 1 when the pool sits inside N") {
  const auto space = make_space(uniform_discrete(4));
  CHECK(sltp_modulus(space, space->points(), all_pairs_pool(*space)) == 1);
}

TEST_CASE("empty inputs are rejected") {
  const auto space = make_space(uniform_discrete(3));
  CHECK_THROWS_MATCHES(
      check_sltp({space, {}, {{"p0", "p1"}}, Rational(0)}), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == "EmptyN"; }));
  CHECK_THROWS_MATCHES(
      check_sltp({space, {"p0"}, {}, Rational(0)}), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == "EmptyPool"; }));
  CHECK_THROWS_AS(check_sltp({space, {"p0"}, {{"p1", "p1"}}, Rational(0)}), Error);
  CHECK_THROWS_AS(check_sltp({space, {"p0"}, {{"p1", "p2"}}, Rational(1)}), Error);
}

TEST_CASE("consistency: witness at eps iff eps >= modulus") {
  Rng rng(1002);
  for (int trial = 0; trial < 30; ++trial) {
    const auto space = make_space(random_space(rng, static_cast<std::size_t>(rng.range(3, 6))));
    std::vector<std::string> n_set;
    for (const auto& p : space->points()) {
      if (rng.chance(1, 2)) n_set.push_back(p);
    }
    if (n_set.empty()) n_set.push_back(space->points()[0]);
    const auto pool = random_pool(rng, space, 1 + rng.below(6));
    const Rational modulus = sltp_modulus(space, n_set, pool);

    std::vector<Rational> probes = {Rational(0), Rational(1) / 7, Rational(1) / 2,
                                    rng.rational(0, 1, 9)};
    if (modulus < 1) probes.push_back(modulus);
    if (modulus > 0 && modulus < 1) probes.push_back(modulus - modulus / 17);
    for (const auto& eps : probes) {
      if (eps < 0 || eps >= 1) continue;
      const auto report = check_sltp({space, n_set, pool, eps});
      CHECK(report.witness.has_value() == (eps >= modulus));
    }
  }
}

TEST_CASE("monotonicity in eps and SLTP implies LTP") {
  Rng rng(1003);
  for (int trial = 0; trial < 20; ++trial) {
    const auto space = make_space(random_space(rng, static_cast<std::size_t>(rng.range(3, 6))));
    std::vector<std::string> n_set = {space->points()[0]};
    for (std::size_t i = 1; i < space->size(); ++i) {
      if (rng.chance(1, 2)) n_set.push_back(space->points()[i]);
    }
    const auto pool = random_pool(rng, space, 1 + rng.below(5));
    const Rational eps = rng.rational(0, 1, 8);
    if (eps >= 1) continue;
    const auto strong = check_sltp({space, n_set, pool, eps});
    if (strong.witness) {
      // at a larger eps the same instance still has a witness
      const Rational eps2 = eps + (Rational(1) - eps) / 3;
      CHECK(check_sltp({space, n_set, pool, eps2}).witness.has_value());
      // the strong witness also satisfies family (1) alone
      const auto weak = check_ltp({space, n_set, {*strong.witness}, eps});
      CHECK(weak.witness.has_value());
    }
  }
}

TEST_CASE("failure certificates re-evaluate to strict violations") {
  Rng rng(1004);
  for (int trial = 0; trial < 20; ++trial) {
    const auto space = make_space(random_space(rng, static_cast<std::size_t>(rng.range(3, 6))));
    std::vector<std::string> n_set;
    for (const auto& p : space->points()) {
      if (rng.chance(2, 3)) n_set.push_back(p);
    }
    if (n_set.empty()) n_set = {space->points()[0]};
    const auto pool = random_pool(rng, space, 3);
    const Rational eps = rng.rational(0, 1, 6);
    if (eps >= 1) continue;
    const auto report = check_sltp({space, n_set, pool, eps});
    for (const auto& ev : report.evidence) {
      if (!ev.violation) continue;
      const auto& s = *space;
      const auto& t = ev.violation->tuple;
      const Rational om = Rational(1) - eps;
      if (ev.violation->family == 1) {
        const Rational lhs = om * (s.dist(t[0], t[1]) + s.dist(ev.u, ev.v));
        const Rational rhs = s.dist(t[0], ev.u) + s.dist(t[1], ev.v);
        CHECK(lhs == ev.violation->lhs);
        CHECK(rhs == ev.violation->rhs);
        CHECK(lhs > rhs);
      } else {
        const Rational lhs =
            om * (s.dist(t[0], t[1]) + s.dist(t[2], t[3]) + 2 * s.dist(ev.u, ev.v));
        const Rational rhs = s.dist(t[0], ev.u) + s.dist(t[1], ev.u) + s.dist(t[2], ev.v) +
                             s.dist(t[3], ev.v);
        CHECK(lhs == ev.violation->lhs);
        CHECK(rhs == ev.violation->rhs);
        CHECK(lhs > rhs);
      }
    }
  }
}
