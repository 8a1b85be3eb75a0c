#include <catch2/catch_amalgamated.hpp>

#include "freelip/lipschitz.hpp"
#include "freelip/norm_oracle.hpp"
#include "freelip/testgen.hpp"

using namespace freelip;

namespace {

std::vector<Rational> random_vector(Rng& rng, std::size_t dim) {
  std::vector<Rational> v(dim);
  for (auto& x : v) x = rng.rational(-4, 4, 5);
  return v;
}

std::vector<Rational> random_zero_sum(Rng& rng, std::size_t dim) {
  std::vector<Rational> v(dim, Rational(0));
  Rational sum(0);
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    v[i] = rng.rational(-4, 4, 5);
    sum += v[i];
  }
  v[dim - 1] = -sum;
  return v;
}

AbsoluteNorm bent_polygon() {
  return AbsoluteNorm::from_quadrant_vertices({{Rational(1), Rational(0)},
                                               {Rational(2) / 3, Rational(2) / 3},
                                               {Rational(0), Rational(1)}});
}

}  // namespace

TEST_CASE("absolute norm evaluation on the standard polygons") {
  CHECK(AbsoluteNorm::l1().eval(Rational(1), Rational(1)) == 2);
  CHECK(AbsoluteNorm::linf().eval(Rational(1), Rational(1)) == 1);
  CHECK(bent_polygon().eval(Rational(1), Rational(1)) == Rational(3) / 2);
  CHECK(AbsoluteNorm::l1().eval(Rational(-2), Rational(1)) == 3);
  CHECK(AbsoluteNorm::linf().eval(Rational(-2), Rational(1)) == 2);
}

TEST_CASE("degenerate polygons are rejected") {
  using P = AbsoluteNorm::Point;
  CHECK_THROWS_MATCHES(
      AbsoluteNorm::from_quadrant_vertices({P{Rational(1), Rational(0)}}), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.code() == "DegeneratePolygon"; }));
  // wrong endpoints
  CHECK_THROWS_AS(AbsoluteNorm::from_quadrant_vertices(
                      {P{Rational(2), Rational(0)}, P{Rational(0), Rational(1)}}),
                  Error);
  // non-convex dip
  CHECK_THROWS_AS(AbsoluteNorm::from_quadrant_vertices({P{Rational(1), Rational(0)},
                                                        P{Rational(1) / 2, Rational(1) / 4},
                                                        P{Rational(0), Rational(1)}}),
                  Error);
  // x increases
  CHECK_THROWS_AS(AbsoluteNorm::from_quadrant_vertices({P{Rational(1), Rational(0)},
                                                        P{Rational(3), Rational(3)},
                                                        P{Rational(0), Rational(1)}}),
                  Error);
}

TEST_CASE("absolute norm axioms on random points") {
  Rng rng(901);
  const std::vector<AbsoluteNorm> norms = {AbsoluteNorm::l1(), AbsoluteNorm::linf(),
                                           bent_polygon(), AbsoluteNorm::lp_inscribed(2, 6),
                                           AbsoluteNorm::lp_inscribed(3, 5)};
  for (const auto& n : norms) {
    CHECK(n.eval(Rational(1), Rational(0)) == 1);
    CHECK(n.eval(Rational(0), Rational(1)) == 1);
    for (int trial = 0; trial < 25; ++trial) {
      const Rational a = rng.rational(-5, 5, 4);
      const Rational b = rng.rational(-5, 5, 4);
      const Rational v = n.eval(a, b);
      CHECK(v == n.eval(abs(a), abs(b)));
      const Rational linf_v = abs(a) > abs(b) ? abs(a) : abs(b);
      CHECK(linf_v <= v);
      CHECK(v <= abs(a) + abs(b));
      // monotone on the quadrant
      const Rational a2 = abs(a) + rng.rational(0, 2, 3);
      const Rational b2 = abs(b) + rng.rational(0, 2, 3);
      CHECK(n.eval_abs(abs(a), abs(b)) <= n.eval_abs(a2, b2));
      // homogeneity and subadditivity
      const Rational c = rng.rational(-3, 3, 3);
      CHECK(n.eval(c * a, c * b) == abs(c) * v);
      const Rational a3 = rng.rational(-5, 5, 4);
      const Rational b3 = rng.rational(-5, 5, 4);
      CHECK(n.eval(a + a3, b + b3) <= v + n.eval(a3, b3));
    }
  }
}

TEST_CASE("lp-inscribed approximants are labeled and dominate the lp norm") {
  const auto n = AbsoluteNorm::lp_inscribed(2, 8);
  CHECK(n.approximate());
  // inscribed ball: the polygon norm exceeds the l2 norm, sqrt(2) at (1,1)
  const Rational v = n.eval(Rational(1), Rational(1));
  CHECK(v > Rational(141) / 100);
  CHECK(v <= 2);
}

TEST_CASE("epigraph LP minimum equals the evaluator for every oracle kind") {
  Rng rng(902);
  std::vector<OraclePtr> oracles;
  oracles.push_back(std::make_shared<PolygonNormOracle>(AbsoluteNorm::l1()));
  oracles.push_back(std::make_shared<PolygonNormOracle>(AbsoluteNorm::linf()));
  oracles.push_back(std::make_shared<PolygonNormOracle>(bent_polygon()));
  oracles.push_back(std::make_shared<L1Oracle>(3));
  oracles.push_back(std::make_shared<LinfOracle>(3));
  oracles.push_back(std::make_shared<SumSpaceOracle>(std::make_shared<L1Oracle>(2),
                                                     std::make_shared<LinfOracle>(2),
                                                     AbsoluteNorm::linf()));
  oracles.push_back(std::make_shared<SumSpaceOracle>(std::make_shared<L1Oracle>(1),
                                                     std::make_shared<L1Oracle>(1),
                                                     bent_polygon()));
  for (const auto& oracle : oracles) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto v = random_vector(rng, oracle->dimension());
      CHECK(oracle->eval_by_lp(v) == oracle->eval(v));
    }
  }
}

TEST_CASE("free-space epigraph equals the flow norm, with and without extra points") {
  Rng rng(903);
  for (int trial = 0; trial < 15; ++trial) {
    const auto space = make_space(random_space(rng, static_cast<std::size_t>(rng.range(3, 6))));
    const auto mol = random_molecule(rng, space, space->size());
    // ground set = support only
    std::vector<std::string> support;
    for (const auto& [id, w] : mol.weights()) support.push_back(id);
    if (support.size() >= 2) {
      const FreeSpaceOracle tight(space, support);
      CHECK(tight.eval_by_lp(tight.from_molecule(mol)) == aenorm(mol));
    }
    // ground set = all points: relayed routes never beat direct edges
    const FreeSpaceOracle full(space);
    CHECK(full.eval_by_lp(full.from_molecule(mol)) == aenorm(mol));
  }
}

TEST_CASE("free-space oracle rejects non-molecule vectors") {
  const auto space = make_space(uniform_discrete(3));
  const FreeSpaceOracle oracle(space);
  CHECK_THROWS_AS(oracle.eval({Rational(1), Rational(0), Rational(0)}), Error);
}

TEST_CASE("norm axioms hold for oracles on random vectors") {
  Rng rng(904);
  const auto space = make_space(random_space(rng, 4));
  std::vector<OraclePtr> oracles;
  oracles.push_back(std::make_shared<FreeSpaceOracle>(space));
  oracles.push_back(std::make_shared<L1Oracle>(4));
  oracles.push_back(std::make_shared<SumSpaceOracle>(std::make_shared<LinfOracle>(2),
                                                     std::make_shared<L1Oracle>(2),
                                                     AbsoluteNorm::l1()));
  for (const auto& oracle : oracles) {
    const bool zero_sum = oracle->tag().starts_with("free-space");
    for (int trial = 0; trial < 20; ++trial) {
      const auto v = zero_sum ? random_zero_sum(rng, oracle->dimension())
                              : random_vector(rng, oracle->dimension());
      const auto w = zero_sum ? random_zero_sum(rng, oracle->dimension())
                              : random_vector(rng, oracle->dimension());
      const Rational c = rng.rational(-3, 3, 4);
      CHECK(oracle->eval(vec::scale(c, v)) == abs(c) * oracle->eval(v));
      CHECK(oracle->eval(vec::add(v, w)) <= oracle->eval(v) + oracle->eval(w));
      CHECK((oracle->eval(v) == 0) == vec::is_zero(v));
    }
  }
}

TEST_CASE("sum oracle restricts to its components on axis vectors") {
  Rng rng(905);
  const auto x = std::make_shared<L1Oracle>(3);
  const auto y = std::make_shared<LinfOracle>(2);
  for (const auto& n : {AbsoluteNorm::l1(), AbsoluteNorm::linf(), bent_polygon()}) {
    const SumSpaceOracle sum(x, y, n);
    for (int trial = 0; trial < 15; ++trial) {
      const auto vx = random_vector(rng, 3);
      const auto vy = random_vector(rng, 2);
      CHECK(sum.eval(sum.join(vx, {Rational(0), Rational(0)})) == x->eval(vx));
      CHECK(sum.eval(sum.join({Rational(0), Rational(0), Rational(0)}, vy)) == y->eval(vy));
    }
  }
}

TEST_CASE("dual norms: weak duality and free-space agreement with lip_norm") {
  Rng rng(906);
  const auto space = make_space(random_space(rng, 5));
  std::vector<OraclePtr> oracles;
  oracles.push_back(std::make_shared<FreeSpaceOracle>(space));
  oracles.push_back(std::make_shared<PolygonNormOracle>(bent_polygon()));
  oracles.push_back(std::make_shared<SumSpaceOracle>(std::make_shared<L1Oracle>(2),
                                                     std::make_shared<LinfOracle>(2),
                                                     AbsoluteNorm::linf()));
  for (const auto& oracle : oracles) {
    const bool zero_sum = oracle->tag().starts_with("free-space");
    for (int trial = 0; trial < 20; ++trial) {
      const auto phi = random_vector(rng, oracle->dimension());
      const auto v = zero_sum ? random_zero_sum(rng, oracle->dimension())
                              : random_vector(rng, oracle->dimension());
      CHECK(abs(oracle->apply_dual(phi, v)) <= oracle->dual_norm(phi) * oracle->eval(v));
    }
  }

  // Over the full ground set the free-space dual norm is the Lipschitz norm
  // of the re-based potential.
  const FreeSpaceOracle fs(space);
  for (int trial = 0; trial < 20; ++trial) {
    const auto phi = random_vector(rng, fs.dimension());
    std::map<std::string, Rational> values;
    for (std::size_t i = 0; i < space->size(); ++i) {
      values[space->points()[i]] = phi[i] - phi[space->base_index()];
    }
    CHECK(fs.dual_norm(phi) == lip_norm(LipschitzFunction(space, values)));
  }
}
