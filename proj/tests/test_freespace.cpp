#include <catch2/catch_amalgamated.hpp>

#include "freelip/freespace.hpp"
#include "freelip/testgen.hpp"

using namespace freelip;

namespace {

SpacePtr uniform3() {
  return make_space(FiniteMetricSpace::build(
      {"0", "a", "b"}, "0",
      {{Rational(0), Rational(1), Rational(1)},
       {Rational(1), Rational(0), Rational(1)},
       {Rational(1), Rational(1), Rational(0)}}));
}

}  // namespace

TEST_CASE("elementary molecules have norm d(p,q)") {
  Rng rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    const auto space = make_space(random_space(rng, static_cast<std::size_t>(rng.range(2, 7))));
    for (std::size_t i = 0; i < space->size(); ++i) {
      for (std::size_t j = 0; j < space->size(); ++j) {
        if (i == j) continue;
        const auto mol =
            Molecule::elementary(space, space->points()[i], space->points()[j]);
        CHECK(aenorm(mol) == space->dist(i, j));
        CHECK(aenorm_oracle(mol) == space->dist(i, j));
      }
    }
  }
}

TEST_CASE("zero molecule has norm zero") {
  const auto space = uniform3();
  CHECK(aenorm(Molecule::zero(space)) == 0);
  CHECK(aenorm_oracle(Molecule::zero(space)) == 0);
}

TEST_CASE("uniform three-point example: 2 delta_a - delta_b - delta_0") {
  const auto space = uniform3();
  const Molecule mol(space, {{"a", Rational(2)}, {"b", Rational(-1)}, {"0", Rational(-1)}});
  CHECK(aenorm_oracle(mol) == 2);  // brute-force enumeration is the reference
  CHECK(aenorm(mol) == 2);

  const auto dec = optimal_decomposition(mol);
  CHECK(dec.cost == 2);
  CHECK(reconstruct(space, dec.terms) == mol);
  CHECK(decomposition_cost(space, dec.terms) == dec.cost);
}

TEST_CASE("norm axioms hold exactly on random molecules") {
  Rng rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    const auto space = make_space(random_space(rng, static_cast<std::size_t>(rng.range(3, 7))));
    const auto mu = random_molecule(rng, space, 4);
    const auto nu = random_molecule(rng, space, 4);
    const Rational c = rng.rational(-3, 3, 4);
    CHECK(aenorm(mu.scaled(c)) == abs(c) * aenorm(mu));
    CHECK(aenorm(mu + nu) <= aenorm(mu) + aenorm(nu));
    CHECK(aenorm(mu) > 0);
    CHECK(aenorm(mu - mu) == 0);
  }
}

TEST_CASE("flow norm equals brute-force oracle") {
  Rng rng(303);
  for (int trial = 0; trial < 60; ++trial) {
    const auto space = make_space(random_space(rng, static_cast<std::size_t>(rng.range(3, 7))));
    const auto mol = random_molecule_bounded_sides(rng, space, 4);
    CHECK(aenorm(mol) == aenorm_oracle(mol));
  }
}

TEST_CASE("oracle rejects oversized supports") {
  Rng rng(404);
  const auto space = make_space(random_space(rng, 10));
  std::map<std::string, Rational> w;
  for (std::size_t i = 0; i < 5; ++i) w[space->points()[i]] = 1;
  for (std::size_t i = 5; i < 10; ++i) w[space->points()[i]] = -1;
  CHECK_THROWS_MATCHES(aenorm_oracle(Molecule(space, w)), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == "SupportTooLarge"; }));
}

TEST_CASE("optimal decompositions reconstruct exactly at optimal cost") {
  Rng rng(505);
  for (int trial = 0; trial < 40; ++trial) {
    const auto space = make_space(random_space(rng, static_cast<std::size_t>(rng.range(3, 7))));
    const auto mol = random_molecule(rng, space, 5);
    const auto dec = optimal_decomposition(mol);
    CHECK(dec.cost == aenorm(mol));
    CHECK(reconstruct(space, dec.terms) == mol);
    for (const auto& t : dec.terms) CHECK(t.lambda > 0);
  }
}

TEST_CASE("target-cost padding hits the requested cost exactly") {
  const auto space = make_space(line_space({Rational(0), Rational(1), Rational(2)}));
  const Molecule mol(space, {{"p2", Rational(1)}, {"p0", Rational(-1)}});
  const auto padded = optimal_decomposition(mol, Rational(3));
  CHECK(padded.cost == 3);
  CHECK(reconstruct(space, padded.terms) == mol);
  CHECK(decomposition_cost(space, padded.terms) == 3);

  const auto exact = optimal_decomposition(mol, Rational(2));
  CHECK(exact.cost == 2);

  CHECK_THROWS_MATCHES(optimal_decomposition(mol, Rational(1)), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == "TargetBelowNorm"; }));
  CHECK_THROWS_MATCHES(optimal_decomposition(Molecule::zero(space)), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == "ZeroMolecule"; }));
}

TEST_CASE("padding works for awkward fractional targets") {
  Rng rng(606);
  for (int trial = 0; trial < 20; ++trial) {
    const auto space = make_space(random_space(rng, static_cast<std::size_t>(rng.range(3, 6))));
    const auto mol = random_molecule(rng, space, 4);
    const Rational target = aenorm(mol) + rng.rational(0, 2, 7);
    const auto dec = optimal_decomposition(mol, target);
    CHECK(dec.cost == target);
    CHECK(reconstruct(space, dec.terms) == mol);
    CHECK(decomposition_cost(space, dec.terms) == target);
  }
}
