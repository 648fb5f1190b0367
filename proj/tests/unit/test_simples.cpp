#include <doctest.h>

#include "hopf/simples.hpp"

using namespace hopf;

namespace {
DoubleData const& D() {
  static const DoubleData d = kashina_double(kashina::build_H());
  return d;
}
Scalar xi() { return Scalar::i(); }
}  // namespace

TEST_CASE("index sets have the stated sizes") {
  CHECK(omega().size() == 24);
  CHECK(omega1().size() == 16);
  CHECK(lambda1().size() == 6);
  CHECK(lambda2().size() == 2);
  CHECK(gamma_set().size() == 16);
}

TEST_CASE("trivial character is the counit") {
  Rep r = character_module(0, 0, 0, 0);
  for (auto const& m : r.mats) CHECK(m(0, 0) == Scalar(1));
  // the counit of D evaluated on each generator
  for (auto const* g : kRepGenerators) CHECK(D().d.eps(D().gens.at(g)) == Scalar(1));
}

TEST_CASE("chi(0,1,1,0) sends t and c to i") {
  Rep r = character_module(0, 1, 1, 0);
  CHECK(r.act("t")(0, 0) == xi());
  CHECK(r.act("c")(0, 0) == xi());
  CHECK_THROWS_AS(character_module(0, 4, 0, 0), InvalidIndex);
}

TEST_CASE("M1 and M9 matrices") {
  Rep m1 = named_module("M1");
  CHECK(m1.act("a") == Mat::from({{-1, 0}, {0, -1}}));
  CHECK(m1.act("t") == Mat::from({{xi(), 0}, {0, -xi()}}));
  Rep m9 = named_module("M9");
  CHECK(m9.act("c") == Mat::from({{-1, 0}, {0, 1}}));
}

TEST_CASE("W1 outside Lambda1 is rejected") {
  CHECK_THROWS_AS(two_dim_module(Family::W1, {3, 0, 1}), InvalidIndex);
  CHECK_THROWS_AS(two_dim_module(Family::W3, {1, 0, 0}), InvalidIndex);
  CHECK_THROWS_AS(two_dim_module(Family::V, {0, 0, 2, 0}), InvalidIndex);
  CHECK_NOTHROW(two_dim_module(Family::W1, {3, 1, 1}));
}

TEST_CASE("every simple satisfies the relations and the algebra-map certificate") {
  for (auto const& r : all_simples()) {
    CHECK_MESSAGE(rep_relations_hold(r), r.name());
    std::string w;
    CHECK_MESSAGE(algebra_map_certificate(D(), r, &w), r.name() << " " << w);
  }
}

TEST_CASE("a broken module fails the certificate") {
  Rep r = named_module("M1");
  r.mats[2] = Mat::from({{xi(), 0}, {0, xi()}});
  CHECK_FALSE(rep_relations_hold(r));
  CHECK_FALSE(algebra_map_certificate(D(), r));
}

TEST_CASE("Schur and distinctness") {
  CHECK(intertwiners(named_module("M3"), named_module("M3")).dim == 1);
  CHECK(intertwiners(character_module(0, 1, 1, 0), character_module(0, 1, 1, 1)).dim == 0);
  CHECK(intertwiners(two_dim_module(Family::V, {0, 1, 1, 0}), two_dim_module(Family::V, {0, 1, 1, 1})).dim == 0);
}

TEST_CASE("character to two-dim hom spaces vanish (common eigenvector oracle)") {
  // Hom(chi, W) is the space of common eigenvectors of W(g) with eigenvalue chi(g).
  for (int c = 0; c < 32; c += 5) {
    Rep ch = all_simples()[static_cast<std::size_t>(c)];
    for (auto const& w : all_simples()) {
      if (w.dim != 2) continue;
      Mat stacked(12, 2);
      for (std::size_t g = 0; g < 6; ++g)
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j)
            stacked(2 * g + i, j) = w.mats[g](i, j) - (i == j ? ch.mats[g](0, 0) : Scalar());
      std::size_t oracle = 2 - rank(stacked);
      CHECK(intertwiners(ch, w).dim == oracle);
      CHECK(oracle == 0);
    }
  }
}

TEST_CASE("census") {
  auto c = census();
  CHECK(c.one_dim == 32);
  CHECK(c.two_dim == 56);
  CHECK(c.sum_of_squares == 256);
  CHECK(c.relation_failures == 0);
  CHECK(c.non_simple == 0);
  CHECK(c.isomorphic_distinct_pairs == 0);
  CHECK(c.pairs_checked == 88 * 87 / 2);
  CHECK(c.ok());
  REQUIRE(c.pairings.size() == 2);
  CHECK(c.pairings[0].sum_of_squares == 256);
  CHECK(c.pairings[0].isomorphic_pairs == 0);
  CHECK(c.pairings[1].two_dim_count == 52);
  CHECK(c.pairings[1].sum_of_squares != 256);
}
