#include <doctest.h>

#include "hopf/kashina.hpp"

using namespace hopf;

namespace {

kashina::KashinaH const& H() {
  static const kashina::KashinaH k = kashina::build_H();
  return k;
}

// Functions on Z2 with the idempotent basis d0, d1.
HopfData functions_on_z2() {
  HopfData f(2);
  f.set_prod(0, 0, {{0, Scalar(1)}});
  f.set_prod(1, 1, {{1, Scalar(1)}});
  f.set_prod(0, 1, {});
  f.set_prod(1, 0, {});
  f.set_coprod(0, {{0, 0, Scalar(1)}, {1, 1, Scalar(1)}});
  f.set_coprod(1, {{0, 1, Scalar(1)}, {1, 0, Scalar(1)}});
  f.set_unit({1, 1});
  f.set_counit({1, 0});
  f.set_antipode(Mat::identity(2));
  return f;
}

}  // namespace

TEST_CASE("group algebra of Z2 passes every axiom") {
  HopfData g = cyclic_group_algebra(2);
  auto r = verify_hopf(g);
  CHECK(r.pass());
  CHECK(r.mode == "exhaustive");
}

TEST_CASE("H passes and identity antipode fails") {
  CHECK(verify_hopf(H().h).pass());
  HopfData bad = H().h;
  bad.set_antipode(Mat::identity(16));
  auto r = verify_hopf(bad);
  CHECK(!r.pass());
  auto const* s = r.find("antipode");
  REQUIRE(s != nullptr);
  CHECK(!s->pass);
  // first failing basis element is x; t fails too since S(t) != t
  CHECK(s->witness == "x");
  CHECK(kashina::antipode_t_formula(H()) != H().t);
}

TEST_CASE("dual of Z2 is functions on Z2") {
  HopfData d = dual(cyclic_group_algebra(2));
  CHECK(verify_hopf(d).pass());
  // the dual basis of a group algebra is the basis of point functions
  CHECK(check_morphism(functions_on_z2(), d, Mat::identity(2)).hopf_iso());
  CHECK(verify_hopf(dual(H().h)).pass());
}

TEST_CASE("op and cop") {
  CHECK(cop(cop(H().h)) == H().h);
  HopfData g = cyclic_group_algebra(4);
  CHECK(cop(g) == g);
  CHECK(!(cop(H().h) == H().h));
  CHECK(verify_hopf(cop(H().h)).pass());
  CHECK(verify_hopf(op(H().h)).pass());
}

TEST_CASE("antipode of Z4 is inversion") {
  Mat s = solve_antipode(cyclic_group_algebra(4));
  for (std::size_t g = 0; g < 4; ++g) CHECK(s.col(g) == unit_vector(4, (4 - g) % 4));
}

TEST_CASE("solved antipode of H is two-sided and matches S(x), S(y), S(t)") {
  HopfData h = H().h;
  h.set_antipode(std::nullopt);
  Mat s = solve_antipode(h);
  CHECK(antipode_ok(h, s));
  CHECK(s * H().x == H().h.power(H().x, 3));
  CHECK(s * H().y == H().y);
  CHECK(s * H().t == kashina::antipode_t_formula(H()));
  for (auto const& g : H().grouplikes) CHECK(s * (s * g) == g);
}

TEST_CASE("group-likes and skew primitives of H") {
  std::size_t count = 0;
  for (std::size_t b = 0; b < 16; ++b) count += is_grouplike(H().h, H().h.basis(b));
  CHECK(count == 8);
  CHECK(is_grouplike(H().h, H().h.unit()));
  // spanned by 1 - g; for g = 1 there are no nonzero primitives
  for (auto const& g : H().grouplikes)
    CHECK(pairwise_primitive_space(H().h, H().h.unit(), g) == (g == H().h.unit() ? 0u : 1u));
}

TEST_CASE("non-invertible map is not an isomorphism") {
  Mat f(16, 16);
  for (std::size_t b = 0; b < 16; ++b) f(0, b) = H().h.counit()[b];
  auto r = check_morphism(H().h, H().h, f);
  CHECK(r.algebra);
  CHECK(r.coalgebra);
  CHECK(!r.bijective);
}
