#include <doctest.h>

#include "hopf/ydcat.hpp"

using namespace hopf;

namespace {
kashina::KashinaH const& H() {
  static const kashina::KashinaH h = kashina::build_H();
  return h;
}
DoubleData const& D() {
  static const DoubleData d = kashina_double(H());
  return d;
}
std::vector<CatalogEntry> const& Cat() {
  static const std::vector<CatalogEntry> c = catalog(H(), D());
  return c;
}
Mat const& tau(int n) {
  static const auto autos = kashina::table_automorphisms(H());
  return autos[static_cast<std::size_t>(n - 1)].matrix;
}
}  // namespace

TEST_CASE("characters: group-like coaction and braiding scalar") {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          YDModule m = yd_from_double_module(H(), D(), character_module(i, j, k, l));
          std::size_t g = kashina::index(unsigned(j + 2 * k + 2 * l), unsigned(k), 0);
          for (std::size_t q = 0; q < 16; ++q) CHECK(m.coact[q](0, 0) == Scalar(q == g ? 1 : 0));
          Scalar expect = ((i * j + j * k) % 2) ? Scalar(-1) : Scalar(1);
          CHECK(braiding(m, m)(0, 0) == expect);
        }
}

TEST_CASE("V1 braiding scalar is -1") { CHECK(braiding(find(Cat(), "V1"), find(Cat(), "V1"))(0, 0) == Scalar(-1)); }

TEST_CASE("M9 coaction of v1 is x^2 (x) v1") {
  YDModule const& m = find(Cat(), "M9");
  for (std::size_t q = 0; q < 16; ++q) {
    CHECK(m.coact[q](0, 0) == Scalar(q == kashina::index(2, 0, 0) ? 1 : 0));
    CHECK(m.coact[q](1, 0) == Scalar());
  }
}

TEST_CASE("every simple converts to a YD module with a braid-equation braiding") {
  for (auto const& r : all_simples()) {
    YDModule m = yd_from_double_module(H(), D(), r);
    CHECK_MESSAGE(verify_yd(H(), m).pass(), r.name());
    Mat c = braiding(m, m);
    CHECK(inverse(c).has_value());
    CHECK_MESSAGE(braid_equation(c, m.dim), r.name());
  }
}

TEST_CASE("closed-form coactions: mismatches confined to V with k odd") {
  std::size_t mismatches = 0;
  for (auto const& r : all_simples()) {
    YDModule m = yd_from_double_module(H(), D(), r);
    auto c = compare_closed_form(H(), m, r);
    bool odd_v = r.family == Family::V && r.index[2] % 2 == 1;
    CHECK_MESSAGE(c.match == !odd_v, r.name() << "\n" << c.computed << "\n" << c.stated);
    if (!c.match) ++mismatches;
  }
  CHECK(mismatches == 16);
  CHECK(compare_closed_form(H(), find(Cat(), "M1"), named_module("M1")).match);
}

TEST_CASE("corrupted coaction is rejected") {
  YDModule m = find(Cat(), "M1");
  std::size_t q = 0;
  while (m.coact[q].is_zero()) ++q;
  m.coact[q] = m.coact[q] * Scalar(2);
  CHECK_FALSE(verify_yd(H(), m).pass());
}

TEST_CASE("twist by identity is the same module") {
  for (auto const& e : Cat()) {
    YDModule t = twist(e.yd, tau(1));
    CHECK(t.gens == e.yd.gens);
    CHECK(t.coact == e.yd.coact);
  }
}

TEST_CASE("twists keep the braiding") {
  for (int n : {2, 5, 12, 17, 33, 49, 55})
    for (auto const& e : Cat()) {
      YDModule t = twist(e.yd, tau(n));
      CHECK(verify_yd(H(), t).pass());
      CHECK(braiding(t, t) == braiding(e.yd, e.yd));
    }
}

TEST_CASE("isomorphism tests") {
  CHECK_FALSE(yd_isomorphic(find(Cat(), "V1"), find(Cat(), "V2")).isomorphic);
  auto r = yd_isomorphic(twist(find(Cat(), "V1"), tau(17)), find(Cat(), "V2"));
  CHECK(r.isomorphic);
  CHECK(yd_isomorphic(twist(find(Cat(), "M1"), tau(49)), find(Cat(), "M8")).isomorphic);
}

TEST_CASE("direct sum") {
  YDModule const& m1 = find(Cat(), "M1");
  YDModule s = direct_sum({m1, m1});
  CHECK(s.dim == 4);
  CHECK(verify_yd(H(), s).pass());
  Mat c = braiding(s, s);
  Mat c11 = braiding(m1, m1);
  // component v_a (x) w_b with both in the second copy
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t q = 0; q < 2; ++q)
          CHECK(c((r + 2) * 4 + (q + 2), (a + 2) * 4 + (b + 2)) == c11(r * 2 + q, a * 2 + b));
  CHECK(braid_equation(c, 4));
}

TEST_CASE("twist claims: all but V4^tau33 = V4 hold") {
  auto claims = twist_claims(H(), Cat());
  REQUIRE(claims.size() == 14);
  for (auto const& c : claims) {
    CHECK(c.braiding_preserved);
    bool written_wrong = c.source == "V4" && c.tau == 33;
    CHECK(c.result.isomorphic == !written_wrong);
    if (written_wrong) CHECK(c.actual == "V7");
    else CHECK(c.actual == c.target);
  }
}
