#include <doctest.h>

#include "hopf/drinfeld.hpp"

using namespace hopf;

TEST_CASE("double of Z2 is a commutative 4-dim Hopf algebra") {
  DoubleData d = drinfeld_double(cyclic_group_algebra(2));
  CHECK(d.d.dim() == 4);
  auto r = verify_hopf(d.d);
  CHECK_MESSAGE(r.pass(), r.summary());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(d.d.prod(i, j) == d.d.prod(j, i));
}

TEST_CASE("double of Z4 passes the axioms") {
  DoubleData d = drinfeld_double(cyclic_group_algebra(4));
  CHECK(d.d.dim() == 16);
  auto r = verify_hopf(d.d);
  CHECK_MESSAGE(r.pass(), r.summary());
}

namespace {
DoubleData const& D() {
  static const DoubleData d = kashina_double(kashina::build_H());
  return d;
}
}  // namespace

TEST_CASE("D(H^cop) has dimension 256 and passes the axioms") {
  CHECK(D().d.dim() == 256);
  auto r = verify_hopf(D().d);
  CHECK_MESSAGE(r.pass(), r.summary());
}

TEST_CASE("both factors embed multiplicatively") {
  auto const& k = D().k;
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j)
      CHECK(D().d.mul(D().embed(k.basis(i)), D().embed(k.basis(j))) ==
            D().embed(k.mul(k.basis(i), k.basis(j))));
  CHECK(D().d.mul(D().gens.at("x"), D().gens.at("t")) == double_element(D(), "x t"));
}

TEST_CASE("presentation of D holds") {
  for (auto const& c : verify_double_presentation(D())) CHECK_MESSAGE(c.pass, c.relation << ": " << c.residual);
}

TEST_CASE("t a - a x^2 t vanishes as a vector") {
  Vec lhs = D().d.mul(D().gens.at("t"), D().gens.at("a"));
  Vec rhs = double_element(D(), "a x^2 t");
  CHECK(is_zero(sub(lhs, rhs)));
  CHECK_FALSE(is_zero(sub(lhs, double_element(D(), "a t"))));
}

namespace {
Tensor3 outer3(Vec const& u, Vec const& v, Vec const& w, Scalar s) {
  Tensor3 t;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      for (std::size_t k = 0; k < w.size(); ++k) {
        Scalar c = u[i] * v[j] * w[k] * s;
        if (!c.is_zero()) t[{std::uint32_t(i), std::uint32_t(j), std::uint32_t(k)}] += c;
      }
  return t;
}
Tensor3 sum(std::vector<Tensor3> const& parts) {
  Tensor3 t;
  for (auto const& p : parts)
    for (auto const& [k, v] : p) t[k] += v;
  for (auto it = t.begin(); it != t.end();) it = it->second.is_zero() ? t.erase(it) : std::next(it);
  return t;
}
}  // namespace

TEST_CASE("iterated coproducts of t and c in D match the closed forms") {
  auto e = [](char const* s) { return double_element(D(), s); };
  Scalar q = Scalar(Rat(1, 4));
  Tensor3 want_t = sum({outer3(e("t + x^2 t"), e("t"), e("t + y t"), q),
                        outer3(e("t + x^2 t"), e("x^2 t"), e("t - y t"), q),
                        outer3(e("t - x^2 t"), e("y t"), e("t + y t"), q),
                        outer3(e("t - x^2 t"), e("x^2 y t"), e("y t - t"), q)});
  CHECK(delta2(D().d, e("t")) == want_t);
  Tensor3 want_c = sum({outer3(e("c + a^2 c"), e("c"), e("c + a^2 b c"), q),
                        outer3(e("c - a^2 c"), e("a^2 b c"), e("c + a^2 b c"), q),
                        outer3(e("c + a^2 c"), e("a^2 c"), e("c - a^2 b c"), q),
                        outer3(e("a^2 c - c"), e("b c"), e("c - a^2 b c"), q)});
  // The closed form for c lists the legs in H* order; the dual factor of D
  // carries the opposite coproduct, so the legs come out reversed.
  Tensor3 reversed;
  for (auto const& [k, v] : want_c) reversed[{std::get<2>(k), std::get<1>(k), std::get<0>(k)}] = v;
  CHECK(delta2(D().d, e("c")) == reversed);
  CHECK(delta2(D().d, e("c")) != want_c);
}
