#include <doctest.h>

#include <random>

#include "hopf/matrix.hpp"

using namespace hopf;

namespace {

Scalar const I = Scalar::i();

// Entries in Z[1/2, i] like every constant in use; dense 5x5 elimination
// over wider denominators can leave the 64-bit range.
Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> small(-3, 3), den(1, 2);
  return Scalar(Rat(small(rng), den(rng)), Rat(small(rng), den(rng)));
}

Mat random_mat(std::mt19937& rng, std::size_t r, std::size_t c, bool sparse) {
  Mat m(r, c);
  std::bernoulli_distribution zero(sparse ? 0.6 : 0.1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (!zero(rng)) m(i, j) = random_scalar(rng);
  return m;
}

}  // namespace

TEST_CASE("i squares to -1 and has order 4") {
  CHECK(I * I == Scalar(-1));
  CHECK(I.pow(4).is_one());
  CHECK(Scalar::i_pow(-1) == -I);
  CHECK(Scalar::half() + Scalar::half() == Scalar(1));
}

TEST_CASE("fractions stay reduced") {
  Scalar a(Rat(2, 4), Rat(-3, 6));
  CHECK(a.re().num() == 1);
  CHECK(a.re().den() == 2);
  CHECK(a.im() == Rat(-1, 2));
  CHECK(a * a.inv() == Scalar(1));
  CHECK(Scalar::parse(a.str()) == a);
}

TEST_CASE("overflow throws") {
  Scalar big(Rat(std::int64_t{1} << 62));
  CHECK_THROWS_AS(big * big, ArithmeticOverflow);
}

TEST_CASE("rank") {
  CHECK(rank(Mat::identity(2)) == 2);
  CHECK(rank(Mat(3, 3)) == 0);
  // second row is i times the first
  CHECK(rank(Mat::from({{1, I}, {I, -1}})) == 1);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(Mat::identity(3)).empty());
  CHECK(kernel_basis(Mat(2, 2)).size() == 2);
  auto k = kernel_basis(Mat::from({{1, I}}));
  REQUIRE(k.size() == 1);
  // a + i b = 0 with b = 1
  CHECK(k[0] == Vec{-I, 1});
}

TEST_CASE("solve_linear") {
  Vec b{3, I};
  CHECK(*solve_linear(Mat::identity(2), b) == b);
  CHECK(!solve_linear(Mat::from({{0}}), Vec{1}));
  // back substitution: i x2 = 1, x1 + x2 = 0
  auto x = solve_linear(Mat::from({{1, 1}, {0, I}}), Vec{0, 1});
  REQUIRE(x);
  CHECK(*x == Vec{I, -I});
}

TEST_CASE("kron") {
  CHECK(kron(Mat::identity(2), Mat::identity(2)) == Mat::identity(4));
  CHECK(kron(Mat::from({{I}}), Mat::from({{I}})) == Mat::from({{-1}}));
  Mat swap = Mat::from({{0, 1}, {1, 0}});
  Mat s = kron(swap, swap);
  CHECK(s != Mat::identity(4));
  CHECK(kron(s, s) * kron(s, s) == Mat::identity(16));
  // leftmost factor is the most significant index
  Vec e = kron(unit_vector(2, 1), unit_vector(3, 2));
  CHECK(e == unit_vector(6, 1 * 3 + 2));
}

TEST_CASE("inverse") {
  Mat a = Mat::from({{1, I}, {0, 2}});
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK((a * *inv).is_identity());
  CHECK(!inverse(Mat::from({{1, I}, {I, -1}})));
}

TEST_CASE("property: rank plus nullity equals columns") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    Mat m = random_mat(rng, r, c, trial % 2 == 0);
    auto k = kernel_basis(m);
    CHECK(rank(m) + k.size() == c);
    for (auto const& v : k) CHECK(is_zero(m * v));
  }
}

TEST_CASE("property: kron is associative") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Mat a = random_mat(rng, 2, 1 + rng() % 2, false);
    Mat b = random_mat(rng, 1 + rng() % 2, 2, false);
    Mat c = random_mat(rng, 2, 2, false);
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
  }
}

TEST_CASE("property: multiplication distributes over addition") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) * c == a * c + b * c);
    if (!c.is_zero()) CHECK((a / c) * c == a);
  }
}
