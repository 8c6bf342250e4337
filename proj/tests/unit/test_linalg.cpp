#include "doctest.h"
#include "oracle.hpp"
#include "pha/errors.hpp"
#include "pha/linalg.hpp"

using namespace pha;

TEST_CASE("scalars stay exact and respect their field") {
  Scalar a(1, 3), b(1, 6);
  CHECK(a + b == Scalar(1, 2));
  CHECK((a * Scalar(3)).is_one());
  Field f7 = Field::prime(7);
  Scalar x = Scalar::parse("3", f7);
  CHECK(x * Scalar(5) == Scalar::parse("1", f7));
  CHECK((Scalar(1) / Scalar::parse("3", f7)) == Scalar::parse("5", f7));
  CHECK_THROWS_AS(Scalar::parse("1", Field::prime(5)) + x, Error);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
  CHECK(Field::parse("fp:7") == f7);
  CHECK_THROWS_AS(Field::parse("reals"), Error);
}

TEST_CASE("rank, kernel and inverse agree with the reference elimination") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    oracle::QMat q = oracle::random_matrix(rng, r, c, -1, 1);
    if (trial % 3 == 0 && r > 1) q[r - 1] = q[0];
    Mat m = oracle::to_mat(q);
    CAPTURE(to_string(m));
    CHECK(rank(m) == oracle::rank(q));
    Subspace k = kernel(m);
    CHECK(k.dim() == c - oracle::rank(q));
    for (const auto& v : k.basis_vectors()) CHECK(is_zero(m * v));
    if (r == c) {
      auto inv = inverse(m);
      CHECK(inv.has_value() == (oracle::rank(q) == r));
      if (inv) CHECK(m * *inv == Mat::identity(r));
    }
    CHECK(oracle::same_row_space(oracle::from(rref(m).reduced), q));
  }
}

TEST_CASE("solve_linear returns exact solutions or nothing") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Mat a = oracle::to_mat(oracle::random_matrix(rng, 3, 4, -2, 2));
    Vec x(4);
    for (auto& s : x) s = Scalar(static_cast<long>(rng() % 5) - 2);
    Vec b = a * x;
    auto sol = solve_linear(a, b);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == b);
  }
  Mat z = Mat::from_rows({{1, 1}, {1, 1}});
  CHECK_FALSE(solve_linear(z, Vec{1, 2}).has_value());
}

TEST_CASE("subspace lattice operations") {
  Subspace u = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
  Subspace v = Subspace::span(3, {{0, 1, 0}, {0, 0, 1}});
  CHECK(intersect(u, v) == Subspace::span(3, {{0, 1, 0}}));
  CHECK(sum(u, v).is_whole());
  CHECK(u.contains(Vec{2, -1, 0}));
  CHECK_FALSE(u.contains(Vec{0, 0, 1}));
  auto c = u.coordinates(Vec{3, 4, 0});
  REQUIRE(c);
  CHECK(u.from_coordinates(*c) == Vec{3, 4, 0});
  QuotientSpace q(u);
  CHECK(q.dim() == 1);
  CHECK(is_zero(q.project(Vec{5, 6, 0})));
  CHECK(q.project(q.lift(Vec{7})) == Vec{7});
}

TEST_CASE("Kronecker products match the reference") {
  std::mt19937_64 rng(3);
  oracle::QMat a = oracle::random_matrix(rng, 2, 3), b = oracle::random_matrix(rng, 2, 2);
  Mat k = kron(oracle::to_mat(a), oracle::to_mat(b));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(k(i, j).value() == a[i / 2][j / 2] * b[i % 2][j % 2]);
}
