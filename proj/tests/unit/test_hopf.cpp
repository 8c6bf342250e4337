#include "doctest.h"
#include "oracle.hpp"
#include "pha/errors.hpp"
#include "pha/hopf.hpp"

using namespace pha;

TEST_CASE("finite groups") {
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  CHECK(z4.mul(3, 2) == 1);
  CHECK(z4.inv(1) == 3);
  FiniteGroup k = FiniteGroup::product_of_cyclic({2, 2});
  CHECK(k.order() == 4);
  for (std::size_t g = 0; g < 4; ++g) CHECK(k.mul(g, g) == k.identity());
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), Error);
}

TEST_CASE("group algebra and its dual satisfy the Hopf axioms") {
  for (std::size_t n : {1, 2, 3, 4}) {
    FiniteGroup g = FiniteGroup::cyclic(n);
    HopfAlgebra kg = group_algebra(g), dual = dual_group_algebra(g);
    CHECK(verify_hopf(kg.data()).ok());
    CHECK(verify_hopf(dual.data()).ok());
    CHECK(kg.cocommutative());
    CHECK(dual.cocommutative());  // abelian
    CHECK(kg.antipode_bijective());
  }
}

TEST_CASE("dual group algebra coproduct matches the reference") {
  FiniteGroup g = FiniteGroup::cyclic(3);
  oracle::GroupData ref = oracle::cyclic(3);
  HopfAlgebra d = dual_group_algebra(g);
  for (std::size_t h = 0; h < 3; ++h)
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = 0; y < 3; ++y)
        CHECK(d.comult()(x * 3 + y, h).value() == (ref.table[x][y] == h ? 1 : 0));
  // p_x p_y = delta p_x
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) CHECK(d.basis_mul(x, y) == (x == y ? d.basis(x) : Vec(3, Scalar(0))));
  CHECK(d.apply_antipode(d.basis(1)) == d.basis(2));
}

TEST_CASE("a nonabelian dual is not cocommutative") {
  // S3 from permutations
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      for (std::size_t k = 0; k < 6; ++k)
        if (perms[k] == c) t[a][b] = k;
    }
  FiniteGroup s3 = FiniteGroup::from_table(t);
  CHECK_FALSE(s3.is_abelian());
  CHECK_FALSE(dual_group_algebra(s3).cocommutative());
  CHECK(group_algebra(s3).cocommutative());
}

TEST_CASE("iterated coproduct") {
  HopfAlgebra kg = group_algebra(FiniteGroup::cyclic(2));
  Mat d2 = sweedler_power(kg, 2);
  CHECK(d2.rows() == 8);
  CHECK(d2 * kg.basis(1) == unit_vec(8, 7));
}

TEST_CASE("broken comultiplication is rejected") {
  HopfAlgebra kg = group_algebra(FiniteGroup::cyclic(2));
  HopfData bad = kg.data();
  bad.counit(0, 1) = Scalar(0);
  CHECK_FALSE(verify_hopf(bad).ok());
  CHECK_THROWS_AS(make_hopf(bad), Error);
}
