#include "doctest.h"
#include "helpers.hpp"
#include "pha/errors.hpp"
#include "pha/kcategory.hpp"

using namespace pha;

TEST_CASE("matrix unit and discrete categories") {
  for (std::size_t n = 1; n <= 3; ++n) {
    FiniteKCategory m = matrix_unit_category(n), d = discrete_category(n);
    CHECK(verify_category(m).ok());
    CHECK(verify_category(d).ok());
    CHECK(a_of_category(m).alg == matrix_algebra(n));
    CHECK(a_of_category(d).alg == product_of_fields(n));
    CHECK(a_of_category(m).units.units.size() == (std::size_t{1} << n) - 1);
  }
}

TEST_CASE("a of the category of A with doubled unit is Mat2(A)") {
  for (const FDAlgebra& a : {base_field_algebra(), matrix_algebra(2), truncated_polynomial(2)}) {
    LocalUnitSystem s{{*a.unit(), *a.unit()}};
    AlgebraCategory ac = category_of_algebra(a, s);
    CHECK(verify_category(ac.cat).ok());
    FDAlgebra b = a_of_category(ac.cat).alg;
    CHECK(b == matrix_algebra_over(a, 2));
    CHECK(oracle::associative(oracle::from_library(b.mult(), b.dim())));
  }
}

TEST_CASE("broken composition is detected") {
  FiniteKCategory c = matrix_unit_category(2);
  c.comp[0][1][0] = Scalar(2) * c.comp[0][1][0];
  CHECK_FALSE(verify_category(c).ok());
  CHECK_THROWS_AS(a_of_category(c), Error);
}

TEST_CASE("actions on categories and back") {
  HopfAlgebra kg = group_algebra(FiniteGroup::cyclic(2));
  FDAlgebra m2 = matrix_algebra(2);
  PartialAction pa = zero_on_nonidentity(kg, m2);
  LocalUnitSystem s{{m2.basis(0), m2.basis(3), *m2.unit()}};
  CategoryPartialAction cp = full_subcategory(induce_action_on_category(pa, s), {0, 1});
  CHECK(verify_category_partial_action(cp).ok());
  PartialAction back = induce_action_on_algebra(cp);
  CHECK(back.alg() == m2);
  CHECK(back.act() == pa.act());
  CategoryPartialAction rt = category_round_trip(cp);
  CHECK(rt.act == cp.act);
  CHECK(rt.cat.comp == cp.cat.comp);
  ActionEquivalenceData e = morita_A_vs_aCSA(pa, s);
  CHECK(verify_equivalent_partial_actions(e).ok());
}

TEST_CASE("category module functors") {
  FiniteKCategory c = matrix_unit_category(2);
  CModule m;
  m.dims = {1, 1};
  Mat one = Mat::identity(1);
  m.act = {{one, one}, {one, one}};
  CHECK(verify_cmodule(c, m).ok());
  LeftModule f = module_F(c, m);
  CHECK(verify_left_module(a_of_category(c).alg, f).ok());
  CHECK(module_equivalence_roundtrip(c, m).ok());
  CModule g = module_G(c, f);
  CHECK(g.dims == m.dims);
}

TEST_CASE("direct limit recovers regular modules") {
  FDAlgebra m2 = matrix_algebra(2);
  LocalUnitSystem s{{m2.basis(0), m2.basis(3), *m2.unit()}};
  CHECK(algebra_module_roundtrip(m2, s, regular_module(m2)).ok());
  FDAlgebra p3 = product_of_fields(3);
  LocalUnitSystem t{{p3.basis(0), p3.basis(0) + p3.basis(1), *p3.unit()}};
  CHECK(algebra_module_roundtrip(p3, t, regular_module(p3)).ok());
}
