#include "doctest.h"
#include "oracle.hpp"
#include "pha/algebra.hpp"
#include "pha/errors.hpp"
#include "pha/random_instances.hpp"

using namespace pha;

TEST_CASE("matrix algebras have matrix-unit structure constants") {
  for (std::size_t n = 1; n <= 3; ++n) {
    FDAlgebra m = matrix_algebra(n);
    oracle::Alg ref = oracle::matrix_units(n);
    CHECK(oracle::from_library(m.mult(), m.dim()).c == ref.c);
    CHECK(m.is_unital());
  }
}

TEST_CASE("builtin algebras are associative by the reference check") {
  std::vector<FDAlgebra> algs = {base_field_algebra(),      product_of_fields(3), upper_triangular(3),
                                 truncated_polynomial(3), zero_algebra(2),      left_unit_algebra(),
                                 matrix_algebra_over(truncated_polynomial(2), 2)};
  for (const auto& a : algs) {
    CHECK(oracle::associative(oracle::from_library(a.mult(), a.dim())));
    CHECK_FALSE(associativity_witness(a).has_value());
  }
}

TEST_CASE("products, tensors and opposites") {
  FDAlgebra a = upper_triangular(2), b = truncated_polynomial(2);
  FDAlgebra t = tensor_algebra(a, b), p = direct_product(a, b), o = opposite_algebra(a);
  CHECK(t.dim() == 6);
  CHECK(p.dim() == 5);
  CHECK(oracle::associative(oracle::from_library(t.mult(), t.dim())));
  CHECK(oracle::associative(oracle::from_library(p.mult(), p.dim())));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) CHECK(o.product(o.basis(i), o.basis(j)) == a.product(a.basis(j), a.basis(i)));
  CHECK(opposite_algebra(o) == a);
}

TEST_CASE("non-associative tables are rejected") {
  // b0 b0 = b1, everything else zero except b1 b0 = b0: (b0 b0) b0 = b0 but b0 (b0 b0) = 0
  Mat m(2, 4);
  m(1, 0) = 1;
  m(0, 2) = 1;
  CHECK_THROWS_AS(make_algebra(m), Error);
  CHECK(associativity_witness(make_algebra_unchecked(m)).has_value());
}

TEST_CASE("annihilators and idempotency") {
  FDAlgebra lu = left_unit_algebra();
  CHECK(right_annihilator(lu).dim() == 1);
  CHECK(left_annihilator(lu).dim() == 0);
  CHECK(is_idempotent_algebra(lu));
  CHECK_FALSE(lu.is_unital());
  CHECK_FALSE(has_left_identity(lu).has_value());
  FDAlgebra z = zero_algebra(2);
  CHECK(right_annihilator(z).is_whole());
  CHECK_FALSE(is_idempotent_algebra(z));
  FDAlgebra m = matrix_algebra(2);
  CHECK(right_annihilator(m).is_zero());
  CHECK(center(m).dim() == 1);
}

TEST_CASE("random structure: annihilators are ideals") {
  std::mt19937_64 rng(5);
  for (std::size_t i = 0; i < 20; ++i) {
    FuzzInstance f = random_instance(rng, i % 2 ? FuzzHopf::GroupZ2 : FuzzHopf::DualZ2);
    const FDAlgebra& a = f.action.alg();
    CHECK(is_ideal(a, right_annihilator(a)));
    CHECK(is_ideal(a, left_annihilator(a)));
    for (const auto& v : right_annihilator(a).basis_vectors())
      for (std::size_t j = 0; j < a.dim(); ++j) CHECK(is_zero(a.product(a.basis(j), v)));
  }
}

TEST_CASE("subalgebras, quotients and corners") {
  FDAlgebra m = matrix_algebra(2);
  Vec e11 = m.basis(0);
  Subspace c = corner(m, e11, e11);
  CHECK(c.dim() == 1);
  Subalgebra s = make_subalgebra(m, Subspace::span(4, {m.basis(0), m.basis(3)}));
  CHECK(s.alg == product_of_fields(2));
  FDAlgebra u = upper_triangular(2);
  Subspace rad = Subspace::span(3, {u.basis(1)});
  if (is_ideal(u, rad)) {
    QuotientAlgebra q = make_quotient_algebra(u, rad);
    CHECK(q.alg.dim() == 2);
  }
  CHECK_THROWS_AS(make_subalgebra(m, Subspace::span(4, {m.basis(1), m.basis(2)})), Error);
}

TEST_CASE("regular modules and local units") {
  FDAlgebra a = product_of_fields(2);
  LeftModule r = regular_module(a);
  CHECK(verify_left_module(a, r).ok());
  CHECK(is_unital_module(a, r));
  CHECK(verify_local_units(a, LocalUnitSystem{{a.basis(0), *a.unit()}}).ok());
  CHECK_FALSE(verify_local_units(a, LocalUnitSystem{{a.basis(0)}}).ok());
}

TEST_CASE("field binding carries through products") {
  Field f = Field::prime(3);
  FDAlgebra m = matrix_algebra(2, f);
  CHECK(m.field() == f);
  CHECK(m.product(m.basis(0), m.basis(0))[0].field() == f);
}
