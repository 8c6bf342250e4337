#include "doctest.h"
#include "helpers.hpp"

using namespace pha;

TEST_CASE("the fuzz suite is reproducible from its seed") {
  auto a = fuzz_suite(123, 20), b = fuzz_suite(123, 20);
  REQUIRE(a.size() == 20);
  for (std::size_t i = 0; i < 20; ++i) {
    CHECK(a[i].label == b[i].label);
    CHECK(a[i].action.act() == b[i].action.act());
    CHECK(a[i].action.alg() == b[i].action.alg());
  }
}

TEST_CASE("every instance is a symmetric partial action within the size bound") {
  for (std::size_t max_dim : {2, 4}) {
    auto s = fuzz_suite(77, 30, max_dim);
    std::size_t groups = 0;
    for (const auto& f : s) {
      CAPTURE(f.label);
      CHECK(f.action.alg().dim() <= max_dim);
      oracle::Verdict v = helpers::reference_verdict(f.action);
      CHECK((v.unit && v.composition && v.symmetry));
      CHECK(verify_global_action(f.global).ok());
      groups += f.action.hopf().origin() == HopfOrigin::GroupAlgebra ? 1 : 0;
    }
    CHECK(groups == 15);
  }
}

TEST_CASE("the suite covers nonzero right annihilators") {
  auto s = fuzz_suite(20261015, 100);
  std::size_t nonzero = 0, unital = 0;
  for (const auto& f : s) {
    nonzero += right_annihilator(f.action.alg()).is_zero() ? 0 : 1;
    unital += f.action.alg().is_unital() ? 1 : 0;
  }
  CHECK(nonzero > 0);
  CHECK(unital > 0);
}

TEST_CASE("left unit algebra and central idempotents") {
  FDAlgebra lu = left_unit_algebra();
  CHECK(right_annihilator(lu).dim() == 1);
  CHECK(left_annihilator(lu).is_zero());
  auto ids = small_central_idempotents(product_of_fields(2));
  CHECK(ids.size() == 3);
  for (const auto& e : ids) CHECK(is_central(product_of_fields(2), e));
  CHECK(small_central_idempotents(matrix_algebra(2)).size() == 1);
}
