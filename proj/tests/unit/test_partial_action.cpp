#include "doctest.h"
#include "helpers.hpp"
#include "pha/errors.hpp"

using namespace pha;

TEST_CASE("zero on the nontrivial element is a symmetric partial action") {
  PartialAction pa = helpers::zero_on_g();
  Report r = verify_partial_action(pa);
  CHECK(r.ok());
  CHECK(general_verdict(r) == ActionVerdict{true, true});
  CHECK(unital_verdict(verify_unital_partial_action(pa)) == ActionVerdict{true, true});
  verify_partial_action(pa);
  CHECK(pa.known_symmetric());
}

TEST_CASE("scaling by one half is not a partial action of kZ2 on Q") {
  HopfAlgebra kg = group_algebra(FiniteGroup::cyclic(2));
  Mat half(1, 1);
  half(0, 0) = Scalar(1, 2);
  PartialAction pa(kg, base_field_algebra(), action_from_operators({Mat::identity(1), half}, 1));
  Report r = verify_partial_action(pa);
  CHECK_FALSE(r.passed("composition"));
  CHECK_THROWS_AS(require_partial(pa), Error);
}

TEST_CASE("verdicts agree with the reference on seeded instances") {
  std::mt19937_64 rng(20261015);
  std::size_t broken = 0;
  for (std::size_t i = 0; i < 40; ++i) {
    FuzzInstance f = random_instance(rng, i % 2 ? FuzzHopf::DualZ2 : FuzzHopf::GroupZ2);
    for (const PartialAction& pa : {f.action, helpers::perturbed(f.action, rng)}) {
      CAPTURE(f.label);
      Report r = verify_partial_action(pa);
      oracle::Verdict v = helpers::reference_verdict(pa);
      CHECK(r.passed("unit") == v.unit);
      CHECK(r.passed("composition") == v.composition);
      CHECK(r.passed("symmetry") == v.symmetry);
      broken += v.composition ? 0 : 1;
    }
  }
  CHECK(broken > 0);
}

TEST_CASE("global actions restrict to partial ones") {
  std::mt19937_64 rng(99);
  for (std::size_t i = 0; i < 20; ++i) {
    FuzzInstance f = random_instance(rng, i % 2 ? FuzzHopf::DualZ2 : FuzzHopf::GroupZ2);
    CHECK(verify_global_action(f.global).ok());
    CHECK(verify_partial_action(as_partial(f.global)).ok());
    CHECK(verify_partial_action(f.action).ok());
  }
}

TEST_CASE("partial representation identities") {
  PartialAction pa = helpers::zero_on_g();
  Report r = verify_partial_representation(action_to_partial_representation(pa));
  for (const char* n : {"PR1", "PR2", "PR3", "PR4", "PR5"}) CHECK(r.passed(n));
  CHECK(verify_group_identity(pa).ok());
  CHECK(verify_module_map_identities(pa).ok());
}

TEST_CASE("restriction by a central idempotent") {
  HopfAlgebra kg = group_algebra(FiniteGroup::cyclic(2));
  FDAlgebra qq = product_of_fields(2);
  GlobalAction swap(kg, qq, action_from_operators({Mat::identity(2), Mat::from_rows({{0, 1}, {1, 0}})}, 2));
  Restriction r = restrict_via_central_idempotent(swap, qq.basis(0));
  CHECK(r.action.alg().dim() == 1);
  CHECK(r.action.op(1) == Mat(1, 1));
  CHECK(verify_partial_action(r.action).ok());
  CHECK_THROWS_AS(restrict_via_central_idempotent(swap, Vec{1, 1} + Vec{1, 0}), Error);
}

TEST_CASE("tensor products of partial actions") {
  PartialAction z = helpers::zero_on_g();
  PartialAction t = tensor_product_action(z, z);
  CHECK(t.alg().dim() == 1);
  CHECK(verify_partial_action(t).ok());
}

TEST_CASE("categorizability with respect to local units") {
  HopfAlgebra kg = group_algebra(FiniteGroup::cyclic(2));
  PartialAction z = zero_on_nonidentity(kg, product_of_fields(2));
  CHECK(is_categorizable(z, LocalUnitSystem{{unit_vec(2, 0), unit_vec(2, 1)}}));
}
