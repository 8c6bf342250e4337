#include "doctest.h"
#include "helpers.hpp"
#include "pha/errors.hpp"
#include "pha/group_partial.hpp"

using namespace pha;

namespace {

PartialGroupAction first_factor() {
  Mat p = Mat::from_rows({{1, 0}, {0, 0}});
  return make_partial_group_action(FiniteGroup::cyclic(2), product_of_fields(2),
                                   {Subspace::whole(2), Subspace::span(2, {{1, 0}})}, {Mat::identity(2), p},
                                   std::vector<Mat>{Mat::identity(2), p});
}

}  // namespace

TEST_CASE("first-factor action of Z2 on Q x Q") {
  PartialGroupAction p = first_factor();
  CHECK(verify_partial_group_action(p).ok());
  CHECK(verify_product_partial_action(p).ok());
  CHECK(verify_alpha_projections(p).ok());
  CHECK(is_regular(p));
  CHECK(p.apply(1, Vec{3, 0}) == Vec{3, 0});
  CHECK_THROWS_AS(p.apply(1, Vec{0, 1}), Error);
}

TEST_CASE("kG round trip is exact") {
  PartialGroupAction p = first_factor();
  PartialAction pa = to_kG_action(p);
  CHECK(verify_partial_action(pa).ok());
  oracle::Verdict v = helpers::reference_verdict(pa);
  CHECK((v.unit && v.composition && v.symmetry));
  CHECK(verify_psi_identities(pa).ok());
  PartialGroupAction back = from_kG_action(pa);
  CHECK(back.domains == p.domains);
  CHECK(back.ambient_alpha(1) == p.ambient_alpha(1));
  REQUIRE(back.projections);
  CHECK(*back.projections == *p.projections);
}

TEST_CASE("psi maps are idempotent on seeded kZ2 instances") {
  std::mt19937_64 rng(41);
  for (std::size_t i = 0; i < 15; ++i) {
    FuzzInstance f = random_instance(rng, FuzzHopf::GroupZ2);
    CAPTURE(f.label);
    Mat psi = psi_map(f.action, 1);
    CHECK(psi * psi == psi);
    CHECK(verify_psi_identities(f.action).ok());
    if (f.action.alg().is_unital()) {
      PartialGroupAction p = from_kG_action(f.action);
      CHECK(verify_partial_group_action(p).ok());
      CHECK(to_kG_action(p).act() == f.action.act());
    }
  }
}

TEST_CASE("global group actions") {
  Mat swap = Mat::from_rows({{0, 1}, {1, 0}});
  PartialGroupAction p = global_group_action(FiniteGroup::cyclic(2), product_of_fields(2), {Mat::identity(2), swap});
  CHECK(verify_partial_group_action(p).ok());
  CHECK(is_regular(p));
  CHECK(to_kG_action(p).op(1) == swap);
}

TEST_CASE("domains must be ideals") {
  FDAlgebra u = upper_triangular(2);
  // span of E_11 is not an ideal of the upper triangular matrices
  Subspace d = Subspace::span(3, {u.basis(0)});
  PartialGroupAction p =
      make_partial_group_action(FiniteGroup::cyclic(2), u, {Subspace::whole(3), d}, {Mat::identity(3), Mat::identity(3)});
  CHECK_FALSE(verify_partial_group_action(p).passed("domains_ideals"));
}
