#include "doctest.h"
#include "helpers.hpp"
#include "pha/errors.hpp"
#include "pha/morita.hpp"
#include "pha/recognition.hpp"

using namespace pha;

TEST_CASE("smash context of zero on g") {
  PartialAction pa = helpers::zero_on_g();
  MoritaContextData c = smash_morita_context(pa, standard_globalization(pa));
  CHECK(verify_context(c).ok());
  CHECK(c.A.dim() == 1);
  CHECK(c.B.dim() == 4);
  CHECK(c.M.dim == 2);
  CHECK(c.N.dim == 2);
  CHECK(is_strict(c));
  CHECK(iso_to_matrix_algebra(c.B, 2).has_value());
  FDAlgebra ctx = context_algebra(c);
  CHECK(ctx.dim() == 9);
  CHECK(oracle::associative(oracle::from_library(ctx.mult(), ctx.dim())));
}

TEST_CASE("identity and amplification equivalences") {
  PartialAction pa = helpers::zero_on_g();
  ActionEquivalenceData id = identity_equivalence(pa);
  CHECK(verify_equivalent_partial_actions(id).ok());
  CHECK(is_strict(id.ctx));
  ActionEquivalenceData amp = amplification_equivalence(pa, 2);
  CHECK(verify_equivalent_partial_actions(amp).ok());
  CHECK(amp.ctx.B.dim() == 4);
  CHECK(verify_partial_action(entrywise_action(pa, 2)).ok());
  ActionEquivalenceData comp = compose_contexts(amp, identity_equivalence(amp.pa_B));
  CHECK(verify_equivalent_partial_actions(comp).ok());
  MoritaContextData sm = smash_equivalence_from_action_equivalence(amp);
  CHECK(verify_context(sm).ok());
  CHECK(is_strict(sm));
}

TEST_CASE("quotient by the right annihilator") {
  PartialAction pa = zero_on_nonidentity(group_algebra(FiniteGroup::cyclic(2)), left_unit_algebra());
  QuotientEquivalence q = quotient_equivalence(pa, AnnihilatorSide::Right);
  CHECK(q.quotient.alg.dim() == 1);
  CHECK(q.annihilator_trivial);
  CHECK(verify_equivalent_partial_actions(q.data).ok());
}

TEST_CASE("globalization context") {
  PartialAction pa = helpers::zero_on_g();
  ActionEquivalenceData g = globalization_context(identity_equivalence(pa));
  CHECK(verify_equivalent_partial_actions(g).ok());
  CHECK(is_strict(g.ctx));
  CHECK(iso_to_product_of_fields(g.ctx.A).has_value());
  CHECK(iso_to_product_of_fields(g.ctx.B).has_value());
}

TEST_CASE("identity equivalences on seeded instances") {
  std::mt19937_64 rng(53);
  for (std::size_t i = 0; i < 10; ++i) {
    FuzzInstance f = random_instance(rng, i % 2 ? FuzzHopf::DualZ2 : FuzzHopf::GroupZ2);
    if (!is_idempotent_algebra(f.action.alg())) continue;
    CAPTURE(f.label);
    ActionEquivalenceData id = identity_equivalence(f.action);
    CHECK(verify_context(id.ctx).ok());
    CHECK(verify_equivalent_partial_actions(id).ok());
  }
}

TEST_CASE("a broken pairing fails verification") {
  PartialAction pa = helpers::zero_on_g();
  MoritaContextData c = identity_equivalence(pa).ctx;
  c.tau = Scalar(2) * c.tau;
  CHECK_FALSE(verify_context(c).ok());
}
