#include "doctest.h"
#include "helpers.hpp"
#include "pha/globalization.hpp"
#include "pha/recognition.hpp"

using namespace pha;

TEST_CASE("convolution algebra is associative with the right action") {
  HopfAlgebra kg = group_algebra(FiniteGroup::cyclic(2));
  ConvolutionAlgebra c = convolution_algebra(kg, product_of_fields(2));
  CHECK(c.alg.dim() == 4);
  CHECK(oracle::associative(oracle::from_library(c.alg.mult(), c.alg.dim())));
  CHECK(verify_global_action(c.action).ok());
  Vec f = c.from_values({Vec{1, 2}, Vec{3, 4}});
  CHECK(c.evaluate(f, 1) == Vec{3, 4});
  // (g.f)(h) = f(hg)
  CHECK(c.evaluate(c.action.apply_basis(1, f), 0) == Vec{3, 4});
}

TEST_CASE("standard globalization of zero on g is Q x Q with the swap") {
  PartialAction pa = helpers::zero_on_g();
  GlobalizationResult g = standard_globalization(pa);
  CHECK(g.B.dim() == 2);
  CHECK(verify_globalization(pa, g).ok());
  CHECK(is_minimal(pa, g));
  auto iso = iso_to_product_of_fields(g.B);
  REQUIRE(iso);
  CHECK(transport(*iso, g.action.op(1)) == Mat::from_rows({{0, 1}, {1, 0}}));
  CHECK(is_injective(g.theta));
}

TEST_CASE("standard globalizations of seeded instances") {
  std::mt19937_64 rng(31);
  for (std::size_t i = 0; i < 20; ++i) {
    FuzzInstance f = random_instance(rng, i % 2 ? FuzzHopf::DualZ2 : FuzzHopf::GroupZ2);
    CAPTURE(f.label);
    GlobalizationResult g = standard_globalization(f.action);
    CHECK(verify_globalization(f.action, g).ok());
    CHECK(is_minimal(f.action, g));
    CHECK(oracle::associative(oracle::from_library(g.B.mult(), g.B.dim())));
    CHECK(g.B.dim() <= f.action.hopf().dim() * f.action.alg().dim());
    // B is spanned by h.theta(a)
    CHECK(rank(generator_map(f.action, g)) == g.B.dim());
    bool ra = right_annihilator(f.action.alg()).is_zero(), rb = right_annihilator(g.B).is_zero();
    if (rb) CHECK(ra);
    if (ra) CHECK(rb);
  }
}

TEST_CASE("a global action is its own globalization") {
  HopfAlgebra kg = group_algebra(FiniteGroup::cyclic(2));
  FDAlgebra qq = product_of_fields(2);
  GlobalAction swap(kg, qq, action_from_operators({Mat::identity(2), Mat::from_rows({{0, 1}, {1, 0}})}, 2));
  PartialAction pa = as_partial(swap);
  GlobalizationResult g = make_candidate(qq, swap, Mat::identity(2));
  CHECK(verify_globalization(pa, g).ok());
  CHECK(is_minimal(pa, g));
  GlobalizationResult s = standard_globalization(pa);
  CHECK(s.B.dim() == 2);
  Lift l = lift_morphism(identity_morphism(qq), pa, g, pa, s);
  CHECK(l.injective);
  CHECK(l.surjective);
  CHECK(verify_morphism(l.phi).ok());
}

TEST_CASE("a non-minimal globalization is detected") {
  PartialAction pa = helpers::zero_on_g();
  HopfAlgebra kg = pa.hopf();
  // Q x Q x Q with g swapping the first two and fixing the third; theta(1) = e1 + e3
  FDAlgebra q3 = product_of_fields(3);
  GlobalAction act(kg, q3, action_from_operators({Mat::identity(3), Mat::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})}, 3));
  Mat theta = Mat::from_rows({{1}, {0}, {0}});
  GlobalizationResult g = make_candidate(base_field_algebra(), act, theta);
  Report r = verify_globalization(pa, g);
  CHECK_FALSE(r.ok());  // generated subalgebra misses e3
}
