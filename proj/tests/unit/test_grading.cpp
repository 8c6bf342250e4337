#include "doctest.h"
#include "helpers.hpp"
#include "pha/errors.hpp"
#include "pha/grading.hpp"

using namespace pha;

namespace {

GoodGradingSpec z2_full() {
  GoodGradingSpec s;
  s.n = 2;
  s.group = FiniteGroup::cyclic(2);
  s.subgroup = {0, 1};
  s.t = {{0, 0}, {0, 0}};
  return s;
}

}  // namespace

TEST_CASE("grading with L = G scales every matrix unit by one half") {
  GoodGradingSpec s = z2_full();
  CHECK(validate_spec(s).ok());
  PartialAction pa = build_grading_action(s);
  CHECK(verify_partial_action(pa).ok());
  CHECK(pa.op(0) == Scalar(1, 2) * Mat::identity(4));
  CHECK(pa.op(1) == Scalar(1, 2) * Mat::identity(4));
  oracle::Verdict v = helpers::reference_verdict(pa);
  CHECK((v.unit && v.composition && v.symmetry));
}

TEST_CASE("explicit globalization of the L = G grading") {
  GoodGradingSpec s = z2_full();
  PartialAction pa = build_grading_action(s);
  GlobalizationResult g = build_grading_globalization(s);
  CHECK(g.B.dim() == 8);
  LocalUnitSystem u = diagonal_local_units(2);
  CHECK(u.units.size() == 3);
  CHECK(verify_globalization(pa, g, &u).ok());
  CHECK(is_minimal(pa, g));
  // theta(E_12) = (e + g) E_12 / 2, with B listed by (i,j) then group element
  Vec t12 = g.theta.map.col(1);
  Vec expected = zero_vec(8);
  expected[2] = Scalar(1, 2);
  expected[3] = Scalar(1, 2);
  CHECK(t12 == expected);
  GradingComparison c = compare_with_standard(s);
  CHECK(c.mutually_inverse);
  CHECK(c.to_standard.phi.target.dim() == 8);
}

TEST_CASE("an exact cocycle gives a global action") {
  GoodGradingSpec s = spec_from_sequence(FiniteGroup::cyclic(4), {0}, {0, 1, 3});
  CHECK(s.n == 3);
  CHECK(s.t[0][1] == 3);  // s_0 s_1^-1 = -1
  PartialAction pa = build_grading_action(s);
  const HopfAlgebra& h = pa.hopf();
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) CHECK(pa.op(x) * pa.op(y) == pa.op(h.basis_mul(x, y)));
  GlobalizationResult g = build_grading_globalization(s);
  CHECK(g.B.dim() == 9);
  CHECK(rank(g.theta.map) == 9);
}

TEST_CASE("eigenvalues are 1/|L| on the coset and 0 elsewhere") {
  std::mt19937_64 rng(2);
  FiniteGroup z6 = FiniteGroup::cyclic(6);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::size_t> seq(3);
    for (auto& x : seq) x = rng() % 6;
    std::vector<std::size_t> sub = trial % 2 ? std::vector<std::size_t>{0, 3} : std::vector<std::size_t>{0, 2, 4};
    GoodGradingSpec s = spec_from_sequence(z6, sub, seq);
    CHECK(validate_spec(s).ok());
    PartialAction pa = build_grading_action(s);
    CHECK(verify_partial_action(pa).ok());
    for (std::size_t g = 0; g < 6; ++g)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          std::size_t e = i * 3 + j;
          bool in_coset = false;
          for (std::size_t l : sub) in_coset = in_coset || z6.mul(s.t[i][j], l) == g;
          CHECK(pa.op(g)(e, e) == (in_coset ? Scalar(1, static_cast<long>(sub.size())) : Scalar(0)));
        }
  }
}

TEST_CASE("invalid gradings are rejected with their witness") {
  GoodGradingSpec s;
  s.n = 2;
  s.group = FiniteGroup::cyclic(2);
  s.subgroup = {0};
  s.t = {{0, 1}, {0, 0}};
  Report r = validate_spec(s);
  CHECK_FALSE(r.passed("coset_condition"));
  CHECK_THROWS_AS(require_valid_spec(s), Error);
  GoodGradingSpec z = z2_full();
  CHECK_FALSE(validate_spec(z, Field::prime(2)).ok());
  CHECK(validate_spec(z, Field::prime(3)).ok());
}
