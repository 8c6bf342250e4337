#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pha/errors.hpp"
#include "pha/grading.hpp"
#include "pha/kcategory.hpp"
#include "pha/random_instances.hpp"
#include "pha/recognition.hpp"

using namespace pha;

namespace {

// Exact arithmetic throughout: every comparison below is strict equality.
constexpr std::uint64_t kFuzzSeed = 20261015;
constexpr std::size_t kFuzzCount = 100;
constexpr std::size_t kFuzzMaxDim = 4;

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<void(Outcome&)> body;
};

const std::vector<FuzzInstance>& suite() {
  static const std::vector<FuzzInstance> s = fuzz_suite(kFuzzSeed, kFuzzCount, kFuzzMaxDim);
  return s;
}

PartialAction zero_on_g() {
  return zero_on_nonidentity(group_algebra(FiniteGroup::cyclic(2)), base_field_algebra());
}

GoodGradingSpec z2_grading() {
  GoodGradingSpec s;
  s.n = 2;
  s.group = FiniteGroup::cyclic(2);
  s.subgroup = {0, 1};
  s.t = {{0, 0}, {0, 0}};
  return s;
}

GoodGradingSpec z4_cocycle() { return spec_from_sequence(FiniteGroup::cyclic(4), {0}, {0, 1, 3}); }

bool annihilator_bridge(const PartialAction& pa, const GlobalizationResult& g) {
  bool ra = right_annihilator(pa.alg()).is_zero(), rb = right_annihilator(g.B).is_zero();
  bool minimal = is_minimal(pa, g);
  if (rb && !ra) return false;
  if (rb && !minimal) return false;
  if (ra && minimal && pa.hopf().antipode_bijective() && !rb) return false;
  return true;
}

// Breaks the composition axiom while keeping 1_H acting as the identity.
PartialAction perturb(const PartialAction& pa, std::mt19937_64& rng) {
  std::size_t d = pa.alg().dim();
  Mat x(d, d);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) x(i, j) = Scalar(coeff(rng));
  std::vector<Mat> ops{pa.op(0), pa.op(1)};
  if (pa.hopf().origin() == HopfOrigin::GroupAlgebra) {
    ops[1] = ops[1] + x;
  } else {
    ops[0] = ops[0] + x;
    ops[1] = ops[1] - x;
  }
  return PartialAction(pa.hopf(), pa.alg(), action_from_operators(ops, d));
}

void zero_on_g_pipeline(Outcome& o) {
  PartialAction pa = zero_on_g();
  o.require(verify_partial_action(pa).ok(), "axioms");
  GlobalizationResult g = standard_globalization(pa);
  o.require(g.B.dim() == 2, "dim B");
  auto iso = iso_to_product_of_fields(g.B);
  o.require(iso.has_value(), "no isomorphism to QxQ");
  if (iso) {
    Mat swap = Mat::from_rows({{0, 1}, {1, 0}});
    o.require(transport(*iso, g.action.op(1)) == swap, "transported action is not the swap");
    o.require(transport(*iso, g.action.op(0)) == Mat::identity(2), "identity does not act trivially");
  }
  o.require(is_minimal(pa, g), "not minimal");
}

void grading_pipeline(Outcome& o) {
  GoodGradingSpec s = z2_grading();
  PartialAction pa = build_grading_action(s);
  o.require(verify_partial_action(pa).ok(), "axioms");
  Mat half = Scalar(1, 2) * Mat::identity(4);
  o.require(pa.op(0) == half && pa.op(1) == half, "p_g E_ij != E_ij/2");
  GlobalizationResult g = build_grading_globalization(s);
  o.require(g.B.dim() == 8, "dim B");
  LocalUnitSystem units = diagonal_local_units(2);
  o.require(verify_globalization(pa, g, &units).ok(), "globalization");
  o.require(is_minimal(pa, g), "not minimal");
  o.require(compare_with_standard(s).mutually_inverse, "comparison maps are not inverse");
}

void cocycle_grading(Outcome& o) {
  GoodGradingSpec s = z4_cocycle();
  PartialAction pa = build_grading_action(s);
  o.require(verify_partial_action(pa).ok(), "axioms");
  const HopfAlgebra& h = pa.hopf();
  for (std::size_t x = 0; x < h.dim(); ++x)
    for (std::size_t y = 0; y < h.dim(); ++y)
      o.require(pa.op(x) * pa.op(y) == pa.op(h.basis_mul(x, y)), "h.(k.a) != hk.a");
  GlobalizationResult g = build_grading_globalization(s);
  o.require(g.B.dim() == pa.alg().dim() && rank(g.theta.map) == g.B.dim(), "theta not bijective");
  o.require(verify_globalization(pa, g).ok(), "globalization");
}

PartialGroupAction first_factor_action() {
  FDAlgebra a = product_of_fields(2);
  Subspace all = Subspace::whole(2), first = Subspace::span(2, {{1, 0}});
  Mat p = Mat::from_rows({{1, 0}, {0, 0}});
  return make_partial_group_action(FiniteGroup::cyclic(2), a, {all, first}, {Mat::identity(2), p},
                                   std::vector<Mat>{Mat::identity(2), p});
}

void group_round_trip(Outcome& o) {
  PartialGroupAction p = first_factor_action();
  o.require(verify_partial_group_action(p).ok(), "group action");
  o.require(verify_alpha_projections(p).ok(), "projection axioms");
  PartialAction pa = to_kG_action(p);
  o.require(verify_partial_action(pa).ok(), "kG axioms");
  o.require(verify_psi_identities(pa).ok(), "identities");
  PartialGroupAction back = from_kG_action(pa);
  o.require(back.domains == p.domains, "domains");
  for (std::size_t g = 0; g < 2; ++g) o.require(back.ambient_alpha(g) == p.ambient_alpha(g), "alpha");
  o.require(back.projections && *back.projections == *p.projections, "projections");
  o.require(is_regular(p), "not regular");
}

void smash_morita(Outcome& o) {
  PartialAction pa = zero_on_g();
  GlobalizationResult g = standard_globalization(pa);
  MoritaContextData c = smash_morita_context(pa, g);
  o.require(verify_context(c).ok(), "context");
  o.require(c.A.dim() == 1 && c.B.dim() == 4, "dimensions");
  o.require(is_strict(c), "not strict");
  o.require(iso_to_matrix_algebra(c.B, 2).has_value(), "B#H is not Mat2");
}

void minimality_bridge(Outcome& o) {
  PartialAction z = zero_on_g();
  o.require(annihilator_bridge(z, standard_globalization(z)), "zero-on-g");
  GoodGradingSpec s2 = z2_grading(), s4 = z4_cocycle();
  PartialAction p2 = build_grading_action(s2), p4 = build_grading_action(s4);
  o.require(annihilator_bridge(p2, build_grading_globalization(s2)), "Z2 grading");
  o.require(annihilator_bridge(p2, standard_globalization(p2)), "Z2 grading standard");
  o.require(annihilator_bridge(p4, build_grading_globalization(s4)), "Z4 grading");
  for (const auto& f : suite()) {
    o.require(verify_partial_action(f.action).ok(), f.label + " is not symmetric");
    o.require(annihilator_bridge(f.action, standard_globalization(f.action)), f.label);
  }
}

void representation_suite(Outcome& o) {
  std::size_t checked = 0;
  for (const auto& f : suite()) {
    const FDAlgebra& a = f.action.alg();
    if (!(is_idempotent_algebra(a) || right_annihilator(a).is_zero() || left_annihilator(a).is_zero())) continue;
    ++checked;
    Report r = verify_partial_representation(action_to_partial_representation(f.action));
    o.require(r.ok(), f.label + ": " + r.first_failure());
    if (f.action.hopf().origin() == HopfOrigin::GroupAlgebra)
      o.require(verify_group_identity(f.action).ok(), f.label + ": g.g^-1.g.a");
  }
  o.require(checked > 0, "no instance met the hypotheses");
}

void morita_suite(Outcome& o) {
  HopfAlgebra kz2 = group_algebra(FiniteGroup::cyclic(2));
  PartialAction lu = zero_on_nonidentity(kz2, left_unit_algebra());
  o.require(!right_annihilator(lu.alg()).is_zero(), "r(A) = 0 for the quotient test algebra");
  QuotientEquivalence q = quotient_equivalence(lu, AnnihilatorSide::Right);
  o.require(verify_equivalent_partial_actions(q.data).ok(), "quotient equivalence");
  o.require(q.annihilator_trivial && right_annihilator(q.quotient.alg).is_zero(), "r(A/r(A)) != 0");

  PartialAction z = zero_on_g();
  ActionEquivalenceData amp = amplification_equivalence(z, 2);
  ActionEquivalenceData id2 = identity_equivalence(amp.pa_B);
  ActionEquivalenceData comp = compose_contexts(amp, id2);
  o.require(verify_equivalent_partial_actions(comp).ok(), "composition");

  ActionEquivalenceData glob = globalization_context(identity_equivalence(z));
  o.require(verify_equivalent_partial_actions(glob).ok(), "globalization context");
  o.require(is_strict(glob.ctx), "globalization context not strict");
  o.require(glob.ctx.A.dim() == 2 && glob.ctx.B.dim() == 2 && iso_to_product_of_fields(glob.ctx.A) &&
                iso_to_product_of_fields(glob.ctx.B),
            "globalization context is not between copies of QxQ");

  for (const ActionEquivalenceData* d : {&q.data, &amp, &comp, &glob}) {
    MoritaContextData sm = smash_equivalence_from_action_equivalence(*d);
    o.require(verify_context(sm).ok() && is_strict(sm), "smash context");
  }
}

void category_layer(Outcome& o) {
  for (const FDAlgebra& a : {base_field_algebra(), matrix_algebra(2)}) {
    LocalUnitSystem s{{*a.unit(), *a.unit()}};
    AlgebraCategory ac = category_of_algebra(a, s);
    o.require(verify_category(ac.cat).ok(), "category");
    CategoryAlgebra ca = a_of_category(ac.cat);
    o.require(ca.alg == matrix_algebra_over(a, 2), "a(C) differs from Mat2(A)");
    LeftModule reg = regular_module(ca.alg);
    CModule cm = module_G(ac.cat, reg);
    o.require(module_equivalence_roundtrip(ac.cat, cm).ok(), "module functors round trip");
    LocalUnitSystem one{{*a.unit()}};
    o.require(algebra_module_roundtrip(a, one, regular_module(a)).ok(), "direct limit round trip");
    o.require(algebra_module_roundtrip(ca.alg, ca.units, reg).ok(), "direct limit round trip on a(C)");
  }
}

void definition_regression(Outcome& o) {
  std::mt19937_64 rng(kFuzzSeed);
  std::size_t unital = 0, r_zero = 0, broken = 0;
  for (const auto& f : suite()) {
    for (const PartialAction& pa : {f.action, perturb(f.action, rng)}) {
      if (pa.alg().is_unital()) {
        ++unital;
        ActionVerdict g = general_verdict(verify_partial_action(pa));
        ActionVerdict u = unital_verdict(verify_unital_partial_action(pa));
        o.require(g == u, f.label + ": verdicts differ");
      }
      if (right_annihilator(pa.alg()).is_zero()) {
        ++r_zero;
        bool comp = verify_partial_action(pa).passed("composition");
        broken += comp ? 0 : 1;
        o.require(smash_is_associative(pa) == comp, f.label + ": associativity verdict differs");
      }
    }
  }
  o.require(unital > 0 && r_zero > 0 && broken > 0, "suite lacks coverage");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "zero-on-g pipeline", 1, zero_on_g_pipeline},
      {2, "grading pipeline", 5, grading_pipeline},
      {3, "exact-cocycle grading", 5, cocycle_grading},
      {4, "group round trip", 1, group_round_trip},
      {5, "smash Morita context", 2, smash_morita},
      {6, "minimality and annihilators", 60, minimality_bridge},
      {7, "partial representations", 30, representation_suite},
      {8, "Morita equivalences of actions", 30, morita_suite},
      {9, "category layer", 5, category_layer},
      {10, "definition agreement", 30, definition_regression},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_s) {
      o.ok = false;
      o.note = "over time limit";
    }
    if (!o.ok) ++failures;
    std::printf("criterion %2d %-32s %s  %.3fs (limit %.0fs)%s%s\n", c.id, c.name, o.ok ? "PASS" : "FAIL", secs,
                c.limit_s, o.note.empty() ? "" : "  ", o.note.c_str());
  }
  return failures == 0 ? 0 : 1;
}
