#include "pha/smash.hpp"

#include "pha/errors.hpp"

namespace pha {

std::string SmashAlgebra::basis_label(std::size_t idx) const {
  return "b" + std::to_string(idx / dim_h()) + "#" + hopf_basis_name(source.hopf(), idx % dim_h());
}

FDAlgebra smash_structure(const PartialAction& pa) {
  const HopfAlgebra& h = pa.hopf();
  const FDAlgebra& a = pa.alg();
  std::size_t da = a.dim(), dh = h.dim(), d = da * dh;
  Mat m = structure_constants(d, [&](std::size_t x, std::size_t y) {
    std::size_t i = x / dh, j = x % dh, k = y / dh, l = y % dh;
    Vec out(d);
    for (const auto& t : h.coproduct_terms(j)) {
      Vec left = a.product(a.basis(i), pa.op(t.left).col(k));
      if (is_zero(left)) continue;
      const Vec& right = h.basis_mul(t.right, l);
      for (std::size_t p = 0; p < da; ++p) {
        if (left[p].is_zero()) continue;
        for (std::size_t q = 0; q < dh; ++q)
          if (!right[q].is_zero()) out[p * dh + q].add_product(t.coeff * left[p], right[q]);
      }
    }
    return out;
  });
  return make_algebra_unchecked(m, std::nullopt, a.field());
}

bool smash_is_associative(const PartialAction& pa) { return !associativity_witness(smash_structure(pa)); }

bool smash_bimodule_associative(const PartialAction& pa) {
  const HopfAlgebra& h = pa.hopf();
  const FDAlgebra& a = pa.alg();
  std::size_t da = a.dim(), dh = h.dim();
  // (a#h).b as a vector of A#H
  auto right = [&](const Vec& x, const Vec& b) {
    Vec out(da * dh);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < dh; ++j) {
        const Scalar& c = x[i * dh + j];
        if (c.is_zero()) continue;
        for (const auto& t : h.coproduct_terms(j)) {
          Vec v = a.product(a.basis(i), pa.op(t.left) * b);
          for (std::size_t p = 0; p < da; ++p)
            if (!v[p].is_zero()) out[p * dh + t.right].add_product(c * t.coeff, v[p]);
        }
      }
    return out;
  };
  for (std::size_t x = 0; x < da * dh; ++x)
    for (std::size_t b = 0; b < da; ++b)
      for (std::size_t c = 0; c < da; ++c) {
        Vec e = unit_vec(da * dh, x);
        if (!(right(right(e, a.basis(b)), a.basis(c)) == right(e, a.product(a.basis(b), a.basis(c))))) return false;
      }
  return true;
}

SmashAlgebra build_smash(const PartialAction& pa) {
  PartialAction copy = pa;
  require_partial(copy);
  FDAlgebra raw = smash_structure(copy);
  if (auto w = associativity_witness(raw))
    fail(ErrorKind::InternalInvariant, "smash product not associative although the composition axiom holds");
  auto unit = find_unit(raw);
  return {make_algebra_unchecked(raw.mult(), unit, raw.field()), copy};
}

PartialSmashAlgebra build_partial_smash(const SmashAlgebra& sm) {
  std::size_t d = sm.alg.dim();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < sm.dim_a(); ++i) gens.push_back(sm.element(unit_vec(sm.dim_a(), i), sm.source.hopf().one()));
  Subspace a1 = Subspace::span(d, gens);
  Subspace carrier = product_subspace(sm.alg, Subspace::whole(d), a1);
  Subalgebra sub = make_subalgebra(sm.alg, carrier);
  if (sm.source.alg().is_unital()) {
    Vec one = sm.element(*sm.source.alg().unit(), sm.source.hopf().one());
    if (!sub.alg.unit() || !(sub.to_ambient(*sub.alg.unit()) == one))
      fail(ErrorKind::InternalInvariant, "partial smash of a unital algebra lacks the unit 1#1");
  }
  return {sm, carrier, sub.alg, sub.inclusion};
}

namespace {

Mat operator_from_tensor(const Mat& action, std::size_t i, std::size_t dim) {
  Mat op(dim, dim);
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q < dim; ++q) op(q, p) = action(q, i * dim + p);
  return op;
}

Mat tensor_from_operators(const std::vector<Mat>& ops, std::size_t dim) { return action_from_operators(ops, dim); }

}  // namespace

Report verify_partial_AH_module(const PartialAHModule& m, const PartialAction& pa) {
  Report r("partial (A,H)-module");
  const FDAlgebra& a = pa.alg();
  const HopfAlgebra& h = pa.hopf();
  std::size_t dm = m.dim;
  if (m.a_action.rows() != dm || m.a_action.cols() != a.dim() * dm || m.h_action.rows() != dm ||
      m.h_action.cols() != h.dim() * dm) {
    r.fail("shape", "action tensors have wrong shapes");
    return r;
  }
  Report am = verify_left_module(a, {dm, m.a_action});
  r.add("a_module", am.ok(), am.first_failure());
  r.add("a_unital", is_unital_module(a, {dm, m.a_action}), "AM != M");
  std::vector<Mat> aops, hops;
  for (std::size_t i = 0; i < a.dim(); ++i) aops.push_back(operator_from_tensor(m.a_action, i, dm));
  for (std::size_t i = 0; i < h.dim(); ++i) hops.push_back(operator_from_tensor(m.h_action, i, dm));
  auto hop = [&](const Vec& x) {
    Mat o(dm, dm);
    for (std::size_t i = 0; i < x.size(); ++i) o.add_scaled(x[i], hops[i]);
    return o;
  };
  auto aop = [&](const Vec& x) {
    Mat o(dm, dm);
    for (std::size_t i = 0; i < x.size(); ++i) o.add_scaled(x[i], aops[i]);
    return o;
  };
  r.add("h_unit", hop(h.one()) == Mat::identity(dm), "1_H m != m");
  std::string w;
  for (std::size_t hi = 0; hi < h.dim() && w.empty(); ++hi)
    for (std::size_t ai = 0; ai < a.dim() && w.empty(); ++ai)
      for (std::size_t ki = 0; ki < h.dim() && w.empty(); ++ki) {
        Mat lhs = hops[hi] * aops[ai] * hops[ki];
        Mat rhs(dm, dm);
        for (const auto& t : h.coproduct_terms(hi))
          rhs.add_scaled(t.coeff, aop(pa.op(t.left).col(ai)) * hop(h.basis_mul(t.right, ki)));
        if (!(lhs == rhs))
          w = "h=" + hopf_basis_name(h, hi) + ",a=b" + std::to_string(ai) + ",k=" + hopf_basis_name(h, ki);
      }
  r.add("compatibility", w.empty(), w);
  return r;
}

PartialAHModule regular_AH_module(const PartialAction& pa) {
  return {pa.alg().dim(), pa.alg().mult(), pa.act()};
}

Mat module_to_smash_module(const PartialSmashAlgebra& ps, const PartialAHModule& m) {
  const PartialAction& pa = ps.parent.source;
  Report r = verify_partial_AH_module(m, pa);
  if (!r.ok()) fail(ErrorKind::InvalidModule, r.first_failure());
  std::size_t dm = m.dim, da = pa.alg().dim(), dh = pa.hopf().dim();
  std::vector<Mat> aops, hops;
  for (std::size_t i = 0; i < da; ++i) aops.push_back(operator_from_tensor(m.a_action, i, dm));
  for (std::size_t i = 0; i < dh; ++i) hops.push_back(operator_from_tensor(m.h_action, i, dm));
  std::vector<Mat> ops;
  for (std::size_t c = 0; c < ps.carrier.dim(); ++c) {
    Vec z = ps.carrier.basis_vector(c);
    Mat op(dm, dm);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < dh; ++j)
        if (!z[i * dh + j].is_zero()) op.add_scaled(z[i * dh + j], aops[i] * hops[j]);
    ops.push_back(std::move(op));
  }
  return tensor_from_operators(ops, dm);
}

PartialAHModule smash_module_to_AH_module(const PartialSmashAlgebra& ps, std::size_t dm, const Mat& action,
                                          ConversionHypothesis hypothesis) {
  const PartialAction& pa = ps.parent.source;
  const FDAlgebra& a = pa.alg();
  const HopfAlgebra& h = pa.hopf();
  std::size_t da = a.dim(), dh = h.dim();
  Report mr = verify_left_module(ps.alg, {dm, action});
  if (!mr.ok()) fail(ErrorKind::InvalidModule, mr.first_failure());
  std::vector<Mat> pops;
  for (std::size_t c = 0; c < ps.carrier.dim(); ++c) pops.push_back(operator_from_tensor(action, c, dm));
  auto op_of = [&](const Vec& parent_vec, const std::string& what) {
    auto c = ps.coords(parent_vec);
    if (!c) fail(ErrorKind::HypothesisUnmet, what + " is not in the partial smash product");
    Mat o(dm, dm);
    for (std::size_t i = 0; i < c->size(); ++i) o.add_scaled((*c)[i], pops[i]);
    return o;
  };
  std::vector<Mat> aops;
  for (std::size_t i = 0; i < da; ++i) aops.push_back(op_of(ps.parent.element(a.basis(i), h.one()), "a#1"));
  LeftModule am{dm, action_from_operators(aops, dm)};
  if (!is_unital_module(a, am)) fail(ErrorKind::NotUnitalModule, "AM != M");

  std::vector<Mat> hops;
  if (hypothesis == ConversionHypothesis::LeftIdentityExists) {
    auto u = has_left_identity(a);
    if (!u) fail(ErrorKind::HypothesisUnmet, "A has no left identity");
    for (std::size_t i = 0; i < dh; ++i) {
      Vec z(da * dh);
      for (const auto& t : h.coproduct_terms(i)) axpy(z, t.coeff, ps.parent.element(pa.op(t.left) * *u, h.basis(t.right)));
      hops.push_back(op_of(z, "sum h1.x#h2"));
    }
  } else {
    if (!h.antipode_bijective()) fail(ErrorKind::HypothesisUnmet, "S is not bijective");
    if (!is_idempotent_algebra(a)) fail(ErrorKind::HypothesisUnmet, "A is not idempotent");
    if (!torsion_submodule(a, am).is_zero()) fail(ErrorKind::HypothesisUnmet, "t_A(M) != 0");
    Mat d2 = sweedler_power(h, 2);
    for (std::size_t hi = 0; hi < dh; ++hi) {
      std::vector<Mat> lhs_blocks, rhs_blocks;
      for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
          Vec z(da * dh);
          for (std::size_t idx = 0; idx < dh * dh * dh; ++idx) {
            const Scalar& c = d2(idx, hi);
            if (c.is_zero()) continue;
            std::size_t h1 = idx / (dh * dh), h2 = (idx / dh) % dh, h3 = idx % dh;
            Vec inner = pa.op(h2) * (pa.op(h.apply_antipode_inverse(h.basis(h1))) * a.basis(j));
            axpy(z, c, ps.parent.element(a.product(a.basis(i), inner), h.basis(h3)));
          }
          auto coords = ps.coords(z);
          if (!coords) fail(ErrorKind::WellDefinednessFails, "generator outside the partial smash product");
          Mat rhs(dm, dm);
          for (std::size_t c = 0; c < coords->size(); ++c) rhs.add_scaled((*coords)[c], pops[c]);
          Mat lhs(dm, dm);
          Vec ab = a.product(a.basis(i), a.basis(j));
          for (std::size_t p = 0; p < da; ++p) lhs.add_scaled(ab[p], aops[p]);
          lhs_blocks.push_back(std::move(lhs));
          rhs_blocks.push_back(std::move(rhs));
        }
      auto x = solve_linear(vstack(lhs_blocks, dm), vstack(rhs_blocks, dm));
      if (!x) fail(ErrorKind::WellDefinednessFails, "no consistent action for h=" + hopf_basis_name(h, hi));
      hops.push_back(*x);
    }
  }
  PartialAHModule out{dm, am.action, action_from_operators(hops, dm)};
  Report r = verify_partial_AH_module(out, pa);
  if (!r.ok()) fail(ErrorKind::WellDefinednessFails, r.first_failure());
  return out;
}

}  // namespace pha
