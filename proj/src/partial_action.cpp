#include "pha/partial_action.hpp"

#include <functional>

#include "pha/errors.hpp"

namespace pha {

std::string hopf_basis_name(const HopfAlgebra& h, std::size_t i) {
  if (h.group()) {
    const std::string& l = h.group()->label(i);
    return h.origin() == HopfOrigin::DualGroupAlgebra ? "p_" + l : "g_" + l;
  }
  return "h" + std::to_string(i);
}

namespace {

std::string a_name(std::size_t i) { return "b" + std::to_string(i); }

std::optional<std::size_t> first_bad_column(const Mat& a, const Mat& b) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return j;
  return std::nullopt;
}

// Shared precomputation for the verifiers.
struct Kernel {
  const ActionBase& act;
  const HopfAlgebra& h;
  const FDAlgebra& a;
  std::size_t dh, da;
  std::vector<Mat> prod_ops;  // op(h_i h_j)

  explicit Kernel(const ActionBase& x)
      : act(x), h(x.hopf()), a(x.alg()), dh(h.dim()), da(a.dim()) {
    prod_ops.reserve(dh * dh);
    for (std::size_t i = 0; i < dh; ++i)
      for (std::size_t j = 0; j < dh; ++j) prod_ops.push_back(act.op(h.basis_mul(i, j)));
  }
  const Mat& t(std::size_t i) const { return act.op(i); }
  const Mat& tp(std::size_t i, std::size_t j) const { return prod_ops[i * dh + j]; }
};

}  // namespace

ActionBase::ActionBase() : d_(std::make_shared<const Data>()) {}

ActionBase::ActionBase(HopfAlgebra h, FDAlgebra a, const Mat& act) {
  std::size_t dh = h.dim(), da = a.dim();
  if (act.rows() != da || act.cols() != dh * da)
    fail(ErrorKind::DimMismatch, "action tensor must be " + std::to_string(da) + "x" +
                                     std::to_string(dh * da) + ", got " + std::to_string(act.rows()) +
                                     "x" + std::to_string(act.cols()));
  if (h.field() != a.field()) fail(ErrorKind::FieldMismatch, "Hopf algebra and algebra over different fields");
  auto d = std::make_shared<Data>();
  d->hopf = std::move(h);
  d->alg = std::move(a);
  d->act = act.bound(d->alg.field());
  d->ops.assign(dh, Mat(da, da));
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t x = 0; x < da; ++x)
      for (std::size_t y = 0; y < da; ++y) d->ops[i](y, x) = d->act(y, i * da + x);
  d_ = std::move(d);
}

Mat ActionBase::op(const Vec& h) const {
  std::size_t da = alg().dim();
  Mat m(da, da);
  for (std::size_t i = 0; i < h.size(); ++i) m.add_scaled(h[i], d_->ops[i]);
  return m;
}

Mat action_from_operators(const std::vector<Mat>& ops, std::size_t dim_a) {
  Mat act(dim_a, ops.size() * dim_a);
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t x = 0; x < dim_a; ++x)
      for (std::size_t y = 0; y < dim_a; ++y) act(y, i * dim_a + x) = ops[i](y, x);
  return act;
}

PartialAction as_partial(const GlobalAction& ga) { return PartialAction(ga.hopf(), ga.alg(), ga.act()); }

Report verify_partial_action(const PartialAction& pa) {
  Report r("partial action");
  Kernel k(pa);
  std::size_t da = k.da, dh = k.dh;
  auto w = first_bad_column(pa.op(k.h.one()), Mat::identity(da));
  r.add("unit", !w, w ? "a=" + a_name(*w) : "");

  std::string wc, ws;
  for (std::size_t hi = 0; hi < dh; ++hi)
    for (std::size_t ki = 0; ki < dh; ++ki)
      for (std::size_t b = 0; b < da; ++b) {
        if (wc.empty()) {
          Mat lhs = k.t(hi) * k.a.right_mult(k.t(ki).col(b));
          Mat rhs(da, da);
          for (const auto& t : k.h.coproduct_terms(hi))
            rhs.add_scaled(t.coeff, k.a.right_mult(k.tp(t.right, ki).col(b)) * k.t(t.left));
          if (auto c = first_bad_column(lhs, rhs))
            wc = "h=" + hopf_basis_name(k.h, hi) + ",k=" + hopf_basis_name(k.h, ki) + ",a=" + a_name(*c) +
                 ",b=" + a_name(b);
        }
        if (ws.empty()) {
          Mat lhs = k.t(hi) * k.a.left_mult(k.t(ki).col(b));
          Mat rhs(da, da);
          for (const auto& t : k.h.coproduct_terms(hi))
            rhs.add_scaled(t.coeff, k.a.left_mult(k.tp(t.left, ki).col(b)) * k.t(t.right));
          if (auto c = first_bad_column(lhs, rhs))
            ws = "h=" + hopf_basis_name(k.h, hi) + ",k=" + hopf_basis_name(k.h, ki) + ",a=" + a_name(*c) +
                 ",b=" + a_name(b);
        }
      }
  r.add("composition", wc.empty(), wc);
  r.add("symmetry", ws.empty(), ws);
  return r;
}

Report verify_partial_action(PartialAction& pa) {
  Report r = verify_partial_action(static_cast<const PartialAction&>(pa));
  pa.flags.unital_axiom = r.passed("unit");
  pa.flags.composition_axiom = r.passed("composition");
  pa.flags.symmetric = r.passed("symmetry");
  return r;
}

ActionVerdict general_verdict(const Report& r) {
  ActionVerdict v;
  v.partial = r.passed("unit") && r.passed("composition");
  v.symmetric = v.partial && r.passed("symmetry");
  return v;
}

ActionVerdict unital_verdict(const Report& r) {
  ActionVerdict v;
  v.partial = r.passed("unit") && r.passed("multiplicative") && r.passed("composition_unital");
  v.symmetric = v.partial && r.passed("symmetry_unital");
  return v;
}

Report verify_unital_partial_action(const PartialAction& pa) {
  if (!pa.alg().is_unital()) fail(ErrorKind::NonUnitalAlgebra, "verify_unital_partial_action needs a unit");
  Report r("unital partial action");
  Kernel k(pa);
  std::size_t da = k.da, dh = k.dh;
  const Vec& one = *k.a.unit();
  auto w = first_bad_column(pa.op(k.h.one()), Mat::identity(da));
  r.add("unit", !w, w ? "a=" + a_name(*w) : "");

  std::string wm;
  for (std::size_t hi = 0; hi < dh && wm.empty(); ++hi)
    for (std::size_t b = 0; b < da && wm.empty(); ++b) {
      Mat lhs = k.t(hi) * k.a.right_basis_mult(b);
      Mat rhs(da, da);
      for (const auto& t : k.h.coproduct_terms(hi))
        rhs.add_scaled(t.coeff, k.a.right_mult(k.t(t.right).col(b)) * k.t(t.left));
      if (auto c = first_bad_column(lhs, rhs))
        wm = "h=" + hopf_basis_name(k.h, hi) + ",a=" + a_name(*c) + ",b=" + a_name(b);
    }
  r.add("multiplicative", wm.empty(), wm);

  std::string w3, w4;
  for (std::size_t hi = 0; hi < dh; ++hi)
    for (std::size_t ki = 0; ki < dh; ++ki) {
      Mat lhs = k.t(hi) * k.t(ki);
      if (w3.empty()) {
        Mat rhs(da, da);
        for (const auto& t : k.h.coproduct_terms(hi))
          rhs.add_scaled(t.coeff, k.a.left_mult(k.t(t.left) * one) * k.tp(t.right, ki));
        if (auto c = first_bad_column(lhs, rhs))
          w3 = "h=" + hopf_basis_name(k.h, hi) + ",k=" + hopf_basis_name(k.h, ki) + ",a=" + a_name(*c);
      }
      if (w4.empty()) {
        Mat rhs(da, da);
        for (const auto& t : k.h.coproduct_terms(hi))
          rhs.add_scaled(t.coeff, k.a.right_mult(k.t(t.right) * one) * k.tp(t.left, ki));
        if (auto c = first_bad_column(lhs, rhs))
          w4 = "h=" + hopf_basis_name(k.h, hi) + ",k=" + hopf_basis_name(k.h, ki) + ",a=" + a_name(*c);
      }
    }
  r.add("composition_unital", w3.empty(), w3);
  r.add("symmetry_unital", w4.empty(), w4);

  ActionVerdict general = general_verdict(verify_partial_action(pa));
  ActionVerdict unital = unital_verdict(r);
  r.add("agrees_with_general_definition", general == unital,
        "general (partial=" + std::to_string(general.partial) + ",symmetric=" + std::to_string(general.symmetric) +
            ") vs unital (partial=" + std::to_string(unital.partial) +
            ",symmetric=" + std::to_string(unital.symmetric) + ")");
  return r;
}

Report verify_global_action(const GlobalAction& ga) {
  Report r("global action");
  Kernel k(ga);
  std::size_t da = k.da, dh = k.dh;
  auto w = first_bad_column(ga.op(k.h.one()), Mat::identity(da));
  r.add("unit", !w, w ? "a=" + a_name(*w) : "");
  std::string wm;
  for (std::size_t hi = 0; hi < dh && wm.empty(); ++hi)
    for (std::size_t ki = 0; ki < dh && wm.empty(); ++ki)
      if (auto c = first_bad_column(k.t(hi) * k.t(ki), k.tp(hi, ki)))
        wm = "h=" + hopf_basis_name(k.h, hi) + ",k=" + hopf_basis_name(k.h, ki) + ",a=" + a_name(*c);
  r.add("module", wm.empty(), wm);
  std::string wa;
  for (std::size_t hi = 0; hi < dh && wa.empty(); ++hi)
    for (std::size_t b = 0; b < da && wa.empty(); ++b) {
      Mat lhs = k.t(hi) * k.a.right_basis_mult(b);
      Mat rhs(da, da);
      for (const auto& t : k.h.coproduct_terms(hi))
        rhs.add_scaled(t.coeff, k.a.right_mult(k.t(t.right).col(b)) * k.t(t.left));
      if (auto c = first_bad_column(lhs, rhs))
        wa = "h=" + hopf_basis_name(k.h, hi) + ",a=" + a_name(*c) + ",b=" + a_name(b);
    }
  r.add("measuring", wa.empty(), wa);
  if (k.a.is_unital()) {
    std::string wu;
    const Vec& one = *k.a.unit();
    for (std::size_t hi = 0; hi < dh && wu.empty(); ++hi)
      if (!(k.t(hi) * one == k.h.counit()(0, hi) * one)) wu = "h=" + hopf_basis_name(k.h, hi);
    r.add("unit_preserved", wu.empty(), wu);
  }
  return r;
}

void require_partial(PartialAction& pa, bool symmetric) {
  if (!pa.flags.composition_axiom || !pa.flags.unital_axiom || (symmetric && !pa.flags.symmetric))
    verify_partial_action(pa);
  if (!pa.known_partial()) fail(ErrorKind::ActionUnverified, "action fails the partial action axioms");
  if (symmetric && !pa.known_symmetric()) fail(ErrorKind::NotSymmetric, "action is not symmetric");
}

Mat PartialRepresentation::at(const Vec& h) const {
  Mat m(dim, dim);
  for (std::size_t i = 0; i < h.size(); ++i) m.add_scaled(h[i], pi[i]);
  return m;
}

PartialRepresentation action_to_partial_representation(const PartialAction& pa) {
  PartialAction copy = pa;
  verify_partial_action(copy);
  if (!copy.known_symmetric()) fail(ErrorKind::HypothesisUnmet, "action is not a symmetric partial action");
  const FDAlgebra& a = pa.alg();
  if (!is_idempotent_algebra(a) && !left_annihilator(a).is_zero()) {
    if (!right_annihilator(a).is_zero())
      fail(ErrorKind::HypothesisUnmet, "none of A^2=A, r(A)=0, l(A)=0 holds");
    if (!pa.hopf().antipode_bijective())
      fail(ErrorKind::HypothesisUnmet, "r(A)=0 branch needs S bijective");
  }
  PartialRepresentation rep{pa.hopf(), a.dim(), {}};
  for (std::size_t i = 0; i < pa.hopf().dim(); ++i) rep.pi.push_back(pa.op(i));
  return rep;
}

Report verify_partial_representation(const PartialRepresentation& rep) {
  Report r("partial representation");
  const HopfAlgebra& h = rep.hopf;
  std::size_t dh = h.dim();
  auto pi = [&](const Vec& x) { return rep.at(x); };
  r.add("PR1", pi(h.one()) == Mat::identity(rep.dim), "pi(1) != id");
  std::vector<Vec> s(dh);
  for (std::size_t i = 0; i < dh; ++i) s[i] = h.apply_antipode(h.basis(i));
  std::string w2, w3, w4, w5;
  for (std::size_t x = 0; x < dh; ++x)
    for (std::size_t y = 0; y < dh; ++y) {
      std::string tag = "h=" + hopf_basis_name(h, x) + ",k=" + hopf_basis_name(h, y);
      Mat px = rep.pi[x], py = rep.pi[y];
      Mat l2(rep.dim, rep.dim), r2 = l2, l3 = l2, r3 = l2, l4 = l2, r4 = l2, l5 = l2, r5 = l2;
      for (const auto& t : h.coproduct_terms(y)) {
        // k1 = t.left, k2 = t.right
        Mat sk2 = pi(s[t.right]);
        l2.add_scaled(t.coeff, px * rep.pi[t.left] * sk2);
        r2.add_scaled(t.coeff, pi(h.basis_mul(x, t.left)) * sk2);
        Mat sk1 = pi(s[t.left]);
        l4.add_scaled(t.coeff, px * sk1 * rep.pi[t.right]);
        r4.add_scaled(t.coeff, pi(h.mul(h.basis(x), s[t.left])) * rep.pi[t.right]);
      }
      for (const auto& t : h.coproduct_terms(x)) {
        // h1 = t.left, h2 = t.right
        Mat h1 = rep.pi[t.left], sh2 = pi(s[t.right]);
        l3.add_scaled(t.coeff, h1 * sh2 * py);
        r3.add_scaled(t.coeff, h1 * pi(h.mul(s[t.right], h.basis(y))));
        Mat sh1 = pi(s[t.left]);
        l5.add_scaled(t.coeff, sh1 * rep.pi[t.right] * py);
        r5.add_scaled(t.coeff, sh1 * pi(h.basis_mul(t.right, y)));
      }
      if (w2.empty() && !(l2 == r2)) w2 = tag;
      if (w3.empty() && !(l3 == r3)) w3 = tag;
      if (w4.empty() && !(l4 == r4)) w4 = tag;
      if (w5.empty() && !(l5 == r5)) w5 = tag;
    }
  r.add("PR2", w2.empty(), w2);
  r.add("PR3", w3.empty(), w3);
  r.add("PR4", w4.empty(), w4);
  r.add("PR5", w5.empty(), w5);
  return r;
}

EpsilonMaps epsilon_maps(const PartialAction& pa, const Vec& hv) {
  PartialAction copy = pa;
  verify_partial_action(copy);
  if (!copy.known_symmetric()) fail(ErrorKind::HypothesisUnmet, "epsilon maps need a symmetric partial action");
  const HopfAlgebra& h = pa.hopf();
  if (!h.antipode_bijective()) fail(ErrorKind::NoAntipodeInverse, "e_r needs S^-1");
  const FDAlgebra& a = pa.alg();
  std::size_t da = a.dim();
  EpsilonMaps out{Mat(da, da), Mat(da, da), Report("epsilon compatibility")};
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (hv[i].is_zero()) continue;
    for (const auto& t : h.coproduct_terms(i)) {
      Scalar c = hv[i] * t.coeff;
      out.e_l.add_scaled(c, pa.op(t.left) * pa.op(h.apply_antipode(h.basis(t.right))));
      out.e_r.add_scaled(c, pa.op(t.right) * pa.op(h.apply_antipode_inverse(h.basis(t.left))));
    }
  }
  std::string w;
  for (std::size_t x = 0; x < da && w.empty(); ++x)
    for (std::size_t y = 0; y < da && w.empty(); ++y)
      if (!(a.product(out.e_r * a.basis(x), a.basis(y)) == a.product(a.basis(x), out.e_l * a.basis(y))))
        w = "a=" + a_name(x) + ",b=" + a_name(y);
  out.compatibility.add("compatibility", w.empty(), w);
  return out;
}

Report verify_module_map_identities(const PartialAction& pa) {
  Report r("module map identities");
  const HopfAlgebra& h = pa.hopf();
  const FDAlgebra& a = pa.alg();
  std::size_t da = a.dim();
  std::string w1, w2;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Mat el(da, da), er(da, da);
    for (const auto& t : h.coproduct_terms(i)) {
      el.add_scaled(t.coeff, pa.op(t.left) * pa.op(h.apply_antipode(h.basis(t.right))));
      er.add_scaled(t.coeff, pa.op(h.apply_antipode(h.basis(t.left))) * pa.op(t.right));
    }
    for (std::size_t x = 0; x < da; ++x)
      for (std::size_t y = 0; y < da; ++y) {
        Vec xy = a.product(a.basis(x), a.basis(y));
        if (w1.empty() && !(el * xy == a.product(el * a.basis(x), a.basis(y))))
          w1 = "h=" + hopf_basis_name(h, i) + ",x=" + a_name(x) + ",y=" + a_name(y);
        if (w2.empty() && !(er * xy == a.product(a.basis(x), er * a.basis(y))))
          w2 = "h=" + hopf_basis_name(h, i) + ",x=" + a_name(x) + ",y=" + a_name(y);
      }
  }
  r.add("right_module_map", w1.empty(), w1);
  r.add("left_module_map", w2.empty(), w2);
  return r;
}

Report verify_group_identity(const PartialAction& pa) {
  const HopfAlgebra& h = pa.hopf();
  if (h.origin() != HopfOrigin::GroupAlgebra || !h.group())
    fail(ErrorKind::InvalidArgument, "group identity needs a group algebra");
  const FiniteGroup& g = *h.group();
  Report r("group identity");
  std::string w;
  for (std::size_t x = 0; x < g.order() && w.empty(); ++x) {
    Mat lhs = pa.op(x) * pa.op(g.inv(x)) * pa.op(x);
    if (auto c = first_bad_column(lhs, pa.op(x))) w = "g=" + hopf_basis_name(h, x) + ",a=" + a_name(*c);
  }
  r.add("g.g^-1.g.a=g.a", w.empty(), w);
  return r;
}

namespace {

Restriction finish_restriction(const GlobalAction& ga, const Subspace& carrier,
                               const std::function<Vec(std::size_t, const Vec&)>& act_fn) {
  Subalgebra sub = make_subalgebra(ga.alg(), carrier);
  std::size_t k = carrier.dim(), dh = ga.hopf().dim();
  Mat act(k, dh * k);
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Vec v = act_fn(i, carrier.basis_vector(j));
      auto c = carrier.coordinates(v);
      if (!c) fail(ErrorKind::InternalInvariant, "restricted action leaves the carrier");
      act.set_col(i * k + j, *c);
    }
  PartialAction pa(ga.hopf(), sub.alg, act);
  verify_partial_action(pa);
  return {pa, sub.inclusion, carrier};
}

}  // namespace

Restriction restrict_via_central_idempotent(const GlobalAction& ga, const Vec& e) {
  const FDAlgebra& b = ga.alg();
  if (e.size() != b.dim()) fail(ErrorKind::DimMismatch, "idempotent length");
  if (!is_idempotent(b, e) || !is_central(b, e))
    fail(ErrorKind::NotCentralIdempotent, "e=" + to_string(e));
  Subspace carrier = image(b.left_mult(e));
  return finish_restriction(ga, carrier, [&](std::size_t i, const Vec& a) { return b.product(e, ga.apply_basis(i, a)); });
}

Restriction restrict_via_projection(const GlobalAction& ga, const Subspace& a_sub, const Mat& pi) {
  const FDAlgebra& b = ga.alg();
  const HopfAlgebra& h = ga.hopf();
  if (pi.rows() != b.dim() || pi.cols() != b.dim()) fail(ErrorKind::DimMismatch, "projection shape");
  if (!is_ideal(b, a_sub)) fail(ErrorKind::InvalidArgument, "A_sub is not an ideal");
  auto basis = a_sub.basis_vectors();
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (!(pi * basis[j] == basis[j]))
      fail(ErrorKind::ProjectionIdentityFails, "pi is not the identity on a" + std::to_string(j));
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (!a_sub.contains(pi * ga.apply_basis(i, basis[j])))
        fail(ErrorKind::ProjectionIdentityFails,
             "pi(h.a) outside A_sub at h=" + hopf_basis_name(h, i) + ",a=" + std::to_string(j));
  for (std::size_t hi = 0; hi < h.dim(); ++hi)
    for (std::size_t ki = 0; ki < h.dim(); ++ki)
      for (std::size_t x = 0; x < basis.size(); ++x)
        for (std::size_t y = 0; y < basis.size(); ++y) {
          Vec inner = b.product(basis[x], pi * ga.apply_basis(ki, basis[y]));
          Vec lhs = pi * ga.apply_basis(hi, inner);
          Vec rhs(b.dim());
          for (const auto& t : h.coproduct_terms(hi))
            axpy(rhs, t.coeff,
                 b.product(pi * ga.apply_basis(t.left, basis[x]), pi * ga.apply(h.basis_mul(t.right, ki), basis[y])));
          if (!(lhs == rhs))
            fail(ErrorKind::ProjectionIdentityFails, "h=" + hopf_basis_name(h, hi) + ",k=" + hopf_basis_name(h, ki) +
                                                         ",a=" + std::to_string(x) + ",b=" + std::to_string(y));
        }
  return finish_restriction(ga, a_sub, [&](std::size_t i, const Vec& a) { return pi * ga.apply_basis(i, a); });
}

Restriction restrict_via_local_units(const GlobalAction& ga, const Subspace& a_sub, const std::vector<Vec>& units,
                                     const std::vector<std::vector<std::size_t>>& l_map,
                                     const std::vector<std::vector<std::size_t>>& r_map) {
  const FDAlgebra& b = ga.alg();
  const HopfAlgebra& h = ga.hopf();
  if (!is_ideal(b, a_sub)) fail(ErrorKind::InvalidArgument, "A_sub is not an ideal");
  Subalgebra sub = make_subalgebra(b, a_sub);
  auto to_sub = [&](const std::vector<std::size_t>& idx) {
    LocalUnitSystem s;
    for (auto i : idx) {
      if (i >= units.size()) fail(ErrorKind::InvalidArgument, "unit index out of range");
      auto c = a_sub.coordinates(units[i]);
      if (!c) fail(ErrorKind::InvalidLocalUnits, "unit " + std::to_string(i) + " outside A_sub");
      s.units.push_back(*c);
    }
    return s;
  };
  std::vector<std::size_t> all(units.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Report lu = verify_local_units(sub.alg, to_sub(all));
  if (!lu.ok()) fail(ErrorKind::InvalidLocalUnits, lu.first_failure());
  std::size_t k = a_sub.dim();
  if (l_map.size() != h.dim() * k || r_map.size() != h.dim() * k)
    fail(ErrorKind::DimMismatch, "L/R maps need one entry per (h, a) pair");
  std::vector<Vec> results(h.dim() * k);
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t idx = i * k + j;
      std::string tag = "h=" + hopf_basis_name(h, i) + ",a=" + std::to_string(j);
      for (const auto* m : {&l_map[idx], &r_map[idx]}) {
        if (m->empty()) fail(ErrorKind::SubsystemHypothesisFails, tag + ": empty subsystem");
        Report rr = verify_local_units(sub.alg, to_sub(*m));
        if (!rr.ok()) fail(ErrorKind::SubsystemHypothesisFails, tag + ": " + rr.first_failure());
      }
      Vec ha = ga.apply_basis(i, a_sub.basis_vector(j));
      std::optional<Vec> value;
      for (auto el : l_map[idx]) {
        Vec left = b.product(units[el], ha);
        for (auto fr : r_map[idx])
          if (!(left == b.product(ha, units[fr])))
            fail(ErrorKind::SubsystemHypothesisFails, tag + ": e(h.a) != (h.a)f");
        if (value && !(*value == left)) fail(ErrorKind::SubsystemHypothesisFails, tag + ": value depends on e");
        value = left;
      }
      results[idx] = *value;
    }
  return finish_restriction(ga, a_sub, [&](std::size_t i, const Vec& a) {
    auto c = a_sub.coordinates_or_throw(a);
    Vec out(b.dim());
    for (std::size_t j = 0; j < k; ++j) axpy(out, c[j], results[i * k + j]);
    return out;
  });
}

PartialAction tensor_product_action(const PartialAction& pa1, const PartialAction& pa2) {
  if (!(pa1.hopf() == pa2.hopf())) fail(ErrorKind::HopfMismatch, "tensor product needs the same H");
  const HopfAlgebra& h = pa1.hopf();
  if (!h.cocommutative()) fail(ErrorKind::NotCocommutative, "tensor product action needs cocommutative H");
  FDAlgebra t = tensor_algebra(pa1.alg(), pa2.alg());
  std::vector<Mat> ops;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Mat op(t.dim(), t.dim());
    for (const auto& c : h.coproduct_terms(i)) op.add_scaled(c.coeff, kron(pa1.op(c.left), pa2.op(c.right)));
    ops.push_back(std::move(op));
  }
  PartialAction pa(h, t, action_from_operators(ops, t.dim()));
  verify_partial_action(pa);
  return pa;
}

bool is_categorizable(const PartialAction& pa, const LocalUnitSystem& s) {
  const FDAlgebra& a = pa.alg();
  for (const auto& e : s.units)
    for (std::size_t i = 0; i < pa.hopf().dim(); ++i) {
      Vec x = pa.apply_basis(i, e);
      if (!(a.product(a.product(e, x), e) == x)) return false;
    }
  for (const auto& ea : s.units)
    for (const auto& eb : s.units) {
      Subspace c = corner(a, ea, eb);
      for (const auto& v : c.basis_vectors())
        for (std::size_t i = 0; i < pa.hopf().dim(); ++i)
          if (!c.contains(pa.apply_basis(i, v))) return false;
    }
  return true;
}

GlobalAction trivial_action(const HopfAlgebra& h, const FDAlgebra& a) {
  std::vector<Mat> ops;
  for (std::size_t i = 0; i < h.dim(); ++i) ops.push_back(h.counit()(0, i) * Mat::identity(a.dim()));
  return GlobalAction(h, a, action_from_operators(ops, a.dim()));
}

PartialAction zero_on_nonidentity(const HopfAlgebra& h, const FDAlgebra& a) {
  if (h.origin() != HopfOrigin::GroupAlgebra || !h.group())
    fail(ErrorKind::InvalidArgument, "zero_on_nonidentity needs a group algebra");
  std::vector<Mat> ops(h.dim(), Mat(a.dim(), a.dim()));
  ops[h.group()->identity()] = Mat::identity(a.dim());
  return PartialAction(h, a, action_from_operators(ops, a.dim()));
}

}  // namespace pha
