#include "pha/group_partial.hpp"

#include <map>
#include <set>
#include <queue>

#include "pha/errors.hpp"

namespace pha {

Vec PartialGroupAction::apply(std::size_t g, const Vec& x) const {
  auto c = domains[group.inv(g)].coordinates(x);
  if (!c) fail(ErrorKind::InvalidArgument, "element outside D_" + group.label(group.inv(g)));
  return alpha[g] * *c;
}

Mat PartialGroupAction::ambient_alpha(std::size_t g) const {
  const Subspace& d = domains[group.inv(g)];
  std::size_t n = alg.dim();
  // the pivot coordinates of x give its RREF coordinates when x lies in d
  Mat sel(d.dim(), n);
  for (std::size_t i = 0; i < d.dim(); ++i) sel(i, d.pivots()[i]) = Scalar(1);
  return alpha[g] * sel;
}

PartialGroupAction make_partial_group_action(const FiniteGroup& g, const FDAlgebra& a, std::vector<Subspace> domains,
                                             const std::vector<Mat>& ambient_alpha,
                                             std::optional<std::vector<Mat>> projections) {
  if (domains.size() != g.order() || ambient_alpha.size() != g.order())
    fail(ErrorKind::DimMismatch, "need one domain and one alpha per group element");
  PartialGroupAction p{g, a, std::move(domains), {}, std::move(projections)};
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Mat& m = ambient_alpha[x];
    if (m.rows() != a.dim() || m.cols() != a.dim()) fail(ErrorKind::DimMismatch, "alpha must be dim A x dim A");
    if (p.domains[x].ambient_dim() != a.dim()) fail(ErrorKind::DimMismatch, "domain ambient dimension");
    p.alpha.push_back(m * p.domains[g.inv(x)].basis_cols());
  }
  if (p.projections) {
    if (p.projections->size() != g.order()) fail(ErrorKind::MissingProjections, "need one projection per element");
    for (const auto& m : *p.projections)
      if (m.rows() != a.dim() || m.cols() != a.dim()) fail(ErrorKind::DimMismatch, "projection must be dim A x dim A");
  }
  return p;
}

PartialGroupAction global_group_action(const FiniteGroup& g, const FDAlgebra& a, const std::vector<Mat>& autos) {
  std::vector<Subspace> d(g.order(), Subspace::whole(a.dim()));
  std::vector<Mat> proj(g.order(), Mat::identity(a.dim()));
  return make_partial_group_action(g, a, d, autos, proj);
}

namespace {

std::string lbl(const FiniteGroup& g, std::size_t x) { return g.label(x); }

// shared checks: identity, ideals, isomorphisms
void common_checks(const PartialGroupAction& p, Report& r) {
  const FiniteGroup& G = p.group;
  const FDAlgebra& a = p.alg;
  std::size_t e = G.identity();
  bool id_ok = p.domains[e].is_whole() && p.alpha[e] == Mat::identity(a.dim());
  r.add("identity", id_ok, "D_e != A or alpha_e != id");
  std::string wi;
  for (std::size_t g = 0; g < G.order() && wi.empty(); ++g)
    if (!is_ideal(a, p.domains[g])) wi = "D_" + lbl(G, g);
  r.add("domains_ideals", wi.empty(), wi);
  std::string wb, wm;
  for (std::size_t g = 0; g < G.order(); ++g) {
    const Subspace& src = p.domains[G.inv(g)];
    const Mat& al = p.alpha[g];
    if (wb.empty()) {
      if (al.rows() != a.dim() || al.cols() != src.dim()) wb = "alpha_" + lbl(G, g) + " shape";
      else if (!(Subspace::column_space(al) == p.domains[g]) || src.dim() != p.domains[g].dim())
        wb = "alpha_" + lbl(G, g) + " is not a bijection onto D_" + lbl(G, g);
    }
    if (!wb.empty()) continue;
    for (std::size_t i = 0; i < src.dim() && wm.empty(); ++i)
      for (std::size_t j = 0; j < src.dim() && wm.empty(); ++j) {
        Vec xy = a.product(src.basis_vector(i), src.basis_vector(j));
        if (!(p.apply(g, xy) == a.product(al.col(i), al.col(j))))
          wm = "g=" + lbl(G, g) + ", domain basis (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
  }
  r.add("alpha_bijective", wb.empty(), wb);
  r.add("alpha_multiplicative", wm.empty(), wm);
}

// item (2)/(3) for a chosen combination of domains
template <class Combine>
void compatibility_checks(const PartialGroupAction& p, Report& r, Combine combine, bool report_equality) {
  const FiniteGroup& G = p.group;
  std::string wc, wq, wcomp;
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t h = 0; h < G.order(); ++h) {
      std::size_t gi = G.inv(g), gh = G.mul(g, h);
      Subspace src = combine(p.domains[gi], p.domains[h]);
      Subspace tgt = combine(p.domains[g], p.domains[gh]);
      std::vector<Vec> imgs;
      for (const auto& x : src.basis_vectors()) imgs.push_back(p.apply(g, x));
      Subspace img = Subspace::span(p.alg.dim(), imgs);
      if (wc.empty() && !tgt.contains(img)) wc = "g=" + lbl(G, g) + ",h=" + lbl(G, h);
      if (wq.empty() && !(img == tgt)) wq = "g=" + lbl(G, g) + ",h=" + lbl(G, h);
      if (!wcomp.empty()) continue;
      Subspace dom = combine(p.domains[G.inv(h)], p.domains[G.inv(gh)]);
      for (const auto& x : dom.basis_vectors()) {
        Vec y = p.apply(h, x);
        if (!p.domains[gi].contains(y) || !(p.apply(g, y) == p.apply(gh, x))) {
          wcomp = "g=" + lbl(G, g) + ",h=" + lbl(G, h);
          break;
        }
      }
    }
  r.add("domain_compatibility", wc.empty(), wc);
  if (report_equality) r.info("domain_compatibility_equality", wq.empty(), wq);
  r.add("composition", wcomp.empty(), wcomp);
}

}  // namespace

Report verify_partial_group_action(const PartialGroupAction& p) {
  Report r("partial group action");
  common_checks(p, r);
  if (!r.ok()) return r;
  compatibility_checks(p, r, [](const Subspace& u, const Subspace& v) { return intersect(u, v); }, true);
  return r;
}

Report verify_product_partial_action(const PartialGroupAction& p) {
  Report r("product partial action");
  common_checks(p, r);
  if (!r.ok()) return r;
  const FiniteGroup& G = p.group;
  std::string wi, wc;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (wi.empty() && !(product_subspace(p.alg, p.domains[g], p.domains[g]) == p.domains[g])) wi = "D_" + lbl(G, g);
    for (std::size_t h = 0; h < G.order() && wc.empty(); ++h)
      if (!(product_subspace(p.alg, p.domains[g], p.domains[h]) == product_subspace(p.alg, p.domains[h], p.domains[g])))
        wc = "g=" + lbl(G, g) + ",h=" + lbl(G, h);
  }
  r.add("domains_idempotent", wi.empty(), wi);
  r.add("domains_commute", wc.empty(), wc);
  const FDAlgebra& a = p.alg;
  compatibility_checks(p, r, [&a](const Subspace& u, const Subspace& v) { return product_subspace(a, u, v); }, false);
  return r;
}

Report verify_alpha_projections(const PartialGroupAction& p) {
  if (!p.projections) fail(ErrorKind::MissingProjections, "no projections supplied");
  Report r("alpha-projections");
  const FiniteGroup& G = p.group;
  const auto& ps = *p.projections;
  const FDAlgebra& a = p.alg;
  std::size_t n = a.dim();
  std::string wo, wmul;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (wo.empty() && !(Subspace::column_space(ps[g]) == p.domains[g])) wo = "p_" + lbl(G, g) + " not onto D_" + lbl(G, g);
    if (!wmul.empty()) continue;
    for (std::size_t i = 0; i < n && wmul.empty(); ++i)
      for (std::size_t j = 0; j < n && wmul.empty(); ++j)
        if (!(ps[g] * a.product(a.basis(i), a.basis(j)) == a.product(ps[g].col(i), ps[g].col(j))))
          wmul = "p_" + lbl(G, g) + " on (b" + std::to_string(i) + ",b" + std::to_string(j) + ")";
  }
  r.add("onto_domain", wo.empty(), wo);
  r.add("multiplicative", wmul.empty(), wmul);
  r.add("identity", ps[G.identity()] == Mat::identity(n), "p_e != id");
  std::string w2, w3, w4;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (w2.empty() && !(ps[g] * ps[g] == ps[g])) w2 = "g=" + lbl(G, g);
    for (std::size_t h = 0; h < G.order(); ++h) {
      if (w3.empty() && !(ps[g] * ps[h] == ps[h] * ps[g])) w3 = "g=" + lbl(G, g) + ",h=" + lbl(G, h);
      if (!w4.empty() || !wo.empty()) continue;
      // p_g alpha_h = alpha_h p_{h^-1 g} on D_{h^-1}
      const Subspace& dom = p.domains[G.inv(h)];
      Mat pr = ps[G.mul(G.inv(h), g)];
      for (const auto& x : dom.basis_vectors()) {
        Vec px = pr * x;
        if (!dom.contains(px) || !(ps[g] * p.apply(h, x) == p.apply(h, px))) {
          w4 = "g=" + lbl(G, g) + ",h=" + lbl(G, h);
          break;
        }
      }
    }
  }
  r.add("idempotent", w2.empty(), w2);
  r.add("commute", w3.empty(), w3);
  r.add("alpha_compatible", w4.empty(), w4);
  return r;
}

PartialAction to_kG_action(const PartialGroupAction& p) {
  Report r = verify_alpha_projections(p);
  if (!r.ok()) fail(ErrorKind::HypothesisUnmet, "alpha-projections fail: " + r.first_failure());
  const FiniteGroup& G = p.group;
  std::vector<Mat> ops;
  for (std::size_t g = 0; g < G.order(); ++g) ops.push_back(p.ambient_alpha(g) * (*p.projections)[G.inv(g)]);
  PartialAction pa(group_algebra(G), p.alg, action_from_operators(ops, p.alg.dim()));
  return pa;
}

Mat psi_map(const PartialAction& pa, std::size_t g) {
  const auto& grp = pa.hopf().group();
  if (!grp) fail(ErrorKind::InvalidArgument, "psi needs a group algebra");
  return pa.op(g) * pa.op(grp->inv(g));
}

namespace {

const FiniteGroup& group_of(const PartialAction& pa) {
  if (pa.hopf().origin() != HopfOrigin::GroupAlgebra || !pa.hopf().group())
    fail(ErrorKind::InvalidArgument, "expected an action of a group algebra");
  return *pa.hopf().group();
}

void require_idempotent_or_annihilator(const FDAlgebra& a) {
  if (!is_idempotent_algebra(a) && right_annihilator(a).dim() != 0 && left_annihilator(a).dim() != 0)
    fail(ErrorKind::HypothesisUnmet, "A is not idempotent and r(A) != 0 != l(A)");
}

}  // namespace

PartialGroupAction from_kG_action(const PartialAction& pa_in) {
  PartialAction pa = pa_in;
  const FiniteGroup& G = group_of(pa);
  require_partial(pa, true);
  require_idempotent_or_annihilator(pa.alg());
  std::size_t n = pa.alg().dim();
  std::vector<Subspace> domains;
  std::vector<Mat> projections;
  for (std::size_t g = 0; g < G.order(); ++g) {
    Mat psi = psi_map(pa, g);
    domains.push_back(Subspace::column_space(psi));
    projections.push_back(psi);
  }
  std::vector<Mat> amb;
  for (std::size_t g = 0; g < G.order(); ++g) amb.push_back(pa.op(g));
  PartialGroupAction out = make_partial_group_action(G, pa.alg(), domains, amb, projections);
  (void)n;
  return out;
}

Report verify_psi_identities(const PartialAction& pa) {
  Report r("psi identities");
  const FiniteGroup& G = group_of(pa);
  const FDAlgebra& a = pa.alg();
  std::size_t n = a.dim(), o = G.order();
  std::vector<Mat> psi;
  for (std::size_t g = 0; g < o; ++g) psi.push_back(psi_map(pa, g));
  std::string wb;
  for (std::size_t g = 0; g < o && wb.empty(); ++g)
    for (std::size_t i = 0; i < n && wb.empty(); ++i)
      for (std::size_t j = 0; j < n && wb.empty(); ++j) {
        Mat lhs = psi[g] * a.left_basis_mult(i) * a.right_basis_mult(j);
        Mat rhs = a.left_basis_mult(i) * a.right_basis_mult(j) * psi[g];
        if (!(lhs == rhs)) wb = "g=" + lbl(G, g) + ",a=b" + std::to_string(i) + ",b=b" + std::to_string(j);
      }
  r.add("bimodule_map", wb.empty(), wb);
  std::string wi;
  for (std::size_t g = 0; g < o && wi.empty(); ++g)
    if (!(psi[g] * psi[g] == psi[g])) wi = "g=" + lbl(G, g);
  r.add("idempotent", wi.empty(), wi);
  std::string w2, w3, w4;
  for (std::size_t g = 0; g < o; ++g)
    for (std::size_t h = 0; h < o; ++h) {
      std::size_t gh = G.mul(g, h), hi = G.inv(h), gi = G.inv(g);
      if (w2.empty() && !(pa.op(g) * pa.op(h) == pa.op(gh) * pa.op(hi) * pa.op(h))) w2 = "g=" + lbl(G, g) + ",h=" + lbl(G, h);
      if (w3.empty() && !(psi[g] * psi[h] == psi[h] * psi[g])) w3 = "g=" + lbl(G, g) + ",h=" + lbl(G, h);
      if (w4.empty() && !(pa.op(g) * pa.op(gi) * pa.op(h) == pa.op(h) * pa.op(G.mul(hi, g)) * pa.op(G.mul(gi, h))))
        w4 = "g=" + lbl(G, g) + ",h=" + lbl(G, h);
    }
  r.add("g_h_identity", w2.empty(), w2);
  r.add("psi_commute", w3.empty(), w3);
  r.add("g_ginv_h_identity", w4.empty(), w4);
  return r;
}

std::optional<std::string> regularity_witness(const PartialGroupAction& p, RegularityOptions opts) {
  const FiniteGroup& G = p.group;
  if (G.order() > opts.max_group_order)
    fail(ErrorKind::InvalidArgument, "group order exceeds the regularity enumeration cap");
  const FDAlgebra& a = p.alg;
  // states: (set of elements used, product of their domains in the order chosen)
  std::map<std::pair<std::set<std::size_t>, std::string>, bool> seen;
  std::queue<std::tuple<std::set<std::size_t>, Subspace, std::vector<std::size_t>>> q;
  for (std::size_t g = 0; g < G.order(); ++g) q.push({{g}, p.domains[g], {g}});
  while (!q.empty()) {
    auto [set, prod, seq] = q.front();
    q.pop();
    auto key = std::make_pair(set, to_string(prod.basis()));
    if (seen.count(key)) continue;
    seen[key] = true;
    Subspace inter = Subspace::whole(a.dim());
    for (auto g : set) inter = intersect(inter, p.domains[g]);
    if (!(inter == prod)) {
      std::string s;
      for (auto g : seq) s += (s.empty() ? "" : ",") + lbl(G, g);
      return "sequence (" + s + "): intersection dim " + std::to_string(inter.dim()) + ", product dim " +
             std::to_string(prod.dim());
    }
    for (std::size_t g = 0; g < G.order(); ++g) {
      auto s2 = set;
      s2.insert(g);
      auto seq2 = seq;
      seq2.push_back(g);
      q.push({s2, product_subspace(a, prod, p.domains[g]), seq2});
    }
  }
  return std::nullopt;
}

bool is_regular(const PartialGroupAction& p, RegularityOptions opts) { return !regularity_witness(p, opts); }

}  // namespace pha
