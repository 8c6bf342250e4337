#include "pha/globalization.hpp"

#include "pha/errors.hpp"

namespace pha {

Vec ConvolutionAlgebra::evaluate(const Vec& f, std::size_t h) const {
  std::size_t da = target.dim();
  return Vec(f.begin() + h * da, f.begin() + (h + 1) * da);
}

Vec ConvolutionAlgebra::from_values(const std::vector<Vec>& values) const {
  Vec out;
  for (const auto& v : values) out.insert(out.end(), v.begin(), v.end());
  return out;
}

ConvolutionAlgebra convolution_algebra(const HopfAlgebra& h, const FDAlgebra& a) {
  std::size_t da = a.dim(), dh = h.dim(), d = da * dh;
  const Mat& cm = h.comult();
  Mat m = structure_constants(d, [&](std::size_t p, std::size_t q) {
    std::size_t x = p / da, ia = p % da, y = q / da, ib = q % da;
    Vec out(d);
    const auto& ab = a.basis_product(ia, ib);
    if (ab.empty()) return out;
    for (std::size_t l = 0; l < dh; ++l) {
      const Scalar& c = cm(x * dh + y, l);
      if (c.is_zero()) continue;
      for (const auto& t : ab) out[l * da + t.index].add_product(c, t.coeff);
    }
    return out;
  });
  std::optional<Vec> unit;
  if (a.is_unital()) {
    Vec u(d);
    for (std::size_t l = 0; l < dh; ++l) axpy(u, h.counit()(0, l), kron(unit_vec(dh, l), *a.unit()));
    unit = u;
  }
  FDAlgebra alg = make_algebra_unchecked(m, unit, a.field());
  std::vector<Mat> ops;
  for (std::size_t k = 0; k < dh; ++k) {
    Mat op(d, d);
    for (std::size_t x = 0; x < dh; ++x)
      for (std::size_t l = 0; l < dh; ++l) {
        const Scalar& c = h.basis_mul(l, k)[x];
        if (c.is_zero()) continue;
        for (std::size_t ia = 0; ia < da; ++ia) op(l * da + ia, x * da + ia) = c;
      }
    ops.push_back(std::move(op));
  }
  GlobalAction act(h, alg, action_from_operators(ops, d));
  return {h, a, alg, act};
}

AlgebraMorphism phi_map(const PartialAction& pa) {
  std::size_t da = pa.alg().dim(), dh = pa.hopf().dim();
  Mat m(da * dh, da);
  for (std::size_t h = 0; h < dh; ++h)
    for (std::size_t a = 0; a < da; ++a)
      for (std::size_t p = 0; p < da; ++p) m(h * da + p, a) = pa.op(h)(p, a);
  ConvolutionAlgebra conv = convolution_algebra(pa.hopf(), pa.alg());
  return {pa.alg(), conv.alg, m, false};
}

bool is_injective(const AlgebraMorphism& m) { return rank(m.map) == m.source.dim(); }

GlobalizationResult make_candidate(const FDAlgebra& a, const GlobalAction& action, const Mat& theta) {
  GlobalizationResult g;
  g.B = action.alg();
  g.action = action;
  g.theta = {a, action.alg(), theta, false};
  return g;
}

Mat evaluation_map(const PartialAction& pa) {
  const HopfAlgebra& h = pa.hopf();
  std::size_t da = pa.alg().dim(), dh = h.dim();
  Mat t(dh * da, dh * da);
  for (std::size_t hi = 0; hi < dh; ++hi)
    for (std::size_t k = 0; k < dh; ++k) {
      Mat op = pa.op(h.basis_mul(k, hi));
      for (std::size_t a = 0; a < da; ++a)
        for (std::size_t p = 0; p < da; ++p) t(k * da + p, hi * da + a) = op(p, a);
    }
  return t;
}

Mat generator_map(const PartialAction& pa, const GlobalizationResult& g) {
  std::size_t da = pa.alg().dim(), dh = pa.hopf().dim();
  std::vector<Vec> cols;
  for (std::size_t hi = 0; hi < dh; ++hi)
    for (std::size_t a = 0; a < da; ++a) cols.push_back(g.action.op(hi) * g.theta.map.col(a));
  return Mat::from_cols(cols, g.B.dim());
}

namespace {

std::string hb(const HopfAlgebra& h, std::size_t i) { return hopf_basis_name(h, i); }
std::string ab(std::size_t i) { return "b" + std::to_string(i); }

}  // namespace

GlobalizationResult standard_globalization(const PartialAction& pa_in) {
  PartialAction pa = pa_in;
  require_partial(pa, true);
  const HopfAlgebra& h = pa.hopf();
  ConvolutionAlgebra conv = convolution_algebra(h, pa.alg());
  AlgebraMorphism phi = phi_map(pa);
  std::size_t dh = h.dim(), da = pa.alg().dim();
  std::vector<Vec> gens;
  for (std::size_t k = 0; k < dh; ++k)
    for (std::size_t a = 0; a < da; ++a) gens.push_back(conv.action.op(k) * phi.map.col(a));
  Subspace carrier = Subspace::span(conv.alg.dim(), gens);
  Subalgebra sub;
  try {
    sub = make_subalgebra(conv.alg, carrier);
  } catch (const Error& e) {
    fail(ErrorKind::InternalInvariant, std::string("H.phi(A) not closed under convolution: ") + e.what());
  }
  std::vector<Mat> ops;
  for (std::size_t k = 0; k < dh; ++k) {
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < carrier.dim(); ++c) cols.push_back(sub.coords(conv.action.op(k) * carrier.basis_vector(c)));
    ops.push_back(Mat::from_cols(cols, carrier.dim()));
  }
  std::vector<Vec> tcols;
  for (std::size_t a = 0; a < da; ++a) tcols.push_back(sub.coords(phi.map.col(a)));
  GlobalizationResult g;
  g.B = sub.alg;
  g.action = GlobalAction(h, sub.alg, action_from_operators(ops, carrier.dim()));
  g.theta = {pa.alg(), sub.alg, Mat::from_cols(tcols, carrier.dim()), false};
  g.provenance = Provenance::Standard;
  g.ambient_inclusion = sub.inclusion;
  Report r = verify_globalization(pa, g);
  if (!r.ok()) fail(ErrorKind::InternalInvariant, "standard globalization fails " + r.first_failure());
  g.minimal = is_minimal(pa, g);
  return g;
}

Report verify_globalization(const PartialAction& pa, const GlobalizationResult& g, const LocalUnitSystem* units) {
  Report r("globalization");
  const HopfAlgebra& h = pa.hopf();
  const FDAlgebra& a = pa.alg();
  const FDAlgebra& b = g.B;
  std::size_t da = a.dim(), dh = h.dim(), db = b.dim();
  if (g.theta.map.rows() != db || g.theta.map.cols() != da || g.action.alg().dim() != db ||
      g.action.hopf().dim() != dh) {
    r.fail("shape", "theta or action has the wrong shape");
    return r;
  }
  bool inj = rank(g.theta.map) == da;
  r.add("theta_injective", inj, inj ? "" : "rank " + std::to_string(rank(g.theta.map)) + " < " + std::to_string(da));
  if (!inj) {
    for (auto n : {"module_algebra", "theta_morphism", "item3", "item4", "item5", "theta_ideal"})
      r.skip(n, "theta not injective");
    return r;
  }
  Report ga = verify_global_action(g.action);
  r.add("module_algebra", ga.ok(), ga.first_failure());
  Report mm = verify_morphism({a, b, g.theta.map, false});
  r.add("theta_morphism", mm.ok(), mm.first_failure());

  const Mat& th = g.theta.map;
  std::string w3;
  for (std::size_t hi = 0; hi < dh && w3.empty(); ++hi)
    for (std::size_t ai = 0; ai < da && w3.empty(); ++ai) {
      Vec ha = pa.op(hi).col(ai);
      Vec hth = g.action.op(hi) * th.col(ai);
      for (std::size_t bi = 0; bi < da && w3.empty(); ++bi) {
        if (!(th * a.product(ha, a.basis(bi)) == b.product(hth, th.col(bi))))
          w3 = "left h=" + hb(h, hi) + ",a=" + ab(ai) + ",b=" + ab(bi);
        else if (!(th * a.product(a.basis(bi), ha) == b.product(th.col(bi), hth)))
          w3 = "right h=" + hb(h, hi) + ",a=" + ab(ai) + ",b=" + ab(bi);
      }
    }
  r.add("item3", w3.empty(), w3);

  Mat u = generator_map(pa, g);
  std::size_t ru = rank(u);
  r.add("item4", ru == db, "dim H.theta(A) = " + std::to_string(ru) + " < dim B = " + std::to_string(db));

  Report pr = verify_partial_action(pa);
  r.add("item5", general_verdict(pr).partial, pr.first_failure());

  Subspace ta = Subspace::column_space(th);
  std::string wi;
  for (std::size_t ai = 0; ai < da && wi.empty(); ++ai)
    for (std::size_t bi = 0; bi < db && wi.empty(); ++bi) {
      if (!ta.contains(b.product(th.col(ai), b.basis(bi)))) wi = "theta(b" + std::to_string(ai) + ")B, B index " + std::to_string(bi);
      else if (!ta.contains(b.product(b.basis(bi), th.col(ai)))) wi = "B theta(b" + std::to_string(ai) + "), B index " + std::to_string(bi);
    }
  r.add("theta_ideal", wi.empty(), wi);

  if (units) {
    Report lu = verify_local_units(a, *units);
    if (!lu.ok()) {
      r.skip("local_units", "not a local unit system: " + lu.first_failure());
      return r;
    }
    std::string wl;
    const auto& es = units->units;
    for (std::size_t hi = 0; hi < dh && wl.empty(); ++hi)
      for (std::size_t ai = 0; ai < da && wl.empty(); ++ai) {
        Vec ha = pa.op(hi).col(ai);
        Vec hth = g.action.op(hi) * th.col(ai);
        for (std::size_t x = 0; x < es.size() && wl.empty(); ++x) {
          if (!(a.product(es[x], ha) == ha)) continue;
          Vec tex = th * es[x];
          for (std::size_t y = 0; y < es.size() && wl.empty(); ++y) {
            if (!(a.product(ha, es[y]) == ha)) continue;
            Vec lhs = b.product(tex, hth);
            if (!(lhs == b.product(hth, th * es[y])) || !(th * ha == lhs))
              wl = "h=" + hb(h, hi) + ",a=" + ab(ai) + ",e" + std::to_string(x) + ",e" + std::to_string(y);
          }
        }
      }
    r.add("local_units", wl.empty(), wl);
  }
  return r;
}

Report minimality_report(const PartialAction& pa, const GlobalizationResult& g) {
  Report r("minimality");
  Subspace kt = kernel(evaluation_map(pa));
  Mat u = generator_map(pa, g);
  Subspace ku = kernel(u);
  bool incl = ku.contains(kt);
  r.add("kernel_inclusion", incl, "ker T not inside ker U");
  if (right_annihilator(pa.alg()).dim() == 0) {
    std::size_t db = g.B.dim(), dh = pa.hopf().dim();
    // Pi U = theta act
    auto pit = solve_linear(u.transpose(), (g.theta.map * pa.act()).transpose());
    if (!pit) {
      r.fail("pi_well_defined", "no projection Pi with Pi(h.theta(a)) = theta(h.a)");
      return r;
    }
    Mat pi = pit->transpose();
    std::vector<Mat> blocks;
    for (std::size_t k = 0; k < dh; ++k) blocks.push_back(pi * g.action.op(k));
    Subspace m = kernel(vstack(blocks, db));
    bool none = m.dim() == 0;
    r.add("pi_kernel", none, "ker Pi contains an H-submodule of dim " + std::to_string(m.dim()));
    r.add("characterizations_agree", none == incl, "kernel inclusion and ker Pi criteria disagree");
  } else {
    r.skip("pi_kernel", "r(A) != 0");
  }
  return r;
}

bool is_minimal(const PartialAction& pa, const GlobalizationResult& g) {
  Report r = minimality_report(pa, g);
  if (auto c = r.find("characterizations_agree"); c && c->status == Status::Fail)
    fail(ErrorKind::InternalInvariant, c->witness);
  return r.passed("kernel_inclusion");
}

bool intertwines(const AlgebraMorphism& alpha, const PartialAction& s, const PartialAction& t) {
  for (std::size_t hi = 0; hi < s.hopf().dim(); ++hi)
    if (!(alpha.map * s.op(hi) == t.op(hi) * alpha.map)) return false;
  return true;
}

Lift lift_morphism(const AlgebraMorphism& alpha, const PartialAction& pa_s, const GlobalizationResult& gs,
                   const PartialAction& pa_t, const GlobalizationResult& gt) {
  const HopfAlgebra& h = pa_s.hopf();
  std::size_t das = pa_s.alg().dim(), dh = h.dim();
  if (pa_t.hopf().dim() != dh) fail(ErrorKind::HopfMismatch, "partial actions over different Hopf algebras");
  Report am = verify_morphism({pa_s.alg(), pa_t.alg(), alpha.map, false});
  if (!am.ok()) fail(ErrorKind::HypothesisUnmet, "alpha is not an algebra morphism: " + am.first_failure());
  if (!intertwines(alpha, pa_s, pa_t)) fail(ErrorKind::HypothesisUnmet, "alpha does not intertwine the partial actions");
  bool minimal = gt.minimal ? *gt.minimal : is_minimal(pa_t, gt);
  if (!minimal) fail(ErrorKind::HypothesisUnmet, "target globalization is not minimal");
  if (gs.provenance != Provenance::Standard && right_annihilator(pa_s.alg()).dim() != 0 &&
      left_annihilator(pa_s.alg()).dim() != 0)
    fail(ErrorKind::HypothesisUnmet, "source globalization is not standard and r(A) != 0 != l(A)");

  Mat u = generator_map(pa_s, gs);
  Mat v(gt.B.dim(), dh * das);
  for (std::size_t hi = 0; hi < dh; ++hi)
    for (std::size_t a = 0; a < das; ++a) v.set_col(hi * das + a, gt.action.op(hi) * (gt.theta.map * alpha.map.col(a)));
  auto phit = solve_linear(u.transpose(), v.transpose());
  if (!phit) {
    Subspace ku = kernel(u);
    std::string w;
    for (const auto& x : ku.basis_vectors())
      if (!is_zero(v * x)) {
        w = "kernel element " + to_string(x) + " not killed";
        break;
      }
    fail(ErrorKind::WellDefinednessFails, w.empty() ? "no lift" : w);
  }
  Mat phi = phit->transpose();
  for (std::size_t hi = 0; hi < dh; ++hi)
    if (!(phi * gs.action.op(hi) == gt.action.op(hi) * phi))
      fail(ErrorKind::WellDefinednessFails, "lift is not H-linear at h=" + hopf_basis_name(h, hi));
  Report mr = verify_morphism({gs.B, gt.B, phi, false});
  if (!mr.ok()) fail(ErrorKind::WellDefinednessFails, "lift is not multiplicative " + mr.first_failure());
  Lift out;
  std::size_t rk = rank(phi);
  out.phi = {gs.B, gt.B, phi, gs.B.is_unital() && gt.B.is_unital() && phi * *gs.B.unit() == *gt.B.unit()};
  out.surjective = rk == gt.B.dim();
  out.injective = rk == gs.B.dim();
  return out;
}

}  // namespace pha
