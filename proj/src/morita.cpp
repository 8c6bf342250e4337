#include "pha/morita.hpp"

#include "pha/errors.hpp"

namespace pha {

namespace {

Mat op_from_tensor(const Mat& t, std::size_t i, std::size_t dim) {
  Mat op(dim, dim);
  for (std::size_t y = 0; y < dim; ++y)
    for (std::size_t x = 0; x < dim; ++x) op(y, x) = t(y, i * dim + x);
  return op;
}

Mat combine(const std::vector<Mat>& ops, const Vec& c, std::size_t dim) {
  Mat out(dim, dim);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) out.add_scaled(c[i], ops[i]);
  return out;
}

struct Ops {
  std::vector<Mat> left, right;
};

Ops ops_of(const Bimodule& m, std::size_t dl, std::size_t dr) {
  Ops o;
  for (std::size_t l = 0; l < dl; ++l) o.left.push_back(m.left_op(l));
  for (std::size_t r = 0; r < dr; ++r) o.right.push_back(m.right_op(r));
  return o;
}

std::vector<Mat> action_ops(const Mat& t, std::size_t dh, std::size_t dim) {
  std::vector<Mat> out;
  for (std::size_t h = 0; h < dh; ++h) out.push_back(op_from_tensor(t, h, dim));
  return out;
}

std::string idx(const char* what, std::size_t i) { return std::string(what) + std::to_string(i); }

Mat embed_block(std::size_t total, std::size_t off, std::size_t dim) {
  Mat e(total, dim);
  for (std::size_t i = 0; i < dim; ++i) e(off + i, i) = Scalar(1);
  return e;
}

}  // namespace

Mat Bimodule::left_op(std::size_t l) const { return op_from_tensor(left, l, dim); }

Mat Bimodule::right_op(std::size_t r) const {
  Mat op(dim, dim);
  if (dim == 0) return op;
  std::size_t dr = right.cols() / dim;
  for (std::size_t y = 0; y < dim; ++y)
    for (std::size_t x = 0; x < dim; ++x) op(y, x) = right(y, x * dr + r);
  return op;
}

Report verify_context(const MoritaContextData& c) {
  Report r("morita context");
  const FDAlgebra& A = c.A;
  const FDAlgebra& B = c.B;
  std::size_t da = A.dim(), db = B.dim(), dm = c.M.dim, dn = c.N.dim;
  bool shape = c.M.left.rows() == dm && c.M.left.cols() == da * dm && c.M.right.rows() == dm &&
               c.M.right.cols() == dm * db && c.N.left.rows() == dn && c.N.left.cols() == db * dn &&
               c.N.right.rows() == dn && c.N.right.cols() == dn * da && c.tau.rows() == da &&
               c.tau.cols() == dm * dn && c.sigma.rows() == db && c.sigma.cols() == dn * dm;
  r.add("shape", shape, "tensor shapes do not match the dimensions");
  if (!shape) return r;
  Ops om = ops_of(c.M, da, db), on = ops_of(c.N, db, da);

  auto bimodule = [&](const char* name, const Ops& o, const FDAlgebra& L, const FDAlgebra& R, std::size_t dim) {
    std::string wl, wr, wc;
    for (std::size_t i = 0; i < L.dim() && wl.empty(); ++i)
      for (std::size_t j = 0; j < L.dim() && wl.empty(); ++j)
        if (!(o.left[i] * o.left[j] == combine(o.left, L.product(L.basis(i), L.basis(j)), dim)))
          wl = "(" + idx("b", i) + "," + idx("b", j) + ")";
    for (std::size_t i = 0; i < R.dim() && wr.empty(); ++i)
      for (std::size_t j = 0; j < R.dim() && wr.empty(); ++j)
        if (!(o.right[j] * o.right[i] == combine(o.right, R.product(R.basis(i), R.basis(j)), dim)))
          wr = "(" + idx("b", i) + "," + idx("b", j) + ")";
    for (std::size_t i = 0; i < L.dim() && wc.empty(); ++i)
      for (std::size_t j = 0; j < R.dim() && wc.empty(); ++j)
        if (!(o.left[i] * o.right[j] == o.right[j] * o.left[i])) wc = "(" + idx("b", i) + "," + idx("b", j) + ")";
    r.add(std::string(name) + "_left_module", wl.empty(), wl);
    r.add(std::string(name) + "_right_module", wr.empty(), wr);
    r.add(std::string(name) + "_bimodule", wc.empty(), wc);
    std::vector<Vec> li, ri;
    for (const auto& m : o.left)
      for (auto& v : m.col_list()) li.push_back(v);
    for (const auto& m : o.right)
      for (auto& v : m.col_list()) ri.push_back(v);
    r.add(std::string(name) + "_left_unital", Subspace::span(dim, li).dim() == dim, "left action not onto");
    r.add(std::string(name) + "_right_unital", Subspace::span(dim, ri).dim() == dim, "right action not onto");
  };
  bimodule("M", om, A, B, dm);
  bimodule("N", on, B, A, dn);

  std::string wtb, wtl, wtr;
  for (std::size_t x = 0; x < dm; ++x)
    for (std::size_t y = 0; y < dn; ++y) {
      Vec t = c.tau.col(x * dn + y);
      for (std::size_t b = 0; b < db && wtb.empty(); ++b)
        if (!(c.tau_of(om.right[b].col(x), unit_vec(dn, y)) == c.tau_of(unit_vec(dm, x), on.left[b].col(y))))
          wtb = idx("m", x) + "," + idx("b", b) + "," + idx("n", y);
      for (std::size_t a = 0; a < da; ++a) {
        if (wtl.empty() && !(c.tau_of(om.left[a].col(x), unit_vec(dn, y)) == A.product(A.basis(a), t)))
          wtl = idx("a", a) + "," + idx("m", x) + "," + idx("n", y);
        if (wtr.empty() && !(c.tau_of(unit_vec(dm, x), on.right[a].col(y)) == A.product(t, A.basis(a))))
          wtr = idx("m", x) + "," + idx("n", y) + "," + idx("a", a);
      }
    }
  r.add("tau_balanced", wtb.empty(), wtb);
  r.add("tau_left_linear", wtl.empty(), wtl);
  r.add("tau_right_linear", wtr.empty(), wtr);

  std::string wsb, wsl, wsr;
  for (std::size_t y = 0; y < dn; ++y)
    for (std::size_t x = 0; x < dm; ++x) {
      Vec s = c.sigma.col(y * dm + x);
      for (std::size_t a = 0; a < da && wsb.empty(); ++a)
        if (!(c.sigma_of(on.right[a].col(y), unit_vec(dm, x)) == c.sigma_of(unit_vec(dn, y), om.left[a].col(x))))
          wsb = idx("n", y) + "," + idx("a", a) + "," + idx("m", x);
      for (std::size_t b = 0; b < db; ++b) {
        if (wsl.empty() && !(c.sigma_of(on.left[b].col(y), unit_vec(dm, x)) == B.product(B.basis(b), s)))
          wsl = idx("b", b) + "," + idx("n", y) + "," + idx("m", x);
        if (wsr.empty() && !(c.sigma_of(unit_vec(dn, y), om.right[b].col(x)) == B.product(s, B.basis(b))))
          wsr = idx("n", y) + "," + idx("m", x) + "," + idx("b", b);
      }
    }
  r.add("sigma_balanced", wsb.empty(), wsb);
  r.add("sigma_left_linear", wsl.empty(), wsl);
  r.add("sigma_right_linear", wsr.empty(), wsr);

  // tau(m,n)m' = m sigma(n,m') and sigma(n,m)n' = n tau(m,n')
  std::string wam, wan;
  for (std::size_t x = 0; x < dm; ++x)
    for (std::size_t y = 0; y < dn; ++y) {
      Mat lt = combine(om.left, c.tau.col(x * dn + y), dm);
      for (std::size_t x2 = 0; x2 < dm && wam.empty(); ++x2)
        if (!(lt.col(x2) == combine(om.right, c.sigma.col(y * dm + x2), dm).col(x)))
          wam = idx("m", x) + "," + idx("n", y) + "," + idx("m", x2);
      Mat ls = combine(on.left, c.sigma.col(y * dm + x), dn);
      for (std::size_t y2 = 0; y2 < dn && wan.empty(); ++y2)
        if (!(ls.col(y2) == combine(on.right, c.tau.col(x * dn + y2), dn).col(y)))
          wan = idx("n", y) + "," + idx("m", x) + "," + idx("n", y2);
    }
  r.add("associativity_m", wam.empty(), wam);
  r.add("associativity_n", wan.empty(), wan);
  return r;
}

bool is_strict(const MoritaContextData& c) {
  return rank(c.tau) == c.A.dim() && rank(c.sigma) == c.B.dim();
}

ContextOffsets context_offsets(const MoritaContextData& c) {
  std::size_t a = 0, m = c.A.dim(), n = m + c.M.dim, b = n + c.N.dim;
  return {a, m, n, b, b + c.B.dim()};
}

FDAlgebra context_algebra_unchecked(const MoritaContextData& c) {
  ContextOffsets o = context_offsets(c);
  std::size_t da = c.A.dim(), dm = c.M.dim, dn = c.N.dim, db = c.B.dim();
  enum Block { BA, BM, BN, BB };
  auto block = [&](std::size_t i) -> std::pair<Block, std::size_t> {
    if (i < o.m) return {BA, i};
    if (i < o.n) return {BM, i - o.m};
    if (i < o.b) return {BN, i - o.n};
    return {BB, i - o.b};
  };
  auto place = [&](std::size_t off, const Vec& v) {
    Vec out = zero_vec(o.total);
    for (std::size_t i = 0; i < v.size(); ++i) out[off + i] = v[i];
    return out;
  };
  Mat mult = structure_constants(o.total, [&](std::size_t i, std::size_t j) {
    auto [bi, x] = block(i);
    auto [bj, y] = block(j);
    if (bi == BA && bj == BA) return place(o.a, c.A.product(c.A.basis(x), c.A.basis(y)));
    if (bi == BA && bj == BM) return place(o.m, c.M.left.col(x * dm + y));
    if (bi == BM && bj == BN) return place(o.a, c.tau.col(x * dn + y));
    if (bi == BM && bj == BB) return place(o.m, c.M.right.col(x * db + y));
    if (bi == BN && bj == BA) return place(o.n, c.N.right.col(x * da + y));
    if (bi == BN && bj == BM) return place(o.b, c.sigma.col(x * dm + y));
    if (bi == BB && bj == BN) return place(o.n, c.N.left.col(x * dn + y));
    if (bi == BB && bj == BB) return place(o.b, c.B.product(c.B.basis(x), c.B.basis(y)));
    return zero_vec(o.total);
  });
  Field f = c.A.field();
  FDAlgebra raw = make_algebra_unchecked(mult, std::nullopt, f);
  return make_algebra_unchecked(mult, find_unit(raw), f);
}

FDAlgebra context_algebra(const MoritaContextData& c) {
  Report r = verify_context(c);
  if (!r.ok()) fail(ErrorKind::ContextUnverified, r.first_failure());
  FDAlgebra raw = context_algebra_unchecked(c);
  return make_algebra(raw.mult(), raw.unit(), raw.field());
}

PartialAction context_action(const ActionEquivalenceData& d) {
  const MoritaContextData& c = d.ctx;
  ContextOffsets o = context_offsets(c);
  FDAlgebra calg = context_algebra(c);
  const HopfAlgebra& h = d.pa_A.hopf();
  std::size_t dm = c.M.dim, dn = c.N.dim;
  std::vector<Mat> ops;
  for (std::size_t k = 0; k < h.dim(); ++k) {
    Mat op(o.total, o.total);
    auto put = [&](std::size_t off, const Mat& m) {
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (!m(i, j).is_zero()) op(off + i, off + j) = m(i, j);
    };
    put(o.a, d.pa_A.op(k));
    put(o.m, op_from_tensor(d.m_action, k, dm));
    put(o.n, op_from_tensor(d.n_action, k, dn));
    put(o.b, d.pa_B.op(k));
    ops.push_back(std::move(op));
  }
  return PartialAction(h, calg, action_from_operators(ops, o.total));
}

Report verify_equivalent_partial_actions(const ActionEquivalenceData& d) {
  Report r("equivalent partial actions");
  const MoritaContextData& c = d.ctx;
  const HopfAlgebra& h = d.pa_A.hopf();
  std::size_t dh = h.dim(), dm = c.M.dim, dn = c.N.dim;
  bool shape = d.pa_B.hopf().dim() == dh && d.pa_A.alg() == c.A && d.pa_B.alg() == c.B &&
               d.m_action.rows() == dm && d.m_action.cols() == dh * dm && d.n_action.rows() == dn &&
               d.n_action.cols() == dh * dn;
  r.add("shape", shape, "actions do not match the context");
  if (!shape) return r;
  Report cr = verify_context(c);
  r.merge(cr, "context");
  if (!cr.ok()) return r;
  r.add("strict", is_strict(c), "tau or sigma not surjective");
  PartialAction pc = context_action(d);
  Report pr = verify_partial_action(pc);
  for (const auto& ch : pr.checks()) {
    if (ch.name == "symmetry") r.info("context_action.symmetry", ch.status == Status::Pass, ch.witness);
    else r.add("context_action." + ch.name, ch.status == Status::Pass, ch.witness);
  }

  ContextOffsets o = context_offsets(c);
  std::string wc;
  for (std::size_t k = 0; k < dh && wc.empty(); ++k) {
    Mat ea = embed_block(o.total, o.a, c.A.dim()), eb = embed_block(o.total, o.b, c.B.dim());
    if (!(pc.op(k) * ea == ea * d.pa_A.op(k)) || !(pc.op(k) * eb == eb * d.pa_B.op(k)))
      wc = "h=" + hopf_basis_name(h, k);
  }
  r.add("corner_restrictions", wc.empty(), wc);

  auto mops = action_ops(d.m_action, dh, dm);
  auto nops = action_ops(d.n_action, dh, dn);
  std::string w1, w2;
  for (std::size_t hi = 0; hi < dh; ++hi)
    for (std::size_t ki = 0; ki < dh; ++ki) {
      auto terms = h.coproduct_terms(hi);
      for (std::size_t x = 0; x < dm && w1.empty(); ++x)
        for (std::size_t y = 0; y < dn && w1.empty(); ++y) {
          Vec lhs = d.pa_A.op(hi) * c.tau_of(unit_vec(dm, x), nops[ki].col(y));
          Vec rhs = zero_vec(c.A.dim());
          for (const auto& t : terms)
            axpy(rhs, t.coeff, c.tau_of(mops[t.left].col(x), combine(nops, h.basis_mul(t.right, ki), dn).col(y)));
          if (!(lhs == rhs)) w1 = "h=" + hopf_basis_name(h, hi) + ",k=" + hopf_basis_name(h, ki) + "," + idx("m", x) + "," + idx("n", y);
        }
      for (std::size_t y = 0; y < dn && w2.empty(); ++y)
        for (std::size_t x = 0; x < dm && w2.empty(); ++x) {
          Vec lhs = d.pa_B.op(hi) * c.sigma_of(unit_vec(dn, y), mops[ki].col(x));
          Vec rhs = zero_vec(c.B.dim());
          for (const auto& t : terms)
            axpy(rhs, t.coeff, c.sigma_of(nops[t.left].col(y), combine(mops, h.basis_mul(t.right, ki), dm).col(x)));
          if (!(lhs == rhs)) w2 = "h=" + hopf_basis_name(h, hi) + ",k=" + hopf_basis_name(h, ki) + "," + idx("n", y) + "," + idx("m", x);
        }
    }
  r.add("tau_compatibility", w1.empty(), w1);
  r.add("sigma_compatibility", w2.empty(), w2);
  return r;
}

MoritaContextData context_from_ambient(const FDAlgebra& x, const Subspace& p, const Subspace& m, const Subspace& n,
                                       const Subspace& q) {
  auto sub = [&](const Subspace& s, const char* name) {
    try {
      return make_subalgebra(x, s);
    } catch (const Error&) {
      fail(ErrorKind::ContextUnverified, std::string(name) + " is not a subalgebra");
    }
  };
  Subalgebra sp = sub(p, "A"), sq = sub(q, "B");
  std::size_t da = p.dim(), db = q.dim(), dm = m.dim(), dn = n.dim();
  auto coords = [&](const Subspace& s, const Vec& v, const char* what) {
    auto c = s.coordinates(v);
    if (!c) fail(ErrorKind::ContextUnverified, std::string(what) + " leaves its piece");
    return *c;
  };
  auto pb = p.basis_vectors(), qb = q.basis_vectors(), mb = m.basis_vectors(), nb = n.basis_vectors();
  MoritaContextData c;
  c.A = sp.alg;
  c.B = sq.alg;
  c.M = {dm, Mat(dm, da * dm), Mat(dm, dm * db)};
  c.N = {dn, Mat(dn, db * dn), Mat(dn, dn * da)};
  c.tau = Mat(da, dm * dn);
  c.sigma = Mat(db, dn * dm);
  for (std::size_t i = 0; i < dm; ++i) {
    for (std::size_t a = 0; a < da; ++a) c.M.left.set_col(a * dm + i, coords(m, x.product(pb[a], mb[i]), "AM"));
    for (std::size_t b = 0; b < db; ++b) c.M.right.set_col(i * db + b, coords(m, x.product(mb[i], qb[b]), "MB"));
    for (std::size_t j = 0; j < dn; ++j) {
      c.tau.set_col(i * dn + j, coords(p, x.product(mb[i], nb[j]), "MN"));
      c.sigma.set_col(j * dm + i, coords(q, x.product(nb[j], mb[i]), "NM"));
    }
  }
  for (std::size_t j = 0; j < dn; ++j) {
    for (std::size_t b = 0; b < db; ++b) c.N.left.set_col(b * dn + j, coords(n, x.product(qb[b], nb[j]), "BN"));
    for (std::size_t a = 0; a < da; ++a) c.N.right.set_col(j * da + a, coords(n, x.product(nb[j], pb[a]), "NA"));
  }
  return c;
}

ActionEquivalenceData equivalence_from_ambient(const ActionBase& act, const Subspace& p, const Subspace& m,
                                               const Subspace& n, const Subspace& q) {
  MoritaContextData c = context_from_ambient(act.alg(), p, m, n, q);
  const HopfAlgebra& h = act.hopf();
  auto restrict = [&](const Subspace& s, const char* name) {
    std::vector<Mat> ops;
    for (std::size_t k = 0; k < h.dim(); ++k) {
      std::vector<Vec> cols;
      for (const auto& v : s.basis_vectors()) {
        auto cv = s.coordinates(act.op(k) * v);
        if (!cv) fail(ErrorKind::HypothesisUnmet, std::string("action does not preserve ") + name);
        cols.push_back(*cv);
      }
      ops.push_back(Mat::from_cols(cols, s.dim()));
    }
    return action_from_operators(ops, s.dim());
  };
  ActionEquivalenceData d;
  d.pa_A = PartialAction(h, c.A, restrict(p, "A"));
  d.pa_B = PartialAction(h, c.B, restrict(q, "B"));
  d.m_action = restrict(m, "M");
  d.n_action = restrict(n, "N");
  d.ctx = std::move(c);
  return d;
}

PartialAction entrywise_action(const PartialAction& pa, std::size_t n) {
  std::vector<Mat> ops;
  for (std::size_t k = 0; k < pa.hopf().dim(); ++k) ops.push_back(kron(Mat::identity(n * n), pa.op(k)));
  FDAlgebra mat = matrix_algebra_over(pa.alg(), n);
  return PartialAction(pa.hopf(), mat, action_from_operators(ops, mat.dim()));
}

namespace {

// entries (i,j) of Mat_k(A) with i in rows, j in cols
Subspace block_span(std::size_t k, std::size_t da, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
  std::vector<Vec> v;
  for (auto i : rows)
    for (auto j : cols)
      for (std::size_t a = 0; a < da; ++a) v.push_back(unit_vec(k * k * da, (i * k + j) * da + a));
  return Subspace::span(k * k * da, v);
}

}  // namespace

ActionEquivalenceData amplification_equivalence(const PartialAction& pa, std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "amplification needs n >= 1");
  std::size_t k = n + 1, da = pa.alg().dim();
  PartialAction big = entrywise_action(pa, k);
  std::vector<std::size_t> first{0}, rest;
  for (std::size_t i = 1; i < k; ++i) rest.push_back(i);
  return equivalence_from_ambient(big, block_span(k, da, first, first), block_span(k, da, first, rest),
                                  block_span(k, da, rest, first), block_span(k, da, rest, rest));
}

ActionEquivalenceData identity_equivalence(const PartialAction& pa) { return amplification_equivalence(pa, 1); }

MoritaContextData smash_morita_context(const PartialAction& pa, const GlobalizationResult& g) {
  const HopfAlgebra& h = pa.hopf();
  if (!h.antipode_bijective()) fail(ErrorKind::HypothesisUnmet, "antipode is not bijective");
  if (!is_idempotent_algebra(pa.alg())) fail(ErrorKind::HypothesisUnmet, "A is not idempotent");
  Report gr = verify_globalization(pa, g);
  if (!gr.ok()) fail(ErrorKind::HypothesisUnmet, "not a globalization: " + gr.first_failure());
  SmashAlgebra bh = build_smash(as_partial(g.action));
  PartialSmashAlgebra ps = build_partial_smash(build_smash(pa));
  std::size_t da = pa.alg().dim(), dh = h.dim(), d = bh.alg.dim();
  Mat phi = kron(g.theta.map, Mat::identity(dh));
  std::vector<Vec> mv, pv, nv;
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t k = 0; k < dh; ++k) {
      mv.push_back(kron(g.theta.map.col(a), unit_vec(dh, k)));
      Vec z = zero_vec(d);
      for (const auto& t : h.coproduct_terms(k))
        axpy(z, t.coeff, kron(g.action.op(t.left) * g.theta.map.col(a), unit_vec(dh, t.right)));
      nv.push_back(z);
    }
  for (const auto& z : ps.carrier.basis_vectors()) pv.push_back(phi * z);
  return context_from_ambient(bh.alg, Subspace::span(d, pv), Subspace::span(d, mv), Subspace::span(d, nv),
                              Subspace::whole(d));
}

QuotientEquivalence quotient_equivalence(const PartialAction& pa_in, AnnihilatorSide side) {
  PartialAction pa = pa_in;
  try {
    require_partial(pa, true);
  } catch (const Error& e) {
    fail(ErrorKind::HypothesisUnmet, e.what());
  }
  const FDAlgebra& A = pa.alg();
  const HopfAlgebra& h = pa.hopf();
  if (!is_idempotent_algebra(A)) fail(ErrorKind::HypothesisUnmet, "A is not idempotent");
  bool right = side == AnnihilatorSide::Right;
  if (right && !h.antipode_bijective()) fail(ErrorKind::HypothesisUnmet, "antipode is not bijective");
  Subspace ann = right ? right_annihilator(A) : left_annihilator(A);
  for (std::size_t k = 0; k < h.dim(); ++k)
    for (const auto& v : ann.basis_vectors())
      if (!ann.contains(pa.op(k) * v))
        fail(ErrorKind::HypothesisUnmet, "annihilator not stable under " + hopf_basis_name(h, k));
  QuotientAlgebra qa = make_quotient_algebra(A, ann);
  const FDAlgebra& B = qa.alg;
  const QuotientSpace& qs = qa.space;
  Mat proj = qs.projection_matrix(), lift = qs.lift_matrix();
  std::size_t da = A.dim(), db = B.dim();
  std::vector<Mat> induced;
  for (std::size_t k = 0; k < h.dim(); ++k) induced.push_back(proj * pa.op(k) * lift);
  Mat ind = action_from_operators(induced, db);

  MoritaContextData c;
  c.A = A;
  c.B = B;
  ActionEquivalenceData d;
  if (right) {
    // M = A, N = A/r(A)
    c.M = {da, A.mult(), Mat(da, da * db)};
    c.N = {db, B.mult(), Mat(db, db * da)};
    c.tau = Mat(da, da * db);
    c.sigma = Mat(db, db * da);
    for (std::size_t x = 0; x < da; ++x)
      for (std::size_t r = 0; r < db; ++r) {
        Vec v = A.product(A.basis(x), lift.col(r));
        c.M.right.set_col(x * db + r, v);
        c.tau.set_col(x * db + r, v);
      }
    for (std::size_t y = 0; y < db; ++y)
      for (std::size_t a = 0; a < da; ++a) {
        Vec v = proj * A.product(lift.col(y), A.basis(a));
        c.N.right.set_col(y * da + a, v);
        c.sigma.set_col(y * da + a, v);
      }
    d.m_action = pa.act();
    d.n_action = ind;
  } else {
    // M = A/l(A), N = A
    c.M = {db, Mat(db, da * db), B.mult()};
    c.N = {da, Mat(da, db * da), A.mult()};
    c.tau = Mat(da, db * da);
    c.sigma = Mat(db, da * db);
    for (std::size_t a = 0; a < da; ++a)
      for (std::size_t x = 0; x < db; ++x) {
        Vec v = proj * A.product(A.basis(a), lift.col(x));
        c.M.left.set_col(a * db + x, v);
        c.sigma.set_col(a * db + x, v);
      }
    for (std::size_t l = 0; l < db; ++l)
      for (std::size_t y = 0; y < da; ++y) {
        Vec v = A.product(lift.col(l), A.basis(y));
        c.N.left.set_col(l * da + y, v);
        c.tau.set_col(l * da + y, v);
      }
    d.m_action = ind;
    d.n_action = pa.act();
  }
  d.ctx = c;
  d.pa_A = pa;
  d.pa_B = PartialAction(h, B, ind);
  QuotientEquivalence out{qa, d, false};
  out.annihilator_trivial = (right ? right_annihilator(B) : left_annihilator(B)).dim() == 0;
  return out;
}

namespace {

struct Balanced {
  QuotientSpace space;
  Mat proj, lift;
};

// X (x) Y over an algebra R, with xr (x) y ~ x (x) ry
Balanced balanced_tensor(const std::vector<Mat>& x_right, const std::vector<Mat>& y_left, std::size_t dx,
                         std::size_t dy) {
  std::vector<Vec> rel;
  for (std::size_t r = 0; r < x_right.size(); ++r)
    for (std::size_t i = 0; i < dx; ++i)
      for (std::size_t j = 0; j < dy; ++j) {
        Vec v = kron(x_right[r].col(i), unit_vec(dy, j)) - kron(unit_vec(dx, i), y_left[r].col(j));
        if (!is_zero(v)) rel.push_back(std::move(v));
      }
  QuotientSpace q(Subspace::span(dx * dy, rel));
  Mat p = q.projection_matrix(), l = q.lift_matrix();
  return {q, p, l};
}

Mat induced_op(const Balanced& b, const Mat& op, const char* what) {
  for (const auto& v : b.space.kernel().basis_vectors())
    if (!b.space.kernel().contains(op * v))
      fail(ErrorKind::WellDefinednessFails, std::string(what) + " does not preserve the balancing relations");
  return b.proj * op * b.lift;
}

}  // namespace

ActionEquivalenceData compose_contexts(const ActionEquivalenceData& d1, const ActionEquivalenceData& d2) {
  const MoritaContextData& c1 = d1.ctx;
  const MoritaContextData& c2 = d2.ctx;
  if (!(c1.B == c2.A)) fail(ErrorKind::MiddleMismatch, "middle algebras differ");
  if (!(d1.pa_B.act() == d2.pa_A.act()) || !(d1.pa_B.hopf().comult() == d2.pa_A.hopf().comult()))
    fail(ErrorKind::MiddleMismatch, "middle partial actions differ");
  const HopfAlgebra& h = d1.pa_A.hopf();
  const FDAlgebra& A = c1.A;
  const FDAlgebra& Am = c1.B;
  const FDAlgebra& A2 = c2.B;
  std::size_t m1 = c1.M.dim, n1 = c1.N.dim, m2 = c2.M.dim, n2 = c2.N.dim;
  Ops om1 = ops_of(c1.M, A.dim(), Am.dim()), on1 = ops_of(c1.N, Am.dim(), A.dim());
  Ops om2 = ops_of(c2.M, Am.dim(), A2.dim()), on2 = ops_of(c2.N, A2.dim(), Am.dim());
  Balanced tm = balanced_tensor(om1.right, om2.left, m1, m2);
  Balanced tn = balanced_tensor(on2.right, on1.left, n2, n1);
  std::size_t qm = tm.space.dim(), qn = tn.space.dim();

  MoritaContextData c;
  c.A = A;
  c.B = A2;
  c.M = {qm, Mat(qm, A.dim() * qm), Mat(qm, qm * A2.dim())};
  c.N = {qn, Mat(qn, A2.dim() * qn), Mat(qn, qn * A.dim())};
  for (std::size_t a = 0; a < A.dim(); ++a) {
    Mat op = induced_op(tm, kron(om1.left[a], Mat::identity(m2)), "left A action");
    for (std::size_t x = 0; x < qm; ++x) c.M.left.set_col(a * qm + x, op.col(x));
    Mat opn = induced_op(tn, kron(Mat::identity(n2), on1.right[a]), "right A action");
    for (std::size_t y = 0; y < qn; ++y) c.N.right.set_col(y * A.dim() + a, opn.col(y));
  }
  for (std::size_t b = 0; b < A2.dim(); ++b) {
    Mat op = induced_op(tm, kron(Mat::identity(m1), om2.right[b]), "right A'' action");
    for (std::size_t x = 0; x < qm; ++x) c.M.right.set_col(x * A2.dim() + b, op.col(x));
    Mat opn = induced_op(tn, kron(on2.left[b], Mat::identity(n1)), "left A'' action");
    for (std::size_t y = 0; y < qn; ++y) c.N.left.set_col(b * qn + y, opn.col(y));
  }
  // tau(m1 (x) m2, n2 (x) n1) = tau1(m1 tau2(m2, n2), n1)
  Mat tfull(A.dim(), m1 * m2 * n2 * n1);
  for (std::size_t y = 0; y < m2; ++y)
    for (std::size_t z = 0; z < n2; ++z) {
      Mat r = combine(om1.right, c2.tau.col(y * n2 + z), m1);
      for (std::size_t x = 0; x < m1; ++x)
        for (std::size_t w = 0; w < n1; ++w)
          tfull.set_col((x * m2 + y) * (n2 * n1) + z * n1 + w, c1.tau_of(r.col(x), unit_vec(n1, w)));
    }
  c.tau = tfull * kron(tm.lift, tn.lift);
  // sigma(n2 (x) n1, m1 (x) m2) = sigma2(n2 sigma1(n1, m1), m2)
  Mat sfull(A2.dim(), n2 * n1 * m1 * m2);
  for (std::size_t w = 0; w < n1; ++w)
    for (std::size_t x = 0; x < m1; ++x) {
      Mat r = combine(on2.right, c1.sigma.col(w * m1 + x), n2);
      for (std::size_t z = 0; z < n2; ++z)
        for (std::size_t y = 0; y < m2; ++y)
          sfull.set_col((z * n1 + w) * (m1 * m2) + x * m2 + y, c2.sigma_of(r.col(z), unit_vec(m2, y)));
    }
  c.sigma = sfull * kron(tn.lift, tm.lift);

  auto mo1 = action_ops(d1.m_action, h.dim(), m1), mo2 = action_ops(d2.m_action, h.dim(), m2);
  auto no1 = action_ops(d1.n_action, h.dim(), n1), no2 = action_ops(d2.n_action, h.dim(), n2);
  std::vector<Mat> mops, nops;
  for (std::size_t k = 0; k < h.dim(); ++k) {
    Mat om(m1 * m2, m1 * m2), on(n2 * n1, n2 * n1);
    for (const auto& t : h.coproduct_terms(k)) {
      om.add_scaled(t.coeff, kron(mo1[t.left], mo2[t.right]));
      on.add_scaled(t.coeff, kron(no2[t.left], no1[t.right]));
    }
    mops.push_back(induced_op(tm, om, "H action on M"));
    nops.push_back(induced_op(tn, on, "H action on N"));
  }
  ActionEquivalenceData d;
  d.ctx = std::move(c);
  d.pa_A = d1.pa_A;
  d.pa_B = d2.pa_B;
  d.m_action = action_from_operators(mops, qm);
  d.n_action = action_from_operators(nops, qn);
  return d;
}

MoritaContextData smash_equivalence_from_action_equivalence(const ActionEquivalenceData& d) {
  if (!is_idempotent_algebra(d.ctx.A) || !is_idempotent_algebra(d.ctx.B))
    fail(ErrorKind::HypothesisUnmet, "both algebras must be idempotent");
  PartialAction pc = context_action(d);
  SmashAlgebra sm = build_smash(pc);
  ContextOffsets o = context_offsets(d.ctx);
  const HopfAlgebra& h = pc.hopf();
  std::size_t dh = h.dim(), dd = sm.alg.dim();
  auto span_block = [&](std::size_t off, std::size_t dim, bool only_one) {
    std::vector<Vec> v;
    for (std::size_t i = 0; i < dim; ++i) {
      Vec c = unit_vec(o.total, off + i);
      if (only_one) v.push_back(kron(c, h.one()));
      else
        for (std::size_t k = 0; k < dh; ++k) v.push_back(kron(c, unit_vec(dh, k)));
    }
    return Subspace::span(dd, v);
  };
  std::size_t da = d.ctx.A.dim(), db = d.ctx.B.dim();
  Subspace a1 = span_block(o.a, da, true), b1 = span_block(o.b, db, true);
  Subspace p = product_subspace(sm.alg, span_block(o.a, da, false), a1);
  Subspace q = product_subspace(sm.alg, span_block(o.b, db, false), b1);
  Subspace m = product_subspace(sm.alg, span_block(o.m, d.ctx.M.dim, false), b1);
  Subspace n = product_subspace(sm.alg, span_block(o.n, d.ctx.N.dim, false), a1);
  return context_from_ambient(sm.alg, p, m, n, q);
}

ActionEquivalenceData globalization_context(const ActionEquivalenceData& d) {
  PartialAction pc = context_action(d);
  try {
    require_partial(pc, true);
  } catch (const Error& e) {
    fail(ErrorKind::HypothesisUnmet, e.what());
  }
  const HopfAlgebra& h = pc.hopf();
  ConvolutionAlgebra conv = convolution_algebra(h, pc.alg());
  Mat phi = phi_map(pc).map;
  ContextOffsets o = context_offsets(d.ctx);
  auto piece = [&](std::size_t off, std::size_t dim) {
    std::vector<Vec> v;
    for (std::size_t k = 0; k < h.dim(); ++k)
      for (std::size_t i = 0; i < dim; ++i) v.push_back(conv.action.op(k) * phi.col(off + i));
    return Subspace::span(conv.alg.dim(), v);
  };
  return equivalence_from_ambient(conv.action, piece(o.a, d.ctx.A.dim()), piece(o.m, d.ctx.M.dim),
                                  piece(o.n, d.ctx.N.dim), piece(o.b, d.ctx.B.dim()));
}

GroupTransfer group_morita_transfer(const MoritaContextData& ctx, const PartialGroupAction& pa,
                                    const PartialGroupAction& pb, const PartialGroupAction& pcx) {
  GroupTransfer out{Report("group morita transfer"), std::nullopt};
  Report& r = out.report;
  if (!is_idempotent_algebra(ctx.A) || !is_idempotent_algebra(ctx.B))
    fail(ErrorKind::HypothesisUnmet, "both algebras must be idempotent");
  Report cr = verify_context(ctx);
  if (!cr.ok()) fail(ErrorKind::HypothesisUnmet, "context: " + cr.first_failure());
  if (!is_strict(ctx)) fail(ErrorKind::HypothesisUnmet, "context is not strict");
  FDAlgebra calg = context_algebra(ctx);
  if (!(pcx.alg == calg)) fail(ErrorKind::HypothesisUnmet, "action on C is not on the context algebra");
  if (!(pa.group == pb.group) || !(pa.group == pcx.group)) fail(ErrorKind::HypothesisUnmet, "groups differ");
  Report pp = verify_product_partial_action(pcx);
  if (!pp.ok()) fail(ErrorKind::HypothesisUnmet, "product partial action on C: " + pp.first_failure());
  for (const auto* x : {&pa, &pb, &pcx}) {
    Report ap = verify_alpha_projections(*x);
    if (!ap.ok()) fail(ErrorKind::HypothesisUnmet, "projections: " + ap.first_failure());
  }
  ContextOffsets o = context_offsets(ctx);
  const FiniteGroup& G = pa.group;
  auto corner = [&](const PartialGroupAction& s, std::size_t off, const char* name) {
    Mat e = embed_block(o.total, off, s.alg.dim());
    Subspace whole = Subspace::column_space(e);
    for (std::size_t g = 0; g < G.order(); ++g) {
      std::string at = std::string(name) + " corner, g=" + G.label(g);
      Subspace emb = Subspace::column_space(e * s.domains[g].basis_cols());
      if (!(intersect(pcx.domains[g], whole) == emb)) fail(ErrorKind::HypothesisUnmet, "E_g meets the " + at + " wrongly");
      for (const auto& x : s.domains[G.inv(g)].basis_vectors())
        if (!(pcx.apply(g, e * x) == e * s.apply(g, x))) fail(ErrorKind::HypothesisUnmet, "theta_g differs on the " + at);
      if (!((*pcx.projections)[g] * e == e * (*s.projections)[g]))
        fail(ErrorKind::HypothesisUnmet, "P_g differs from the projection on the " + at);
    }
  };
  corner(pa, o.a, "A");
  corner(pb, o.b, "B");
  r.pass("corner_restrictions");
  PartialAction ka = to_kG_action(pa), kb = to_kG_action(pb), kc = to_kG_action(pcx);
  auto block = [&](std::size_t off, std::size_t dim) {
    Mat e = embed_block(o.total, off, dim);
    std::vector<Mat> ops;
    for (std::size_t g = 0; g < G.order(); ++g) {
      Mat img = kc.op(g) * e;
      auto x = solve_linear(e, img);
      if (!x) fail(ErrorKind::HypothesisUnmet, "induced action on C leaves a block");
      ops.push_back(*x);
    }
    return action_from_operators(ops, dim);
  };
  if (!(block(o.a, ctx.A.dim()) == ka.act()) || !(block(o.b, ctx.B.dim()) == kb.act()))
    fail(ErrorKind::HypothesisUnmet, "induced action on C does not restrict to the corner actions");
  ActionEquivalenceData d{ctx, ka, kb, block(o.m, ctx.M.dim), block(o.n, ctx.N.dim)};
  r.merge(verify_equivalent_partial_actions(d), "kG");
  out.data = d;
  return out;
}

}  // namespace pha
