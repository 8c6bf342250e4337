#include "pha/kcategory.hpp"

#include <algorithm>
#include <numeric>

#include "pha/errors.hpp"

namespace pha {

namespace {

Mat slice(const Mat& t, std::size_t i, std::size_t rows, std::size_t cols) {
  Mat op(rows, cols);
  for (std::size_t y = 0; y < rows; ++y)
    for (std::size_t x = 0; x < cols; ++x) op(y, x) = t(y, i * cols + x);
  return op;
}

Mat combine_slices(const Mat& t, const Vec& c, std::size_t rows, std::size_t cols) {
  Mat out(rows, cols);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) out.add_scaled(c[i], slice(t, i, rows, cols));
  return out;
}

std::string obj(std::size_t x) { return std::to_string(x); }

std::vector<std::vector<std::size_t>> unit_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (n >= 20) fail(ErrorKind::InvalidArgument, "too many objects for subset units");
  std::vector<std::size_t> masks((std::size_t{1} << n) - 1);
  std::iota(masks.begin(), masks.end(), 1);
  std::stable_sort(masks.begin(), masks.end(), [](std::size_t a, std::size_t b) {
    return __builtin_popcountll(a) < __builtin_popcountll(b);
  });
  for (std::size_t m : masks) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

Vec place(std::size_t k, std::size_t da, std::size_t i, std::size_t j, const Vec& v) {
  Vec out = zero_vec(k * k * da);
  for (std::size_t a = 0; a < da; ++a) out[(i * k + j) * da + a] = v[a];
  return out;
}

}  // namespace

Report verify_category(const FiniteKCategory& c) {
  Report r("k-category");
  std::size_t n = c.size();
  bool shape = c.hom.size() == n && c.comp.size() == n && c.identities.size() == n;
  for (std::size_t y = 0; shape && y < n; ++y) {
    shape = c.hom[y].size() == n && c.comp[y].size() == n && c.identities[y].size() == c.hom[y][y];
    for (std::size_t x = 0; shape && x < n; ++x) {
      shape = c.comp[y][x].size() == n;
      for (std::size_t w = 0; shape && w < n; ++w) {
        const Mat& m = c.comp[y][x][w];
        shape = m.rows() == c.hom[y][w] && m.cols() == c.hom[y][x] * c.hom[x][w];
      }
    }
  }
  r.add("shape", shape);
  if (!shape) {
    r.skip("identity", "shape");
    r.skip("associativity", "shape");
    return r;
  }
  std::string w;
  for (std::size_t y = 0; y < n && w.empty(); ++y)
    for (std::size_t x = 0; x < n && w.empty(); ++x)
      for (std::size_t f = 0; f < c.hom[y][x] && w.empty(); ++f) {
        Vec e = unit_vec(c.hom[y][x], f);
        if (!(c.compose(y, x, x, e, c.identities[x]) == e) || !(c.compose(y, y, x, c.identities[y], e) == e))
          w = "f" + std::to_string(f) + ": " + obj(x) + "->" + obj(y);
      }
  r.add("identity", w.empty(), w);
  w.clear();
  for (std::size_t z = 0; z < n && w.empty(); ++z)
    for (std::size_t y = 0; y < n && w.empty(); ++y)
      for (std::size_t x = 0; x < n && w.empty(); ++x)
        for (std::size_t v = 0; v < n && w.empty(); ++v)
          for (std::size_t h = 0; h < c.hom[z][y] && w.empty(); ++h)
            for (std::size_t g = 0; g < c.hom[y][x] && w.empty(); ++g)
              for (std::size_t f = 0; f < c.hom[x][v] && w.empty(); ++f) {
                Vec eh = unit_vec(c.hom[z][y], h), eg = unit_vec(c.hom[y][x], g), ef = unit_vec(c.hom[x][v], f);
                Vec l = c.compose(z, x, v, c.compose(z, y, x, eh, eg), ef);
                Vec rr = c.compose(z, y, v, eh, c.compose(y, x, v, eg, ef));
                if (!(l == rr)) w = obj(v) + "->" + obj(x) + "->" + obj(y) + "->" + obj(z);
              }
  r.add("associativity", w.empty(), w);
  return r;
}

FiniteKCategory matrix_unit_category(std::size_t n, Field f) {
  FiniteKCategory c;
  c.field = f;
  for (std::size_t i = 0; i < n; ++i) c.objects.push_back("x" + std::to_string(i));
  c.hom.assign(n, std::vector<std::size_t>(n, 1));
  Mat one(1, 1);
  one(0, 0) = Scalar::one(f);
  c.comp.assign(n, std::vector<std::vector<Mat>>(n, std::vector<Mat>(n, one)));
  c.identities.assign(n, Vec{Scalar::one(f)});
  return c;
}

FiniteKCategory discrete_category(std::size_t n, Field f) {
  FiniteKCategory c;
  c.field = f;
  for (std::size_t i = 0; i < n; ++i) c.objects.push_back("x" + std::to_string(i));
  c.hom.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c.hom[i][i] = 1;
  c.comp.assign(n, std::vector<std::vector<Mat>>(n, std::vector<Mat>(n)));
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x) {
        Mat m(c.hom[z][x], c.hom[z][y] * c.hom[y][x]);
        if (x == y && y == z) m(0, 0) = Scalar::one(f);
        c.comp[z][y][x] = m;
      }
  c.identities.assign(n, Vec{Scalar::one(f)});
  return c;
}

CategoryAlgebra a_of_category(const FiniteKCategory& c) {
  if (!verify_category(c).ok()) fail(ErrorKind::InvalidCategory, verify_category(c).first_failure());
  std::size_t n = c.size();
  CategoryAlgebra out;
  out.offset.assign(n, std::vector<std::size_t>(n, 0));
  std::size_t d = 0;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      out.offset[y][x] = d;
      d += c.hom[y][x];
    }
  struct Loc {
    std::size_t y, x, f;
  };
  std::vector<Loc> loc;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t f = 0; f < c.hom[y][x]; ++f) loc.push_back({y, x, f});
  Mat mult = structure_constants(d, [&](std::size_t i, std::size_t j) {
    Vec v = zero_vec(d);
    const Loc& a = loc[i];
    const Loc& b = loc[j];
    if (a.x != b.y) return v;
    Vec r = c.compose(a.y, a.x, b.x, unit_vec(c.hom[a.y][a.x], a.f), unit_vec(c.hom[b.y][b.x], b.f));
    for (std::size_t k = 0; k < r.size(); ++k) v[out.offset[a.y][b.x] + k] = r[k];
    return v;
  });
  std::vector<Vec> e(n, zero_vec(d));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t k = 0; k < c.hom[x][x]; ++k) e[x][out.offset[x][x] + k] = c.identities[x][k];
  Vec one = zero_vec(d);
  for (const auto& v : e) one = one + v;
  out.alg = make_algebra(mult, n > 0 ? std::optional<Vec>(one) : std::nullopt, c.field);
  for (const auto& s : unit_subsets(n)) {
    Vec u = zero_vec(d);
    for (std::size_t x : s) u = u + e[x];
    out.units.units.push_back(u);
  }
  return out;
}

AlgebraCategory category_of_algebra(const FDAlgebra& a, const LocalUnitSystem& s) {
  Report lu = verify_local_units(a, s);
  if (!lu.ok()) fail(ErrorKind::InvalidLocalUnits, lu.first_failure());
  std::size_t n = s.units.size();
  AlgebraCategory out;
  FiniteKCategory& c = out.cat;
  c.field = a.field();
  for (std::size_t i = 0; i < n; ++i) c.objects.push_back("e" + std::to_string(i));
  out.corners.assign(n, std::vector<Subspace>(n));
  c.hom.assign(n, std::vector<std::size_t>(n));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t x = 0; x < n; ++x) {
      out.corners[b][x] = corner(a, s.units[b], s.units[x]);
      c.hom[b][x] = out.corners[b][x].dim();
    }
  c.comp.assign(n, std::vector<std::vector<Mat>>(n, std::vector<Mat>(n)));
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x) {
        const Subspace& zy = out.corners[z][y];
        const Subspace& yx = out.corners[y][x];
        Mat m(c.hom[z][x], zy.dim() * yx.dim());
        for (std::size_t f = 0; f < zy.dim(); ++f)
          for (std::size_t g = 0; g < yx.dim(); ++g)
            m.set_col(f * yx.dim() + g,
                      out.corners[z][x].coordinates_or_throw(a.product(zy.basis_vector(f), yx.basis_vector(g))));
        c.comp[z][y][x] = m;
      }
  for (std::size_t x = 0; x < n; ++x) c.identities.push_back(out.corners[x][x].coordinates_or_throw(s.units[x]));
  return out;
}

Mat CategoryPartialAction::op(std::size_t y, std::size_t x, std::size_t h) const {
  std::size_t d = cat.hom[y][x];
  return slice(act[y][x], h, d, d);
}

Report verify_category_partial_action(const CategoryPartialAction& p) {
  Report r("category partial action");
  const FiniteKCategory& c = p.cat;
  const HopfAlgebra& h = p.hopf;
  std::size_t n = c.size(), dh = h.dim();
  bool shape = p.act.size() == n;
  for (std::size_t y = 0; shape && y < n; ++y) {
    shape = p.act[y].size() == n;
    for (std::size_t x = 0; shape && x < n; ++x)
      shape = p.act[y][x].rows() == c.hom[y][x] && p.act[y][x].cols() == dh * c.hom[y][x];
  }
  r.add("shape", shape);
  if (!shape) return r;
  r.merge(verify_category(c), "category");
  auto opv = [&](std::size_t y, std::size_t x, const Vec& hv) {
    return combine_slices(p.act[y][x], hv, c.hom[y][x], c.hom[y][x]);
  };
  std::string w;
  for (std::size_t y = 0; y < n && w.empty(); ++y)
    for (std::size_t x = 0; x < n && w.empty(); ++x)
      if (!(opv(y, x, h.one()) == Mat::identity(c.hom[y][x]))) w = obj(x) + "->" + obj(y);
  r.add("unit", w.empty(), w);

  w.clear();
  for (std::size_t z = 0; z < n && w.empty(); ++z)
    for (std::size_t y = 0; y < n && w.empty(); ++y)
      for (std::size_t x = 0; x < n && w.empty(); ++x) {
        const Mat& cm = c.comp[z][y][x];
        for (std::size_t i = 0; i < dh && w.empty(); ++i) {
          // h.(g o f) against sum (h1.g) o (h2.f), as maps on hom(y,z) (x) hom(x,y)
          Mat lhs = p.op(z, x, i) * cm;
          Mat rhs(cm.rows(), cm.cols());
          for (const auto& t : h.coproduct_terms(i)) rhs.add_scaled(t.coeff, cm * kron(p.op(z, y, t.left), p.op(y, x, t.right)));
          if (!(lhs == rhs)) w = "h" + std::to_string(i) + " on " + obj(x) + "->" + obj(y) + "->" + obj(z);
        }
      }
  r.add("multiplicative", w.empty(), w);

  // h.(k.f) = sum (h1.1_y) o (h2 k.f); the symmetric form uses (h1 k.f) o (h2.1_x)
  std::string ws;
  w.clear();
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t i = 0; i < dh; ++i)
        for (std::size_t k = 0; k < dh; ++k) {
          Mat lhs = p.op(y, x, i) * p.op(y, x, k);
          Mat rl(c.hom[y][x], c.hom[y][x]), rr(c.hom[y][x], c.hom[y][x]);
          for (const auto& t : h.coproduct_terms(i)) {
            Vec uy = p.op(y, y, t.left) * c.identities[y];
            // f -> uy o f
            rl.add_scaled(t.coeff, c.comp[y][y][x] * kron(Mat::from_cols({uy}, c.hom[y][y]), Mat::identity(c.hom[y][x])) *
                                       opv(y, x, h.basis_mul(t.right, k)));
            Mat hk2 = opv(y, x, h.basis_mul(t.left, k));
            Vec ux = p.op(x, x, t.right) * c.identities[x];
            rr.add_scaled(t.coeff, c.comp[y][x][x] * kron(Mat::identity(c.hom[y][x]), Mat::from_cols({ux}, c.hom[x][x])) * hk2);
          }
          std::string tag = "h" + std::to_string(i) + ",k" + std::to_string(k) + " on " + obj(x) + "->" + obj(y);
          if (w.empty() && !(lhs == rl)) w = tag;
          if (ws.empty() && !(lhs == rr)) ws = tag;
        }
  r.add("composition", w.empty(), w);
  r.add("symmetry", ws.empty(), ws);
  return r;
}

PartialAction induce_action_on_algebra(const CategoryPartialAction& p) {
  Report vr = verify_category_partial_action(p);
  if (!vr.passed("unit") || !vr.passed("multiplicative") || !vr.passed("composition"))
    fail(ErrorKind::ActionUnverified, vr.first_failure());
  CategoryAlgebra ca = a_of_category(p.cat);
  std::size_t n = p.cat.size(), d = ca.alg.dim();
  std::vector<Mat> ops;
  for (std::size_t i = 0; i < p.hopf.dim(); ++i) {
    Mat op(d, d);
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x) {
        Mat b = p.op(y, x, i);
        std::size_t o = ca.offset[y][x];
        for (std::size_t r = 0; r < b.rows(); ++r)
          for (std::size_t s = 0; s < b.cols(); ++s) op(o + r, o + s) = b(r, s);
      }
    ops.push_back(op);
  }
  PartialAction pa(p.hopf, ca.alg, action_from_operators(ops, d));
  verify_partial_action(pa);
  return pa;
}

CategoryPartialAction induce_action_on_category(const PartialAction& pa, const LocalUnitSystem& s) {
  if (!is_categorizable(pa, s)) fail(ErrorKind::NotCategorizable, "corners not stable under the action");
  AlgebraCategory ac = category_of_algebra(pa.alg(), s);
  CategoryPartialAction out;
  out.cat = ac.cat;
  out.hopf = pa.hopf();
  std::size_t n = s.units.size(), dh = pa.hopf().dim();
  out.act.assign(n, std::vector<Mat>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      const Subspace& cs = ac.corners[y][x];
      Mat t(cs.dim(), dh * cs.dim());
      for (std::size_t i = 0; i < dh; ++i)
        for (std::size_t f = 0; f < cs.dim(); ++f)
          t.set_col(i * cs.dim() + f, cs.coordinates_or_throw(pa.apply_basis(i, cs.basis_vector(f))));
      out.act[y][x] = t;
    }
  return out;
}

CategoryPartialAction full_subcategory(const CategoryPartialAction& p, const std::vector<std::size_t>& objs) {
  CategoryPartialAction out;
  out.hopf = p.hopf;
  FiniteKCategory& c = out.cat;
  c.field = p.cat.field;
  std::size_t n = objs.size();
  for (std::size_t o : objs) {
    if (o >= p.cat.size()) fail(ErrorKind::InvalidArgument, "object index out of range");
    c.objects.push_back(p.cat.objects[o]);
    c.identities.push_back(p.cat.identities[o]);
  }
  c.hom.assign(n, std::vector<std::size_t>(n));
  c.comp.assign(n, std::vector<std::vector<Mat>>(n, std::vector<Mat>(n)));
  out.act.assign(n, std::vector<Mat>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      c.hom[y][x] = p.cat.hom[objs[y]][objs[x]];
      out.act[y][x] = p.act[objs[y]][objs[x]];
      for (std::size_t w = 0; w < n; ++w) c.comp[y][x][w] = p.cat.comp[objs[y]][objs[x]][objs[w]];
    }
  return out;
}

CategoryPartialAction category_round_trip(const CategoryPartialAction& p) {
  PartialAction pa = induce_action_on_algebra(p);
  CategoryAlgebra ca = a_of_category(p.cat);
  CategoryPartialAction q = induce_action_on_category(pa, ca.units);
  std::vector<std::size_t> objs(p.cat.size());
  std::iota(objs.begin(), objs.end(), 0);
  CategoryPartialAction back = full_subcategory(q, objs);
  back.cat.objects = p.cat.objects;
  return back;
}

ActionEquivalenceData morita_A_vs_aCSA(const PartialAction& pa, const LocalUnitSystem& s) {
  PartialAction p = pa;
  require_partial(p, true);
  if (!is_categorizable(p, s)) fail(ErrorKind::NotCategorizable, "corners not stable under the action");
  const FDAlgebra& a = p.alg();
  if (!is_idempotent_algebra(a)) fail(ErrorKind::HypothesisUnmet, "A is not idempotent");
  Report lu = verify_local_units(a, s);
  if (!lu.ok()) fail(ErrorKind::InvalidLocalUnits, lu.first_failure());
  std::size_t k = s.units.size(), kk = k + 1, da = a.dim(), amb = kk * kk * da;
  PartialAction big = entrywise_action(p, kk);
  std::vector<Vec> pv, mv, nv, qv;
  for (std::size_t i = 0; i < da; ++i) pv.push_back(place(kk, da, 0, 0, a.basis(i)));
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t i = 0; i < da; ++i) {
      mv.push_back(place(kk, da, 0, l + 1, a.product(a.basis(i), s.units[l])));
      nv.push_back(place(kk, da, l + 1, 0, a.product(s.units[l], a.basis(i))));
    }
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t x = 0; x < k; ++x)
      for (const auto& v : corner(a, s.units[b], s.units[x]).basis_vectors()) qv.push_back(place(kk, da, b + 1, x + 1, v));
  return equivalence_from_ambient(big, Subspace::span(amb, pv), Subspace::span(amb, mv), Subspace::span(amb, nv),
                                  Subspace::span(amb, qv));
}

Report verify_cmodule(const FiniteKCategory& c, const CModule& m) {
  Report r("category module");
  std::size_t n = c.size();
  bool shape = m.dims.size() == n && m.act.size() == n;
  for (std::size_t y = 0; shape && y < n; ++y) {
    shape = m.act[y].size() == n;
    for (std::size_t x = 0; shape && x < n; ++x)
      shape = m.act[y][x].rows() == m.dims[y] && m.act[y][x].cols() == c.hom[y][x] * m.dims[x];
  }
  r.add("shape", shape);
  if (!shape) return r;
  std::string w;
  for (std::size_t x = 0; x < n && w.empty(); ++x)
    if (!(combine_slices(m.act[x][x], c.identities[x], m.dims[x], m.dims[x]) == Mat::identity(m.dims[x]))) w = obj(x);
  r.add("identity", w.empty(), w);
  w.clear();
  for (std::size_t z = 0; z < n && w.empty(); ++z)
    for (std::size_t y = 0; y < n && w.empty(); ++y)
      for (std::size_t x = 0; x < n && w.empty(); ++x)
        for (std::size_t f = 0; f < c.hom[z][y] && w.empty(); ++f)
          for (std::size_t g = 0; g < c.hom[y][x] && w.empty(); ++g) {
            Vec fg = c.compose(z, y, x, unit_vec(c.hom[z][y], f), unit_vec(c.hom[y][x], g));
            Mat lhs = combine_slices(m.act[z][x], fg, m.dims[z], m.dims[x]);
            Mat rhs = slice(m.act[z][y], f, m.dims[z], m.dims[y]) * slice(m.act[y][x], g, m.dims[y], m.dims[x]);
            if (!(lhs == rhs)) w = obj(x) + "->" + obj(y) + "->" + obj(z);
          }
  r.add("composition", w.empty(), w);
  return r;
}

LeftModule module_F(const FiniteKCategory& c, const CModule& m) {
  CategoryAlgebra ca = a_of_category(c);
  std::size_t n = c.size();
  std::vector<std::size_t> off(n + 1, 0);
  for (std::size_t x = 0; x < n; ++x) off[x + 1] = off[x] + m.dims[x];
  LeftModule out;
  out.dim = off[n];
  out.action = Mat(out.dim, ca.alg.dim() * out.dim);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t f = 0; f < c.hom[y][x]; ++f) {
        std::size_t ai = ca.offset[y][x] + f;
        Mat b = slice(m.act[y][x], f, m.dims[y], m.dims[x]);
        for (std::size_t r = 0; r < b.rows(); ++r)
          for (std::size_t s = 0; s < b.cols(); ++s) out.action(off[y] + r, ai * out.dim + off[x] + s) = b(r, s);
      }
  return out;
}

CModule module_G(const FiniteKCategory& c, const LeftModule& m) {
  CategoryAlgebra ca = a_of_category(c);
  std::size_t n = c.size();
  std::vector<Subspace> parts;
  std::vector<Vec> e;
  for (std::size_t x = 0; x < n; ++x) {
    e.push_back(ca.units.units[x]);
    parts.push_back(Subspace::column_space(module_operator(ca.alg, m, e[x])));
  }
  CModule out;
  for (const auto& p : parts) out.dims.push_back(p.dim());
  out.act.assign(n, std::vector<Mat>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      Mat t(out.dims[y], c.hom[y][x] * out.dims[x]);
      for (std::size_t f = 0; f < c.hom[y][x]; ++f) {
        Mat op = module_operator(ca.alg, m, ca.alg.basis(ca.offset[y][x] + f));
        for (std::size_t j = 0; j < out.dims[x]; ++j)
          t.set_col(f * out.dims[x] + j, parts[y].coordinates_or_throw(op * parts[x].basis_vector(j)));
      }
      out.act[y][x] = t;
    }
  return out;
}

Report module_equivalence_roundtrip(const FiniteKCategory& c, const CModule& m) {
  Report r("module equivalence");
  Report v = verify_cmodule(c, m);
  r.merge(v, "cmodule");
  if (!v.ok()) return r;
  LeftModule fm = module_F(c, m);
  CategoryAlgebra ca = a_of_category(c);
  r.add("F_module", verify_left_module(ca.alg, fm).ok());
  r.add("F_unital", is_unital_module(ca.alg, fm));
  CModule gf = module_G(c, fm);
  r.add("GF_identity", gf.dims == m.dims && gf.act == m.act);
  LeftModule fgf = module_F(c, gf);
  r.add("FG_identity", fgf.dim == fm.dim && fgf.action == fm.action);
  return r;
}

Report algebra_module_roundtrip(const FDAlgebra& a, const LocalUnitSystem& s, const LeftModule& m) {
  Report r("algebra module round trip");
  AlgebraCategory ac = category_of_algebra(a, s);
  if (!verify_left_module(a, m).ok()) fail(ErrorKind::InvalidModule, "not a left module");
  if (!is_unital_module(a, m) || !torsion_submodule(a, m).is_zero())
    fail(ErrorKind::NotUnitalModule, "AM != M or nonzero torsion");
  const FiniteKCategory& c = ac.cat;
  std::size_t n = c.size();
  std::vector<Subspace> parts;
  for (std::size_t l = 0; l < n; ++l) parts.push_back(Subspace::column_space(module_operator(a, m, s.units[l])));
  CModule cm;
  for (const auto& p : parts) cm.dims.push_back(p.dim());
  cm.act.assign(n, std::vector<Mat>(n));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t x = 0; x < n; ++x) {
      const Subspace& cs = ac.corners[b][x];
      Mat t(cm.dims[b], cs.dim() * cm.dims[x]);
      for (std::size_t f = 0; f < cs.dim(); ++f) {
        Mat op = module_operator(a, m, cs.basis_vector(f));
        for (std::size_t j = 0; j < cm.dims[x]; ++j)
          t.set_col(f * cm.dims[x] + j, parts[b].coordinates_or_throw(op * parts[x].basis_vector(j)));
      }
      cm.act[b][x] = t;
    }
  r.merge(verify_cmodule(c, cm), "cmodule");

  std::vector<std::size_t> off(n + 1, 0);
  for (std::size_t l = 0; l < n; ++l) off[l + 1] = off[l] + cm.dims[l];
  std::size_t total = off[n];
  auto inject = [&](std::size_t l, const Vec& v) {
    Vec out = zero_vec(total);
    for (std::size_t j = 0; j < v.size(); ++j) out[off[l] + j] = v[j];
    return out;
  };
  // e_l <= e_a: m in e_l M is sent along e_l viewed in e_a A e_l
  auto transfer = [&](std::size_t l, std::size_t al, const Vec& mv) {
    Vec ecoords = ac.corners[al][l].coordinates_or_throw(s.units[l]);
    return combine_slices(cm.act[al][l], ecoords, cm.dims[al], cm.dims[l]) * mv;
  };
  std::vector<Vec> rel;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t al = 0; al < n; ++al) {
      if (l == al || !unit_leq(a, s.units[l], s.units[al])) continue;
      for (std::size_t j = 0; j < cm.dims[l]; ++j) {
        Vec mv = unit_vec(cm.dims[l], j);
        rel.push_back(inject(l, mv) - inject(al, transfer(l, al, mv)));
      }
    }
  Subspace t = Subspace::span(total, rel);
  QuotientSpace lim(t);
  r.add("limit_dimension", lim.dim() == m.dim,
        lim.dim() == m.dim ? "" : std::to_string(lim.dim()) + " vs " + std::to_string(m.dim));
  Mat psi(m.dim, total);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t j = 0; j < cm.dims[l]; ++j) psi.set_col(off[l] + j, parts[l].basis_vector(j));
  r.add("limit_iso", kernel(psi) == t && rank(psi) == m.dim);
  if (!r.passed("limit_dimension") || !r.passed("limit_iso")) {
    r.skip("action_transported", "limit");
    return r;
  }
  std::string w;
  for (std::size_t i = 0; i < a.dim() && w.empty(); ++i) {
    Vec b = a.basis(i);
    std::optional<std::size_t> beta;
    for (std::size_t k = 0; k < n && !beta; ++k)
      if (a.product(s.units[k], b) == b) beta = k;
    Mat act_lim(lim.dim(), lim.dim());
    for (std::size_t q = 0; q < lim.dim(); ++q) {
      Vec lifted = lim.lift(unit_vec(lim.dim(), q));
      Vec res = zero_vec(total);
      for (std::size_t l = 0; l < n; ++l) {
        Vec comp(lifted.begin() + off[l], lifted.begin() + off[l + 1]);
        if (is_zero(comp)) continue;
        std::optional<std::size_t> alpha;
        for (std::size_t k = 0; k < n && !alpha; ++k)
          if (unit_leq(a, s.units[l], s.units[k]) && a.product(b, s.units[k]) == b) alpha = k;
        if (!alpha || !beta) fail(ErrorKind::InvalidLocalUnits, "no dominating unit");
        Vec moved = *alpha == l ? comp : transfer(l, *alpha, comp);
        Vec bc = ac.corners[*beta][*alpha].coordinates_or_throw(b);
        res = res + inject(*beta, combine_slices(cm.act[*beta][*alpha], bc, cm.dims[*beta], cm.dims[*alpha]) * moved);
      }
      act_lim.set_col(q, lim.project(res));
    }
    Mat psi_l = psi * lim.lift_matrix();
    if (!(psi_l * act_lim == module_operator(a, m, b) * psi_l)) w = "b" + std::to_string(i);
  }
  r.add("action_transported", w.empty(), w);
  return r;
}

}  // namespace pha
