#include "pha/algebra.hpp"

#include "pha/errors.hpp"

namespace pha {

FDAlgebra::FDAlgebra() : d_(std::make_shared<const Data>()) {}

FDAlgebra FDAlgebra::build(const Mat& mult, std::optional<Vec> unit, Field field, bool verified) {
  std::size_t n = mult.rows();
  if (mult.cols() != n * n)
    fail(ErrorKind::DimMismatch, "structure constants must be dim x dim^2, got " +
                                     std::to_string(mult.rows()) + "x" + std::to_string(mult.cols()));
  auto d = std::make_shared<Data>();
  d->dim = n;
  d->field = field;
  d->mult = mult.bound(field);
  if (unit) {
    if (unit->size() != n) fail(ErrorKind::DimMismatch, "unit length");
    d->unit = bind_field(*unit, field);
  }
  d->verified = verified;
  d->sparse.resize(n * n);
  for (std::size_t c = 0; c < n * n; ++c)
    for (std::size_t l = 0; l < n; ++l)
      if (!d->mult(l, c).is_zero()) d->sparse[c].push_back({l, d->mult(l, c)});
  d->left.assign(n, Mat(n, n));
  d->right.assign(n, Mat(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : d->sparse[i * n + j]) {
        d->left[i](t.index, j) = t.coeff;
        d->right[j](t.index, i) = t.coeff;
      }
  FDAlgebra a;
  a.d_ = std::move(d);
  return a;
}

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(b" + std::to_string(i) + ",b" + std::to_string(j) + ",b" + std::to_string(k) + ")";
}

}  // namespace

FDAlgebra make_algebra(const Mat& mult, std::optional<Vec> unit, Field field) {
  FDAlgebra a = FDAlgebra::build(mult, unit, field, false);
  if (auto w = associativity_witness(a))
    fail(ErrorKind::NotAssociative, "witness " + triple((*w)[0], (*w)[1], (*w)[2]));
  if (a.unit()) {
    const Vec& u = *a.unit();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vec b = a.basis(i);
      if (!(a.product(u, b) == b) || !(a.product(b, u) == b))
        fail(ErrorKind::InvalidUnit, "unit fails on b" + std::to_string(i));
    }
  }
  return FDAlgebra::build(mult, unit, field, true);
}

FDAlgebra make_algebra_unchecked(const Mat& mult, std::optional<Vec> unit, Field field) {
  return FDAlgebra::build(mult, unit, field, false);
}

Vec FDAlgebra::product(const Vec& x, const Vec& y) const {
  std::size_t n = dim();
  if (x.size() != n || y.size() != n) fail(ErrorKind::DimMismatch, "product operand length");
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const auto& terms = d_->sparse[i * n + j];
      if (terms.empty()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& t : terms) r[t.index].add_product(c, t.coeff);
    }
  }
  return r;
}

Mat FDAlgebra::left_mult(const Vec& x) const {
  Mat m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) m.add_scaled(x[i], d_->left[i]);
  return m;
}

Mat FDAlgebra::right_mult(const Vec& y) const {
  Mat m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.add_scaled(y[j], d_->right[j]);
  return m;
}

bool FDAlgebra::operator==(const FDAlgebra& o) const {
  if (dim() != o.dim() || field() != o.field() || unit().has_value() != o.unit().has_value())
    return false;
  if (unit() && !(*unit() == *o.unit())) return false;
  return mult() == o.mult();
}

std::optional<std::array<std::size_t, 3>> associativity_witness(const FDAlgebra& a) {
  std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ij = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs(n), rhs(n);
        for (const auto& t : ij)
          for (const auto& s : a.basis_product(t.index, k)) lhs[s.index].add_product(t.coeff, s.coeff);
        for (const auto& t : a.basis_product(j, k))
          for (const auto& s : a.basis_product(i, t.index)) rhs[s.index].add_product(t.coeff, s.coeff);
        if (!(lhs == rhs)) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  return std::nullopt;
}

std::optional<Vec> find_unit(const FDAlgebra& a) {
  std::size_t n = a.dim();
  if (n == 0) return Vec{};
  std::vector<Mat> blocks;
  Mat rhs(2 * n * n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    blocks.push_back(a.right_basis_mult(j));
    blocks.push_back(a.left_basis_mult(j));
    rhs(2 * j * n + j, 0) = Scalar(1);
    rhs((2 * j + 1) * n + j, 0) = Scalar(1);
  }
  auto x = solve_linear(vstack(blocks, n), rhs);
  if (!x) return std::nullopt;
  return bind_field(x->col(0), a.field());
}

std::optional<Vec> has_left_identity(const FDAlgebra& a) {
  std::size_t n = a.dim();
  if (n == 0) return Vec{};
  std::vector<Mat> blocks;
  Mat rhs(n * n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    blocks.push_back(a.right_basis_mult(j));
    rhs(j * n + j, 0) = Scalar(1);
  }
  auto x = solve_linear(vstack(blocks, n), rhs);
  if (!x) return std::nullopt;
  return bind_field(x->col(0), a.field());
}

FDAlgebra base_field_algebra(Field f) {
  Mat m(1, 1);
  m(0, 0) = Scalar(1);
  return make_algebra(m, Vec{Scalar(1)}, f);
}

FDAlgebra zero_algebra(std::size_t n, Field f) { return make_algebra(Mat(n, n * n), std::nullopt, f); }

FDAlgebra matrix_algebra(std::size_t n, Field f) {
  std::size_t d = n * n;
  Mat m = structure_constants(d, [&](std::size_t x, std::size_t y) {
    Vec v(d);
    std::size_t i = x / n, j = x % n, k = y / n, l = y % n;
    if (j == k) v[i * n + l] = Scalar(1);
    return v;
  });
  Vec u(d);
  for (std::size_t i = 0; i < n; ++i) u[i * n + i] = Scalar(1);
  return make_algebra(m, u, f);
}

FDAlgebra product_of_fields(std::size_t n, Field f) {
  Mat m = structure_constants(n, [&](std::size_t i, std::size_t j) {
    Vec v(n);
    if (i == j) v[i] = Scalar(1);
    return v;
  });
  Vec u(n, Scalar(1));
  return make_algebra(m, u, f);
}

FDAlgebra upper_triangular(std::size_t n, Field f) {
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) idx.emplace_back(i, j);
  auto pos = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (idx[k] == std::make_pair(i, j)) return k;
    return idx.size();
  };
  std::size_t d = idx.size();
  Mat m = structure_constants(d, [&](std::size_t x, std::size_t y) {
    Vec v(d);
    if (idx[x].second == idx[y].first) v[pos(idx[x].first, idx[y].second)] = Scalar(1);
    return v;
  });
  Vec u(d);
  for (std::size_t i = 0; i < n; ++i) u[pos(i, i)] = Scalar(1);
  return make_algebra(m, u, f);
}

FDAlgebra truncated_polynomial(std::size_t n, Field f) {
  Mat m = structure_constants(n, [&](std::size_t i, std::size_t j) {
    Vec v(n);
    if (i + j < n) v[i + j] = Scalar(1);
    return v;
  });
  std::optional<Vec> u;
  if (n > 0) u = unit_vec(n, 0);
  return make_algebra(m, u, f);
}

FDAlgebra matrix_algebra_over(const FDAlgebra& a, std::size_t n) {
  std::size_t da = a.dim(), d = n * n * da;
  Mat m = structure_constants(d, [&](std::size_t x, std::size_t y) {
    Vec v(d);
    std::size_t ij = x / da, p = x % da, kl = y / da, q = y % da;
    std::size_t i = ij / n, j = ij % n, k = kl / n, l = kl % n;
    if (j != k) return v;
    for (const auto& t : a.basis_product(p, q)) v[(i * n + l) * da + t.index] = t.coeff;
    return v;
  });
  std::optional<Vec> u;
  if (a.unit()) {
    u = Vec(d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t p = 0; p < da; ++p) (*u)[(i * n + i) * da + p] = (*a.unit())[p];
  }
  return make_algebra(m, u, a.field());
}

FDAlgebra tensor_algebra(const FDAlgebra& a, const FDAlgebra& b) {
  if (a.field() != b.field()) fail(ErrorKind::FieldMismatch, "tensor of algebras over different fields");
  std::size_t da = a.dim(), db = b.dim(), d = da * db;
  Mat m = structure_constants(d, [&](std::size_t x, std::size_t y) {
    Vec v(d);
    for (const auto& s : a.basis_product(x / db, y / db))
      for (const auto& t : b.basis_product(x % db, y % db))
        v[s.index * db + t.index] = s.coeff * t.coeff;
    return v;
  });
  std::optional<Vec> u;
  if (a.unit() && b.unit()) u = kron(*a.unit(), *b.unit());
  return make_algebra(m, u, a.field());
}

FDAlgebra direct_product(const FDAlgebra& a, const FDAlgebra& b) {
  if (a.field() != b.field()) fail(ErrorKind::FieldMismatch, "product of algebras over different fields");
  std::size_t da = a.dim(), db = b.dim(), d = da + db;
  Mat m = structure_constants(d, [&](std::size_t x, std::size_t y) {
    Vec v(d);
    if (x < da && y < da)
      for (const auto& t : a.basis_product(x, y)) v[t.index] = t.coeff;
    if (x >= da && y >= da)
      for (const auto& t : b.basis_product(x - da, y - da)) v[da + t.index] = t.coeff;
    return v;
  });
  std::optional<Vec> u;
  if (a.unit() && b.unit()) {
    u = *a.unit();
    u->insert(u->end(), b.unit()->begin(), b.unit()->end());
  }
  return make_algebra(m, u, a.field());
}

FDAlgebra opposite_algebra(const FDAlgebra& a) {
  std::size_t n = a.dim();
  Mat m = structure_constants(n, [&](std::size_t i, std::size_t j) {
    Vec v(n);
    for (const auto& t : a.basis_product(j, i)) v[t.index] = t.coeff;
    return v;
  });
  return make_algebra(m, a.unit(), a.field());
}

Report verify_morphism(const AlgebraMorphism& m) {
  Report r("algebra morphism");
  const auto& s = m.source;
  const auto& t = m.target;
  if (m.map.rows() != t.dim() || m.map.cols() != s.dim()) {
    r.fail("shape", "map is " + std::to_string(m.map.rows()) + "x" + std::to_string(m.map.cols()));
    return r;
  }
  std::string witness;
  for (std::size_t i = 0; i < s.dim() && witness.empty(); ++i)
    for (std::size_t j = 0; j < s.dim() && witness.empty(); ++j) {
      Vec lhs = m.map * s.product(s.basis(i), s.basis(j));
      Vec rhs = t.product(m.map.col(i), m.map.col(j));
      if (!(lhs == rhs)) witness = "(b" + std::to_string(i) + ",b" + std::to_string(j) + ")";
    }
  r.add("multiplicative", witness.empty(), witness);
  if (m.unital) {
    bool ok = s.unit() && t.unit() && m.map * *s.unit() == *t.unit();
    r.add("unital", ok, "map(1) != 1");
  }
  return r;
}

AlgebraMorphism identity_morphism(const FDAlgebra& a) {
  return {a, a, Mat::identity(a.dim()), a.is_unital()};
}

Subalgebra make_subalgebra(const FDAlgebra& a, const Subspace& u) {
  if (u.ambient_dim() != a.dim()) fail(ErrorKind::DimMismatch, "subspace ambient");
  std::size_t k = u.dim();
  std::vector<Vec> basis = u.basis_vectors();
  Mat m(k, k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Vec p = a.product(basis[i], basis[j]);
      auto c = u.coordinates(p);
      if (!c) fail(ErrorKind::InvalidArgument, "subspace not closed under multiplication");
      m.set_col(i * k + j, *c);
    }
  FDAlgebra sub = make_algebra_unchecked(m, std::nullopt, a.field());
  auto unit = find_unit(sub);
  Subalgebra s{a.verified() ? make_algebra(m, unit, a.field()) : make_algebra_unchecked(m, unit, a.field()),
               u, u.basis_cols()};
  return s;
}

QuotientAlgebra make_quotient_algebra(const FDAlgebra& a, const Subspace& ideal) {
  if (!is_ideal(a, ideal)) fail(ErrorKind::InvalidArgument, "quotient by a non-ideal");
  QuotientSpace q(ideal);
  std::size_t k = q.dim();
  Mat m(k, k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      m.set_col(i * k + j, q.project(a.product(q.lift(unit_vec(k, i)), q.lift(unit_vec(k, j)))));
  std::optional<Vec> u;
  if (a.unit()) u = q.project(*a.unit());
  return {make_algebra(m, u, a.field()), q};
}

Subspace right_annihilator(const FDAlgebra& a) {
  std::vector<Mat> blocks;
  for (std::size_t i = 0; i < a.dim(); ++i) blocks.push_back(a.left_basis_mult(i));
  return kernel(vstack(blocks, a.dim()));
}

Subspace left_annihilator(const FDAlgebra& a) {
  std::vector<Mat> blocks;
  for (std::size_t j = 0; j < a.dim(); ++j) blocks.push_back(a.right_basis_mult(j));
  return kernel(vstack(blocks, a.dim()));
}

Subspace product_subspace(const FDAlgebra& a, const Subspace& i, const Subspace& j) {
  std::vector<Vec> v;
  auto bi = i.basis_vectors(), bj = j.basis_vectors();
  for (const auto& x : bi)
    for (const auto& y : bj) v.push_back(a.product(x, y));
  return Subspace::span(a.dim(), v);
}

Subspace square(const FDAlgebra& a) { return Subspace::column_space(a.mult()); }

bool is_idempotent_algebra(const FDAlgebra& a) { return square(a).is_whole(); }

bool is_ideal(const FDAlgebra& a, const Subspace& u) {
  for (const auto& v : u.basis_vectors())
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!u.contains(a.left_basis_mult(i) * v) || !u.contains(a.right_basis_mult(i) * v)) return false;
  return true;
}

bool is_left_ideal(const FDAlgebra& a, const Subspace& u) {
  for (const auto& v : u.basis_vectors())
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!u.contains(a.left_basis_mult(i) * v)) return false;
  return true;
}

bool is_idempotent(const FDAlgebra& a, const Vec& e) { return a.product(e, e) == e; }

bool is_central(const FDAlgebra& a, const Vec& x) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!(a.left_basis_mult(i) * x == a.right_basis_mult(i) * x)) return false;
  return true;
}

bool unit_leq(const FDAlgebra& a, const Vec& e, const Vec& f) {
  return a.product(e, f) == e && a.product(f, e) == e;
}

Subspace center(const FDAlgebra& a) {
  std::vector<Mat> blocks;
  for (std::size_t i = 0; i < a.dim(); ++i) blocks.push_back(a.left_basis_mult(i) - a.right_basis_mult(i));
  return kernel(vstack(blocks, a.dim()));
}

Subspace corner(const FDAlgebra& a, const Vec& e, const Vec& f) {
  std::vector<Vec> v;
  for (std::size_t i = 0; i < a.dim(); ++i) v.push_back(a.product(a.product(e, a.basis(i)), f));
  return Subspace::span(a.dim(), v);
}

Report verify_local_units(const FDAlgebra& a, const LocalUnitSystem& s) {
  Report r("local units");
  std::string w;
  for (std::size_t k = 0; k < s.units.size() && w.empty(); ++k) {
    if (s.units[k].size() != a.dim()) fail(ErrorKind::DimMismatch, "local unit length");
    if (!is_idempotent(a, s.units[k])) w = "e" + std::to_string(k) + " not idempotent";
  }
  r.add("idempotent", w.empty(), w);
  w.clear();
  for (std::size_t i = 0; i < a.dim() && w.empty(); ++i) {
    Vec b = a.basis(i);
    bool found = false;
    for (const auto& e : s.units)
      if (a.product(e, b) == b && a.product(b, e) == b) {
        found = true;
        break;
      }
    if (!found) w = "b" + std::to_string(i) + " not dominated";
  }
  r.add("domination", w.empty(), w);
  w.clear();
  for (std::size_t k = 0; k < s.units.size() && w.empty(); ++k)
    for (std::size_t l = k + 1; l < s.units.size() && w.empty(); ++l) {
      bool found = false;
      for (const auto& g : s.units)
        if (unit_leq(a, s.units[k], g) && unit_leq(a, s.units[l], g)) {
          found = true;
          break;
        }
      if (!found) w = "no upper bound for (e" + std::to_string(k) + ",e" + std::to_string(l) + ")";
    }
  r.add("directed", w.empty(), w);
  return r;
}

LeftModule regular_module(const FDAlgebra& a) { return {a.dim(), a.mult()}; }

Mat module_operator(const FDAlgebra& a, const LeftModule& m, const Vec& x) {
  Mat op(m.dim, m.dim);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t p = 0; p < m.dim; ++p)
      for (std::size_t q = 0; q < m.dim; ++q) op(q, p).add_product(x[i], m.action(q, i * m.dim + p));
  }
  return op;
}

Report verify_left_module(const FDAlgebra& a, const LeftModule& m) {
  Report r("left module");
  if (m.action.rows() != m.dim || m.action.cols() != a.dim() * m.dim) {
    r.fail("shape", "action tensor has wrong shape");
    return r;
  }
  std::vector<Mat> ops;
  for (std::size_t i = 0; i < a.dim(); ++i) ops.push_back(module_operator(a, m, a.basis(i)));
  std::string w;
  for (std::size_t i = 0; i < a.dim() && w.empty(); ++i)
    for (std::size_t j = 0; j < a.dim() && w.empty(); ++j) {
      Mat lhs(m.dim, m.dim);
      for (const auto& t : a.basis_product(i, j)) lhs.add_scaled(t.coeff, ops[t.index]);
      if (!(lhs == ops[i] * ops[j])) w = "(b" + std::to_string(i) + ",b" + std::to_string(j) + ")";
    }
  r.add("associative", w.empty(), w);
  return r;
}

bool is_unital_module(const FDAlgebra&, const LeftModule& m) {
  return Subspace::column_space(m.action).dim() == m.dim;
}

Subspace torsion_submodule(const FDAlgebra& a, const LeftModule& m) {
  Report r = verify_left_module(a, m);
  if (!r.ok()) fail(ErrorKind::InvalidModule, r.first_failure());
  std::vector<Mat> blocks;
  for (std::size_t i = 0; i < a.dim(); ++i) blocks.push_back(module_operator(a, m, a.basis(i)));
  return kernel(vstack(blocks, m.dim));
}

}  // namespace pha
