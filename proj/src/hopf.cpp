#include "pha/hopf.hpp"

#include "pha/errors.hpp"

namespace pha {

FiniteGroup::FiniteGroup() : table_{{0}}, inverse_{0}, labels_{"0"} {}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table,
                                    std::vector<std::string> labels) {
  std::size_t n = table.size();
  if (n == 0) fail(ErrorKind::InvalidGroup, "empty table");
  for (const auto& row : table) {
    if (row.size() != n) fail(ErrorKind::InvalidGroup, "table is not square");
    for (auto x : row)
      if (x >= n) fail(ErrorKind::InvalidGroup, "entry out of range");
  }
  std::optional<std::size_t> e;
  for (std::size_t a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
    if (ok) e = a;
  }
  if (!e) fail(ErrorKind::InvalidGroup, "no identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          fail(ErrorKind::InvalidGroup, "not associative at (" + std::to_string(a) + "," +
                                            std::to_string(b) + "," + std::to_string(c) + ")");
  FiniteGroup g;
  g.table_ = std::move(table);
  g.identity_ = *e;
  g.inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (g.table_[a][b] == *e && g.table_[b][a] == *e) g.inverse_[a] = b;
    if (g.inverse_[a] == n) fail(ErrorKind::InvalidGroup, "element " + std::to_string(a) + " has no inverse");
  }
  g.abelian_ = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.table_[a][b] != g.table_[b][a]) g.abelian_ = false;
  if (labels.empty())
    for (std::size_t a = 0; a < n; ++a) labels.push_back("g" + std::to_string(a));
  if (labels.size() != n) fail(ErrorKind::InvalidGroup, "label count");
  g.labels_ = std::move(labels);
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) { return product_of_cyclic({n}); }

FiniteGroup FiniteGroup::product_of_cyclic(const std::vector<std::size_t>& orders) {
  std::size_t n = 1;
  for (auto o : orders) {
    if (o == 0) fail(ErrorKind::InvalidGroup, "cyclic factor of order 0");
    n *= o;
  }
  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> d(orders.size());
    for (std::size_t k = orders.size(); k-- > 0;) {
      d[k] = x % orders[k];
      x /= orders[k];
    }
    return d;
  };
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    auto da = digits(a);
    std::string l;
    for (std::size_t k = 0; k < da.size(); ++k) l += (k ? "," : "") + std::to_string(da[k]);
    labels.push_back(da.size() == 1 ? l : "(" + l + ")");
    for (std::size_t b = 0; b < n; ++b) {
      auto db = digits(b);
      std::size_t c = 0;
      for (std::size_t k = 0; k < orders.size(); ++k) c = c * orders[k] + (da[k] + db[k]) % orders[k];
      table[a][b] = c;
    }
  }
  return from_table(std::move(table), std::move(labels));
}

namespace {

std::string basis_name(std::size_t i) { return "b" + std::to_string(i); }

std::optional<std::size_t> first_bad_column(const Mat& a, const Mat& b) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!(a.col(j) == b.col(j))) return j;
  return std::nullopt;
}

Mat flip(std::size_t d) {
  Mat p(d * d, d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) p(b * d + a, a * d + b) = Scalar(1);
  return p;
}

}  // namespace

Report verify_hopf(const HopfData& h) {
  Report r("hopf axioms");
  const FDAlgebra& a = h.alg;
  std::size_t d = a.dim();
  if (h.comult.rows() != d * d || h.comult.cols() != d || h.counit.rows() != 1 || h.counit.cols() != d ||
      h.antipode.rows() != d || h.antipode.cols() != d) {
    r.fail("shape", "comult/counit/antipode shapes do not match dim " + std::to_string(d));
    return r;
  }
  r.add("unital", a.is_unital(), "algebra has no unit");
  if (!a.is_unital()) return r;
  Mat id = Mat::identity(d);
  const Mat& delta = h.comult;
  auto w = first_bad_column(kron(delta, id) * delta, kron(id, delta) * delta);
  r.add("coassociative", !w, w ? basis_name(*w) : "");
  w = first_bad_column(kron(h.counit, id) * delta, id);
  if (!w) w = first_bad_column(kron(id, h.counit) * delta, id);
  r.add("counit", !w, w ? basis_name(*w) : "");

  FDAlgebra aa = make_algebra_unchecked(tensor_algebra(a, a).mult(), std::nullopt, a.field());
  std::string wd, we;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec p = a.product(a.basis(i), a.basis(j));
      if (wd.empty() && !(delta * p == aa.product(delta.col(i), delta.col(j))))
        wd = "(" + basis_name(i) + "," + basis_name(j) + ")";
      if (we.empty() && !((h.counit * p)[0] == h.counit(0, i) * h.counit(0, j)))
        we = "(" + basis_name(i) + "," + basis_name(j) + ")";
    }
  const Vec& u = *a.unit();
  if (wd.empty() && !(delta * u == kron(u, u))) wd = "Delta(1) != 1(x)1";
  if (we.empty() && !((h.counit * u)[0] == Scalar(1))) we = "eps(1) != 1";
  r.add("comult_algebra_map", wd.empty(), wd);
  r.add("counit_algebra_map", we.empty(), we);

  Mat eta_eps(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) eta_eps(i, j) = u[i] * h.counit(0, j);
  w = first_bad_column(a.mult() * kron(h.antipode, id) * delta, eta_eps);
  if (!w) w = first_bad_column(a.mult() * kron(id, h.antipode) * delta, eta_eps);
  r.add("antipode", !w, w ? basis_name(*w) : "");
  return r;
}

HopfAlgebra::HopfAlgebra() {
  static const HopfAlgebra trivial = group_algebra(FiniteGroup::trivial());
  d_ = trivial.d_;
}

HopfAlgebra make_hopf(const HopfData& data, HopfOrigin origin, std::optional<FiniteGroup> group) {
  Report r = verify_hopf(data);
  if (!r.ok()) fail(ErrorKind::HopfAxiomViolation, r.first_failure());
  auto d = std::make_shared<HopfAlgebra::Data>();
  Field f = data.alg.field();
  d->data = {data.alg, data.comult.bound(f), data.counit.bound(f), data.antipode.bound(f)};
  d->antipode_inverse = inverse(d->data.antipode);
  std::size_t n = data.alg.dim();
  d->cocommutative = flip(n) * d->data.comult == d->data.comult;
  d->origin = origin;
  d->group = std::move(group);
  d->terms.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t ab = 0; ab < n * n; ++ab)
      if (!d->data.comult(ab, j).is_zero()) d->terms[j].push_back({ab / n, ab % n, d->data.comult(ab, j)});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d->products.push_back(data.alg.product(unit_vec(n, i), unit_vec(n, j)));
  return HopfAlgebra(std::move(d));
}

Vec HopfAlgebra::apply_antipode_inverse(const Vec& h) const {
  if (!d_->antipode_inverse) fail(ErrorKind::NoAntipodeInverse, "antipode is not bijective");
  return *d_->antipode_inverse * h;
}

bool HopfAlgebra::operator==(const HopfAlgebra& o) const {
  return alg() == o.alg() && comult() == o.comult() && counit() == o.counit() && antipode() == o.antipode();
}

HopfAlgebra group_algebra(const FiniteGroup& g, Field f) {
  std::size_t n = g.order();
  Mat m = structure_constants(n, [&](std::size_t a, std::size_t b) { return unit_vec(n, g.mul(a, b)); });
  FDAlgebra alg = make_algebra(m, unit_vec(n, g.identity()), f);
  HopfData data{alg, Mat(n * n, n), Mat(1, n), Mat(n, n)};
  for (std::size_t a = 0; a < n; ++a) {
    data.comult(a * n + a, a) = Scalar(1);
    data.counit(0, a) = Scalar(1);
    data.antipode(g.inv(a), a) = Scalar(1);
  }
  return make_hopf(data, HopfOrigin::GroupAlgebra, g);
}

HopfAlgebra dual_group_algebra(const FiniteGroup& g, Field f) {
  std::size_t n = g.order();
  Mat m = structure_constants(n, [&](std::size_t a, std::size_t b) {
    Vec v(n);
    if (a == b) v[a] = Scalar(1);
    return v;
  });
  FDAlgebra alg = make_algebra(m, Vec(n, Scalar(1)), f);
  HopfData data{alg, Mat(n * n, n), Mat(1, n), Mat(n, n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) data.comult(x * n + y, g.mul(x, y)) = Scalar(1);
  data.counit(0, g.identity()) = Scalar(1);
  for (std::size_t a = 0; a < n; ++a) data.antipode(g.inv(a), a) = Scalar(1);
  return make_hopf(data, HopfOrigin::DualGroupAlgebra, g);
}

Mat sweedler_power(const HopfAlgebra& h, std::size_t k) {
  std::size_t d = h.dim();
  Mat m = Mat::identity(d);
  std::size_t tail = 1;
  for (std::size_t step = 0; step < k; ++step) {
    m = kron(h.comult(), Mat::identity(tail)) * m;
    tail *= d;
  }
  return m;
}

}  // namespace pha
