#include "pha/linalg.hpp"

#include <sstream>

#include "pha/errors.hpp"

namespace pha {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

static void check_len(std::size_t a, std::size_t b) {
  if (a != b) fail(ErrorKind::DimMismatch, std::to_string(a) + " vs " + std::to_string(b));
}

Vec operator+(const Vec& a, const Vec& b) {
  check_len(a.size(), b.size());
  Vec r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  check_len(a.size(), b.size());
  Vec r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  check_len(y.size(), x.size());
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i].add_product(a, x[i]);
}

Vec kron(const Vec& a, const Vec& b) {
  Vec r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

Vec bind_field(const Vec& v, Field f) {
  Vec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.in(f));
  return r;
}

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows[0].size();
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols, std::size_t rows) {
  if (!cols.empty()) rows = cols[0].size();
  Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Vec Mat::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Mat::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Mat::set_row(std::size_t i, const Vec& v) {
  check_len(v.size(), cols_);
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Mat::set_col(std::size_t j, const Vec& v) {
  check_len(v.size(), rows_);
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

std::vector<Vec> Mat::row_list() const {
  std::vector<Vec> r;
  for (std::size_t i = 0; i < rows_; ++i) r.push_back(row(i));
  return r;
}

std::vector<Vec> Mat::col_list() const {
  std::vector<Vec> r;
  for (std::size_t j = 0; j < cols_; ++j) r.push_back(col(j));
  return r;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::select_cols(const std::vector<std::size_t>& idx) const {
  Mat m(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
  return m;
}

Mat Mat::select_rows(const std::vector<std::size_t>& idx) const {
  Mat m(idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(idx[k], j);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::bound(Field f) const {
  Mat m = *this;
  for (auto& x : m.data_) x = x.in(f);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_)
    fail(ErrorKind::DimMismatch, "product " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                     " * " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  Mat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) r(i, j).add_product(a, b);
      }
    }
  return r;
}

Vec Mat::operator*(const Vec& v) const {
  check_len(v.size(), cols_);
  Vec r(rows_);
  for (std::size_t k = 0; k < cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, k);
      if (!a.is_zero()) r[i].add_product(a, v[k]);
    }
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r = *this;
  r += o;
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r = *this;
  r.add_scaled(Scalar(-1), o);
  return r;
}

Mat& Mat::operator+=(const Mat& o) {
  add_scaled(Scalar(1), o);
  return *this;
}

void Mat::add_scaled(const Scalar& a, const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::DimMismatch, "matrix sum shapes");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i].add_product(a, o.data_[i]);
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Mat operator*(const Scalar& s, const Mat& m) {
  Mat r(m.rows(), m.cols());
  r.add_scaled(s, m);
  return r;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) fail(ErrorKind::DimMismatch, "hstack rows");
  Mat m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) fail(ErrorKind::DimMismatch, "vstack cols");
  Mat m(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

Mat vstack(const std::vector<Mat>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) fail(ErrorKind::DimMismatch, "vstack cols");
    rows += b.rows();
  }
  Mat m(rows, cols);
  std::size_t r = 0;
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.rows(); ++i, ++r)
      for (std::size_t j = 0; j < cols; ++j) m(r, j) = b(i, j);
  return m;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

std::string to_string(const Mat& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) os << (i ? "," : "") << to_string(m.row(i));
  os << "]";
  return os.str();
}

Field common_field(const Mat& m) {
  std::optional<Field> f;
  for (const auto& x : m.data()) {
    if (!x.bound()) continue;
    if (!f) {
      f = x.field();
    } else if (*f != x.field()) {
      fail(ErrorKind::FieldMismatch, f->name() + " vs " + x.field().name());
    }
  }
  return f.value_or(Field());
}

RrefResult rref(const Mat& m) {
  common_field(m);
  RrefResult res;
  Mat r = m;
  std::size_t row = 0;
  for (std::size_t c = 0; c < r.cols() && row < r.rows(); ++c) {
    std::size_t p = row;
    while (p < r.rows() && r(p, c).is_zero()) ++p;
    if (p == r.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(p, j), r(row, j));
    Scalar inv = Scalar(1) / r(row, c);
    for (std::size_t j = c; j < r.cols(); ++j)
      if (!r(row, j).is_zero()) r(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, c).is_zero()) continue;
      Scalar f = -r(i, c);
      for (std::size_t j = c; j < r.cols(); ++j)
        if (!r(row, j).is_zero()) r(i, j).add_product(f, r(row, j));
    }
    res.pivots.push_back(c);
    ++row;
  }
  res.rank = row;
  res.reduced = std::move(r);
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::DimMismatch, "inverse of non-square matrix");
  return solve_linear(m, Mat::identity(m.rows()));
}

std::optional<Mat> solve_linear(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) fail(ErrorKind::DimMismatch, "solve_linear shapes");
  RrefResult r = rref(hstack(a, b));
  Mat x(a.cols(), b.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    std::size_t p = r.pivots[i];
    if (p >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(p, j) = r.reduced(i, a.cols() + j);
  }
  return x;
}

std::optional<Vec> solve_linear(const Mat& a, const Vec& b) {
  auto x = solve_linear(a, Mat::from_cols({b}, a.rows()));
  if (!x) return std::nullopt;
  return x->col(0);
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors) check_len(v.size(), ambient);
  return row_space(Mat::from_rows(vectors, ambient));
}

Subspace Subspace::row_space(const Mat& rows) {
  RrefResult r = rref(rows);
  Subspace s(rows.cols());
  std::vector<std::size_t> keep(r.rank);
  for (std::size_t i = 0; i < r.rank; ++i) keep[i] = i;
  s.basis_ = r.reduced.select_rows(keep);
  s.pivots_ = r.pivots;
  return s;
}

Subspace Subspace::column_space(const Mat& m) { return row_space(m.transpose()); }

Subspace Subspace::whole(std::size_t n) { return row_space(Mat::identity(n)); }

Vec Subspace::reduce(const Vec& v) const {
  check_len(v.size(), ambient_);
  Vec r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    if (r[pivots_[i]].is_zero()) continue;
    Scalar f = -r[pivots_[i]];
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!basis_(i, j).is_zero()) r[j].add_product(f, basis_(i, j));
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return pha::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(ErrorKind::DimMismatch, "ambient dimensions differ");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vec Subspace::coordinates_or_throw(const Vec& v) const {
  auto c = coordinates(v);
  if (!c) fail(ErrorKind::InternalInvariant, "vector outside subspace: " + to_string(v));
  return *c;
}

Vec Subspace::from_coordinates(const Vec& c) const {
  check_len(c.size(), dim());
  Vec v(ambient_);
  for (std::size_t i = 0; i < dim(); ++i)
    if (!c[i].is_zero())
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!basis_(i, j).is_zero()) v[j].add_product(c[i], basis_(i, j));
  return v;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) fail(ErrorKind::DimMismatch, "intersect ambient");
  std::size_t n = u.ambient_dim();
  if (u.is_zero() || v.is_zero()) return Subspace(n);
  Mat stacked = hstack(u.basis_cols(), Scalar(-1) * v.basis_cols());
  Subspace k = kernel(stacked);
  std::vector<Vec> out;
  Mat ub = u.basis_cols();
  for (std::size_t i = 0; i < k.dim(); ++i) {
    Vec coeff = k.basis_vector(i);
    coeff.resize(u.dim());
    out.push_back(ub * coeff);
  }
  return Subspace::span(n, out);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) fail(ErrorKind::DimMismatch, "sum ambient");
  return Subspace::row_space(vstack(u.basis(), v.basis()));
}

Subspace kernel(const Mat& a) {
  RrefResult r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec x(a.cols());
    x[f] = Scalar(1);
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = -r.reduced(i, f);
    basis.push_back(std::move(x));
  }
  return Subspace::span(a.cols(), basis);
}

Subspace image(const Mat& a) { return Subspace::column_space(a); }

Mat quotient_basis(const Subspace& whole, const Subspace& sub) {
  if (whole.ambient_dim() != sub.ambient_dim()) fail(ErrorKind::DimMismatch, "quotient ambient");
  Subspace acc = sub;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < whole.dim(); ++i) {
    Vec v = whole.basis_vector(i);
    if (acc.contains(v)) continue;
    rows.push_back(v);
    acc = sum(acc, Subspace::span(whole.ambient_dim(), {v}));
  }
  return Mat::from_rows(rows, whole.ambient_dim());
}

QuotientSpace::QuotientSpace(Subspace k) : kernel_(std::move(k)) {
  std::vector<bool> pivot(kernel_.ambient_dim(), false);
  for (auto p : kernel_.pivots()) pivot[p] = true;
  for (std::size_t j = 0; j < kernel_.ambient_dim(); ++j)
    if (!pivot[j]) free_.push_back(j);
}

Vec QuotientSpace::project(const Vec& v) const {
  Vec r = kernel_.reduce(v);
  Vec q(free_.size());
  for (std::size_t i = 0; i < free_.size(); ++i) q[i] = r[free_[i]];
  return q;
}

Vec QuotientSpace::lift(const Vec& q) const {
  check_len(q.size(), free_.size());
  Vec v(ambient_dim());
  for (std::size_t i = 0; i < free_.size(); ++i) v[free_[i]] = q[i];
  return v;
}

Mat QuotientSpace::projection_matrix() const {
  Mat m(dim(), ambient_dim());
  for (std::size_t j = 0; j < ambient_dim(); ++j) m.set_col(j, project(unit_vec(ambient_dim(), j)));
  return m;
}

Mat QuotientSpace::lift_matrix() const {
  Mat m(ambient_dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) m(free_[i], i) = Scalar(1);
  return m;
}

}  // namespace pha
