#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pha/scalar.hpp"

namespace pha {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a*x
Vec kron(const Vec& a, const Vec& b);
Vec bind_field(const Vec& v, Field f);
std::string to_string(const Vec& v);

// Dense row-major matrix. Linear maps act on column vectors: a map V -> W is a
// dim W x dim V matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols = 0);
  static Mat from_cols(const std::vector<Vec>& cols, std::size_t rows = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Scalar>& data() const { return data_; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_col(std::size_t j, const Vec& v);
  std::vector<Vec> row_list() const;
  std::vector<Vec> col_list() const;

  Mat transpose() const;
  Mat select_cols(const std::vector<std::size_t>& idx) const;
  Mat select_rows(const std::vector<std::size_t>& idx) const;
  bool is_zero() const;
  Mat bound(Field f) const;

  Mat operator*(const Mat& o) const;
  Vec operator*(const Vec& v) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat& operator+=(const Mat& o);
  void add_scaled(const Scalar& a, const Mat& o);  // this += a*o
  bool operator==(const Mat& o) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Mat operator*(const Scalar& s, const Mat& m);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat vstack(const std::vector<Mat>& blocks, std::size_t cols);
Mat kron(const Mat& a, const Mat& b);
std::string to_string(const Mat& m);

// Throws FieldMismatch if entries are bound to different fields.
Field common_field(const Mat& m);

struct RrefResult {
  Mat reduced;  // same shape, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
std::optional<Mat> inverse(const Mat& m);

// One exact solution X of A X = B, or nullopt when inconsistent.
std::optional<Mat> solve_linear(const Mat& a, const Mat& b);
std::optional<Vec> solve_linear(const Mat& a, const Vec& b);

class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace row_space(const Mat& rows);
  static Subspace column_space(const Mat& m);
  static Subspace whole(std::size_t n);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vec> basis_vectors() const { return basis_.row_list(); }
  Mat basis_cols() const { return basis_.transpose(); }  // ambient x dim
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates in the RREF basis; nullopt when v is not in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;
  Vec coordinates_or_throw(const Vec& v) const;
  Vec from_coordinates(const Vec& c) const;
  // v minus its component along the basis, pivot entries zeroed
  Vec reduce(const Vec& v) const;
  bool is_whole() const { return dim() == ambient_; }
  bool is_zero() const { return dim() == 0; }

  bool operator==(const Subspace& o) const;

 private:
  std::size_t ambient_;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
// Right kernel {x : A x = 0}.
Subspace kernel(const Mat& a);
Subspace image(const Mat& a);
// Rows completing a basis of `sub` to a basis of `whole`, taken from whole's basis.
Mat quotient_basis(const Subspace& whole, const Subspace& sub);

// V / K with canonical coordinates read off the non-pivot columns of K.
class QuotientSpace {
 public:
  explicit QuotientSpace(Subspace kernel);
  std::size_t dim() const { return free_.size(); }
  std::size_t ambient_dim() const { return kernel_.ambient_dim(); }
  const Subspace& kernel() const { return kernel_; }
  const std::vector<std::size_t>& free_columns() const { return free_; }
  Vec project(const Vec& v) const;
  Vec lift(const Vec& q) const;
  Mat projection_matrix() const;  // dim x ambient
  Mat lift_matrix() const;        // ambient x dim

 private:
  Subspace kernel_;
  std::vector<std::size_t> free_;
};

}  // namespace pha
