#pragma once

#include <array>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "pha/linalg.hpp"
#include "pha/report.hpp"

namespace pha {

struct SparseTerm {
  std::size_t index;
  Scalar coeff;
};

// Associative, possibly nonunital algebra given by structure constants.
// mult() is dim x dim^2 with column i*dim+j holding b_i b_j.
class FDAlgebra {
 public:
  FDAlgebra();

  std::size_t dim() const { return d_->dim; }
  Field field() const { return d_->field; }
  const Mat& mult() const { return d_->mult; }
  const std::optional<Vec>& unit() const { return d_->unit; }
  bool is_unital() const { return d_->unit.has_value(); }
  bool verified() const { return d_->verified; }

  // nonzero entries of b_i b_j
  const std::vector<SparseTerm>& basis_product(std::size_t i, std::size_t j) const {
    return d_->sparse[i * d_->dim + j];
  }
  Vec basis(std::size_t i) const { return unit_vec(dim(), i); }
  Vec zero() const { return zero_vec(dim()); }
  Vec product(const Vec& x, const Vec& y) const;
  Mat left_mult(const Vec& x) const;   // L_x
  Mat right_mult(const Vec& y) const;  // R_y
  const Mat& left_basis_mult(std::size_t i) const { return d_->left[i]; }
  const Mat& right_basis_mult(std::size_t j) const { return d_->right[j]; }

  bool operator==(const FDAlgebra& o) const;

  friend FDAlgebra make_algebra(const Mat& mult, std::optional<Vec> unit, Field field);
  friend FDAlgebra make_algebra_unchecked(const Mat& mult, std::optional<Vec> unit, Field field);

 private:
  struct Data {
    std::size_t dim = 0;
    Field field;
    Mat mult;
    std::optional<Vec> unit;
    bool verified = false;
    std::vector<std::vector<SparseTerm>> sparse;
    std::vector<Mat> left, right;
  };
  static FDAlgebra build(const Mat& mult, std::optional<Vec> unit, Field field, bool verified);
  std::shared_ptr<const Data> d_;
};

// Verifies associativity (NotAssociative) and the unit when given (InvalidUnit).
FDAlgebra make_algebra(const Mat& mult, std::optional<Vec> unit = std::nullopt, Field field = Field());
FDAlgebra make_algebra_unchecked(const Mat& mult, std::optional<Vec> unit = std::nullopt,
                                 Field field = Field());
// Builds structure constants from a product on basis indices.
template <class F>
Mat structure_constants(std::size_t dim, F&& basis_product) {
  Mat m(dim, dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m.set_col(i * dim + j, basis_product(i, j));
  return m;
}

std::optional<std::array<std::size_t, 3>> associativity_witness(const FDAlgebra& a);
std::optional<Vec> find_unit(const FDAlgebra& a);

FDAlgebra base_field_algebra(Field f = Field());
FDAlgebra zero_algebra(std::size_t n, Field f = Field());
FDAlgebra matrix_algebra(std::size_t n, Field f = Field());   // basis E_ij at i*n+j
FDAlgebra product_of_fields(std::size_t n, Field f = Field());
FDAlgebra upper_triangular(std::size_t n, Field f = Field());
FDAlgebra truncated_polynomial(std::size_t n, Field f = Field());  // k[x]/(x^n)
// Basis (i, j, a) at (i*n + j)*dim A + a.
FDAlgebra matrix_algebra_over(const FDAlgebra& a, std::size_t n);
FDAlgebra tensor_algebra(const FDAlgebra& a, const FDAlgebra& b);
FDAlgebra direct_product(const FDAlgebra& a, const FDAlgebra& b);
FDAlgebra opposite_algebra(const FDAlgebra& a);

struct AlgebraMorphism {
  FDAlgebra source;
  FDAlgebra target;
  Mat map;  // target.dim x source.dim
  bool unital = false;

  Vec operator()(const Vec& x) const { return map * x; }
};

Report verify_morphism(const AlgebraMorphism& m);
AlgebraMorphism identity_morphism(const FDAlgebra& a);

struct Subalgebra {
  FDAlgebra alg;
  Subspace carrier;
  Mat inclusion;  // ambient x dim

  Vec to_ambient(const Vec& coords) const { return inclusion * coords; }
  Vec coords(const Vec& ambient) const { return carrier.coordinates_or_throw(ambient); }
};

// The subalgebra on U (InvalidArgument unless U is closed), in U's RREF basis.
// A unit is recorded when one exists.
Subalgebra make_subalgebra(const FDAlgebra& a, const Subspace& u);

struct QuotientAlgebra {
  FDAlgebra alg;
  QuotientSpace space;
};

// A / I for a two-sided ideal I.
QuotientAlgebra make_quotient_algebra(const FDAlgebra& a, const Subspace& ideal);

Subspace right_annihilator(const FDAlgebra& a);
Subspace left_annihilator(const FDAlgebra& a);
Subspace product_subspace(const FDAlgebra& a, const Subspace& i, const Subspace& j);
Subspace square(const FDAlgebra& a);  // span{b_i b_j}
bool is_idempotent_algebra(const FDAlgebra& a);
std::optional<Vec> has_left_identity(const FDAlgebra& a);
bool is_ideal(const FDAlgebra& a, const Subspace& u);
bool is_left_ideal(const FDAlgebra& a, const Subspace& u);
bool is_idempotent(const FDAlgebra& a, const Vec& e);
bool is_central(const FDAlgebra& a, const Vec& x);
bool unit_leq(const FDAlgebra& a, const Vec& e, const Vec& f);  // ef = fe = e
Subspace center(const FDAlgebra& a);
Subspace corner(const FDAlgebra& a, const Vec& e, const Vec& f);  // e A f

struct LocalUnitSystem {
  std::vector<Vec> units;
};

Report verify_local_units(const FDAlgebra& a, const LocalUnitSystem& s);

// Left module: action is dim M x (dim A * dim M), column a*dimM + m holding b_a . m_m.
struct LeftModule {
  std::size_t dim = 0;
  Mat action;
};

LeftModule regular_module(const FDAlgebra& a);
Report verify_left_module(const FDAlgebra& a, const LeftModule& m);
Mat module_operator(const FDAlgebra& a, const LeftModule& m, const Vec& x);  // x acting on M
bool is_unital_module(const FDAlgebra& a, const LeftModule& m);
Subspace torsion_submodule(const FDAlgebra& a, const LeftModule& m);

}  // namespace pha
