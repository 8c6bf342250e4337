#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pha/algebra.hpp"

namespace pha {

class FiniteGroup {
 public:
  FiniteGroup();
  // Verifies the table (InvalidGroup).
  static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table,
                                std::vector<std::string> labels = {});
  static FiniteGroup cyclic(std::size_t n);
  // Z_{n1} x ... x Z_{nk}, element index in mixed radix with the last factor fastest.
  static FiniteGroup product_of_cyclic(const std::vector<std::size_t>& orders);
  static FiniteGroup trivial() { return cyclic(1); }

  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t identity() const { return identity_; }
  bool is_abelian() const { return abelian_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> labels_;
  std::size_t identity_ = 0;
  bool abelian_ = true;
};

enum class HopfOrigin { Generic, GroupAlgebra, DualGroupAlgebra };

struct CoproductTerm {
  std::size_t left;
  std::size_t right;
  Scalar coeff;
};

struct HopfData {
  FDAlgebra alg;
  Mat comult;   // dim^2 x dim, column j = Delta(b_j) at index a*dim+b
  Mat counit;   // 1 x dim
  Mat antipode; // dim x dim
};

Report verify_hopf(const HopfData& h);

class HopfAlgebra {
 public:
  HopfAlgebra();

  std::size_t dim() const { return d_->data.alg.dim(); }
  Field field() const { return d_->data.alg.field(); }
  const FDAlgebra& alg() const { return d_->data.alg; }
  const Mat& comult() const { return d_->data.comult; }
  const Mat& counit() const { return d_->data.counit; }
  const Mat& antipode() const { return d_->data.antipode; }
  const std::optional<Mat>& antipode_inverse() const { return d_->antipode_inverse; }
  bool antipode_bijective() const { return d_->antipode_inverse.has_value(); }
  bool cocommutative() const { return d_->cocommutative; }
  HopfOrigin origin() const { return d_->origin; }
  const std::optional<FiniteGroup>& group() const { return d_->group; }
  const HopfData& data() const { return d_->data; }

  const Vec& one() const { return *d_->data.alg.unit(); }
  Vec basis(std::size_t i) const { return unit_vec(dim(), i); }
  Vec mul(const Vec& x, const Vec& y) const { return alg().product(x, y); }
  // b_i b_j
  const Vec& basis_mul(std::size_t i, std::size_t j) const { return d_->products[i * dim() + j]; }
  const std::vector<CoproductTerm>& coproduct_terms(std::size_t i) const { return d_->terms[i]; }
  Vec apply_delta(const Vec& h) const { return comult() * h; }
  Scalar apply_counit(const Vec& h) const { return (counit() * h)[0]; }
  Vec apply_antipode(const Vec& h) const { return antipode() * h; }
  Vec apply_antipode_inverse(const Vec& h) const;

  bool operator==(const HopfAlgebra& o) const;

  friend HopfAlgebra make_hopf(const HopfData& data, HopfOrigin origin, std::optional<FiniteGroup> group);

 private:
  struct Data {
    HopfData data;
    std::optional<Mat> antipode_inverse;
    bool cocommutative = false;
    HopfOrigin origin = HopfOrigin::Generic;
    std::optional<FiniteGroup> group;
    std::vector<std::vector<CoproductTerm>> terms;
    std::vector<Vec> products;
  };
  explicit HopfAlgebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

// Verifies all axioms (HopfAxiomViolation) and computes S^-1 when S is invertible.
HopfAlgebra make_hopf(const HopfData& data, HopfOrigin origin = HopfOrigin::Generic,
                      std::optional<FiniteGroup> group = std::nullopt);

HopfAlgebra group_algebra(const FiniteGroup& g, Field f = Field());
HopfAlgebra dual_group_algebra(const FiniteGroup& g, Field f = Field());

// Delta iterated k times: dim^(k+1) x dim.
Mat sweedler_power(const HopfAlgebra& h, std::size_t k);

}  // namespace pha
