#pragma once

#include <optional>

#include "pha/partial_action.hpp"

namespace pha {

struct PartialGroupAction {
  FiniteGroup group;
  FDAlgebra alg;
  std::vector<Subspace> domains;  // D_g
  // alpha[g]: dim A x dim D_{g^-1}, acting on RREF coordinates of D_{g^-1}
  std::vector<Mat> alpha;
  std::optional<std::vector<Mat>> projections;  // p_g: A -> D_g, dim A x dim A

  // alpha_g(x) for x in D_{g^-1}; throws InvalidArgument otherwise
  Vec apply(std::size_t g, const Vec& x) const;
  // alpha_g as a dim A x dim A matrix, extended by zero on a complement of D_{g^-1}
  Mat ambient_alpha(std::size_t g) const;
};

// alpha_g given as ambient dim A x dim A matrices, only their values on D_{g^-1} are kept.
PartialGroupAction make_partial_group_action(const FiniteGroup& g, const FDAlgebra& a, std::vector<Subspace> domains,
                                             const std::vector<Mat>& ambient_alpha,
                                             std::optional<std::vector<Mat>> projections = std::nullopt);

// Global action by automorphisms.
PartialGroupAction global_group_action(const FiniteGroup& g, const FDAlgebra& a, const std::vector<Mat>& autos);

Report verify_partial_group_action(const PartialGroupAction& pga);
// Intersections of domains replaced by their products.
Report verify_product_partial_action(const PartialGroupAction& pga);
Report verify_alpha_projections(const PartialGroupAction& pga);

PartialAction to_kG_action(const PartialGroupAction& pga);
PartialGroupAction from_kG_action(const PartialAction& pa);

// psi_g = T_g T_{g^-1}
Mat psi_map(const PartialAction& pa, std::size_t g);
Report verify_psi_identities(const PartialAction& pa);

struct RegularityOptions {
  std::size_t max_group_order = 8;
};
bool is_regular(const PartialGroupAction& pga, RegularityOptions opts = {});
// first (sequence, reason) failing regularity, if any
std::optional<std::string> regularity_witness(const PartialGroupAction& pga, RegularityOptions opts = {});

}  // namespace pha
