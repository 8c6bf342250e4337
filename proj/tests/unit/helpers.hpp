#pragma once

#include <random>

#include "oracle.hpp"
#include "pha/random_instances.hpp"

namespace helpers {

inline std::vector<oracle::QMat> operators(const pha::ActionBase& a) {
  std::vector<oracle::QMat> out;
  for (std::size_t i = 0; i < a.hopf().dim(); ++i) out.push_back(oracle::from(a.op(i)));
  return out;
}

inline oracle::Verdict reference_verdict(const pha::ActionBase& a) {
  oracle::Alg alg = oracle::from_library(a.alg().mult(), a.alg().dim());
  oracle::GroupData g;
  g.table = a.hopf().group()->table();
  g.identity = a.hopf().group()->identity();
  return a.hopf().origin() == pha::HopfOrigin::GroupAlgebra ? oracle::check_group_action(alg, g, operators(a))
                                                            : oracle::check_dual_group_action(alg, g, operators(a));
}

// Random operators with the unit axiom kept.
inline pha::PartialAction perturbed(const pha::PartialAction& pa, std::mt19937_64& rng) {
  std::size_t d = pa.alg().dim();
  pha::Mat x = oracle::to_mat(oracle::random_matrix(rng, d, d, -1, 1));
  std::vector<pha::Mat> ops{pa.op(0), pa.op(1)};
  if (pa.hopf().origin() == pha::HopfOrigin::GroupAlgebra) {
    ops[1] = ops[1] + x;
  } else {
    ops[0] = ops[0] + x;
    ops[1] = ops[1] - x;
  }
  return pha::PartialAction(pa.hopf(), pa.alg(), pha::action_from_operators(ops, d));
}

inline pha::PartialAction zero_on_g() {
  return pha::zero_on_nonidentity(pha::group_algebra(pha::FiniteGroup::cyclic(2)), pha::base_field_algebra());
}

}  // namespace helpers
