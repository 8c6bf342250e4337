#pragma once

#include "pha/partial_action.hpp"

namespace pha {

// A#H with basis a_i#h_j at i*dim H + j.
struct SmashAlgebra {
  FDAlgebra alg;
  PartialAction source;

  std::size_t dim_a() const { return source.alg().dim(); }
  std::size_t dim_h() const { return source.hopf().dim(); }
  Vec element(const Vec& a, const Vec& h) const { return kron(a, h); }
  std::string basis_label(std::size_t idx) const;
};

// Throws ActionUnverified unless the unit and composition axioms hold.
SmashAlgebra build_smash(const PartialAction& pa);
// Products of A#H without requiring the axioms; associativity left unchecked.
FDAlgebra smash_structure(const PartialAction& pa);
bool smash_is_associative(const PartialAction& pa);
// Right A-action (a#h)b = sum a(h1.b)#h2 is associative.
bool smash_bimodule_associative(const PartialAction& pa);

struct PartialSmashAlgebra {
  SmashAlgebra parent;
  Subspace carrier;  // (A#H)(A#1_H)
  FDAlgebra alg;     // in carrier's RREF basis
  Mat inclusion;     // parent dim x carrier dim

  Vec to_parent(const Vec& coords) const { return inclusion * coords; }
  std::optional<Vec> coords(const Vec& parent_vec) const { return carrier.coordinates(parent_vec); }
};

PartialSmashAlgebra build_partial_smash(const SmashAlgebra& sm);

struct PartialAHModule {
  std::size_t dim = 0;
  Mat a_action;  // dim x (dim A * dim)
  Mat h_action;  // dim x (dim H * dim)
};

Report verify_partial_AH_module(const PartialAHModule& m, const PartialAction& pa);
// Regular-like module: M = A, a acts by multiplication, h by the partial action.
PartialAHModule regular_AH_module(const PartialAction& pa);

// Action of the partial smash on M: dim M x (carrier dim * dim M).
Mat module_to_smash_module(const PartialSmashAlgebra& ps, const PartialAHModule& m);

enum class ConversionHypothesis { LeftIdentityExists, TorsionFreeAndSBijective };

PartialAHModule smash_module_to_AH_module(const PartialSmashAlgebra& ps, std::size_t dim_m, const Mat& action,
                                          ConversionHypothesis hypothesis);

}  // namespace pha
