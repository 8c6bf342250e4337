#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pha/algebra.hpp"
#include "pha/hopf.hpp"

namespace pha {

std::string hopf_basis_name(const HopfAlgebra& h, std::size_t i);

// Action tensor H (x) A -> A stored as dim A x (dim H * dim A); column h*dimA + a holds h.a.
class ActionBase {
 public:
  ActionBase();
  ActionBase(HopfAlgebra h, FDAlgebra a, const Mat& act);

  const HopfAlgebra& hopf() const { return d_->hopf; }
  const FDAlgebra& alg() const { return d_->alg; }
  const Mat& act() const { return d_->act; }
  // operator of basis element h_i on A
  const Mat& op(std::size_t i) const { return d_->ops[i]; }
  Mat op(const Vec& h) const;
  Vec apply(const Vec& h, const Vec& a) const { return op(h) * a; }
  Vec apply_basis(std::size_t i, const Vec& a) const { return d_->ops[i] * a; }

 private:
  struct Data {
    HopfAlgebra hopf;
    FDAlgebra alg;
    Mat act;
    std::vector<Mat> ops;
  };
  std::shared_ptr<const Data> d_;
};

// Builds the action tensor from one dim A x dim A operator per basis element of H.
Mat action_from_operators(const std::vector<Mat>& ops, std::size_t dim_a);

struct ActionFlags {
  std::optional<bool> unital_axiom;
  std::optional<bool> composition_axiom;
  std::optional<bool> symmetric;
};

class PartialAction : public ActionBase {
 public:
  using ActionBase::ActionBase;
  ActionFlags flags;
  bool known_partial() const { return flags.unital_axiom.value_or(false) && flags.composition_axiom.value_or(false); }
  bool known_symmetric() const { return known_partial() && flags.symmetric.value_or(false); }
};

class GlobalAction : public ActionBase {
 public:
  using ActionBase::ActionBase;
};

PartialAction as_partial(const GlobalAction& ga);

// Checks: unit, composition, symmetry.
Report verify_partial_action(const PartialAction& pa);
Report verify_partial_action(PartialAction& pa);  // also sets flags
// For unital A. Checks: unit, multiplicative, composition_unital, symmetry_unital,
// plus agreement of both verdicts with verify_partial_action.
Report verify_unital_partial_action(const PartialAction& pa);
Report verify_global_action(const GlobalAction& ga);

struct ActionVerdict {
  bool partial = false;
  bool symmetric = false;
  bool operator==(const ActionVerdict&) const = default;
};
ActionVerdict general_verdict(const Report& r);
ActionVerdict unital_verdict(const Report& r);

// Throws ActionUnverified unless the action passes the unit and composition
// axioms (and symmetry when asked).
void require_partial(PartialAction& pa, bool symmetric = false);

struct PartialRepresentation {
  HopfAlgebra hopf;
  std::size_t dim = 0;
  std::vector<Mat> pi;  // one per basis element of H
  Mat at(const Vec& h) const;
};

PartialRepresentation action_to_partial_representation(const PartialAction& pa);
Report verify_partial_representation(const PartialRepresentation& rep);

struct EpsilonMaps {
  Mat e_l;
  Mat e_r;
  Report compatibility;
};

EpsilonMaps epsilon_maps(const PartialAction& pa, const Vec& h);
// Right A-module property of a |-> sum h1.(S(h2).a) and the left-module dual.
Report verify_module_map_identities(const PartialAction& pa);
// g.g^-1.g.a = g.a over kG.
Report verify_group_identity(const PartialAction& pa);

struct Restriction {
  PartialAction action;
  Mat inclusion;  // ambient x dim of the restricted algebra
  Subspace carrier;
};

Restriction restrict_via_central_idempotent(const GlobalAction& ga, const Vec& e);
Restriction restrict_via_projection(const GlobalAction& ga, const Subspace& a_sub, const Mat& pi);
// S, L_map, R_map: units are ambient vectors; maps are indexed [h * dim(a_sub) + a] and
// list positions in S.
Restriction restrict_via_local_units(const GlobalAction& ga, const Subspace& a_sub,
                                     const std::vector<Vec>& units,
                                     const std::vector<std::vector<std::size_t>>& l_map,
                                     const std::vector<std::vector<std::size_t>>& r_map);

PartialAction tensor_product_action(const PartialAction& pa1, const PartialAction& pa2);
bool is_categorizable(const PartialAction& pa, const LocalUnitSystem& s);

// The trivial extension: 1_H-part acts as identity, everything else as
// counit-scaled identity (the global action through epsilon).
GlobalAction trivial_action(const HopfAlgebra& h, const FDAlgebra& a);

}  // namespace pha

namespace pha {
// Over kG: the identity acts as id, every other group element as 0.
PartialAction zero_on_nonidentity(const HopfAlgebra& h, const FDAlgebra& a);
}  // namespace pha
