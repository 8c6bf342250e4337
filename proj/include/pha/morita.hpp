#pragma once

#include "pha/globalization.hpp"
#include "pha/group_partial.hpp"
#include "pha/smash.hpp"

namespace pha {

// L-R bimodule. left: dim x (dim L * dim), column l*dim+x; right: dim x (dim * dim R), column x*dim R+r.
struct Bimodule {
  std::size_t dim = 0;
  Mat left;
  Mat right;

  Mat left_op(std::size_t l) const;   // x -> b_l x
  Mat right_op(std::size_t r) const;  // x -> x b_r
};

struct MoritaContextData {
  FDAlgebra A;
  FDAlgebra B;
  Bimodule M;  // A-B
  Bimodule N;  // B-A
  Mat tau;     // dim A x (dim M * dim N), column m*dim N+n
  Mat sigma;   // dim B x (dim N * dim M), column n*dim M+m

  Vec tau_of(const Vec& m, const Vec& n) const { return tau * kron(m, n); }
  Vec sigma_of(const Vec& n, const Vec& m) const { return sigma * kron(n, m); }
};

struct ActionEquivalenceData {
  MoritaContextData ctx;
  PartialAction pa_A;
  PartialAction pa_B;
  Mat m_action;  // dim M x (dim H * dim M)
  Mat n_action;  // dim N x (dim H * dim N)
};

Report verify_context(const MoritaContextData& ctx);
bool is_strict(const MoritaContextData& ctx);

// Block order A, M, N, B.
struct ContextOffsets {
  std::size_t a, m, n, b, total;
};
ContextOffsets context_offsets(const MoritaContextData& ctx);
FDAlgebra context_algebra(const MoritaContextData& ctx);
FDAlgebra context_algebra_unchecked(const MoritaContextData& ctx);
PartialAction context_action(const ActionEquivalenceData& d);

Report verify_equivalent_partial_actions(const ActionEquivalenceData& d);

// Pieces P, M, N, Q of an ambient algebra X with the products PM, MQ, MN in M, M, P and so on;
// all structure comes from the multiplication of X in RREF coordinates.
MoritaContextData context_from_ambient(const FDAlgebra& x, const Subspace& p, const Subspace& m, const Subspace& n,
                                       const Subspace& q);
// Also restricts an action of X to the four pieces.
ActionEquivalenceData equivalence_from_ambient(const ActionBase& act, const Subspace& p, const Subspace& m,
                                               const Subspace& n, const Subspace& q);

// M = N = A, tau = sigma = multiplication.
ActionEquivalenceData identity_equivalence(const PartialAction& pa);
// A ~ Mat_n(A) with the entrywise action, inside Mat_{1+n}(A).
ActionEquivalenceData amplification_equivalence(const PartialAction& pa, std::size_t n);
// entrywise action of H on Mat_n(A)
PartialAction entrywise_action(const PartialAction& pa, std::size_t n);

MoritaContextData smash_morita_context(const PartialAction& pa, const GlobalizationResult& g);

enum class AnnihilatorSide { Right, Left };

struct QuotientEquivalence {
  QuotientAlgebra quotient;
  ActionEquivalenceData data;
  bool annihilator_trivial = false;  // r(A/r(A)) = 0, or l(A/l(A)) = 0
};
QuotientEquivalence quotient_equivalence(const PartialAction& pa, AnnihilatorSide side = AnnihilatorSide::Right);

ActionEquivalenceData compose_contexts(const ActionEquivalenceData& d1, const ActionEquivalenceData& d2);

MoritaContextData smash_equivalence_from_action_equivalence(const ActionEquivalenceData& d);

ActionEquivalenceData globalization_context(const ActionEquivalenceData& d);

// Product partial action on the context algebra C, with theta-projections, restricting to pga_A and pga_B.
struct GroupTransfer {
  Report report;
  std::optional<ActionEquivalenceData> data;
};
GroupTransfer group_morita_transfer(const MoritaContextData& ctx, const PartialGroupAction& pga_A,
                                    const PartialGroupAction& pga_B, const PartialGroupAction& pga_C);

}  // namespace pha
