#pragma once

#include "pha/globalization.hpp"

namespace pha {

struct GoodGradingSpec {
  std::size_t n = 1;
  FiniteGroup group;
  std::vector<std::size_t> subgroup;          // L as element indices
  std::vector<std::vector<std::size_t>> t;    // n x n
};

Report validate_spec(const GoodGradingSpec& s, Field f = Field());
// Throws CosetConditionFails, CharacteristicDividesOrder or SpecInvalid.
void require_valid_spec(const GoodGradingSpec& s, Field f = Field());

// t_ij = s_i s_j^-1
GoodGradingSpec spec_from_sequence(const FiniteGroup& g, const std::vector<std::size_t>& subgroup,
                                   const std::vector<std::size_t>& seq);

// partial action of (kG)* on Mat_n, basis p_g x E_ij
PartialAction build_grading_action(const GoodGradingSpec& s, Field f = Field());

// B inside Mat_n(kG) with basis (g)E_ij, g in t_ij L, listed by (i,j) then g
GlobalizationResult build_grading_globalization(const GoodGradingSpec& s, Field f = Field());

// sums of distinct E_ii
LocalUnitSystem diagonal_local_units(std::size_t n, Field f = Field());

struct GradingComparison {
  Lift to_standard;
  Lift from_standard;
  bool mutually_inverse = false;
};

GradingComparison compare_with_standard(const GoodGradingSpec& s, Field f = Field());

}  // namespace pha
