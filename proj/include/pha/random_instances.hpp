#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pha/partial_action.hpp"

namespace pha {

enum class FuzzHopf { GroupZ2, DualZ2 };

// A partial action obtained by restricting a random global Z2-action (or the
// grading it induces) to eB for a central idempotent e, optionally tensored
// with a nonunital algebra carrying the trivial action.
struct FuzzInstance {
  std::string label;
  GlobalAction global;
  Vec idempotent;
  PartialAction action;
};

FuzzInstance random_instance(std::mt19937_64& rng, FuzzHopf kind, std::size_t max_dim = 4);
// Alternates the two Hopf algebras; reproducible from the seed.
std::vector<FuzzInstance> fuzz_suite(std::uint64_t seed, std::size_t count, std::size_t max_dim = 4);

// u^2 = u, vu = v, other products zero: r(A) = span{v}, l(A) = 0
FDAlgebra left_unit_algebra(Field f = Field());

// Nonzero idempotents with coefficients in {0, 1} that are central.
std::vector<Vec> small_central_idempotents(const FDAlgebra& a);

}  // namespace pha
