#pragma once

#include "pha/morita.hpp"

namespace pha {

struct FiniteKCategory {
  std::vector<std::string> objects;
  std::vector<std::vector<std::size_t>> hom;  // hom[y][x] = dim of morphisms x -> y
  // comp[z][y][x]: dim(x->z) x (dim(y->z) * dim(x->y)), column f*dim(x->y)+g holds f o g
  std::vector<std::vector<std::vector<Mat>>> comp;
  std::vector<Vec> identities;  // in hom[x][x]
  Field field;

  std::size_t size() const { return objects.size(); }
  Vec compose(std::size_t z, std::size_t y, std::size_t x, const Vec& f, const Vec& g) const {
    return comp[z][y][x] * kron(f, g);
  }
};

Report verify_category(const FiniteKCategory& c);

// n objects, every hom space 1-dim, composition by matrix units
FiniteKCategory matrix_unit_category(std::size_t n, Field f = Field());
FiniteKCategory discrete_category(std::size_t n, Field f = Field());

struct CategoryAlgebra {
  FDAlgebra alg;
  LocalUnitSystem units;                       // sums of distinct e_xx, singletons first
  std::vector<std::vector<std::size_t>> offset;  // block (y,x), row-major in (y,x)
};
CategoryAlgebra a_of_category(const FiniteKCategory& c);

struct AlgebraCategory {
  FiniteKCategory cat;
  std::vector<std::vector<Subspace>> corners;  // corners[b][a] = e_b A e_a
};
AlgebraCategory category_of_algebra(const FDAlgebra& a, const LocalUnitSystem& s);

struct CategoryPartialAction {
  FiniteKCategory cat;
  HopfAlgebra hopf;
  std::vector<std::vector<Mat>> act;  // act[y][x]: dim x (dim H * dim), column h*dim+f

  Mat op(std::size_t y, std::size_t x, std::size_t h) const;
};
Report verify_category_partial_action(const CategoryPartialAction& p);

PartialAction induce_action_on_algebra(const CategoryPartialAction& p);
CategoryPartialAction induce_action_on_category(const PartialAction& pa, const LocalUnitSystem& s);
// Full subcategory on the listed objects.
CategoryPartialAction full_subcategory(const CategoryPartialAction& p, const std::vector<std::size_t>& objs);
// a(C) then C^{S0}(a(C)) restricted to the singleton objects
CategoryPartialAction category_round_trip(const CategoryPartialAction& p);

ActionEquivalenceData morita_A_vs_aCSA(const PartialAction& pa, const LocalUnitSystem& s);

struct CModule {
  std::vector<std::size_t> dims;       // per object
  std::vector<std::vector<Mat>> act;   // act[y][x]: dims[y] x (hom[y][x] * dims[x]), column f*dims[x]+m
};
Report verify_cmodule(const FiniteKCategory& c, const CModule& m);

LeftModule module_F(const FiniteKCategory& c, const CModule& m);
CModule module_G(const FiniteKCategory& c, const LeftModule& m);
Report module_equivalence_roundtrip(const FiniteKCategory& c, const CModule& m);

// M as a C^S(A)-module, then the direct limit of e_l M back to an A-module.
Report algebra_module_roundtrip(const FDAlgebra& a, const LocalUnitSystem& s, const LeftModule& m);

}  // namespace pha
