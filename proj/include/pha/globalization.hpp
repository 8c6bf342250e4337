#pragma once

#include <optional>

#include "pha/partial_action.hpp"

namespace pha {

// Hom(H,A); f is stored with f(h_i) in block i, coordinate i*dim A + a.
struct ConvolutionAlgebra {
  HopfAlgebra hopf;
  FDAlgebra target;
  FDAlgebra alg;
  GlobalAction action;  // (k.f)(h) = f(hk)

  Vec evaluate(const Vec& f, std::size_t h) const;
  Vec from_values(const std::vector<Vec>& values) const;
};

ConvolutionAlgebra convolution_algebra(const HopfAlgebra& h, const FDAlgebra& a);

// phi(a)(h) = h.a
AlgebraMorphism phi_map(const PartialAction& pa);
bool is_injective(const AlgebraMorphism& m);

enum class Provenance { Standard, User };

struct GlobalizationResult {
  FDAlgebra B;
  GlobalAction action;
  AlgebraMorphism theta;
  Provenance provenance = Provenance::User;
  std::optional<bool> minimal;
  // standard only: B inside Hom(H,A)
  std::optional<Mat> ambient_inclusion;
};

GlobalizationResult make_candidate(const FDAlgebra& a, const GlobalAction& action, const Mat& theta);

GlobalizationResult standard_globalization(const PartialAction& pa);

Report verify_globalization(const PartialAction& pa, const GlobalizationResult& g,
                            const LocalUnitSystem* units = nullptr);

// U: h(x)a -> h.theta(a), as a dim B x (dim H * dim A) matrix
Mat generator_map(const PartialAction& pa, const GlobalizationResult& g);
// T: h(x)a -> (k -> kh.a), into Hom(H,A)
Mat evaluation_map(const PartialAction& pa);

Report minimality_report(const PartialAction& pa, const GlobalizationResult& g);
bool is_minimal(const PartialAction& pa, const GlobalizationResult& g);

struct Lift {
  AlgebraMorphism phi;
  bool surjective = false;
  bool injective = false;
};

// Phi(h.theta'(a)) = h.theta(alpha(a)).
Lift lift_morphism(const AlgebraMorphism& alpha, const PartialAction& pa_src, const GlobalizationResult& g_src,
                   const PartialAction& pa_dst, const GlobalizationResult& g_dst);

bool intertwines(const AlgebraMorphism& alpha, const PartialAction& pa_src, const PartialAction& pa_dst);

}  // namespace pha
