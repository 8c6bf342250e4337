#pragma once

#include <optional>

#include "pha/algebra.hpp"

namespace pha {

// Searches idempotents and matrix units with coefficients in {-1,0,1}; returns an
// algebra isomorphism (target x source matrix) when one is found.
std::optional<Mat> iso_to_product_of_fields(const FDAlgebra& a);
std::optional<Mat> iso_to_matrix_algebra(const FDAlgebra& a, std::size_t n);

// x -> p x p^-1 on the image side, i.e. the operator carried along an isomorphism
Mat transport(const Mat& iso, const Mat& op);

}  // namespace pha
