#include "doctest.h"
#include "oracle.hpp"
#include "pha/recognition.hpp"

using namespace pha;

namespace {

// Same algebra in the basis given by the columns of p.
FDAlgebra rebase(const FDAlgebra& a, const Mat& p) {
  Mat pinv = *inverse(p);
  std::size_t d = a.dim();
  Mat m = structure_constants(d, [&](std::size_t i, std::size_t j) { return pinv * a.product(p.col(i), p.col(j)); });
  return make_algebra(m, pinv * *a.unit());
}

}  // namespace

TEST_CASE("recognizes the standard models") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto iso = iso_to_product_of_fields(product_of_fields(n));
    REQUIRE(iso);
    CHECK(verify_morphism(AlgebraMorphism{product_of_fields(n), product_of_fields(n), *iso, true}).ok());
  }
  for (std::size_t n = 1; n <= 3; ++n) CHECK(iso_to_matrix_algebra(matrix_algebra(n), n).has_value());
}

TEST_CASE("rejects non-isomorphic algebras") {
  CHECK_FALSE(iso_to_product_of_fields(truncated_polynomial(2)).has_value());
  CHECK_FALSE(iso_to_matrix_algebra(product_of_fields(4), 2).has_value());
  CHECK_FALSE(iso_to_matrix_algebra(upper_triangular(2), 2).has_value());
}

TEST_CASE("recognizes Mat2 after a change of basis") {
  FDAlgebra m2 = matrix_algebra(2);
  // unimodular changes keep the idempotents inside the {-1,0,1} search
  Mat p = Mat::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}});
  FDAlgebra b = rebase(m2, p);
  auto iso = iso_to_matrix_algebra(b, 2);
  REQUIRE(iso);
  CHECK(verify_morphism(AlgebraMorphism{b, m2, *iso, true}).ok());
}

TEST_CASE("transport conjugates operators") {
  Mat iso = Mat::from_rows({{0, 1}, {1, 0}});
  Mat op = Mat::from_rows({{1, 0}, {0, 0}});
  CHECK(transport(iso, op) == Mat::from_rows({{0, 0}, {0, 1}}));
}
