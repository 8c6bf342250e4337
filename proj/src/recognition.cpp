#include "pha/recognition.hpp"

#include "pha/errors.hpp"

namespace pha {

namespace {

constexpr std::size_t kMaxSearchDim = 10;

std::vector<Vec> small_idempotents(const FDAlgebra& a) {
  std::size_t d = a.dim();
  std::vector<Vec> out;
  std::vector<int> digits(d, -1);
  while (true) {
    Vec v(d);
    bool nonzero = false;
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = Scalar(static_cast<long>(digits[i])).in(a.field());
      nonzero = nonzero || digits[i] != 0;
    }
    if (nonzero && a.product(v, v) == v) out.push_back(v);
    std::size_t k = 0;
    while (k < d && digits[k] == 1) digits[k++] = -1;
    if (k == d) break;
    ++digits[k];
  }
  return out;
}

bool orthogonal(const FDAlgebra& a, const Vec& e, const Vec& f) {
  return is_zero(a.product(e, f)) && is_zero(a.product(f, e));
}

// n pairwise orthogonal idempotents from the candidates, each with 1-dim corner, summing to the unit
bool pick(const FDAlgebra& a, const std::vector<Vec>& cand, std::size_t n, std::size_t from, std::vector<Vec>& chosen) {
  if (chosen.size() == n) {
    Vec s = a.zero();
    for (const auto& e : chosen) s = s + e;
    return s == *a.unit();
  }
  for (std::size_t i = from; i < cand.size(); ++i) {
    bool ok = true;
    for (const auto& e : chosen) ok = ok && orthogonal(a, e, cand[i]);
    if (!ok || corner(a, cand[i], cand[i]).dim() != 1) continue;
    chosen.push_back(cand[i]);
    if (pick(a, cand, n, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

std::optional<Mat> finish(const FDAlgebra& src, const FDAlgebra& dst, const std::vector<Vec>& images_of_dst_basis) {
  Mat inv = Mat::from_cols(images_of_dst_basis, src.dim());
  auto iso = inverse(inv);
  if (!iso) return std::nullopt;
  AlgebraMorphism m{src, dst, *iso, true};
  if (!verify_morphism(m).ok()) return std::nullopt;
  return iso;
}

}  // namespace

std::optional<Mat> iso_to_product_of_fields(const FDAlgebra& a) {
  std::size_t n = a.dim();
  if (n == 0 || n > kMaxSearchDim || !a.is_unital()) return std::nullopt;
  std::vector<Vec> chosen;
  if (!pick(a, small_idempotents(a), n, 0, chosen)) return std::nullopt;
  return finish(a, product_of_fields(n, a.field()), chosen);
}

std::optional<Mat> iso_to_matrix_algebra(const FDAlgebra& a, std::size_t n) {
  if (n == 0 || a.dim() != n * n || a.dim() > kMaxSearchDim || !a.is_unital()) return std::nullopt;
  std::vector<Vec> diag;
  if (!pick(a, small_idempotents(a), n, 0, diag)) return std::nullopt;
  std::vector<Vec> row(n), col(n);
  row[0] = col[0] = diag[0];
  for (std::size_t j = 1; j < n; ++j) {
    Subspace up = corner(a, diag[0], diag[j]), down = corner(a, diag[j], diag[0]);
    if (up.dim() != 1 || down.dim() != 1) return std::nullopt;
    row[j] = up.basis_vector(0);
    Vec p = a.product(row[j], down.basis_vector(0));
    auto c = Subspace::span(a.dim(), {diag[0]}).coordinates(p);
    if (!c || (*c)[0].is_zero()) return std::nullopt;
    col[j] = (Scalar(1) / (*c)[0]) * down.basis_vector(0);
  }
  std::vector<Vec> units;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) units.push_back(a.product(col[i], row[j]));
  return finish(a, matrix_algebra(n, a.field()), units);
}

Mat transport(const Mat& iso, const Mat& op) {
  auto inv = inverse(iso);
  if (!inv) fail(ErrorKind::InvalidArgument, "transport along a singular map");
  return iso * op * *inv;
}

}  // namespace pha
