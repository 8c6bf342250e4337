#include "pha/random_instances.hpp"

#include "pha/errors.hpp"

namespace pha {

namespace {

struct Involution {
  std::string label;
  FDAlgebra alg;
  Mat sigma;
};

Scalar random_nonzero(std::mt19937_64& rng) {
  static const long nums[] = {1, -1, 2, -2, 3, 1, -1};
  static const long dens[] = {1, 1, 1, 3, 2, 2, 1};
  std::size_t k = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
  return Scalar(nums[k], dens[k]);
}

// an automorphism tau of a small unital C
Mat random_automorphism(std::mt19937_64& rng, std::size_t which) {
  switch (which) {
    case 0:
      return Mat::identity(1);
    case 1: {
      if (rng() & 1) return Mat::identity(2);
      Mat s(2, 2);
      s(0, 1) = s(1, 0) = Scalar(1);
      return s;
    }
    default: {
      Mat s = Mat::identity(2);
      s(1, 1) = random_nonzero(rng);
      return s;
    }
  }
}

const char* small_name(std::size_t which) {
  static const char* names[] = {"Q", "QxQ", "Q[x]/x^2"};
  return names[which];
}

FDAlgebra small_unital(std::size_t which) {
  switch (which) {
    case 0:
      return base_field_algebra();
    case 1:
      return product_of_fields(2);
    default:
      return truncated_polynomial(2);
  }
}

Involution random_involution(std::mt19937_64& rng, std::size_t max_dim) {
  std::vector<std::size_t> kinds;
  for (std::size_t c = 0; c < 3; ++c)
    if (2 * small_unital(c).dim() <= max_dim) kinds.push_back(c);
  std::size_t options = kinds.size() + (max_dim >= 4 ? 1 : 0);
  if (options == 0) fail(ErrorKind::InvalidArgument, "max_dim too small for a fuzz instance");
  std::size_t pick = std::uniform_int_distribution<std::size_t>(0, options - 1)(rng);
  if (pick < kinds.size()) {
    std::size_t c = kinds[pick];
    FDAlgebra ca = small_unital(c);
    std::size_t d = ca.dim();
    Mat tau = random_automorphism(rng, c);
    Mat tinv = *inverse(tau);
    // (x, y) -> (tau y, tau^-1 x)
    Mat s(2 * d, 2 * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        s(i, d + j) = tau(i, j);
        s(d + i, j) = tinv(i, j);
      }
    return {std::string("twisted swap on (") + small_name(c) + ")^2", direct_product(ca, ca), s};
  }
  // conjugation by P = [[a,b],[c,-a]], P^2 scalar
  Scalar a = random_nonzero(rng), b = (rng() & 1) ? random_nonzero(rng) : Scalar(0), c = random_nonzero(rng);
  if ((a * a + b * c).is_zero()) b = Scalar(0);
  Mat p(2, 2);
  p(0, 0) = a;
  p(0, 1) = b;
  p(1, 0) = c;
  p(1, 1) = -a;
  Mat pinv = *inverse(p);
  // E_ij at i*2+j; X -> P X P^-1 is kron(P, P^-T) on row-major vec
  return {"conjugation on Mat2", matrix_algebra(2), kron(p, pinv.transpose())};
}

}  // namespace

FDAlgebra left_unit_algebra(Field f) {
  Mat m = structure_constants(2, [](std::size_t i, std::size_t j) {
    Vec v = zero_vec(2);
    if (i == 0 && j == 0) v[0] = Scalar(1);
    if (i == 1 && j == 0) v[1] = Scalar(1);
    return v;
  });
  return make_algebra(m, std::nullopt, f);
}

std::vector<Vec> small_central_idempotents(const FDAlgebra& a) {
  std::vector<Vec> out;
  std::size_t d = a.dim();
  if (d > 16) fail(ErrorKind::InvalidArgument, "idempotent search limited to dim 16");
  for (std::size_t mask = 1; mask < (std::size_t{1} << d); ++mask) {
    Vec v = zero_vec(d);
    for (std::size_t i = 0; i < d; ++i)
      if (mask >> i & 1) v[i] = Scalar(1);
    if (is_idempotent(a, v) && is_central(a, v)) out.push_back(v);
  }
  return out;
}

FuzzInstance random_instance(std::mt19937_64& rng, FuzzHopf kind, std::size_t max_dim) {
  if (max_dim < 1) fail(ErrorKind::InvalidArgument, "max_dim must be positive");
  Involution inv = random_involution(rng, max_dim);
  std::size_t d = inv.alg.dim();
  HopfAlgebra h = kind == FuzzHopf::GroupZ2 ? group_algebra(FiniteGroup::cyclic(2)) : dual_group_algebra(FiniteGroup::cyclic(2));
  std::vector<Mat> ops;
  if (kind == FuzzHopf::GroupZ2) {
    ops = {Mat::identity(d), inv.sigma};
  } else {
    Scalar half(1, 2);
    ops = {half * (Mat::identity(d) + inv.sigma), half * (Mat::identity(d) - inv.sigma)};
  }
  GlobalAction ga(h, inv.alg, action_from_operators(ops, d));
  if (!verify_global_action(ga).ok()) fail(ErrorKind::InternalInvariant, "fuzz: global action rejected");
  auto ids = small_central_idempotents(inv.alg);
  Vec e = ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng)];
  Restriction r = restrict_via_central_idempotent(ga, e);
  FuzzInstance out{inv.label + (kind == FuzzHopf::GroupZ2 ? " / kZ2" : " / (kZ2)*"), ga, e, r.action};
  std::size_t da = r.action.alg().dim();
  std::size_t extra = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
  extra = extra < 3 ? 0 : extra - 2;
  FDAlgebra n = extra == 1 ? left_unit_algebra() : extra == 2 ? opposite_algebra(left_unit_algebra()) : zero_algebra(1);
  if (extra > 0 && da * n.dim() <= max_dim) {
    std::string tag = extra == 1 ? "left-unit" : extra == 2 ? "right-unit" : "null";
    out.action = tensor_product_action(r.action, as_partial(trivial_action(h, n)));
    out.label += " (x) " + tag;
  }
  PartialAction& pa = out.action;
  verify_partial_action(pa);
  if (!pa.known_symmetric()) fail(ErrorKind::InternalInvariant, "fuzz: restriction is not a symmetric partial action");
  return out;
}

std::vector<FuzzInstance> fuzz_suite(std::uint64_t seed, std::size_t count, std::size_t max_dim) {
  std::mt19937_64 rng(seed);
  std::vector<FuzzInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(random_instance(rng, i % 2 == 0 ? FuzzHopf::GroupZ2 : FuzzHopf::DualZ2, max_dim));
  return out;
}

}  // namespace pha
