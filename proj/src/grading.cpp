#include "pha/grading.hpp"

#include <algorithm>

#include "pha/errors.hpp"

namespace pha {

namespace {

bool in_subgroup(const GoodGradingSpec& s, std::size_t x) {
  return std::find(s.subgroup.begin(), s.subgroup.end(), x) != s.subgroup.end();
}

// gL == tL
bool same_coset(const GoodGradingSpec& s, std::size_t g, std::size_t t) {
  return in_subgroup(s, s.group.mul(s.group.inv(g), t));
}

std::vector<std::size_t> coset(const GoodGradingSpec& s, std::size_t t) {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < s.group.order(); ++g)
    if (same_coset(s, g, t)) out.push_back(g);
  return out;
}

Scalar inv_order(std::size_t l, Field f) { return (Scalar(1) / Scalar(static_cast<long>(l))).in(f); }

}  // namespace

Report validate_spec(const GoodGradingSpec& s, Field f) {
  Report r("good grading spec");
  const FiniteGroup& G = s.group;
  bool shape = s.n >= 1 && s.t.size() == s.n;
  for (const auto& row : s.t) shape = shape && row.size() == s.n;
  for (const auto& row : s.t)
    for (auto x : row) shape = shape && x < G.order();
  for (auto x : s.subgroup) shape = shape && x < G.order();
  r.add("shape", shape, "t must be n x n over the group, L inside the group");
  if (!shape) return r;
  r.add("abelian", G.is_abelian(), "group is not abelian");
  std::vector<std::size_t> l = s.subgroup;
  std::sort(l.begin(), l.end());
  bool distinct = std::adjacent_find(l.begin(), l.end()) == l.end();
  bool sub = distinct && in_subgroup(s, G.identity());
  for (auto a : s.subgroup)
    for (auto b : s.subgroup) sub = sub && in_subgroup(s, G.mul(a, G.inv(b)));
  r.add("subgroup", sub, "L is not a subgroup");
  std::size_t p = f.characteristic();
  bool ch = p == 0 || (G.order() % p != 0 && s.subgroup.size() % p != 0);
  r.add("characteristic", ch, "char " + std::to_string(p) + " divides |G| or |L|");
  std::string w;
  if (sub)
    for (std::size_t i = 0; i < s.n && w.empty(); ++i)
      for (std::size_t k = 0; k < s.n && w.empty(); ++k)
        for (std::size_t j = 0; j < s.n && w.empty(); ++j)
          if (!same_coset(s, G.mul(s.t[i][k], s.t[k][j]), s.t[i][j]))
            w = "(i,k,j)=(" + std::to_string(i + 1) + "," + std::to_string(k + 1) + "," + std::to_string(j + 1) + ")";
  r.add("coset_condition", w.empty(), w);
  return r;
}

void require_valid_spec(const GoodGradingSpec& s, Field f) {
  Report r = validate_spec(s, f);
  if (r.ok()) return;
  for (const auto& c : r.checks()) {
    if (c.status != Status::Fail) continue;
    if (c.name == "coset_condition") fail(ErrorKind::CosetConditionFails, c.witness);
    if (c.name == "characteristic") fail(ErrorKind::CharacteristicDividesOrder, c.witness);
    fail(ErrorKind::SpecInvalid, c.name + ": " + c.witness);
  }
}

GoodGradingSpec spec_from_sequence(const FiniteGroup& g, const std::vector<std::size_t>& subgroup,
                                   const std::vector<std::size_t>& seq) {
  GoodGradingSpec s{seq.size(), g, subgroup, {}};
  s.t.assign(seq.size(), std::vector<std::size_t>(seq.size()));
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = 0; j < seq.size(); ++j) s.t[i][j] = g.mul(seq[i], g.inv(seq[j]));
  return s;
}

PartialAction build_grading_action(const GoodGradingSpec& s, Field f) {
  require_valid_spec(s, f);
  std::size_t n = s.n, d = n * n;
  Scalar c = inv_order(s.subgroup.size(), f);
  std::vector<Mat> ops;
  for (std::size_t g = 0; g < s.group.order(); ++g) {
    Mat op(d, d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (same_coset(s, g, s.t[i][j])) op(i * n + j, i * n + j) = c;
    ops.push_back(std::move(op));
  }
  return PartialAction(dual_group_algebra(s.group, f), matrix_algebra(n, f), action_from_operators(ops, d));
}

GlobalizationResult build_grading_globalization(const GoodGradingSpec& s, Field f) {
  require_valid_spec(s, f);
  const FiniteGroup& G = s.group;
  std::size_t n = s.n;
  struct Elem {
    std::size_t g, i, j;
  };
  std::vector<Elem> basis;
  std::vector<std::vector<std::size_t>> start(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      start[i][j] = basis.size();
      for (auto g : coset(s, s.t[i][j])) basis.push_back({g, i, j});
    }
  std::size_t d = basis.size();
  auto index_of = [&](std::size_t g, std::size_t i, std::size_t j) {
    for (std::size_t x = start[i][j]; x < d && basis[x].i == i && basis[x].j == j; ++x)
      if (basis[x].g == g) return x;
    fail(ErrorKind::InternalInvariant, "product leaves B");
  };
  Mat m = structure_constants(d, [&](std::size_t x, std::size_t y) {
    Vec out = zero_vec(d);
    if (basis[x].j == basis[y].i) out[index_of(G.mul(basis[x].g, basis[y].g), basis[x].i, basis[y].j)] = Scalar(1);
    return bind_field(out, f);
  });
  FDAlgebra b = make_algebra(m, std::nullopt, f);
  if (auto u = find_unit(b)) b = make_algebra(m, u, f);
  std::vector<Mat> ops;
  for (std::size_t g = 0; g < G.order(); ++g) {
    Mat op(d, d);
    for (std::size_t x = 0; x < d; ++x)
      if (basis[x].g == g) op(x, x) = Scalar(1).in(f);
    ops.push_back(std::move(op));
  }
  GlobalAction act(dual_group_algebra(G, f), b, action_from_operators(ops, d));
  Scalar c = inv_order(s.subgroup.size(), f);
  Mat theta(d, n * n);
  for (std::size_t x = 0; x < d; ++x) theta(x, basis[x].i * n + basis[x].j) = c;
  GlobalizationResult out = make_candidate(matrix_algebra(n, f), act, theta);
  return out;
}

LocalUnitSystem diagonal_local_units(std::size_t n, Field f) {
  LocalUnitSystem s;
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    Vec e = bind_field(zero_vec(n * n), f);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) e[i * n + i] = Scalar(1).in(f);
    s.units.push_back(std::move(e));
  }
  return s;
}

GradingComparison compare_with_standard(const GoodGradingSpec& s, Field f) {
  PartialAction pa = build_grading_action(s, f);
  GlobalizationResult expl = build_grading_globalization(s, f);
  expl.minimal = is_minimal(pa, expl);
  GlobalizationResult stdg = standard_globalization(pa);
  AlgebraMorphism id = identity_morphism(pa.alg());
  GradingComparison out;
  out.to_standard = lift_morphism(id, pa, expl, pa, stdg);
  out.from_standard = lift_morphism(id, pa, stdg, pa, expl);
  out.mutually_inverse = out.to_standard.phi.map * out.from_standard.phi.map == Mat::identity(stdg.B.dim()) &&
                         out.from_standard.phi.map * out.to_standard.phi.map == Mat::identity(expl.B.dim());
  return out;
}

}  // namespace pha
