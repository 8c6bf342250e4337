#pragma once

// Naive rational reference computations, written directly on mpq_class and
// sharing no code with the library.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "pha/linalg.hpp"

namespace oracle {

using Q = mpq_class;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

inline QMat zeros(std::size_t r, std::size_t c) { return QMat(r, QVec(c, Q(0))); }

inline QMat identity(std::size_t n) {
  QMat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline QMat from(const pha::Mat& m) {
  QMat out = zeros(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).value();
  return out;
}

inline QVec from(const pha::Vec& v) {
  QVec out;
  for (const auto& s : v) out.push_back(s.value());
  return out;
}

inline pha::Mat to_mat(const QMat& m) {
  std::size_t c = m.empty() ? 0 : m[0].size();
  pha::Mat out(m.size(), c);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < c; ++j) out(i, j) = pha::Scalar(m[i][j], pha::Field());
  return out;
}

inline QMat mul(const QMat& a, const QMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  QMat c = zeros(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

inline QVec image(const QMat& a, const QVec& x) {
  QVec y(a.size(), Q(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

// Gauss-Jordan with explicit row swaps; returns the rank and reduces m in place.
inline std::size_t reduce(QMat& m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && m[i][c] != 0) {
        Q f = m[i][c];
        for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
      }
    ++r;
  }
  return r;
}

inline std::size_t rank(QMat m) { return reduce(m); }

inline bool same_row_space(const QMat& a, const QMat& b) {
  QMat s = a;
  s.insert(s.end(), b.begin(), b.end());
  return rank(a) == rank(b) && rank(s) == rank(a);
}

// Structure constants c[i][j][k]: coefficient of b_k in b_i b_j.
struct Alg {
  std::size_t d = 0;
  std::vector<std::vector<QVec>> c;
  QVec prod(const QVec& x, const QVec& y) const {
    QVec z(d, Q(0));
    for (std::size_t i = 0; i < d; ++i)
      if (x[i] != 0)
        for (std::size_t j = 0; j < d; ++j)
          if (y[j] != 0)
            for (std::size_t k = 0; k < d; ++k) z[k] += x[i] * y[j] * c[i][j][k];
    return z;
  }
  QVec basis(std::size_t i) const {
    QVec v(d, Q(0));
    v[i] = 1;
    return v;
  }
};

inline Alg alg_from(std::size_t d, const std::function<QVec(std::size_t, std::size_t)>& f) {
  Alg a;
  a.d = d;
  a.c.assign(d, std::vector<QVec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a.c[i][j] = f(i, j);
  return a;
}

// E_ij at i*n+j
inline Alg matrix_units(std::size_t n) {
  return alg_from(n * n, [n](std::size_t x, std::size_t y) {
    QVec v(n * n, Q(0));
    if (x % n == y / n) v[(x / n) * n + y % n] = 1;
    return v;
  });
}

inline Alg from_library(const pha::Mat& mult, std::size_t d) {
  return alg_from(d, [&](std::size_t i, std::size_t j) {
    QVec v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = mult(k, i * d + j).value();
    return v;
  });
}

inline bool associative(const Alg& a) {
  for (std::size_t i = 0; i < a.d; ++i)
    for (std::size_t j = 0; j < a.d; ++j)
      for (std::size_t k = 0; k < a.d; ++k)
        if (a.prod(a.prod(a.basis(i), a.basis(j)), a.basis(k)) != a.prod(a.basis(i), a.prod(a.basis(j), a.basis(k))))
          return false;
  return true;
}

// Partial action axioms over kG (Delta g = g (x) g) or (kG)* (Delta p_g = sum_{xy=g} p_x (x) p_y).
// ops[g] is the operator of the g-th basis element.
struct GroupData {
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;
};

struct Verdict {
  bool unit = true, composition = true, symmetry = true;
};

inline Verdict check_group_action(const Alg& a, const GroupData& g, const std::vector<QMat>& ops) {
  Verdict v;
  std::size_t n = g.table.size();
  v.unit = ops[g.identity] == identity(a.d);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < a.d; ++x)
        for (std::size_t y = 0; y < a.d; ++y) {
          QVec ax = a.basis(x), by = a.basis(y);
          QVec kb = image(ops[k], by), hkb = image(ops[g.table[h][k]], by), ha = image(ops[h], ax);
          if (image(ops[h], a.prod(ax, kb)) != a.prod(ha, hkb)) v.composition = false;
          if (image(ops[h], a.prod(kb, ax)) != a.prod(hkb, ha)) v.symmetry = false;
        }
  return v;
}

inline Verdict check_dual_group_action(const Alg& a, const GroupData& g, const std::vector<QMat>& ops) {
  Verdict v;
  std::size_t n = g.table.size();
  QMat sum = zeros(a.d, a.d);
  for (const auto& o : ops)
    for (std::size_t i = 0; i < a.d; ++i)
      for (std::size_t j = 0; j < a.d; ++j) sum[i][j] += o[i][j];
  v.unit = sum == identity(a.d);
  // composition: h.(a(k.b)) = sum over pk = h of (p_p.a)(p_k.b)
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < a.d; ++x)
        for (std::size_t y = 0; y < a.d; ++y) {
          QVec ax = a.basis(x), by = a.basis(y);
          QVec kb = image(ops[k], by);
          QVec lhs = image(ops[h], a.prod(ax, kb));
          QVec rhs(a.d, Q(0));
          for (std::size_t p = 0; p < n; ++p)
            if (g.table[p][k] == h) {
              QVec t = a.prod(image(ops[p], ax), kb);
              for (std::size_t i = 0; i < a.d; ++i) rhs[i] += t[i];
            }
          if (lhs != rhs) v.composition = false;
        }
  // symmetry: h.((k.b)a) = sum (h1 k.b)(h2.a): h1 = p_p with p = k, h2 = p_q with kq = h
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < a.d; ++x)
        for (std::size_t y = 0; y < a.d; ++y) {
          QVec ax = a.basis(x), by = a.basis(y);
          QVec kb = image(ops[k], by);
          QVec lhs = image(ops[h], a.prod(kb, ax));
          QVec rhs(a.d, Q(0));
          for (std::size_t q = 0; q < n; ++q)
            if (g.table[k][q] == h) {
              QVec t = a.prod(kb, image(ops[q], ax));
              for (std::size_t i = 0; i < a.d; ++i) rhs[i] += t[i];
            }
          if (lhs != rhs) v.symmetry = false;
        }
  return v;
}

inline GroupData cyclic(std::size_t n) {
  GroupData g;
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  return g;
}

inline QMat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  QMat m = zeros(r, c);
  for (auto& row : m)
    for (auto& x : row) {
      x = Q(d(rng), 1 + (rng() % 2));
      x.canonicalize();
    }
  return m;
}

}  // namespace oracle
