#pragma once

#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "hypercert/errors.hpp"
#include "hypercert/mpoly.hpp"
#include "hypercert/ratfunc.hpp"

namespace hypercert::poly {

template <class T>
struct RingTraits;

template <>
struct RingTraits<Rat> {
  static Rat one(const Rat&) { return 1; }
  static Rat zero(const Rat&) { return 0; }
  static bool is_zero(const Rat& x) { return x == 0; }
  static Rat exact_div(const Rat& a, const Rat& b) { return a / b; }
  static size_t weight(const Rat&) { return 1; }
};

template <>
struct RingTraits<MPoly> {
  static MPoly one(const MPoly& exemplar) { return MPoly::constant(1, exemplar.vars()); }
  static MPoly zero(const MPoly& exemplar) { return MPoly::zero(exemplar.vars()); }
  static bool is_zero(const MPoly& x) { return x.is_zero(); }
  static MPoly exact_div(const MPoly& a, const MPoly& b) {
    auto q = a.exact_quotient_by(b);
    require_internal(q.has_value(), "fraction-free elimination: inexact division");
    return *q;
  }
  static size_t weight(const MPoly& x) { return x.terms().size(); }
};

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Exact determinant by one-step fraction-free (Bareiss) elimination; every
/// intermediate division is exact in the coefficient ring.
template <class T>
T det_fraction_free(Matrix<T> m) {
  using R = RingTraits<T>;
  const size_t n = m.size();
  if (n == 0) throw UsageError("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw UsageError("determinant of a non-square matrix");

  int sign = 1;
  T prev = R::one(m[0][0]);
  for (size_t k = 0; k + 1 < n; ++k) {
    // Deterministic pivot: the structurally smallest nonzero entry in the
    // column, ties to the lowest row; keeps intermediate polynomials compact.
    size_t best = n;
    for (size_t r = k; r < n; ++r)
      if (!R::is_zero(m[r][k]) && (best == n || R::weight(m[r][k]) < R::weight(m[best][k])))
        best = r;
    if (best == n) return R::zero(m[0][0]);
    if (best != k) {
      std::swap(m[best], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = R::exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  T det = m[n - 1][n - 1];
  return sign < 0 ? R::zero(det) - det : det;
}

/// Cramer solution of A x = b over the polynomial ring; components arrive
/// gcd-reduced.  Throws SingularSystemError when det(A) vanishes identically.
inline std::vector<RatFunc> solve_linear(const Matrix<MPoly>& a, const std::vector<MPoly>& b,
                                         const std::string& context = "") {
  const size_t n = a.size();
  if (n == 0 || b.size() != n) throw UsageError("solve_linear: shape mismatch");
  MPoly det = det_fraction_free(a);
  if (det.is_zero()) {
    std::ostringstream msg;
    msg << "singular linear system" << (context.empty() ? "" : " (" + context + ")")
        << ": vanishing determinant of [";
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        msg << (i + j ? "; " : "") << a[i][j].str();
    msg << "]";
    throw SingularSystemError(msg.str());
  }
  std::vector<RatFunc> x;
  x.reserve(n);
  for (size_t col = 0; col < n; ++col) {
    Matrix<MPoly> ak = a;
    for (size_t row = 0; row < n; ++row) ak[row][col] = b[row];
    x.emplace_back(det_fraction_free(ak), det);
  }
  return x;
}

/// Rank of a sparse matrix over Q.  Rows are {column -> nonzero value} maps;
/// ncols bounds the column indices.  Pivot choice: sparsest remaining row.
inline size_t sparse_rank(std::vector<std::map<int, Rat>> rows, int ncols) {
  for (auto& row : rows)
    for (auto it = row.begin(); it != row.end();) {
      if (it->first < 0 || it->first >= ncols) throw UsageError("sparse_rank: column out of range");
      it = it->second == 0 ? row.erase(it) : std::next(it);
    }
  size_t rank = 0;
  std::vector<bool> used(rows.size(), false);
  while (true) {
    size_t pivot = rows.size();
    for (size_t r = 0; r < rows.size(); ++r)
      if (!used[r] && !rows[r].empty() &&
          (pivot == rows.size() || rows[r].size() < rows[pivot].size()))
        pivot = r;
    if (pivot == rows.size()) break;
    used[pivot] = true;
    ++rank;
    const int pc = rows[pivot].begin()->first;
    const Rat pv = rows[pivot].begin()->second;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (used[r]) continue;
      auto hit = rows[r].find(pc);
      if (hit == rows[r].end()) continue;
      Rat factor = hit->second / pv;
      for (const auto& [c, v] : rows[pivot]) {
        auto [it, fresh] = rows[r].emplace(c, -factor * v);
        if (!fresh) {
          it->second -= factor * v;
          if (it->second == 0) rows[r].erase(it);
        }
      }
    }
    rows[pivot].clear();
  }
  return rank;
}

}  // namespace hypercert::poly
