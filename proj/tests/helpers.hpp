#pragma once

// Shared test utilities: deterministic random generators for property tests
// and independently-coded oracles that the library implementations are
// checked against.

#include <random>
#include <vector>

#include "hypercert/linalg.hpp"
#include "hypercert/mpoly.hpp"

namespace testutil {

using hypercert::poly::Exps;
using hypercert::poly::MPoly;
using hypercert::poly::Rat;

/// Uniform integer in [lo, hi], from a caller-owned engine (fixed seeds keep
/// every property test reproducible).
inline long rand_int(std::mt19937& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rat rand_rat(std::mt19937& rng, long max_abs_num = 9, long max_den = 5) {
  long num = rand_int(rng, -max_abs_num, max_abs_num);
  long den = rand_int(rng, 1, max_den);
  return Rat(num, den);
}

inline Rat rand_nonzero_rat(std::mt19937& rng, long max_abs_num = 9, long max_den = 5) {
  Rat r = 0;
  while (r == 0) r = rand_rat(rng, max_abs_num, max_den);
  return r;
}

inline MPoly rand_poly(std::mt19937& rng, const std::vector<std::string>& vars, int max_terms = 4,
                       int max_exp = 3, long max_coeff = 9) {
  MPoly p = MPoly::zero(vars);
  int nterms = static_cast<int>(rand_int(rng, 0, max_terms));
  for (int t = 0; t < nterms; ++t) {
    Exps e(vars.size());
    for (auto& x : e) x = static_cast<int>(rand_int(rng, 0, max_exp));
    p += MPoly::monomial(rand_rat(rng, max_coeff, 4), vars, std::move(e));
  }
  return p;
}

inline MPoly rand_nonzero_poly(std::mt19937& rng, const std::vector<std::string>& vars,
                               int max_terms = 4, int max_exp = 3, long max_coeff = 9) {
  MPoly p = MPoly::zero(vars);
  while (p.is_zero()) p = rand_poly(rng, vars, max_terms, max_exp, max_coeff);
  return p;
}

/// Oracle: determinant by first-row cofactor expansion (exponential, fine for
/// n <= 4); written against the definition, independent of the Bareiss code.
template <class T>
T cofactor_det(const std::vector<std::vector<T>>& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  T acc = m[0][0] - m[0][0];  // zero of the ring
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<T>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<T> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    T contrib = m[0][j] * cofactor_det(minor);
    if (j % 2 == 0) acc = acc + contrib;
    else acc = acc - contrib;
  }
  return acc;
}

}  // namespace testutil
