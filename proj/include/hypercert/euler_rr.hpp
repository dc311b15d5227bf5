#pragma once

#include <utility>
#include <vector>

#include "hypercert/errors.hpp"
#include "hypercert/surface.hpp"

namespace hypercert::rr {

using poly::Rat;
using ring::CohClass;
using ring::SurfaceData;

/// A twist line bundle as an H² class: coordinates in pic_basis.  Rational
/// coordinates are allowed (t·K_X with t ∈ Q); integrality assertions only
/// fire for integral twists.
struct TwistClass {
  std::vector<Rat> coords;
};

inline TwistClass twist_zero(const SurfaceData& s) {
  return {std::vector<Rat>(s.rank(), 0)};
}

inline TwistClass twist_from(const SurfaceData& s, std::vector<Rat> coords) {
  if (coords.size() != s.rank()) throw UsageError("twist: coordinate length != basis size");
  return {std::move(coords)};
}

/// t·K_X = −t·c₁ as a twist.
inline TwistClass twist_canonical(const SurfaceData& s, const Rat& t) {
  TwistClass tw = twist_zero(s);
  for (size_t i = 0; i < s.rank(); ++i) tw.coords[i] = -t * s.c1_coords[i];
  return tw;
}

inline TwistClass twist_add(const TwistClass& a, const TwistClass& b) {
  if (a.coords.size() != b.coords.size()) throw Error("twist_add: mixed surfaces");
  TwistClass out = a;
  for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

/// Todd class of the surface: (1, c₁/2, (c₁²+c₂)/12).
inline CohClass todd_degree2(const SurfaceData& s) {
  CohClass td = ring::coh_one(s);
  for (size_t i = 0; i < s.rank(); ++i) td.h2[i] = s.c1_coords[i] / 2;
  td.h4 = (s.c1sq + s.c2) / 12;
  return td;
}

namespace detail {

inline bool integral_coords(const std::vector<Rat>& v) {
  for (const auto& x : v)
    if (!poly::rat_is_integer(x)) return false;
  return true;
}

inline bool integral_surface(const SurfaceData& s) {
  if (!poly::rat_is_integer(s.c1sq) || !poly::rat_is_integer(s.c2)) return false;
  if (!integral_coords(s.c1_coords)) return false;
  for (const auto& row : s.pic_form)
    if (!integral_coords(row)) return false;
  return true;
}

}  // namespace detail

/// Exact χ(X, SᵐT*_X ⊗ L) by Hirzebruch–Riemann–Roch.  The Chern roots of
/// SᵐT*⊗L are λᵢ = −(iα + (m−i)β) + ℓ for i = 0..m, with α, β the roots of
/// T_X (α+β = c₁, αβ = c₂) and ℓ = c₁(L); the power sums over i collapse to
/// Σi = m(m+1)/2, Σi² = m(m+1)(2m+1)/6, Σi(m−i) = m(m+1)(m−1)/6, so
///   ch₀ = m+1,
///   ch₁ = −S₁·c₁ + (m+1)ℓ,
///   ch₂ = ½·(S₂(c₁²−2c₂) + 2S₁₁c₂ − 2S₁·c₁·ℓ + (m+1)ℓ²),
/// and χ = ch₂ + ch₁·c₁/2 + ch₀·(c₁²+c₂)/12.
///
/// For geometric input data (integral twist over an integral surface whose
/// Noether quotient is integral) the result must be an integer; a violation
/// signals a bug in the engine, not a data condition.
inline Rat chi_sym(const SurfaceData& s, long m, const TwistClass& l) {
  if (m < 0) throw UsageError("chi_sym: m must be >= 0");
  if (l.coords.size() != s.rank()) throw UsageError("chi_sym: twist/basis size mismatch");
  const Rat mm = m;
  const Rat s1 = mm * (mm + 1) / 2;
  const Rat s2 = mm * (mm + 1) * (2 * mm + 1) / 6;
  const Rat s11 = mm * (mm + 1) * (mm - 1) / 6;
  const Rat ell_c1 = ring::pic_pair(s, l.coords, s.c1_coords);
  const Rat ell2 = ring::pic_pair(s, l.coords, l.coords);

  const Rat ch0 = mm + 1;
  const Rat ch1_c1 = -s1 * s.c1sq + (mm + 1) * ell_c1;
  const Rat ch2 =
      (s2 * (s.c1sq - 2 * s.c2) + 2 * s11 * s.c2 - 2 * s1 * ell_c1 + (mm + 1) * ell2) / 2;
  const Rat chi = ch2 + ch1_c1 / 2 + ch0 * (s.c1sq + s.c2) / 12;

  if (detail::integral_coords(l.coords) && detail::integral_surface(s) &&
      poly::rat_is_integer((s.c1sq + s.c2) / 12))
    require_internal(poly::rat_is_integer(chi),
                     "chi_sym: non-integral Euler characteristic on integral data");
  return chi;
}

/// χ of the invariant 2-jet bundle E_{2,m}T*_X ⊗ L through the graded pieces
/// ⊕_{0≤j≤m/3} S^{m−3j}T*_X ⊗ K_X^j (χ is additive over the filtration).
inline Rat chi_e2m(const SurfaceData& s, long m, const TwistClass& l) {
  if (m < 0) throw UsageError("chi_e2m: m must be >= 0");
  Rat total = 0;
  for (long j = 0; 3 * j <= m; ++j)
    total += chi_sym(s, m - 3 * j, twist_add(l, twist_canonical(s, j)));
  return total;
}

// ---- exact interpolation ---------------------------------------------------

namespace detail {

/// Monomial coefficients (c₀..c_{n−1}) of the unique degree < n polynomial
/// through n points with distinct abscissae, via Newton divided differences.
inline std::vector<Rat> poly_interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
  const size_t n = pts.size();
  if (n == 0) throw Error("poly_interpolate: no points");
  // Divided-difference coefficients dd[k] = f[x0..xk].
  std::vector<Rat> dd;
  std::vector<Rat> column;
  for (const auto& p : pts) column.push_back(p.second);
  dd.push_back(column[0]);
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = 0; i + level < n; ++i) {
      const Rat dx = pts[i + level].first - pts[i].first;
      if (dx == 0) throw Error("poly_interpolate: repeated abscissa");
      column[i] = (column[i + 1] - column[i]) / dx;
    }
    column.pop_back();
    dd.push_back(column[0]);
  }
  // Expand the Newton form dd[k]·Π_{j<k}(x − x_j) into monomials.
  std::vector<Rat> coeffs(n, 0);
  std::vector<Rat> basis = {1};  // monomial coefficients of the running product
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < basis.size(); ++i) coeffs[i] += dd[k] * basis[i];
    if (k + 1 < n) {
      // multiply the running product by (x − x_k)
      basis.insert(basis.begin(), 0);
      for (size_t i = 0; i + 1 < basis.size(); ++i) basis[i] -= pts[k].first * basis[i + 1];
    }
  }
  return coeffs;
}

}  // namespace detail

/// The exact m⁴-coefficient of the quasi-polynomial m ↦ χ(E_{2,m}T*⊗L),
/// extracted by exact interpolation separately on each residue class
/// m mod 3 (7 sample points per class, so two spare points certify that the
/// degree really is ≤ 4) and cross-checked for agreement between classes.
inline Rat leading_coeff_chi_e2m(const SurfaceData& s, const TwistClass& l) {
  Rat leading;
  bool first = true;
  for (long r = 0; r < 3; ++r) {
    std::vector<std::pair<Rat, Rat>> pts;
    for (long t = 0; t < 7; ++t) {
      const long m = r + 3 * t;
      pts.emplace_back(Rat(m), chi_e2m(s, m, l));
    }
    std::vector<Rat> coeffs = detail::poly_interpolate(pts);
    require_internal(coeffs[5] == 0 && coeffs[6] == 0,
                     "leading_coeff_chi_e2m: residue class not a degree-4 polynomial");
    if (first) {
      leading = coeffs[4];
      first = false;
    } else {
      require_internal(coeffs[4] == leading,
                       "leading_coeff_chi_e2m: residue classes disagree on the m^4 coefficient");
    }
  }
  return leading;
}

inline Rat leading_coeff_chi_e2m(const SurfaceData& s) {
  return leading_coeff_chi_e2m(s, twist_zero(s));
}

/// The exact m³-coefficient of the polynomial m ↦ χ(SᵐT*⊗L) (a single
/// polynomial, no residue classes), with two spare points certifying the
/// degree bound.
inline Rat leading_coeff_chi_sym(const SurfaceData& s, const TwistClass& l) {
  std::vector<std::pair<Rat, Rat>> pts;
  for (long m = 0; m < 6; ++m) pts.emplace_back(Rat(m), chi_sym(s, m, l));
  std::vector<Rat> coeffs = detail::poly_interpolate(pts);
  require_internal(coeffs[4] == 0 && coeffs[5] == 0,
                   "leading_coeff_chi_sym: not a degree-3 polynomial");
  return coeffs[3];
}

/// Rank of E_{2,m}T*_X: the number of monomials (f′)^α (f′∧f″)^j with
/// α₁+α₂+3j = m, i.e. Σ_{j=0}^{⌊m/3⌋} (m−3j+1).
inline long rank_e2m(long m) {
  if (m < 0) throw UsageError("rank_e2m: m must be >= 0");
  long total = 0;
  for (long j = 0; 3 * j <= m; ++j) total += m - 3 * j + 1;
  return total;
}

}  // namespace hypercert::rr
