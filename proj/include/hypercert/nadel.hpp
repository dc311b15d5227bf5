#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypercert/errors.hpp"
#include "hypercert/linalg.hpp"
#include "hypercert/mpoly.hpp"
#include "hypercert/mpoly_gcd.hpp"
#include "hypercert/ratfunc.hpp"
#include "hypercert/rational.hpp"

namespace hypercert::nadel {

using poly::Int;
using poly::MPoly;
using poly::Rat;
using poly::RatFunc;

inline const std::vector<std::string>& coord_vars() {
  static const std::vector<std::string> v = {"z0", "z1", "z2", "z3"};
  return v;
}

/// Coordinates plus the deformation parameter.
inline const std::vector<std::string>& family_vars() {
  static const std::vector<std::string> v = {"z0", "z1", "z2", "z3", "a"};
  return v;
}

/// A pencil-generating quadruple s₀..s₃ of degree-d forms in z₀..z₃,
/// possibly involving the parameter a.
struct SurfaceFamily {
  long d = 0;
  std::array<MPoly, 4> s;
};

inline SurfaceFamily make_family(long d, std::array<MPoly, 4> s) {
  if (d < 1) throw UsageError("surface family: degree must be >= 1");
  for (auto& f : s) {
    f = f.with_vars(MPoly::merge_vars(family_vars(), f.vars()));
    if (f.is_zero()) throw UsageError("surface family: zero generator");
    if (!f.is_homogeneous_in(coord_vars()) || *f.degree_in_subset(coord_vars()) != d)
      throw UsageError("surface family: generator not homogeneous of the stated degree");
  }
  return {d, std::move(s)};
}

/// The deformed Fermat family z₀ᵈ+z₁ᵈ+z₂ᵈ+z₃ᵈ+a·z₀^{k₀}z₁^{k₁}z₂^{k₂}z₃^{k₃},
/// generated by s₀ = z₀^{k₀}(z₀^{d-k₀} + a·z₁^{k₁}z₂^{k₂}z₃^{k₃}) and
/// sᵢ = zᵢᵈ.
inline SurfaceFamily fermat_deformation(long d, std::array<long, 4> k) {
  if (d < 1) throw UsageError("fermat_deformation: degree must be >= 1");
  long sum = 0;
  for (long ki : k) {
    if (ki < 0) throw UsageError("fermat_deformation: negative exponent");
    sum += ki;
  }
  if (sum != d) throw UsageError("fermat_deformation: exponents must sum to the degree");
  const auto& fv = family_vars();
  std::array<MPoly, 4> s;
  s[0] = MPoly::monomial(1, fv, {static_cast<int>(d), 0, 0, 0, 0}) +
         MPoly::monomial(1, fv,
                         {static_cast<int>(k[0]), static_cast<int>(k[1]), static_cast<int>(k[2]),
                          static_cast<int>(k[3]), 1});
  for (int i = 1; i < 4; ++i) {
    std::vector<int> e(5, 0);
    e[i] = static_cast<int>(d);
    s[i] = MPoly::monomial(1, fv, e);
  }
  return make_family(d, s);
}

/// Meromorphic connection coefficients Γ̃ᵏᵢⱼ on C⁴, symmetric in (i,j).
struct Christoffel {
  long d = 0;
  std::array<std::array<std::array<RatFunc, 4>, 4>, 4> gamma;
};

/// Solve, for every unordered index pair (i,j), the 4×4 linear system
/// Σₖ Γᵏᵢⱼ ∂s_ℓ/∂z_k = ∂²s_ℓ/∂z_i∂z_j (ℓ = 0..3), then re-verify all 4·4·4
/// ordered scalar equations exactly over the polynomial ring and check that
/// every entry is z-homogeneous of degree −1.
inline Christoffel solve_connection(const SurfaceFamily& fam) {
  std::vector<std::vector<MPoly>> jac(4, std::vector<MPoly>(4));
  for (int l = 0; l < 4; ++l)
    for (int kk = 0; kk < 4; ++kk) jac[l][kk] = fam.s[l].derivative(coord_vars()[kk]);

  Christoffel out;
  out.d = fam.d;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      std::vector<MPoly> rhs;
      for (int l = 0; l < 4; ++l)
        rhs.push_back(jac[l][i].derivative(coord_vars()[j]));
      std::vector<RatFunc> sol = poly::solve_linear(
          jac, rhs, "connection equations for (i,j)=(" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
      for (int kk = 0; kk < 4; ++kk) {
        out.gamma[i][j][kk] = sol[kk];
        out.gamma[j][i][kk] = sol[kk];
      }
    }

  // Post-hoc verification over the polynomial ring (no fraction arithmetic):
  // Σₖ jac[l][k]·Nₖ·Πₖ'≠ₖ Dₖ' == ∂²s_l/∂z_i∂z_j · ΠDₖ.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::array<MPoly, 4> cof;
      for (int kk = 0; kk < 4; ++kk) {
        MPoly prod = MPoly::constant(1);
        for (int k2 = 0; k2 < 4; ++k2)
          if (k2 != kk) prod = prod * out.gamma[i][j][k2].den();
        cof[kk] = prod;
      }
      MPoly full = cof[0] * out.gamma[i][j][0].den();
      for (int l = 0; l < 4; ++l) {
        MPoly acc = MPoly::constant(0);
        for (int kk = 0; kk < 4; ++kk)
          acc = acc + jac[l][kk] * out.gamma[i][j][kk].num() * cof[kk];
        MPoly want = jac[l][i].derivative(coord_vars()[j]) * full;
        require_internal(acc == want, "connection: defining equation failed re-verification");
      }
    }

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int kk = 0; kk < 4; ++kk) {
        const RatFunc& g = out.gamma[i][j][kk];
        if (g.is_zero()) continue;
        require_internal(g.num().is_homogeneous_in(coord_vars()) &&
                             g.den().is_homogeneous_in(coord_vars()),
                         "connection: entry not z-homogeneous");
        require_internal(*g.num().degree_in_subset(coord_vars()) -
                                 *g.den().degree_in_subset(coord_vars()) ==
                             -1,
                         "connection: entry not of z-degree -1");
      }
  return out;
}

/// Effective divisor written as normalized factors with multiplicities;
/// degrees count z-variables only.
struct PoleDivisor {
  std::vector<std::pair<MPoly, int>> support;
  long total_degree = 0;
  bool residual_unmatched = false;
};

/// Least common multiple of all the Γ denominators, split into coordinate
/// hyperplanes plus caller-supplied candidate factors by repeated exact
/// division.  Anything left over is kept whole and flagged.
inline PoleDivisor pole_divisor(const Christoffel& g, const std::vector<MPoly>& candidates = {}) {
  MPoly l = MPoly::constant(1, family_vars());
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      for (int kk = 0; kk < 4; ++kk)
        if (!g.gamma[i][j][kk].is_zero()) l = poly::lcm_mpoly(l, g.gamma[i][j][kk].den());

  PoleDivisor out;
  std::vector<MPoly> factors;
  for (const auto& zi : coord_vars()) factors.push_back(MPoly::variable(zi, family_vars()));
  for (const auto& c : candidates) {
    MPoly norm = poly::int_normalize(c).primitive;
    if (!norm.is_constant()) factors.push_back(norm);
  }
  for (const auto& f : factors) {
    int mult = 0;
    while (true) {
      auto q = l.exact_quotient_by(f.with_vars(MPoly::merge_vars(l.vars(), f.vars())));
      if (!q) break;
      l = *q;
      ++mult;
    }
    if (mult > 0) out.support.emplace_back(poly::int_normalize(f).primitive, mult);
  }
  if (!l.is_constant()) {
    out.support.emplace_back(poly::int_normalize(l).primitive, 1);
    out.residual_unmatched = true;
  }
  for (const auto& [f, mult] : out.support) {
    auto deg = f.degree_in_subset(coord_vars());
    out.total_degree += mult * (deg ? *deg : 0);
  }
  return out;
}

/// The closed-form non-coordinate pole factor of the Fermat deformation,
/// d·z₀^{k₁+k₂+k₃} + a·k₀·z₁^{k₁}z₂^{k₂}z₃^{k₃} (omitted when it degenerates
/// to a monomial).
inline std::vector<MPoly> fermat_pole_candidates(long d, std::array<long, 4> k) {
  const auto& fv = family_vars();
  MPoly c = MPoly::monomial(Rat(d), fv, {static_cast<int>(k[1] + k[2] + k[3]), 0, 0, 0, 0}) +
            MPoly::monomial(Rat(k[0]), fv,
                            {0, static_cast<int>(k[1]), static_cast<int>(k[2]),
                             static_cast<int>(k[3]), 1});
  if (c.terms().size() < 2) return {};
  return {c};
}

/// Pole degree over canonical degree, (total B-degree)/(d−4).
inline Rat pole_canonical_ratio(const PoleDivisor& b, long d) {
  if (d == 4) throw UsageError("pole ratio: canonical bundle is trivial at degree 4");
  return Rat(b.total_degree, d - 4);
}

/// The critical parameter relation a^d·Πkᵢ^{kᵢ} = (−d)^d (cleared of
/// negative powers, 0⁰ = 1): the family member X_a is singular exactly on the
/// solution locus.
struct SmoothnessCriterion {
  Int k_product = 1;      // Π kᵢ^{kᵢ}
  Int critical_rhs = 0;   // (−d)^d
  std::optional<bool> nonsingular;
};

inline SmoothnessCriterion smoothness_criterion(long d, std::array<long, 4> k,
                                                std::optional<Rat> a_value = std::nullopt) {
  if (d < 1) throw UsageError("smoothness: degree must be >= 1");
  long sum = 0;
  for (long ki : k) {
    if (ki < 0) throw UsageError("smoothness: negative exponent");
    sum += ki;
  }
  if (sum != d) throw UsageError("smoothness: exponents must sum to the degree");
  SmoothnessCriterion out;
  for (long ki : k)
    if (ki > 0) out.k_product *= boost::multiprecision::pow(Int(ki), static_cast<unsigned>(ki));
  out.critical_rhs = boost::multiprecision::pow(Int(-d), static_cast<unsigned>(d));
  if (a_value)
    out.nonsingular = poly::rat_pow(*a_value, d) * Rat(out.k_product) != Rat(out.critical_rhs);
  return out;
}

/// Parameter choices and exclusion thresholds used by the degree-≥6 budget:
/// p = ⌊(d+3)/2⌋, ε = (d+1) mod 2, t₁ = p/(d−4) − 1, and for m = 3,4,5 the
/// bound t/m ≥ −1/(2m) + (2 − (3+ε/2)/m)/(d−4), alongside the uniform bound
/// −1/(2m) + (2 − 7/(2m))/(d−4).  Both families are reported; they coincide
/// exactly when ε = 1.
struct ExclusionBudget {
  long p = 0;
  long epsilon = 0;
  Rat t1;
  std::array<Rat, 3> exclusion_bounds;  // m = 3, 4, 5
  std::array<Rat, 3> uniform_bounds;    // m = 3, 4, 5
};

inline ExclusionBudget exclusion_budget(long d) {
  if (d < 6) throw UsageError("budget: requires degree >= 6");
  ExclusionBudget out;
  out.p = (d + 3) / 2;
  require_internal(out.p >= 4 && out.p <= d + 4, "budget: p out of expected range");
  out.epsilon = (d + 1) % 2;
  out.t1 = Rat(out.p, d - 4) - 1;
  for (long m = 3; m <= 5; ++m) {
    out.exclusion_bounds[m - 3] =
        Rat(-1, 2 * m) + (Rat(2) - Rat(6 + out.epsilon, 2 * m)) / (d - 4);
    out.uniform_bounds[m - 3] = Rat(-1, 2 * m) + (Rat(2) - Rat(7, 2 * m)) / (d - 4);
  }
  return out;
}

namespace detail {

inline std::vector<std::array<int, 4>> exps_of_degree(long n) {
  std::vector<std::array<int, 4>> out;
  if (n < 0) return out;
  for (int e0 = 0; e0 <= n; ++e0)
    for (int e1 = 0; e0 + e1 <= n; ++e1)
      for (int e2 = 0; e0 + e1 + e2 <= n; ++e2)
        out.push_back({e0, e1, e2, static_cast<int>(n) - e0 - e1 - e2});
  return out;
}

}  // namespace detail

/// dim H⁰(P³, SᵐΩ¹(k)): sections are symmetric m-tensors in dz₀..dz₃ with
/// degree-(k−m) polynomial coefficients killed by one-slot contraction with
/// the Euler field Σzᵢ∂/∂zᵢ; the dimension is the kernel dimension of that
/// exact-rational linear map.
inline long h0_sym_cotangent_p3(long m, long k, long cap = 20000) {
  if (m < 0) throw UsageError("h0: negative symmetric power");
  if (k - m < 0) return 0;

  const auto tensors = detail::exps_of_degree(m);
  const auto coeffs = detail::exps_of_degree(k - m);
  const long cols = static_cast<long>(tensors.size()) * static_cast<long>(coeffs.size());
  if (m == 0) return cols;

  const auto out_tensors = detail::exps_of_degree(m - 1);
  const auto out_coeffs = detail::exps_of_degree(k - m + 1);
  const long nrows =
      static_cast<long>(out_tensors.size()) * static_cast<long>(out_coeffs.size());
  if (cols > cap || nrows > cap)
    throw CapacityError("h0: matrix of size " + std::to_string(nrows) + "x" +
                        std::to_string(cols) + " exceeds cap " + std::to_string(cap));

  std::map<std::array<int, 4>, int> tensor_idx, coeff_idx;
  for (size_t i = 0; i < tensors.size(); ++i) tensor_idx[tensors[i]] = static_cast<int>(i);
  for (size_t i = 0; i < coeffs.size(); ++i) coeff_idx[coeffs[i]] = static_cast<int>(i);

  std::vector<std::map<int, Rat>> rows;
  for (const auto& beta : out_tensors)
    for (const auto& dp : out_coeffs) {
      std::map<int, Rat> row;
      for (int i = 0; i < 4; ++i) {
        if (dp[i] < 1) continue;
        std::array<int, 4> gamma = beta;
        gamma[i] += 1;
        std::array<int, 4> delta = dp;
        delta[i] -= 1;
        const int col = tensor_idx.at(gamma) * static_cast<int>(coeffs.size()) +
                        coeff_idx.at(delta);
        row[col] += Rat(beta[i] + 1);
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
  const long rank = static_cast<long>(poly::sparse_rank(std::move(rows), static_cast<int>(cols)));
  return cols - rank;
}

}  // namespace hypercert::nadel
