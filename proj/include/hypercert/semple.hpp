#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "hypercert/errors.hpp"
#include "hypercert/surface.hpp"

namespace hypercert::ring {

/// Class on the 2-jet tower X₂ → X₁ → X of a surface, written as
/// Σ coeff(e₁,e₂) · u₁^{e₁} u₂^{e₂} with CohClass coefficients pulled back
/// from X.  Classes on X₁ are the e₂ = 0 part; classes on X itself are the
/// (0,0) part.
struct SempleClass {
  std::map<std::pair<int, int>, CohClass> terms;
};

inline void semple_add_term(SempleClass& c, int e1, int e2, const CohClass& coeff) {
  if (coh_is_zero(coeff)) return;
  auto key = std::make_pair(e1, e2);
  auto it = c.terms.find(key);
  if (it == c.terms.end()) {
    c.terms.emplace(key, coeff);
  } else {
    it->second = coh_add(it->second, coeff);
    if (coh_is_zero(it->second)) c.terms.erase(it);
  }
}

inline SempleClass semple_zero() { return {}; }

inline SempleClass semple_coh(const CohClass& coeff) {
  SempleClass c;
  semple_add_term(c, 0, 0, coeff);
  return c;
}

inline SempleClass semple_u1(const SurfaceData& s) {
  SempleClass c;
  semple_add_term(c, 1, 0, coh_one(s));
  return c;
}

inline SempleClass semple_u2(const SurfaceData& s) {
  SempleClass c;
  semple_add_term(c, 0, 1, coh_one(s));
  return c;
}

inline SempleClass semple_monomial(int e1, int e2, const CohClass& coeff) {
  SempleClass c;
  semple_add_term(c, e1, e2, coeff);
  return c;
}

inline SempleClass semple_add(const SempleClass& a, const SempleClass& b) {
  SempleClass c = a;
  for (const auto& [e, coeff] : b.terms) semple_add_term(c, e.first, e.second, coeff);
  return c;
}

inline SempleClass semple_scale(const Rat& r, const SempleClass& a) {
  SempleClass c;
  for (const auto& [e, coeff] : a.terms) semple_add_term(c, e.first, e.second, coh_scale(r, coeff));
  return c;
}

inline SempleClass semple_sub(const SempleClass& a, const SempleClass& b) {
  return semple_add(a, semple_scale(-1, b));
}

/// Plain graded product; no relation rewriting (see reduce).
inline SempleClass semple_mul(const SurfaceData& s, const SempleClass& a, const SempleClass& b) {
  SempleClass c;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms)
      semple_add_term(c, ea.first + eb.first, ea.second + eb.second, coh_mul(s, ca, cb));
  return c;
}

inline SempleClass semple_pow(const SurfaceData& s, const SempleClass& a, int n) {
  if (n < 0) throw UsageError("semple_pow: negative exponent");
  SempleClass r = semple_coh(coh_one(s));
  for (int i = 0; i < n; ++i) r = semple_mul(s, r, a);
  return r;
}

inline bool semple_eq(const SempleClass& a, const SempleClass& b) {
  return semple_sub(a, b).terms.empty();
}

/// Rewrite to the normal form with u₁-degree ≤ 1 and u₂-degree ≤ 1 using the
/// tower's tautological relations
///   u₁² = −c₁u₁ − c₂,
///   u₂² = −(c₁+u₁)u₂ − (2c₂ + c₁u₁),
/// the second coming from the rank-2 quotient with c₁(V₁) = c₁ + u₁ and
/// c₂(V₁) = 2c₂ + c₁u₁.  Idempotent; cohomological truncation above the real
/// dimension of X₂ happens inside the CohClass coefficients.
inline SempleClass reduce(const SempleClass& c, const SurfaceData& s) {
  const CohClass c1 = coh_c1(s);
  const CohClass c2 = coh_c2(s);
  SempleClass cur = c;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = cur.terms.begin(); it != cur.terms.end(); ++it) {
      const auto [e1, e2] = it->first;
      if (e2 >= 2) {
        CohClass coeff = it->second;
        cur.terms.erase(it);
        // multiply u1^{e1} u2^{e2-2} by u2² = −c1·u2 − u1·u2 − 2c2 − c1·u1
        semple_add_term(cur, e1, e2 - 1, coh_mul(s, coeff, coh_neg(c1)));
        semple_add_term(cur, e1 + 1, e2 - 1, coh_neg(coeff));
        semple_add_term(cur, e1, e2 - 2, coh_mul(s, coeff, coh_scale(-2, c2)));
        semple_add_term(cur, e1 + 1, e2 - 2, coh_mul(s, coeff, coh_neg(c1)));
        changed = true;
        break;
      }
      if (e1 >= 2) {
        CohClass coeff = it->second;
        cur.terms.erase(it);
        // multiply u1^{e1-2} u2^{e2} by u1² = −c1·u1 − c2
        semple_add_term(cur, e1 - 1, e2, coh_mul(s, coeff, coh_neg(c1)));
        semple_add_term(cur, e1 - 2, e2, coh_mul(s, coeff, coh_neg(c2)));
        changed = true;
        break;
      }
    }
  }
  return cur;
}

/// Integrate over X (level 0), X₁ (level 1) or X₂ (level 2): reduce, then
/// read off the coefficient of the unique top class — the point class, u₁ ×
/// point, or u₁u₂ × point; everything else pushes forward to zero.
inline Rat integrate(const SempleClass& c, int level, const SurfaceData& s) {
  if (level < 0 || level > 2) throw UsageError("integrate: level must be 0, 1 or 2");
  SempleClass normal = reduce(c, s);
  auto key = std::make_pair(level >= 1 ? 1 : 0, level == 2 ? 1 : 0);
  auto it = normal.terms.find(key);
  return it == normal.terms.end() ? Rat(0) : it->second.h4;
}

// ---- the nine-entry monomial table on X₂ -----------------------------------

inline const std::array<std::pair<int, int>, 9>& table_monomials() {
  static const std::array<std::pair<int, int>, 9> kMono = {{
      {4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4},  // pure u-monomials
      {3, 0}, {2, 1}, {1, 2}, {0, 3},          // u-monomials against F
  }};
  return kMono;
}

/// The nine values u₁⁴, u₁³u₂, u₁²u₂², u₁u₂³, u₂⁴, u₁³F, u₁²u₂F, u₁u₂²F,
/// u₂³F computed by reduce + integrate on X₂.
inline std::array<Rat, 9> intersection_table_x2(const SurfaceData& s, const CohClass& f) {
  std::array<Rat, 9> out;
  const auto& mono = table_monomials();
  for (size_t i = 0; i < 9; ++i) {
    CohClass coeff = i < 5 ? coh_one(s) : f;
    out[i] = integrate(semple_monomial(mono[i].first, mono[i].second, coeff), 2, s);
  }
  return out;
}

/// Same table with F = the first Picard basis class (h for a P³-surface).
inline std::array<Rat, 9> intersection_table_x2(const SurfaceData& s) {
  std::vector<Rat> coords(s.rank(), 0);
  coords[0] = 1;
  return intersection_table_x2(s, coh_h2(s, coords));
}

/// One table entry as an exact linear combination A·c₁² + B·c₂ + C·(c₁·F).
struct SymbolicIntersection {
  Rat c1sq;
  Rat c2;
  Rat c1F;
};

/// The table over a fully symbolic surface.  Every entry is Z-linear in the
/// pairings (c₁², c₂, c₁·F) — higher products die by degree truncation on X —
/// so the coefficients are extracted exactly by evaluating on unit-vector
/// probe surfaces, then re-verified on an independent surface.
inline std::array<SymbolicIntersection, 9> intersection_table_symbolic() {
  // Probes isolating one pairing each.  None needs to be geometric; only the
  // ring axioms matter.
  const SurfaceData probe_c1sq = make_surface(1, 0, {"e"}, {{1}}, {1});
  const SurfaceData probe_c2 = make_surface(0, 1, {"e"}, {{1}}, {0});
  const SurfaceData probe_c1F =
      make_surface(0, 0, {"e", "f"}, {{0, 1}, {1, 0}}, {1, 0});
  const SurfaceData probe_F2 =
      make_surface(0, 0, {"e", "f"}, {{0, 0}, {0, 1}}, {1, 0});
  const CohClass f_c1F = coh_h2(probe_c1F, {0, 1});
  const CohClass f_F2 = coh_h2(probe_F2, {0, 1});

  auto a = intersection_table_x2(probe_c1sq, coh_zero(probe_c1sq));
  auto b = intersection_table_x2(probe_c2, coh_zero(probe_c2));
  auto cf = intersection_table_x2(probe_c1F, f_c1F);
  auto f2 = intersection_table_x2(probe_F2, f_F2);

  std::array<SymbolicIntersection, 9> out;
  for (size_t i = 0; i < 9; ++i) {
    out[i] = {a[i], b[i], cf[i]};
    require_internal(f2[i] == 0, "symbolic table: unexpected F² dependence");
  }

  // Cross-check the linear model against a surface where all pairings are
  // simultaneously nonzero (degree-5 P³-surface, F = h).
  const SurfaceData check = p3_surface(5);
  std::vector<Rat> h(check.rank(), 0);
  h[0] = 1;
  const CohClass f = coh_h2(check, h);
  const Rat c1F = pic_pair(check, check.c1_coords, f.h2);
  auto direct = intersection_table_x2(check, f);
  for (size_t i = 0; i < 9; ++i)
    require_internal(
        out[i].c1sq * check.c1sq + out[i].c2 * check.c2 + out[i].c1F * c1F == direct[i],
        "symbolic table: linear model disagrees with direct evaluation");
  return out;
}

// ---- named intersection formulas -------------------------------------------

/// The two degeneracy pairings on X₁ for the cycle Z ~ mu − π*F: the pair
/// ((u|Z)², u|Z · π*K_X) = (m(c₁²−c₂) + c₁·F, m c₁² + c₁·F).  Both are
/// computed from the closed forms and re-verified against reduce/integrate of
/// u²(mu − π*F) and u(mu − π*F)(−c₁).
inline std::pair<Rat, Rat> miyaoka_numbers(const SurfaceData& s, long m, const CohClass& f) {
  if (m < 1) throw UsageError("miyaoka_numbers: m must be >= 1");
  const Rat c1F = pic_pair(s, s.c1_coords, f.h2);
  const Rat first = m * (s.c1sq - s.c2) + c1F;
  const Rat second = m * s.c1sq + c1F;

  const SempleClass u = semple_u1(s);
  const SempleClass z =
      semple_sub(semple_scale(m, u), semple_coh(f));
  const Rat first_ring = integrate(semple_mul(s, semple_mul(s, u, u), z), 1, s);
  const Rat second_ring =
      integrate(semple_mul(s, semple_mul(s, u, z), semple_coh(coh_neg(coh_c1(s)))), 1, s);
  require_internal(first == first_ring && second == second_ring,
                           "miyaoka_numbers: closed form disagrees with ring reduction");
  return {first, second};
}

/// (2u₁+u₂)³ · (a₁u₁ + a₂u₂ − π*F) on X₂, computed by ring reduction and
/// checked against the closed form (a₁+a₂)(13c₁² − 9c₂) + 12 c₁·F.
inline Rat dagger3(const SurfaceData& s, long a1, long a2, const CohClass& f) {
  const SempleClass u1 = semple_u1(s), u2 = semple_u2(s);
  const SempleClass base = semple_add(semple_scale(2, u1), u2);
  const SempleClass z = semple_sub(
      semple_add(semple_scale(a1, u1), semple_scale(a2, u2)), semple_coh(f));
  const Rat ring = integrate(semple_mul(s, semple_pow(s, base, 3), z), 2, s);
  const Rat closed =
      Rat(a1 + a2) * (13 * s.c1sq - 9 * s.c2) + 12 * pic_pair(s, s.c1_coords, f.h2);
  require_internal(ring == closed, "dagger3: closed form disagrees with ring reduction");
  return ring;
}

/// (2u₁+u₂)² · {Z̃} where {Z̃} = (mu₁−F)(u₂+mu₁−F), with the G₁ correction
/// passed as the two pairing numbers u₁·G₁ and c₁·G₁:
///   m²(4c₁²−3c₂) + m(5c₁²−3c₂) + (8m+4)c₁·F + 3F² − (3u₁·G₁ − c₁·G₁).
/// With G₁ = 0 the value is re-verified by ring reduction.
inline Rat tilde_z_numbers(const SurfaceData& s, long m, const CohClass& f, const Rat& g1_u1,
                           const Rat& g1_c1) {
  if (m < 1) throw UsageError("tilde_z_numbers: m must be >= 1");
  const Rat c1F = pic_pair(s, s.c1_coords, f.h2);
  const Rat F2 = pic_pair(s, f.h2, f.h2);
  const Rat mm = m;
  const Rat closed = mm * mm * (4 * s.c1sq - 3 * s.c2) + mm * (5 * s.c1sq - 3 * s.c2) +
                     (8 * mm + 4) * c1F + 3 * F2 - (3 * g1_u1 - g1_c1);
  if (g1_u1 == 0 && g1_c1 == 0) {
    const SempleClass u1 = semple_u1(s), u2 = semple_u2(s);
    const SempleClass base = semple_add(semple_scale(2, u1), u2);
    const SempleClass mu1f = semple_sub(semple_scale(m, u1), semple_coh(f));
    const SempleClass ztilde = semple_mul(s, mu1f, semple_add(u2, mu1f));
    const Rat ring = integrate(semple_mul(s, semple_mul(s, base, base), ztilde), 2, s);
    require_internal(ring == closed,
                             "tilde_z_numbers: closed form disagrees with ring reduction");
  }
  return closed;
}

// ---- weighted tautological bundles -----------------------------------------

/// Positivity flags of the weighted line bundle O(a₁, a₂) on X₂, relative to
/// the base surface.
struct WeightedFlags {
  bool rel_effective;
  bool rel_big;
  bool rel_nef;
  bool rel_ample;
};

inline WeightedFlags weighted_bundle_classify(long a1, long a2) {
  return {
      a1 + a2 >= 0 && a2 >= 0,
      a1 + a2 > 0 && a2 > 0,
      a1 >= 2 * a2 && a2 >= 0,
      a1 > 2 * a2 && a2 > 0,
  };
}

/// Weights of the direct image on X₁ of O(a₁, a₂): ⊕ O(a₁+a₂−3j), j = 0..a₂.
inline std::vector<long> direct_image_splitting(long a1, long a2) {
  if (a2 < 0) throw UsageError("direct_image_splitting: a2 must be >= 0");
  std::vector<long> out;
  for (long j = 0; j <= a2; ++j) out.push_back(a1 + a2 - 3 * j);
  return out;
}

/// (rank, dimension) of the k-th stage of the Semple tower over an
/// n-dimensional base with rank-r subbundle: always (r, n + k(r−1)).
inline std::pair<long, long> semple_dims(long n, long r, long k) {
  if (n < 1 || r < 1 || r > n || k < 0) throw UsageError("semple_dims: out-of-range arguments");
  return {r, n + k * (r - 1)};
}

}  // namespace hypercert::ring
