#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypercert/errors.hpp"
#include "hypercert/rational.hpp"
#include "hypercert/surface.hpp"

namespace hypercert::thresholds {

using poly::Rat;
using ring::SurfaceData;

enum class BoundKind { theta1, theta1m, theta2, theta2m };

/// Certified window for a jet threshold.  Absent ends are unknown, not
/// infinite; `m` is meaningful only for the per-weight kinds.
struct ThresholdBound {
  BoundKind kind;
  long m = 0;
  std::optional<Rat> lower;
  std::optional<Rat> upper;
  std::string provenance;
};

inline ThresholdBound make_bound(BoundKind kind, long m, std::optional<Rat> lower,
                                 std::optional<Rat> upper, std::string provenance) {
  if (lower && upper && *lower > *upper) throw InternalError("threshold bound: lower > upper");
  return {kind, m, std::move(lower), std::move(upper), std::move(provenance)};
}

/// Outcome of one strict sign test; margin is LHS − RHS of the deciding
/// inequality, so holds ⇔ margin > 0 and a boundary margin counts as failure.
/// Hypotheses that are assumed rather than computed ride along as strings.
struct Verdict {
  std::string criterion;
  bool holds = false;
  Rat margin;
  std::vector<std::string> assumptions;
};

inline Verdict make_verdict(std::string criterion, Rat margin,
                            std::vector<std::string> assumptions = {}) {
  bool holds = margin > 0;
  return {std::move(criterion), holds, std::move(margin), std::move(assumptions)};
}

// ---- jet-threshold bounds --------------------------------------------------

/// 1-jet window for a smooth degree-d surface in P³: 1/(d−4) ≤ θ₁ ≤ 2/(d−4).
inline ThresholdBound theta1_bounds(long d) {
  if (d <= 4) throw UsageError("theta1_bounds: degree must be >= 5 (surface of general type)");
  return make_bound(BoundKind::theta1, 0, Rat(1, d - 4), Rat(2, d - 4),
                    "symmetric-differential vanishing range + section witness at m = d-2");
}

/// Per-weight 1-jet lower bound min(2, 1+(d−1)/m)/(d−4).
inline Rat theta1m_lower(long d, long m) {
  if (d <= 4) throw UsageError("theta1m_lower: degree must be >= 5");
  if (m < 1) throw UsageError("theta1m_lower: weight must be >= 1");
  Rat inner = Rat(1) + Rat(d - 1, m);
  if (inner > 2) inner = 2;
  return inner / (d - 4);
}

/// Per-weight 2-jet lower bound −1/(2m) + (2 − 7/(2m))/(d−4), m ∈ {3,4,5}.
inline Rat theta2m_lower(long d, long m) {
  if (m < 3 || m > 5) throw UsageError("theta2m_lower: weight must be 3, 4 or 5");
  if (d < 6) throw UsageError("theta2m_lower: degree must be >= 6");
  return Rat(-1, 2 * m) + (Rat(2) - Rat(7, 2 * m)) / (d - 4);
}

/// θ₂ ≥ min(θ₂,₃, θ₂,₄, θ₂,₅, θ₁low/2 − 1/6); the last slot couples the
/// 1-jet bound into the 2-jet threshold.
inline Rat theta2_lower_combination(const Rat& t23, const Rat& t24, const Rat& t25,
                                    const Rat& theta1_low) {
  Rat fourth = theta1_low / 2 - Rat(1, 6);
  return std::min({t23, t24, t25, fourth});
}

/// The assembled very-generic 2-jet lower bound.  The coupling slot always
/// realizes the min, so the value collapses to −1/6 + 1/(2(d−4)); the closed
/// form is re-asserted on every call.
inline Rat theta2_pipeline_lower(long d) {
  Rat t1_low = *theta1_bounds(d).lower;
  Rat out = theta2_lower_combination(theta2m_lower(d, 3), theta2m_lower(d, 4),
                                     theta2m_lower(d, 5), t1_low);
  require_internal(out == Rat(-1, 6) + Rat(1, 2 * (d - 4)),
                   "theta2 pipeline: closed form mismatch");
  return out;
}

inline ThresholdBound theta2_bounds(long d) {
  return make_bound(BoundKind::theta2, 0, theta2_pipeline_lower(d), std::nullopt,
                    "min-combination of weight 3..5 bounds with the 1-jet coupling, very generic");
}

// ---- Chern-number sign tests -----------------------------------------------

inline Verdict check_gg_existence(const SurfaceData& s) {
  return make_verdict("13*c1^2 - 9*c2 > 0", 13 * s.c1sq - 9 * s.c2);
}

inline Verdict check_miyaoka(const SurfaceData& s) {
  return make_verdict("c1^2 - 2*c2 > 0", s.c1sq - 2 * s.c2);
}

/// c₁² > (9/7)c₂, cleared of the denominator.
inline Verdict check_strong_bogomolov(const SurfaceData& s) {
  return make_verdict("7*c1^2 - 9*c2 > 0", 7 * s.c1sq - 9 * s.c2);
}

inline Verdict check_bogomolov(const SurfaceData& s) {
  return make_verdict("c1^2 - c2 > 0", s.c1sq - s.c2);
}

// ---- hyperbolicity criterion -----------------------------------------------

/// c₁²(13+12θ₂) > 9c₂ with θ₂ replaced by a certified lower bound.  The
/// substitution is conservative only while 13+12θ₂low > 0 (the inequality
/// weakens as θ₂ decreases), so the gate is tested first and a nonpositive
/// gate fails the verdict with the gate itself as margin.
inline Verdict check_main_theorem_with(const SurfaceData& s, const Rat& theta2_low,
                                       std::vector<std::string> assumptions = {}) {
  Rat gate = Rat(13) + 12 * theta2_low;
  if (gate <= 0)
    return {"main: 13 + 12*theta2_low > 0", false, gate, std::move(assumptions)};
  return make_verdict("main: c1^2*(13 + 12*theta2_low) - 9*c2 > 0", s.c1sq * gate - 9 * s.c2,
                      std::move(assumptions));
}

inline Verdict check_main_theorem(long d) {
  if (d < 6) throw UsageError("check_main_theorem: degree must be >= 6");
  return check_main_theorem_with(
      ring::p3_surface(d), theta2_pipeline_lower(d),
      {"Pic(X) = Z (Noether-Lefschetz; very generic, assumed)",
       "theta2 lower bound -1/6 + 1/(2(d-4)) (very generic, assumed)"});
}

// ---- multi-foliation sign tests --------------------------------------------

struct FoliationVerdicts {
  Verdict linear;     // m(c₁²−c₂) + c₁·F > 0
  Verdict quadratic;  // m²(4c₁²−3c₂) + m(5c₁²−3c₂) + (8m+4)c₁·F + 3F² − (3u₁−c₁)·G₁ > 0
};

inline FoliationVerdicts check_foliation_criterion(const SurfaceData& s, long m, const Rat& c1F,
                                                   const Rat& F2, const Rat& u1G1,
                                                   const Rat& c1G1) {
  if (m < 1) throw UsageError("foliation criterion: m must be >= 1");
  Rat lin = m * (s.c1sq - s.c2) + c1F;
  Rat quad = m * m * (4 * s.c1sq - 3 * s.c2) + m * (5 * s.c1sq - 3 * s.c2) + (8 * m + 4) * c1F +
             3 * F2 - (3 * u1G1 - c1G1);
  return {make_verdict("m*(c1^2 - c2) + c1.F > 0", lin),
          make_verdict("foliation quadratic > 0", quad)};
}

/// The m-independent positivity pair (4c₁²−3c₂, 5c₁²−3c₂); both strictly
/// positive makes the quadratic verdict pass for every m ≥ 1 and every
/// effective F with c₁·F ≥ 0, F² ≥ 0, G₁ = 0.
inline std::pair<Rat, Rat> foliation_quadratics(const SurfaceData& s) {
  return {4 * s.c1sq - 3 * s.c2, 5 * s.c1sq - 3 * s.c2};
}

// ---- degree sweep ----------------------------------------------------------

struct SweepRow {
  long d = 0;
  Rat c1sq;
  Rat c2;
  Rat theta1_low;
  Rat theta1_up;
  std::optional<Rat> theta2_low;    // d ≥ 6 only
  Rat gg_margin;                    // 13c₁² − 9c₂
  Rat quad1;                        // 4c₁² − 3c₂
  Rat quad2;                        // 5c₁² − 3c₂
  std::optional<Rat> main_margin;   // d ≥ 6 only
  bool gg_holds = false;
  bool foliation_holds = false;
  bool main_holds = false;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::optional<long> first_gg;
  std::optional<long> first_foliation;
  std::optional<long> first_main;
};

inline SweepResult degree_sweep(long dmin, long dmax) {
  if (dmin < 5) throw UsageError("degree_sweep: start at degree >= 5");
  if (dmin > dmax) throw UsageError("degree_sweep: empty degree range");
  SweepResult out;
  for (long d = dmin; d <= dmax; ++d) {
    SurfaceData s = ring::p3_surface(d);
    SweepRow r;
    r.d = d;
    r.c1sq = s.c1sq;
    r.c2 = s.c2;
    ThresholdBound t1 = theta1_bounds(d);
    r.theta1_low = *t1.lower;
    r.theta1_up = *t1.upper;
    Verdict gg = check_gg_existence(s);
    r.gg_margin = gg.margin;
    r.gg_holds = gg.holds;
    auto [q1, q2] = foliation_quadratics(s);
    r.quad1 = q1;
    r.quad2 = q2;
    r.foliation_holds = q1 > 0 && q2 > 0;
    if (d >= 6) {
      r.theta2_low = theta2_pipeline_lower(d);
      Verdict mv = check_main_theorem(d);
      r.main_margin = mv.margin;
      r.main_holds = mv.holds;
    }
    if (r.gg_holds && !out.first_gg) out.first_gg = d;
    if (r.foliation_holds && !out.first_foliation) out.first_foliation = d;
    if (r.main_holds && !out.first_main) out.first_main = d;
    out.rows.push_back(std::move(r));
  }
  return out;
}

}  // namespace hypercert::thresholds
