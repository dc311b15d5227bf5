#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hypercert/errors.hpp"
#include "hypercert/rational.hpp"

namespace hypercert::ring {

using poly::Rat;

/// Numerical invariants and Picard data of a smooth projective surface:
/// c₁² and c₂ as numbers, an ordered divisor basis with its intersection
/// pairing, and the coordinates of c₁ in that basis.
struct SurfaceData {
  Rat c1sq;
  Rat c2;
  std::vector<std::string> pic_basis;
  std::vector<std::vector<Rat>> pic_form;
  std::vector<Rat> c1_coords;

  size_t rank() const { return pic_basis.size(); }
};

inline Rat pic_pair(const SurfaceData& s, const std::vector<Rat>& x, const std::vector<Rat>& y) {
  if (x.size() != s.rank() || y.size() != s.rank())
    throw Error("pic_pair: coordinate length does not match basis");
  Rat total = 0;
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j) total += x[i] * s.pic_form[i][j] * y[j];
  return total;
}

/// Validating constructor used by every entry point.
inline SurfaceData make_surface(Rat c1sq, Rat c2, std::vector<std::string> pic_basis,
                                std::vector<std::vector<Rat>> pic_form,
                                std::vector<Rat> c1_coords) {
  SurfaceData s{std::move(c1sq), std::move(c2), std::move(pic_basis), std::move(pic_form),
                std::move(c1_coords)};
  const size_t n = s.rank();
  if (n == 0) throw UsageError("surface: empty Picard basis");
  if (s.pic_form.size() != n) throw UsageError("surface: pairing matrix row count != basis size");
  for (const auto& row : s.pic_form)
    if (row.size() != n) throw UsageError("surface: pairing matrix is not square");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (s.pic_form[i][j] != s.pic_form[j][i])
        throw UsageError("surface: pairing matrix is not symmetric");
  if (s.c1_coords.size() != n) throw UsageError("surface: c1 coordinate length != basis size");
  if (pic_pair(s, s.c1_coords, s.c1_coords) != s.c1sq)
    throw UsageError("surface: c1 coordinates do not pair to c1sq");
  return s;
}

/// Smooth surface of degree d in P³: c₁² = d(d−4)², c₂ = d(d²−4d+6),
/// Pic basis the hyperplane class h with h² = d, c₁ = (4−d)h.
inline SurfaceData p3_surface(long d) {
  if (d < 1) throw UsageError("p3_surface: degree must be >= 1");
  Rat dd = d;
  return make_surface(dd * (d - 4) * (d - 4), dd * (d * d - 4 * d + 6), {"h"}, {{dd}},
                      {Rat(4 - d)});
}

inline Rat rat_from_json(const nlohmann::json& j) {
  if (j.is_string()) return poly::rat_parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw ParseError("expected rational as \"p/q\" string or integer, got: " + j.dump());
}

/// Load {c1sq, c2, pic_basis, pic_form, c1_coords} with rationals as "p/q"
/// strings (plain integers also accepted).
inline SurfaceData surface_from_json(const nlohmann::json& j) {
  for (const char* key : {"c1sq", "c2", "pic_basis", "pic_form", "c1_coords"})
    if (!j.contains(key)) throw ParseError(std::string("surface JSON missing field '") + key + "'");
  std::vector<std::string> basis = j.at("pic_basis").get<std::vector<std::string>>();
  std::vector<std::vector<Rat>> form;
  for (const auto& row : j.at("pic_form")) {
    std::vector<Rat> r;
    for (const auto& entry : row) r.push_back(rat_from_json(entry));
    form.push_back(std::move(r));
  }
  std::vector<Rat> c1;
  for (const auto& entry : j.at("c1_coords")) c1.push_back(rat_from_json(entry));
  return make_surface(rat_from_json(j.at("c1sq")), rat_from_json(j.at("c2")), std::move(basis),
                      std::move(form), std::move(c1));
}

// ---- cohomology classes ----------------------------------------------------

/// Element of the even cohomology H⁰ ⊕ H² ⊕ H⁴ modeled numerically: an H⁰
/// multiple, H² coordinates in pic_basis, and an H⁴ multiple of the point
/// class.  Products beyond H⁴ truncate to zero.
struct CohClass {
  Rat h0;
  std::vector<Rat> h2;
  Rat h4;
};

inline CohClass coh_zero(const SurfaceData& s) { return {0, std::vector<Rat>(s.rank(), 0), 0}; }

inline CohClass coh_one(const SurfaceData& s) {
  CohClass c = coh_zero(s);
  c.h0 = 1;
  return c;
}

inline CohClass coh_point(const SurfaceData& s, Rat mult = 1) {
  CohClass c = coh_zero(s);
  c.h4 = std::move(mult);
  return c;
}

inline CohClass coh_h2(const SurfaceData& s, std::vector<Rat> coords) {
  if (coords.size() != s.rank()) throw Error("coh_h2: coordinate length does not match basis");
  CohClass c = coh_zero(s);
  c.h2 = std::move(coords);
  return c;
}

inline CohClass coh_c1(const SurfaceData& s) { return coh_h2(s, s.c1_coords); }

inline CohClass coh_c2(const SurfaceData& s) { return coh_point(s, s.c2); }

/// K_X = −c₁ as an h2 class.
inline CohClass coh_canonical(const SurfaceData& s) {
  CohClass c = coh_c1(s);
  for (auto& x : c.h2) x = -x;
  return c;
}

inline bool coh_is_zero(const CohClass& c) {
  if (c.h0 != 0 || c.h4 != 0) return false;
  for (const auto& x : c.h2)
    if (x != 0) return false;
  return true;
}

inline bool operator==(const CohClass& a, const CohClass& b) {
  return a.h0 == b.h0 && a.h2 == b.h2 && a.h4 == b.h4;
}

inline CohClass coh_add(const CohClass& a, const CohClass& b) {
  if (a.h2.size() != b.h2.size()) throw Error("coh_add: mixed surfaces");
  CohClass c = a;
  c.h0 += b.h0;
  for (size_t i = 0; i < c.h2.size(); ++i) c.h2[i] += b.h2[i];
  c.h4 += b.h4;
  return c;
}

inline CohClass coh_scale(const Rat& r, const CohClass& a) {
  CohClass c = a;
  c.h0 *= r;
  for (auto& x : c.h2) x *= r;
  c.h4 *= r;
  return c;
}

inline CohClass coh_neg(const CohClass& a) { return coh_scale(-1, a); }

inline CohClass coh_sub(const CohClass& a, const CohClass& b) {
  return coh_add(a, coh_neg(b));
}

/// Cup product; H²·H² lands in H⁴ through the Picard pairing, anything
/// beyond H⁴ truncates to zero.
inline CohClass coh_mul(const SurfaceData& s, const CohClass& a, const CohClass& b) {
  if (a.h2.size() != s.rank() || b.h2.size() != s.rank()) throw Error("coh_mul: mixed surfaces");
  CohClass c = coh_zero(s);
  c.h0 = a.h0 * b.h0;
  for (size_t i = 0; i < s.rank(); ++i) c.h2[i] = a.h0 * b.h2[i] + b.h0 * a.h2[i];
  c.h4 = a.h0 * b.h4 + b.h0 * a.h4 + pic_pair(s, a.h2, b.h2);
  return c;
}

}  // namespace hypercert::ring
