#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hypercert/errors.hpp"
#include "hypercert/mpoly.hpp"

namespace hypercert::poly {

/// p as scale * primitive, where primitive has coprime integer coefficients
/// and positive leading (graded-lex) coefficient.  Zero stays {0, 1}.
struct IntNormalized {
  MPoly primitive;
  Rat scale;
};

inline IntNormalized int_normalize(const MPoly& p) {
  if (p.is_zero()) return {p, 1};
  Int den_lcm = 1, num_gcd = 0;
  for (const auto& [e, c] : p.terms()) {
    den_lcm = lcm(den_lcm, rat_den(c));
    num_gcd = gcd(num_gcd, rat_num(c));
  }
  Rat factor(den_lcm, num_gcd);  // multiply by this to get the primitive
  if (factor < 0) factor = -factor;
  if (p.leading_coeff() < 0) factor = -factor;
  return {factor * p, Rat(1) / factor};
}

namespace detail {

inline int degw(const MPoly& p, size_t xi) {
  int d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[xi]);
  return d;
}

/// Coefficient of x^k viewed univariately in variable index xi (x stays in
/// the variable list with exponent 0).
inline MPoly coeffw(const MPoly& p, size_t xi, int k) {
  MPoly r = MPoly::zero(p.vars());
  for (const auto& [e, c] : p.terms())
    if (e[xi] == k) {
      Exps d = e;
      d[xi] = 0;
      r += MPoly::monomial(c, p.vars(), std::move(d));
    }
  return r;
}

inline MPoly lcw(const MPoly& p, size_t xi) { return coeffw(p, xi, degw(p, xi)); }

inline MPoly mul_var_pow(const MPoly& p, size_t xi, int k) {
  MPoly r = MPoly::zero(p.vars());
  for (const auto& [e, c] : p.terms()) {
    Exps d = e;
    d[xi] += k;
    r += MPoly::monomial(c, p.vars(), std::move(d));
  }
  return r;
}

/// Pseudo-remainder of a by b in variable index xi:
/// lc(b)^(deg a - deg b + 1) * a  ≡  prem  (mod b).
inline MPoly prem(MPoly a, const MPoly& b, size_t xi) {
  int db = degw(b, xi);
  MPoly lb = lcw(b, xi);
  int e = degw(a, xi) - db + 1;
  while (!a.is_zero() && degw(a, xi) >= db) {
    MPoly la = lcw(a, xi);
    a = lb * a - mul_var_pow(la, xi, degw(a, xi) - db) * b;
    --e;
  }
  for (; e > 0; --e) a = lb * a;
  return a;
}

inline MPoly exact_div_internal(const MPoly& num, const MPoly& den, const char* who) {
  auto q = num.exact_quotient_by(den);
  require_internal(q.has_value(), std::string(who) + ": division expected exact was not");
  return *q;
}

}  // namespace detail

inline MPoly gcd_mpoly(const MPoly& p, const MPoly& q);

namespace detail {

/// gcd of the univariate-in-x contents, i.e. gcd of all x-coefficients.
inline MPoly content_wrt(const MPoly& p, size_t xi) {
  MPoly c = MPoly::zero(p.vars());
  for (int k = 0; k <= degw(p, xi); ++k) {
    MPoly ck = coeffw(p, xi, k);
    if (ck.is_zero()) continue;
    c = gcd_mpoly(c, ck);
    if (c.is_constant()) break;  // gcd already a unit
  }
  return c;
}

/// Subresultant polynomial-remainder-sequence gcd of two x-primitive inputs.
inline MPoly prs_gcd_primitive(MPoly a, MPoly b, size_t xi) {
  if (degw(a, xi) < degw(b, xi)) std::swap(a, b);
  MPoly g = MPoly::constant(1, a.vars());
  MPoly h = g;
  while (true) {
    int delta = degw(a, xi) - degw(b, xi);
    MPoly r = prem(a, b, xi);
    if (r.is_zero()) break;
    if (degw(r, xi) == 0) return MPoly::constant(1, a.vars());
    MPoly divisor = g * h.pow(delta);
    a = b;
    b = exact_div_internal(r, divisor, "subresultant PRS");
    g = lcw(a, xi);
    h = delta == 0 ? h
        : delta == 1
            ? g
            : exact_div_internal(g.pow(delta), h.pow(delta - 1), "subresultant PRS (psi)");
  }
  // b is the last nonzero remainder; strip its content in x.
  MPoly cont = content_wrt(b, xi);
  return exact_div_internal(b, cont, "subresultant PRS (primitive part)");
}

inline Exps monomial_content_exps(const MPoly& p) {
  Exps mins;
  for (const auto& [e, c] : p.terms()) {
    if (mins.empty()) mins = e;
    else
      for (size_t i = 0; i < e.size(); ++i) mins[i] = std::min(mins[i], e[i]);
  }
  return mins;
}

}  // namespace detail

/// A greatest common divisor over Q, canonicalized to integer-primitive form
/// with positive leading coefficient (so every nonzero constant gcd is 1).
inline MPoly gcd_mpoly(const MPoly& p, const MPoly& q) {
  if (p.is_zero() && q.is_zero()) return p;
  if (p.is_zero()) return int_normalize(q).primitive;
  if (q.is_zero()) return int_normalize(p).primitive;

  auto merged = MPoly::merge_vars(p.vars(), q.vars());
  MPoly a = p.with_vars(merged), b = q.with_vars(merged);

  // Split off the common monomial factor first; it both feeds the result and
  // keeps the PRS small.
  Exps ma = detail::monomial_content_exps(a), mb = detail::monomial_content_exps(b);
  Exps common(merged.size(), 0);
  for (size_t i = 0; i < merged.size(); ++i) common[i] = std::min(ma[i], mb[i]);
  MPoly common_mono = MPoly::monomial(1, merged, common);
  MPoly mono_a = MPoly::monomial(1, merged, ma), mono_b = MPoly::monomial(1, merged, mb);
  a = detail::exact_div_internal(a, mono_a, "monomial content");
  b = detail::exact_div_internal(b, mono_b, "monomial content");

  MPoly core;
  if (a.is_constant() || b.is_constant()) {
    core = MPoly::constant(1, merged);
  } else {
    // Main variable: the last declared variable still present in either.
    size_t xi = merged.size();
    for (size_t i = merged.size(); i-- > 0;)
      if (detail::degw(a, i) > 0 || detail::degw(b, i) > 0) {
        xi = i;
        break;
      }
    require_internal(xi < merged.size(), "gcd_mpoly: non-constant polynomial without variables");
    if (detail::degw(a, xi) == 0 || detail::degw(b, xi) == 0) {
      // One side is free of the main variable: gcd divides that side's
      // coefficients, so recurse directly on contents.
      MPoly free_side = detail::degw(a, xi) == 0 ? a : b;
      MPoly other_cont = detail::content_wrt(detail::degw(a, xi) == 0 ? b : a, xi);
      core = gcd_mpoly(free_side, other_cont);
    } else {
      MPoly ca = detail::content_wrt(a, xi), cb = detail::content_wrt(b, xi);
      MPoly pa = detail::exact_div_internal(a, ca, "content split");
      MPoly pb = detail::exact_div_internal(b, cb, "content split");
      core = gcd_mpoly(ca, cb) * detail::prs_gcd_primitive(pa, pb, xi);
    }
  }

  MPoly result = int_normalize(common_mono * core).primitive;
  require_internal(p.exact_quotient_by(result).has_value() &&
                       q.exact_quotient_by(result).has_value(),
                   "gcd_mpoly: candidate does not divide both inputs");
  return result;
}

/// Least common multiple, same canonical form as gcd_mpoly; lcm with 0 is 0.
inline MPoly lcm_mpoly(const MPoly& p, const MPoly& q) {
  if (p.is_zero() || q.is_zero()) return MPoly::zero(MPoly::merge_vars(p.vars(), q.vars()));
  MPoly g = gcd_mpoly(p, q);
  MPoly quotient = detail::exact_div_internal(p, g, "lcm");
  return int_normalize(quotient * q).primitive;
}

}  // namespace hypercert::poly
