#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hypercert/errors.hpp"
#include "hypercert/rational.hpp"

namespace hypercert::poly {

/// Exponent vector, aligned index-for-index with the owning polynomial's
/// variable list.
using Exps = std::vector<int>;

namespace detail {

inline int exps_total(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded-lexicographic order, larger monomial first: higher total degree
/// wins, ties broken by the earlier variable carrying the larger exponent.
struct GrlexGreater {
  bool operator()(const Exps& a, const Exps& b) const {
    int ta = exps_total(a), tb = exps_total(b);
    if (ta != tb) return ta > tb;
    return a > b;
  }
};

}  // namespace detail

/// Sparse multivariate polynomial with exact rational coefficients over an
/// ordered variable list.  Canonical form: no zero coefficients stored, terms
/// ordered graded-lexicographically (leading term first).
class MPoly {
 public:
  using TermMap = std::map<Exps, Rat, detail::GrlexGreater>;

  MPoly() = default;  // zero polynomial over the empty variable list

  static MPoly zero(std::vector<std::string> vars) {
    MPoly p;
    p.vars_ = std::move(vars);
    return p;
  }

  static MPoly constant(const Rat& c, std::vector<std::string> vars = {}) {
    MPoly p = zero(std::move(vars));
    if (c != 0) p.terms_.emplace(Exps(p.vars_.size(), 0), c);
    return p;
  }

  /// The monomial c * prod vars[i]^exps[i].
  static MPoly monomial(const Rat& c, std::vector<std::string> vars, Exps exps) {
    if (vars.size() != exps.size()) throw Error("monomial: exponent/variable arity mismatch");
    for (int e : exps)
      if (e < 0) throw Error("monomial: negative exponent");
    MPoly p = zero(std::move(vars));
    if (c != 0) p.terms_.emplace(std::move(exps), c);
    return p;
  }

  /// The variable `name` as an element of a declared variable list.
  static MPoly variable(const std::string& name, std::vector<std::string> vars) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw Error("variable '" + name + "' is not declared");
    Exps e(vars.size(), 0);
    e[static_cast<size_t>(it - vars.begin())] = 1;
    return monomial(1, std::move(vars), std::move(e));
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && detail::exps_total(terms_.begin()->first) == 0);
  }

  Rat constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw Error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
  }

  /// Total degree; nullopt is the zero-polynomial sentinel.
  std::optional<int> total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return detail::exps_total(terms_.begin()->first);
  }

  std::optional<int> degree_in(const std::string& var) const {
    if (terms_.empty()) return std::nullopt;
    size_t i = var_index(var);
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }

  /// Total degree counting only the variables in `subset` (e.g. z-degree of a
  /// polynomial that also involves the deformation parameter).
  std::optional<int> degree_in_subset(const std::vector<std::string>& subset) const {
    if (terms_.empty()) return std::nullopt;
    std::vector<size_t> idx = subset_indices(subset);
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int t = 0;
      for (size_t i : idx) t += e[i];
      d = std::max(d, t);
    }
    return d;
  }

  /// True when every term has the same degree in the `subset` variables; the
  /// zero polynomial is homogeneous of every degree.
  bool is_homogeneous_in(const std::vector<std::string>& subset) const {
    if (terms_.empty()) return true;
    std::vector<size_t> idx = subset_indices(subset);
    std::optional<int> d;
    for (const auto& [e, c] : terms_) {
      int t = 0;
      for (size_t i : idx) t += e[i];
      if (!d) d = t;
      else if (*d != t) return false;
    }
    return true;
  }

  const Rat& leading_coeff() const {
    if (terms_.empty()) throw Error("leading_coeff of zero polynomial");
    return terms_.begin()->second;
  }

  /// Coefficient of a monomial, zero when absent.
  Rat coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  // ---- arithmetic ----------------------------------------------------------

  friend MPoly operator+(const MPoly& a, const MPoly& b) { return combined(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return combined(a, b, true); }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    auto [x, y] = aligned(a, b);
    MPoly r = zero(x.vars_);
    for (const auto& [ea, ca] : x.terms_)
      for (const auto& [eb, cb] : y.terms_) {
        Exps e(ea.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        auto [it, fresh] = r.terms_.emplace(std::move(e), ca * cb);
        if (!fresh) {
          it->second += ca * cb;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    return r;
  }

  friend MPoly operator*(const Rat& c, const MPoly& p) {
    MPoly r = p;
    if (c == 0) {
      r.terms_.clear();
      return r;
    }
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
  }

  friend MPoly operator*(const MPoly& p, const Rat& c) { return c * p; }

  MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
  MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
  MPoly& operator*=(const MPoly& b) { return *this = *this * b; }

  MPoly pow(int n) const {
    if (n < 0) throw UsageError("pow: negative exponent");
    MPoly result = constant(1, vars_);
    MPoly base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      base = (n >>= 1) > 0 ? base * base : base;
    }
    return result;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    auto [x, y] = aligned(a, b);
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  // ---- calculus and substitution ------------------------------------------

  MPoly derivative(const std::string& var) const {
    size_t i = var_index(var);
    MPoly r = zero(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exps d = e;
      d[i] -= 1;
      r.terms_.emplace(std::move(d), c * e[i]);
    }
    return r;
  }

  /// Substitute a rational value for one variable (the variable stays in the
  /// declared list with exponent 0 afterwards).
  MPoly substitute(const std::string& var, const Rat& value) const {
    size_t i = var_index(var);
    MPoly r = zero(vars_);
    for (const auto& [e, c] : terms_) {
      Rat scaled = c;
      for (int k = 0; k < e[i]; ++k) scaled *= value;
      if (scaled == 0) continue;
      Exps d = e;
      d[i] = 0;
      auto [it, fresh] = r.terms_.emplace(std::move(d), scaled);
      if (!fresh) {
        it->second += scaled;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
    return r;
  }

  /// Substitute a polynomial for one variable.
  MPoly substitute_poly(const std::string& var, const MPoly& value) const {
    size_t i = var_index(var);
    MPoly r = zero(vars_);
    for (const auto& [e, c] : terms_) {
      Exps d = e;
      d[i] = 0;
      MPoly term = monomial(c, vars_, std::move(d));
      r += term * value.pow(e[i]);
    }
    return r;
  }

  /// Re-embed into a superset variable list (relative order must agree).
  MPoly with_vars(const std::vector<std::string>& vars) const {
    MPoly r = zero(vars);
    std::vector<size_t> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(vars.begin(), vars.end(), vars_[i]);
      if (it == vars.end()) throw Error("with_vars: '" + vars_[i] + "' missing from target list");
      pos[i] = static_cast<size_t>(it - vars.begin());
    }
    for (const auto& [e, c] : terms_) {
      Exps d(vars.size(), 0);
      for (size_t i = 0; i < e.size(); ++i) d[pos[i]] = e[i];
      r.terms_.emplace(std::move(d), c);
    }
    return r;
  }

  /// Stable union of two declared variable lists; relative orders must agree.
  static std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                             const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& name : b)
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    // Verify both relative orders survived.
    auto respects = [&out](const std::vector<std::string>& v) {
      std::vector<size_t> idx;
      for (const auto& n : v)
        idx.push_back(static_cast<size_t>(
            std::find(out.begin(), out.end(), n) - out.begin()));
      return std::is_sorted(idx.begin(), idx.end());
    };
    if (!respects(a) || !respects(b)) throw Error("merge_vars: incompatible variable orders");
    return out;
  }

  // ---- division ------------------------------------------------------------

  /// Exact quotient q such that *this = divisor * q, or nullopt when the
  /// division has a remainder.  divisor must be nonzero.
  std::optional<MPoly> exact_quotient_by(const MPoly& divisor) const {
    if (divisor.is_zero()) throw Error("exact division by zero polynomial");
    auto [r, d] = aligned(*this, divisor);
    MPoly q = zero(r.vars_);
    const Exps& dlead = d.terms_.begin()->first;
    const Rat& dcoef = d.terms_.begin()->second;
    while (!r.terms_.empty()) {
      const Exps& rlead = r.terms_.begin()->first;
      Exps t(rlead.size());
      for (size_t i = 0; i < t.size(); ++i) {
        t[i] = rlead[i] - dlead[i];
        if (t[i] < 0) return std::nullopt;
      }
      MPoly step = monomial(r.terms_.begin()->second / dcoef, r.vars_, std::move(t));
      q += step;
      r -= step * d;
    }
    return q;
  }

  // ---- text format ---------------------------------------------------------

  /// Canonical serialization: terms in graded-lex order, ` + ` / ` - `
  /// separators, coefficients as `p/q`, exponents as `var^e` (e ≥ 2).
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rat mag = c < 0 ? Rat(-c) : c;
      if (first) {
        if (c < 0) out << "-";
        first = false;
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      std::string mono = monomial_str(e);
      if (mono.empty()) {
        out << rat_str(mag);
      } else if (mag == 1) {
        out << mono;
      } else {
        out << rat_str(mag) << " * " << mono;
      }
    }
    return out.str();
  }

  /// Parse the canonical text format over a declared variable list.
  static MPoly parse(std::string_view text, std::vector<std::string> vars);

 private:
  std::vector<std::string> vars_;
  TermMap terms_;

  size_t var_index(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) throw Error("unknown variable '" + var + "'");
    return static_cast<size_t>(it - vars_.begin());
  }

  std::vector<size_t> subset_indices(const std::vector<std::string>& subset) const {
    std::vector<size_t> idx;
    for (const auto& v : subset) {
      auto it = std::find(vars_.begin(), vars_.end(), v);
      if (it != vars_.end()) idx.push_back(static_cast<size_t>(it - vars_.begin()));
    }
    return idx;
  }

  std::string monomial_str(const Exps& e) const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first) out << "*";
      first = false;
      out << vars_[i];
      if (e[i] >= 2) out << "^" << e[i];
    }
    return out.str();
  }

  static std::pair<MPoly, MPoly> aligned(const MPoly& a, const MPoly& b) {
    if (a.vars_ == b.vars_) return {a, b};
    auto merged = merge_vars(a.vars_, b.vars_);
    return {a.with_vars(merged), b.with_vars(merged)};
  }

  static MPoly combined(const MPoly& a, const MPoly& b, bool subtract) {
    auto [x, y] = aligned(a, b);
    MPoly r = x;
    for (const auto& [e, c] : y.terms_) {
      Rat add = subtract ? Rat(-c) : c;
      auto [it, fresh] = r.terms_.emplace(e, add);
      if (!fresh) {
        it->second += add;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
    return r;
  }
};

// ---- parser ----------------------------------------------------------------

namespace detail {

struct PolyLexer {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer at offset " + std::to_string(start) +
                                       " in '" + std::string(text) + "'");
    return std::string(text.substr(start, pos - start));
  }
  std::string identifier() {
    skip_ws();
    size_t start = pos;
    auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto body = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (pos < text.size() && head(text[pos])) {
      ++pos;
      while (pos < text.size() && body(text[pos])) ++pos;
    }
    if (pos == start) throw ParseError("expected identifier at offset " + std::to_string(start) +
                                       " in '" + std::string(text) + "'");
    return std::string(text.substr(start, pos - start));
  }
};

}  // namespace detail

inline MPoly MPoly::parse(std::string_view text, std::vector<std::string> vars) {
  detail::PolyLexer lex{text};
  MPoly result = MPoly::zero(vars);
  bool expect_term = true;
  int sign = 1;
  // Leading sign.
  if (lex.accept('-')) sign = -1;
  else lex.accept('+');
  while (expect_term) {
    // One term: factors joined by '*'; each factor a rational or var^exp.
    Rat coeff = sign;
    Exps exps(vars.size(), 0);
    bool more_factors = true;
    bool saw_factor = false;
    while (more_factors) {
      char c = lex.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Int num{lex.integer()};
        Int den = 1;
        if (lex.accept('/')) {
          den = Int{lex.integer()};
          if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        }
        coeff *= Rat(num, den);
        saw_factor = true;
      } else {
        std::string name = lex.identifier();
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end())
          throw ParseError("undeclared variable '" + name + "' in '" + std::string(text) + "'");
        int e = 1;
        if (lex.accept('^')) {
          try {
            e = std::stoi(lex.integer());
          } catch (const std::exception&) {
            throw ParseError("exponent out of range in '" + std::string(text) + "'");
          }
        }
        exps[static_cast<size_t>(it - vars.begin())] += e;
        saw_factor = true;
      }
      more_factors = lex.accept('*');
    }
    if (!saw_factor) throw ParseError("empty term in '" + std::string(text) + "'");
    result += MPoly::monomial(coeff, vars, std::move(exps));
    // Separator or end.
    if (lex.accept('+')) sign = 1;
    else if (lex.accept('-')) sign = -1;
    else expect_term = false;
  }
  if (!lex.eof())
    throw ParseError("trailing garbage at offset " + std::to_string(lex.pos) + " in '" +
                     std::string(text) + "'");
  return result;
}

}  // namespace hypercert::poly
