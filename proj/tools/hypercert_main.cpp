#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypercert/euler_rr.hpp"
#include "hypercert/nadel.hpp"
#include "hypercert/report.hpp"
#include "hypercert/semple.hpp"
#include "hypercert/surface.hpp"
#include "hypercert/thresholds.hpp"

namespace {

using hypercert::CapacityError;
using hypercert::Error;
using hypercert::InternalError;
using hypercert::UsageError;
using hypercert::report::json;
using hypercert::report::make_report;
using hypercert::report::rat_json;
using hypercert::report::render;
namespace poly = hypercert::poly;
using poly::Rat;

/// Optional parallelism hint; accepted for forward compatibility, all current
/// computations finish serially well inside their budgets.
long thread_hint() {
  const char* env = std::getenv("HYPERCERT_THREADS");
  if (!env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return 1;
  return v;
}

const char* monomial_name(size_t i) {
  static const char* kNames[9] = {"u1^4",   "u1^3*u2",   "u1^2*u2^2", "u1*u2^3",  "u2^4",
                                  "u1^3*F", "u1^2*u2*F", "u1*u2^2*F", "u2^3*F"};
  return kNames[i];
}

int cmd_ring_table(bool symbolic, bool have_d, long d) {
  if (symbolic == have_d)
    throw UsageError("ring-table: pass exactly one of --symbolic or --d");
  json params, results;
  json entries = json::array();
  if (symbolic) {
    params["symbolic"] = true;
    auto table = hypercert::ring::intersection_table_symbolic();
    for (size_t i = 0; i < 9; ++i) {
      json e;
      e["monomial"] = monomial_name(i);
      e["c1sq"] = rat_json(table[i].c1sq);
      e["c2"] = rat_json(table[i].c2);
      e["c1F"] = rat_json(table[i].c1F);
      entries.push_back(std::move(e));
    }
  } else {
    params["d"] = d;
    auto table = hypercert::ring::intersection_table_x2(hypercert::ring::p3_surface(d));
    results["F"] = "h";
    for (size_t i = 0; i < 9; ++i) {
      json e;
      e["monomial"] = monomial_name(i);
      e["value"] = rat_json(table[i]);
      entries.push_back(std::move(e));
    }
  }
  results["entries"] = std::move(entries);
  std::cout << render(make_report(
      "ring-table", std::move(params), std::move(results),
      {"2-jet tower intersection ring: tautological relations + Segre integration"}));
  return 0;
}

int cmd_chi(long d, bool have_m, long m, const std::string& bundle, const std::string& twist,
            bool asymptotic) {
  if (bundle != "sym" && bundle != "e2m")
    throw UsageError("chi: --bundle must be 'sym' or 'e2m'");
  if (!have_m && !asymptotic) throw UsageError("chi: pass --m or --asymptotic");
  hypercert::ring::SurfaceData s = hypercert::ring::p3_surface(d);
  Rat t = twist.empty() ? Rat(0) : poly::rat_parse(twist);
  hypercert::rr::TwistClass l = hypercert::rr::twist_canonical(s, t);

  json params, results;
  params["d"] = d;
  params["bundle"] = bundle;
  params["twist"] = poly::rat_str(t) + " K";
  if (have_m) params["m"] = m;
  params["asymptotic"] = asymptotic;
  std::vector<std::string> provenance = {
      "chi(Sym^m T* tensor t K) by Riemann-Roch on the Chern roots"};
  if (bundle == "e2m")
    provenance.push_back("chi(E_{2,m}) summed over the graded pieces Sym^{m-3j} tensor K^j");

  if (have_m) {
    Rat chi = bundle == "sym" ? hypercert::rr::chi_sym(s, m, l) : hypercert::rr::chi_e2m(s, m, l);
    results["chi"] = rat_json(chi);
  }
  if (asymptotic) {
    if (bundle == "sym") {
      results["leading_power"] = 3;
      results["leading_coefficient"] = rat_json(hypercert::rr::leading_coeff_chi_sym(s, l));
    } else {
      results["leading_power"] = 4;
      results["leading_coefficient"] = rat_json(hypercert::rr::leading_coeff_chi_e2m(s, l));
    }
    provenance.push_back("leading coefficient by exact interpolation with degree certification");
  }
  std::cout << render(make_report("chi", std::move(params), std::move(results),
                                  std::move(provenance)));
  return 0;
}

int cmd_sweep(long dmin, long dmax, const std::string& format) {
  if (format != "json" && format != "csv")
    throw UsageError("sweep: --format must be 'json' or 'csv'");
  if (dmax > 200) throw UsageError("sweep: --dmax is capped at 200");
  hypercert::thresholds::SweepResult r = hypercert::thresholds::degree_sweep(dmin, dmax);
  if (format == "csv") {
    std::cout << hypercert::report::sweep_csv(r);
    return 0;
  }
  json params;
  params["dmin"] = dmin;
  params["dmax"] = dmax;
  params["format"] = format;
  std::cout << render(make_report(
      "sweep", std::move(params), hypercert::report::sweep_json(r),
      {"existence margin 13c1^2-9c2", "multi-foliation quadratics 4c1^2-3c2, 5c1^2-3c2",
       "main criterion c1^2(13+12 theta2_low) > 9c2 with theta2_low = -1/6+1/(2(d-4))"}));
  return 0;
}

std::array<long, 4> parse_k(const std::string& text) {
  std::array<long, 4> k{};
  std::stringstream ss(text);
  std::string piece;
  size_t at = 0;
  while (std::getline(ss, piece, ',')) {
    if (at >= 4) throw UsageError("connection: --k needs exactly four comma-separated integers");
    try {
      size_t used = 0;
      k[at] = std::stol(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw UsageError("connection: bad exponent '" + piece + "' in --k");
    }
    ++at;
  }
  if (at != 4) throw UsageError("connection: --k needs exactly four comma-separated integers");
  return k;
}

int cmd_connection(long d, const std::string& k_text, const std::string& a_text) {
  if (d < 5) throw UsageError("connection: degree must be >= 5");
  std::array<long, 4> k = parse_k(k_text);
  hypercert::nadel::SurfaceFamily fam = hypercert::nadel::fermat_deformation(d, k);
  hypercert::nadel::Christoffel g = hypercert::nadel::solve_connection(fam);
  hypercert::nadel::PoleDivisor b =
      hypercert::nadel::pole_divisor(g, hypercert::nadel::fermat_pole_candidates(d, k));
  std::optional<Rat> a_value;
  if (!a_text.empty()) a_value = poly::rat_parse(a_text);
  hypercert::nadel::SmoothnessCriterion sc =
      hypercert::nadel::smoothness_criterion(d, k, a_value);

  json params;
  params["d"] = d;
  params["k"] = json::array({k[0], k[1], k[2], k[3]});
  if (a_value) params["a"] = poly::rat_str(*a_value);

  json results;
  results["jacobian_degree"] = 4 * (d - 1);
  json gamma = json::array();
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      for (int kk = 0; kk < 4; ++kk) {
        json e;
        e["i"] = i;
        e["j"] = j;
        e["k"] = kk;
        e["num"] = g.gamma[i][j][kk].num().str();
        e["den"] = g.gamma[i][j][kk].den().str();
        gamma.push_back(std::move(e));
      }
  results["gamma"] = std::move(gamma);
  json factors = json::array();
  for (const auto& [f, mult] : b.support) {
    json e;
    e["factor"] = f.str();
    e["multiplicity"] = mult;
    factors.push_back(std::move(e));
  }
  results["pole_divisor"] = json{{"factors", std::move(factors)},
                                 {"total_degree", b.total_degree},
                                 {"residual_unmatched", b.residual_unmatched}};
  results["ratio_B_over_K"] = rat_json(hypercert::nadel::pole_canonical_ratio(b, d));
  {
    std::ostringstream rel;
    rel << "a^" << d << " * " << sc.k_product << " = " << sc.critical_rhs;
    results["smooth_critical_relation"] = rel.str();
  }
  if (sc.nonsingular) results["nonsingular"] = *sc.nonsingular;
  if (d >= 6) {
    hypercert::nadel::ExclusionBudget eb = hypercert::nadel::exclusion_budget(d);
    json budget;
    budget["p"] = eb.p;
    budget["epsilon"] = eb.epsilon;
    budget["t1"] = rat_json(eb.t1);
    json excl = json::array(), uni = json::array();
    for (int i = 0; i < 3; ++i) {
      excl.push_back(rat_json(eb.exclusion_bounds[i]));
      uni.push_back(rat_json(eb.uniform_bounds[i]));
    }
    budget["exclusion_bounds"] = std::move(excl);
    budget["uniform_bounds"] = std::move(uni);
    results["budget"] = std::move(budget);
  }
  std::cout << render(make_report(
      "connection", std::move(params), std::move(results),
      {"Christoffel solve of the defining linear system with exact residual re-check",
       "pole divisor as lcm of simplified denominators, structured divisibility",
       "critical parameter relation a^d prod k_i^{k_i} = (-d)^d",
       "degree budget p = floor((d+3)/2) with per-weight exclusion bounds"}));
  return 0;
}

int cmd_h0p3(long m, long k, long cap) {
  long dim = hypercert::nadel::h0_sym_cotangent_p3(m, k, cap);
  json params, results;
  params["m"] = m;
  params["k"] = k;
  params["cap"] = cap;
  results["dim"] = dim;
  bool in_range = k <= 2 * m - 1;
  results["in_vanishing_range"] = in_range;
  results["consistent_with_vanishing"] = !in_range || dim == 0;
  std::cout << render(make_report(
      "h0p3", std::move(params), std::move(results),
      {"H0(P3, Sym^m Omega(k)) as the one-slot Euler-contraction kernel, exact rank"}));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypercert: exact-arithmetic certification of jet-differential "
               "hyperbolicity computations for surfaces in P3"};
  app.require_subcommand(0, 1);
  (void)thread_hint();

  auto* ring = app.add_subcommand("ring-table",
                                  "nine-entry intersection table of the 2-jet tower");
  long rt_d = 0;
  bool rt_symbolic = false;
  ring->add_option("--d", rt_d, "surface degree in P3");
  ring->add_flag("--symbolic", rt_symbolic, "symbolic table over (c1^2, c2, c1.F)");

  auto* chi = app.add_subcommand("chi", "exact Euler characteristics of jet bundles");
  long chi_d = 0, chi_m = 0;
  std::string chi_bundle, chi_twist;
  bool chi_asym = false;
  chi->add_option("--d", chi_d, "surface degree in P3")->required();
  chi->add_option("--m", chi_m, "weighted degree");
  chi->add_option("--bundle", chi_bundle, "'sym' or 'e2m'")->required();
  chi->add_option("--twist", chi_twist, "twist t K with t a rational 'p/q'");
  chi->add_flag("--asymptotic", chi_asym, "certified leading coefficient");

  auto* sweep = app.add_subcommand("sweep", "degree sweep of all criteria margins");
  long sw_min = 0, sw_max = 0;
  std::string sw_format = "json";
  sweep->add_option("--dmin", sw_min, "first degree (>= 5)")->required();
  sweep->add_option("--dmax", sw_max, "last degree (<= 200)")->required();
  sweep->add_option("--format", sw_format, "'json' or 'csv'");

  auto* conn = app.add_subcommand("connection",
                                  "meromorphic connection for a deformed Fermat family");
  long cn_d = 0;
  std::string cn_k, cn_a;
  conn->add_option("--d", cn_d, "family degree (>= 5)")->required();
  conn->add_option("--k", cn_k, "deformation exponents k0,k1,k2,k3")->required();
  conn->add_option("--a", cn_a, "rational parameter value for the smoothness test");

  auto* h0 = app.add_subcommand("h0p3", "section count of Sym^m Omega^1_P3 (k)");
  long h0_m = 0, h0_k = 0, h0_cap = 20000;
  h0->add_option("--m", h0_m, "symmetric power")->required();
  h0->add_option("--k", h0_k, "twist degree")->required();
  h0->add_option("--cap", h0_cap, "matrix size cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (ring->parsed()) return cmd_ring_table(rt_symbolic, ring->count("--d") > 0, rt_d);
    if (chi->parsed())
      return cmd_chi(chi_d, chi->count("--m") > 0, chi_m, chi_bundle, chi_twist, chi_asym);
    if (sweep->parsed()) return cmd_sweep(sw_min, sw_max, sw_format);
    if (conn->parsed()) return cmd_connection(cn_d, cn_k, cn_a);
    if (h0->parsed()) return cmd_h0p3(h0_m, h0_k, h0_cap);
    std::cerr << app.help();
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
