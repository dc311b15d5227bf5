// End-to-end acceptance gate.  Runs every contracted criterion, prints one
// [PASS]/[FAIL] line each, exits nonzero if any fail.  All comparisons are
// exact; stated runtime budgets are enforced as part of the criterion.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypercert/euler_rr.hpp"
#include "hypercert/jet.hpp"
#include "hypercert/linalg.hpp"
#include "hypercert/nadel.hpp"
#include "hypercert/semple.hpp"
#include "hypercert/surface.hpp"
#include "hypercert/thresholds.hpp"

using namespace hypercert;
using nlohmann::json;
using poly::MPoly;
using poly::Rat;
using poly::RatFunc;

namespace {

std::string g_cli_path;

struct CheckFail : std::runtime_error {
  explicit CheckFail(const std::string& what) : std::runtime_error(what) {}
};

void expect(bool ok, const std::string& msg) {
  if (!ok) throw CheckFail(msg);
}

Rat rand_rat(std::mt19937& rng, long num_range = 9, long den_range = 4) {
  std::uniform_int_distribution<long> num(-num_range, num_range);
  std::uniform_int_distribution<long> den(1, den_range);
  return Rat(num(rng), den(rng));
}

Rat rand_nonzero(std::mt19937& rng) {
  Rat r;
  do {
    r = rand_rat(rng);
  } while (r == 0);
  return r;
}

struct CliOut {
  int code = -1;
  std::string text;
};

CliOut run_cli(const std::string& args) {
  CliOut out;
  if (g_cli_path.empty()) return out;
  std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.text.append(buf, n);
  int rc = pclose(p);
  if (WIFEXITED(rc)) out.code = WEXITSTATUS(rc);
  return out;
}

// ---- criterion 1: symbolic intersection table through the CLI --------------

void criterion_ring_table() {
  expect(!g_cli_path.empty(), "no --cli path given");
  CliOut r = run_cli("ring-table --symbolic");
  expect(r.code == 0, "CLI exited with code " + std::to_string(r.code));
  json entries = json::parse(r.text).at("results").at("entries");
  expect(entries.size() == 9, "expected nine table entries");
  // (c1sq, c2, c1F) coefficients of the nine monomials
  const std::array<std::array<const char*, 3>, 9> want = {{{"0", "0", "0"},
                                                           {"1", "-1", "0"},
                                                           {"0", "1", "0"},
                                                           {"1", "-3", "0"},
                                                           {"-1", "5", "0"},
                                                           {"0", "0", "0"},
                                                           {"0", "0", "-1"},
                                                           {"0", "0", "0"},
                                                           {"0", "0", "0"}}};
  for (size_t i = 0; i < 9; ++i) {
    expect(entries[i].at("c1sq") == want[i][0] && entries[i].at("c2") == want[i][1] &&
               entries[i].at("c1F") == want[i][2],
           "entry " + entries[i].at("monomial").get<std::string>() + " mismatch");
  }
}

// ---- criterion 2: Riemann-Roch leading coefficients ------------------------

void criterion_rr_leading() {
  for (long d = 5; d <= 30; ++d) {
    ring::SurfaceData s = ring::p3_surface(d);
    rr::TwistClass z = rr::twist_zero(s);
    Rat cubic = rr::leading_coeff_chi_sym(s, z);  // residue-free interpolation
    expect(cubic == (s.c1sq - s.c2) / 6, "cubic coefficient mismatch at d=" + std::to_string(d));
    // quartic coefficient: interpolated per residue class mod 3, classes
    // re-checked for agreement inside the op
    Rat quartic = rr::leading_coeff_chi_e2m(s);
    expect(quartic == (13 * s.c1sq - 9 * s.c2) / 648,
           "quartic coefficient mismatch at d=" + std::to_string(d));
    expect(quartic == Rat(d) * (4 * d * d - 68 * d + 154) / 648,
           "quartic closed form mismatch at d=" + std::to_string(d));
  }
}

// ---- criterion 3: degree cutoffs 15 / 18 / 21 ------------------------------

void criterion_cutoffs() {
  thresholds::SweepResult r = thresholds::degree_sweep(5, 40);
  expect(r.first_gg == 15, "existence cutoff != 15");
  expect(r.first_foliation == 18, "foliation cutoff != 18");
  expect(r.first_main == 21, "main criterion cutoff != 21");
  for (const auto& row : r.rows) {
    if (row.d == 20) expect(!row.main_holds, "main criterion must fail at d=20");
    if (row.d == 21) expect(row.main_holds, "main criterion must pass at d=21");
    expect(row.gg_holds == (row.d >= 15), "existence flag wrong at d=" + std::to_string(row.d));
    expect(row.foliation_holds == (row.d >= 18),
           "foliation flag wrong at d=" + std::to_string(row.d));
  }
}

// ---- criterion 4: connection certification ---------------------------------

void verify_connection_equations(const nadel::SurfaceFamily& fam, const nadel::Christoffel& g) {
  // all 4x4 ordered (i,j) pairs x 4 values of l, re-done in rational-function
  // arithmetic independent of the solver's internal polynomial check
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int l = 0; l < 4; ++l) {
        RatFunc acc;
        for (int k = 0; k < 4; ++k)
          acc = acc + RatFunc(fam.s[l].derivative(nadel::coord_vars()[k])) * g.gamma[i][j][k];
        expect(acc == RatFunc(fam.s[l]
                                  .derivative(nadel::coord_vars()[i])
                                  .derivative(nadel::coord_vars()[j])),
               "defining equation failed at (i,j,l)=(" + std::to_string(i) + "," +
                   std::to_string(j) + "," + std::to_string(l) + ")");
      }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        const RatFunc& q = g.gamma[i][j][k];
        if (q.is_zero()) continue;
        auto nd = q.num().degree_in_subset(nadel::coord_vars());
        auto dd = q.den().degree_in_subset(nadel::coord_vars());
        expect(nd && dd && *nd - *dd == -1, "entry not homogeneous of degree -1");
      }
}

// Verifies equations + homogeneity (throws on failure: those always hold) and
// returns a message when the contracted pole-divisor clause does not.
std::string check_connection_family(long d, std::array<long, 4> k, double budget_s) {
  auto t0 = std::chrono::steady_clock::now();
  nadel::SurfaceFamily fam = nadel::fermat_deformation(d, k);
  nadel::Christoffel g = nadel::solve_connection(fam);
  verify_connection_equations(fam, g);
  nadel::PoleDivisor b = nadel::pole_divisor(g, nadel::fermat_pole_candidates(d, k));
  std::string tag = "d=" + std::to_string(d) + " k=(" + std::to_string(k[0]) + "," +
                    std::to_string(k[1]) + "," + std::to_string(k[2]) + "," +
                    std::to_string(k[3]) + ")";
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  expect(secs < budget_s, "family " + tag + " exceeded the per-family budget");
  // contracted support: all four coordinate planes plus the deformation factor
  long stated_degree = 4 + k[1] + k[2] + k[3];
  if (b.support.size() == 5 && b.total_degree == stated_degree &&
      nadel::pole_canonical_ratio(b, d) == Rat(stated_degree, d - 4))
    return "";
  return tag + ": computed " + std::to_string(b.support.size()) + " factors, degree " +
         std::to_string(b.total_degree) + ", ratio " +
         poly::rat_str(nadel::pole_canonical_ratio(b, d)) + " (contracted: 5 factors, degree " +
         std::to_string(stated_degree) + ", ratio " + poly::rat_str(Rat(stated_degree, d - 4)) +
         ")";
}

void criterion_connection() {
  std::vector<std::string> bad;
  int families = 0, with_leading_square = 0;
  auto run = [&](long d, std::array<long, 4> k) {
    ++families;
    if (k[0] >= 2) ++with_leading_square;
    std::string msg = check_connection_family(d, k, 60.0);
    if (!msg.empty()) bad.push_back(msg);
  };
  run(6, {1, 2, 2, 1});
  for (long d = 5; d <= 6; ++d)
    for (long k0 = 1; k0 <= d - 3; ++k0)
      for (long k1 = 1; k0 + k1 <= d - 2; ++k1)
        for (long k2 = 1; k0 + k1 + k2 <= d - 1; ++k2)
          run(d, {k0, k1, k2, d - k0 - k1 - k2});
  if (!bad.empty()) {
    std::string msg = "all defining equations and degree -1 homogeneity verified for " +
                      std::to_string(families) + " families, but the stated pole-divisor " +
                      "support fails for " + std::to_string(bad.size()) + " of them (every " +
                      "family with a linear leading exponent: the z0-derivative of the " +
                      "defining polynomial carries no z0 factor, so z0 divides no simplified " +
                      "denominator); first: " + bad.front() + "; the " +
                      std::to_string(with_leading_square) + " families with leading exponent " +
                      ">= 2 all match";
    throw CheckFail(msg);
  }
}

// ---- criterion 5: section counts on P3 -------------------------------------

void criterion_h0() {
  for (long m = 0; m <= 4; ++m)
    for (long k = m - 5; k <= 2 * m - 1; ++k)
      expect(nadel::h0_sym_cotangent_p3(m, k) == 0,
             "nonzero section count at (m,k)=(" + std::to_string(m) + "," + std::to_string(k) +
                 ")");
  expect(nadel::h0_sym_cotangent_p3(1, 2) == 6, "dim at (1,2) != 6");
  expect(nadel::h0_sym_cotangent_p3(3, 6) > 0, "no witness section at (3,6)");
}

// ---- criterion 6: discriminant vs resultant --------------------------------

// Textbook Sylvester resultant of f (ascending W-coefficients, degree p) and
// its formal derivative, rows in descending coefficient order.
MPoly resultant_with_derivative(const std::vector<MPoly>& a) {
  const long p = static_cast<long>(a.size()) - 1;
  const long n = 2 * p - 1;
  MPoly zero = MPoly::zero(a[0].vars());
  std::vector<std::vector<MPoly>> mat(n, std::vector<MPoly>(n, zero));
  for (long r = 0; r < p - 1; ++r)
    for (long c = 0; c <= p; ++c) mat[r][r + c] = a[p - c];
  for (long s = 0; s < p; ++s)
    for (long c = 0; c <= p - 1; ++c)
      mat[p - 1 + s][s + c] = MPoly::constant(Rat(p - c), a[0].vars()) * a[p - c];
  return poly::det_fraction_free(mat);
}

void criterion_discriminant() {
  std::mt19937 rng(20260823);
  for (int trial = 0; trial < 100; ++trial) {
    const long m = 6 + trial % 6;  // W-degrees 2 and 3, all residues of m mod 3
    const long p = m / 3, q = m % 3;
    jet::JetPoly2 jp = jet::jet_zero(m);
    std::vector<MPoly> coeffs;
    for (long j = 0; j <= p; ++j) {
      Rat c = j == p ? rand_nonzero(rng) : rand_rat(rng);
      jp = jet::jet_add(jp, jet::jet_term(m, 0, m - 3 * j, 0, j, MPoly::constant(c)));
      coeffs.push_back(
          MPoly::monomial(c, jet::jet_chart_vars(), {static_cast<int>(m - 3 * j), 0, 0, 0}));
    }
    jet::JetPoly2 delta = jet::discriminant(jp);
    expect(delta.m == (p - 1) * (3 * p + 2 * q),
           "discriminant weight != (p-1)(3p+2q) at trial " + std::to_string(trial));
    expect(delta.kweight == p * (p - 1), "discriminant K-weight != p(p-1)");
    MPoly res = resultant_with_derivative(coeffs);
    MPoly delta_expr = jet::to_jet_expr(delta);
    expect(delta_expr * coeffs.back() ==
               MPoly::constant(Rat(jet::kDiscriminantResultantRatio), res.vars()) * res,
           "discriminant disagrees with the resultant at trial " + std::to_string(trial));
  }
  // double-root inputs: delta vanishes identically
  std::mt19937 rng2(7);
  for (long m : {6L, 9L, 10L, 11L}) {
    jet::JetPoly2 root = jet::jet_sub(
        jet::jet_term(3, 0, 0, 0, 1, MPoly::constant(1)),
        jet::jet_term(3, 0, 2, 1, 0, MPoly::constant(rand_nonzero(rng2))));
    jet::JetPoly2 sq = jet::jet_mul(root, root);
    jet::JetPoly2 dbl = sq;
    if (m > 6) {
      // cofactor of full W-degree p-2 so the leading coefficient survives
      jet::JetPoly2 rest = jet::jet_zero(m - 6);
      for (long j = 0; 3 * j <= m - 6; ++j)
        rest = jet::jet_add(rest,
                            jet::jet_term(m - 6, 0, m - 6 - 3 * j, 0, j, MPoly::constant(1)));
      dbl = jet::jet_mul(sq, rest);
    }
    expect(jet::to_jet_expr(jet::discriminant(dbl)).is_zero(),
           "discriminant nonzero on a double root at m=" + std::to_string(m));
  }
}

// ---- criterion 7: invariance and proportionality ---------------------------

jet::JetPoly2 random_jet(std::mt19937& rng, long m) {
  jet::JetPoly2 out = jet::jet_zero(m);
  bool nonzero = false;
  for (const auto& key : jet::basis_monomials(m)) {
    Rat c = rand_rat(rng);
    if (c == 0) continue;
    nonzero = true;
    out = jet::jet_add(out, jet::jet_term(m, 0, key.a1, key.a2, key.j, MPoly::constant(c)));
  }
  if (!nonzero)
    out = jet::jet_add(out, jet::jet_term(m, 0, m, 0, 0, MPoly::constant(1)));
  return out;
}

void criterion_invariance() {
  std::mt19937 rng(515);
  for (long m = 1; m <= 9; ++m)
    for (const auto& key : jet::basis_monomials(m)) {
      jet::JetPoly2 b = jet::jet_term(m, 0, key.a1, key.a2, key.j, MPoly::constant(1));
      for (int trial = 0; trial < 20; ++trial) {
        jet::Reparam2 phi{rand_nonzero(rng), rand_rat(rng)};
        expect(jet::reparam_check(b, phi),
               "basis monomial failed the reparametrization law at m=" + std::to_string(m));
      }
    }

  for (int trial = 0; trial < 50; ++trial) {
    long m1 = 3 + trial % 3, m2 = 3 + (trial / 3) % 3;
    jet::JetPoly2 p1 = random_jet(rng, m1), p2 = random_jet(rng, m2);
    jet::JetPoly2 combo = jet::proportionality_combination(p1, p2);
    for (const auto& [key, coeff] : combo.terms)
      expect(key.j == 0, "cross combination is not W-free at trial " + std::to_string(trial));
    expect(jet::phi_filtration(combo).is_zero() || combo.m < 3,
           "phi of the cross combination is nonzero at trial " + std::to_string(trial));
  }

  jet::Christoffel2 base = jet::christoffel_symbolic();
  jet::JetPoly2 w = jet::wronskian_from_christoffel(base);
  for (int trial = 0; trial < 20; ++trial) {
    std::array<MPoly, 2> alpha = {MPoly::constant(rand_rat(rng)), MPoly::constant(rand_rat(rng))};
    std::array<MPoly, 2> beta = {MPoly::constant(rand_rat(rng)), MPoly::constant(rand_rat(rng))};
    expect(jet::jet_eq(jet::wronskian_from_christoffel(jet::gauge_shift(base, alpha, beta)), w),
           "gauge shift changed the covariant wronskian at trial " + std::to_string(trial));
  }
}

// ---- criterion 8: closed forms vs ring reduction ---------------------------

void criterion_closed_forms() {
  std::mt19937 rng(88);
  std::vector<ring::SurfaceData> surfaces = {
      ring::p3_surface(5), ring::p3_surface(15),
      ring::make_surface(2, 7, {"e", "f"}, {{0, 1}, {1, 0}}, {1, 1})};
  for (const auto& s : surfaces) {
    for (long a1 = -3; a1 <= 3; ++a1)
      for (long a2 = -3; a2 <= 3; ++a2) {
        std::vector<Rat> fc(s.rank());
        for (auto& x : fc) x = rand_rat(rng);
        ring::CohClass f = ring::coh_h2(s, fc);
        Rat got = ring::dagger3(s, a1, a2, f);
        Rat closed = Rat(a1 + a2) * (13 * s.c1sq - 9 * s.c2) +
                     12 * ring::pic_pair(s, s.c1_coords, fc);
        expect(got == closed, "dagger3 disagrees with its closed form");
        // independent reduction through the public ring primitives
        ring::SempleClass u1 = ring::semple_u1(s), u2 = ring::semple_u2(s);
        ring::SempleClass pencil = ring::semple_add(ring::semple_scale(2, u1), u2);
        ring::SempleClass z = ring::semple_sub(
            ring::semple_add(ring::semple_scale(a1, u1), ring::semple_scale(a2, u2)),
            ring::semple_coh(f));
        Rat reduced =
            ring::integrate(ring::semple_mul(s, ring::semple_pow(s, pencil, 3), z), 2, s);
        expect(got == reduced, "dagger3 disagrees with direct ring reduction");
      }
    for (long m = 1; m <= 6; ++m) {
      std::vector<Rat> fc(s.rank());
      for (auto& x : fc) x = rand_rat(rng);
      ring::CohClass f = ring::coh_h2(s, fc);
      Rat got = ring::tilde_z_numbers(s, m, f, 0, 0);
      Rat c1F = ring::pic_pair(s, s.c1_coords, fc);
      Rat F2 = ring::pic_pair(s, fc, fc);
      Rat closed = Rat(m) * m * (4 * s.c1sq - 3 * s.c2) + Rat(m) * (5 * s.c1sq - 3 * s.c2) +
                   (8 * Rat(m) + 4) * c1F + 3 * F2;
      expect(got == closed, "tilde_z disagrees with its closed form");
      // independent reduction: (2u1+u2)^2 (m u1 - F)(u2 + m u1 - F)
      ring::SempleClass u1 = ring::semple_u1(s), u2 = ring::semple_u2(s);
      ring::SempleClass pencil = ring::semple_add(ring::semple_scale(2, u1), u2);
      ring::SempleClass mu1f =
          ring::semple_sub(ring::semple_scale(m, u1), ring::semple_coh(f));
      ring::SempleClass ztilde = ring::semple_mul(s, mu1f, ring::semple_add(u2, mu1f));
      Rat reduced = ring::integrate(
          ring::semple_mul(s, ring::semple_mul(s, pencil, pencil), ztilde), 2, s);
      expect(got == reduced, "tilde_z disagrees with direct ring reduction");
    }
  }
}

// ---- harness ---------------------------------------------------------------

struct Criterion {
  std::string label;
  std::function<void()> body;
  double budget_s;  // <= 0 means no stated budget
};

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];

  const std::vector<Criterion> criteria = {
      {"1. nine-entry symbolic intersection table via the CLI", criterion_ring_table, 1.0},
      {"2. Riemann-Roch leading coefficients, d in [5,30]", criterion_rr_leading, 30.0},
      {"3. degree cutoffs 15/18/21 over the sweep [5,40]", criterion_cutoffs, 5.0},
      {"4. connection certification (equations, homogeneity, pole divisor)",
       criterion_connection, 0.0},
      {"5. section counts on P3 (vanishing range, 6 at (1,2), witness at (3,6))",
       criterion_h0, 20.0},
      {"6. discriminant vs resultant, 100 random trials + double roots",
       criterion_discriminant, 0.0},
      {"7. reparametrization invariance, proportionality, gauge invariance",
       criterion_invariance, 0.0},
      {"8. closed forms vs independent ring reduction", criterion_closed_forms, 0.0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.body();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && c.budget_s > 0 && secs >= c.budget_s) {
      ok = false;
      detail = "runtime budget exceeded";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "[PASS] " : "[FAIL] ") << c.label << " (" << secs << "s)";
    if (!ok) line << " — " << detail;
    std::cout << line.str() << "\n";
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criterion(s) failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
