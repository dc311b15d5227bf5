// Builds the degree-6 deformed diagonal family z0^6+z1^6+z2^6+z3^6 + a*z0 z1^2 z2^2 z3,
// solves for the meromorphic connection annihilating its second fundamental
// form, and reports the pole divisor and the smoothness criterion.

#include <array>
#include <iostream>

#include "hypercert/nadel.hpp"

int main() {
  using namespace hypercert;
  using poly::rat_str;

  const long d = 6;
  const std::array<long, 4> k = {1, 2, 2, 1};
  nadel::SurfaceFamily fam = nadel::fermat_deformation(d, k);
  poly::MPoly surface = fam.s[0] + fam.s[1] + fam.s[2] + fam.s[3];
  std::cout << "surface: " << surface.str() << " = 0\n"
            << "additive pieces certified separately, e.g. s0 = " << fam.s[0].str() << "\n\n";

  nadel::Christoffel g = nadel::solve_connection(fam);
  std::cout << "sample coefficients (numerator / denominator):\n";
  for (auto [i, j, kk] : {std::array<int, 3>{0, 0, 0}, {1, 1, 1}, {0, 1, 2}}) {
    const poly::RatFunc& q = g.gamma[i][j][kk];
    std::cout << "  gamma[" << i << "][" << j << "][" << kk << "] = (" << q.num().str() << ") / ("
              << q.den().str() << ")\n";
  }

  nadel::PoleDivisor b = nadel::pole_divisor(g, nadel::fermat_pole_candidates(d, k));
  std::cout << "\npole divisor factors:\n";
  for (const auto& [factor, mult] : b.support)
    std::cout << "  (" << factor.str() << ")^" << mult << "\n";
  std::cout << "total degree " << b.total_degree << ", ratio to the canonical degree: "
            << rat_str(nadel::pole_canonical_ratio(b, d)) << "\n";

  nadel::SmoothnessCriterion sc = nadel::smoothness_criterion(d, k, poly::Rat(1));
  std::cout << "\nsmoothness: a^" << d << " * " << sc.k_product << " = " << sc.critical_rhs
            << " exactly at the critical parameter; at a = 1 the surface is "
            << (sc.nonsingular.value() ? "nonsingular" : "singular") << "\n";

  nadel::ExclusionBudget budget = nadel::exclusion_budget(d);
  std::cout << "degree budget: p = " << budget.p << ", epsilon = " << budget.epsilon
            << ", t1 = " << rat_str(budget.t1) << ", exclusion bounds (m = 3,4,5): "
            << rat_str(budget.exclusion_bounds[0]) << ", " << rat_str(budget.exclusion_bounds[1])
            << ", " << rat_str(budget.exclusion_bounds[2]) << "\n";
  return 0;
}
