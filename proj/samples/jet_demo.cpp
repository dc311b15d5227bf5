// Demonstrates the weighted 2-jet algebra: the symbolic discriminant of a
// quadratic-in-W jet polynomial, reparametrization covariance of a basis
// monomial, and gauge invariance of the covariant wronskian.

#include <array>
#include <iostream>

#include "hypercert/jet.hpp"

int main() {
  using namespace hypercert;
  using poly::MPoly;
  using poly::Rat;

  // P = a0 (f1')^6 + a1 (f1')^3 W + a2 W^2 at weight 6
  std::vector<std::string> names = {"a0", "a1", "a2"};
  jet::JetPoly2 p = jet::jet_zero(6);
  p = jet::jet_add(p, jet::jet_term(6, 0, 6, 0, 0, MPoly::variable("a0", names)));
  p = jet::jet_add(p, jet::jet_term(6, 0, 3, 0, 1, MPoly::variable("a1", names)));
  p = jet::jet_add(p, jet::jet_term(6, 0, 0, 0, 2, MPoly::variable("a2", names)));
  jet::JetPoly2 delta = jet::discriminant(p);
  std::cout << "discriminant of a quadratic in W: " << jet::to_jet_expr(delta).str()
            << "  (weight " << delta.m << ", twist " << delta.kweight << ")\n";

  // weighted monomial (f1')^2 f2'' has weight 2 + 3 under t -> a1 t + a2 t^2
  jet::JetPoly2 mono = jet::jet_term(5, 0, 2, 0, 1, MPoly::constant(1));
  jet::Reparam2 phi{Rat(2, 3), Rat(-1, 4)};
  std::cout << "basis monomial transforms with a1^5 under reparametrization: "
            << (jet::reparam_check(mono, phi) ? "yes" : "no") << "\n";

  // the covariant wronskian does not depend on the choice of connection
  jet::Christoffel2 base = jet::christoffel_symbolic();
  jet::JetPoly2 w = jet::wronskian_from_christoffel(base);
  std::array<MPoly, 2> alpha = {MPoly::constant(Rat(5, 2)), MPoly::constant(Rat(-3))};
  std::array<MPoly, 2> beta = {MPoly::constant(Rat(1, 7)), MPoly::constant(Rat(4))};
  jet::JetPoly2 shifted = jet::wronskian_from_christoffel(jet::gauge_shift(base, alpha, beta));
  std::cout << "wronskian unchanged under a gauge shift: "
            << (jet::jet_eq(w, shifted) ? "yes" : "no") << "\n";
  return 0;
}
