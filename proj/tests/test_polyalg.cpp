#include <catch2/catch_amalgamated.hpp>

#include "hypercert/linalg.hpp"
#include "hypercert/mpoly.hpp"
#include "hypercert/mpoly_gcd.hpp"
#include "hypercert/ratfunc.hpp"

#include "helpers.hpp"

using namespace hypercert;
using namespace hypercert::poly;
using testutil::cofactor_det;
using testutil::rand_int;
using testutil::rand_nonzero_poly;
using testutil::rand_poly;
using testutil::rand_rat;

namespace {
const std::vector<std::string> kZ = {"z0", "z1", "z2", "z3"};

MPoly P(const std::string& text) { return MPoly::parse(text, kZ); }
}  // namespace

TEST_CASE("rational literals") {
  CHECK(rat_str(Rat(3, 4)) == "3/4");
  CHECK(rat_str(Rat(-6, 8)) == "-3/4");
  CHECK(rat_str(Rat(0)) == "0");
  CHECK(rat_str(Rat(10, 2)) == "5");
  CHECK(rat_parse("  -21/14 ") == Rat(-3, 2));
  CHECK(rat_parse("7") == 7);
  CHECK(rat_parse("+3/9") == Rat(1, 3));
  CHECK_THROWS_AS(rat_parse("1/0"), ParseError);
  CHECK_THROWS_AS(rat_parse("a/2"), ParseError);
  CHECK_THROWS_AS(rat_parse(""), ParseError);
  CHECK_THROWS_AS(rat_parse("1.5"), ParseError);
}

TEST_CASE("polynomial arithmetic identities") {
  CHECK(P("z0 + z1") * P("z0 - z1") == P("z0^2 - z1^2"));
  CHECK((P("z0 + 3 * z1^2") * MPoly::zero(kZ)).is_zero());
  CHECK(P("z0 + z1").pow(3) == P("z0^3 + 3*z0^2*z1 + 3*z0*z1^2 + z1^3"));
  CHECK(P("z0").pow(0) == P("1"));
  CHECK_THROWS_AS(P("z0").pow(-1), UsageError);
}

TEST_CASE("ring axioms hold on random triples") {
  std::mt19937 rng(20260823);
  for (int trial = 0; trial < 60; ++trial) {
    MPoly a = rand_poly(rng, kZ), b = rand_poly(rng, kZ), c = rand_poly(rng, kZ);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("variable sets auto-extend by union") {
  MPoly x = MPoly::variable("z0", {"z0"});
  MPoly y = MPoly::variable("a", {"a"});
  MPoly sum = x + y;
  CHECK(sum.vars() == std::vector<std::string>{"z0", "a"});
  CHECK(sum == MPoly::parse("z0 + a", {"z0", "a"}));
}

TEST_CASE("graded-lex term order drives the canonical serialization") {
  // Total degree first, then earlier variable with the larger exponent.
  MPoly p = P("z1^2 + z0*z1 + z0^3 + 2*z0 + 5");
  CHECK(p.str() == "z0^3 + z0*z1 + z1^2 + 2 * z0 + 5");
  CHECK(P("-1/2 * z0 + z1") .str() == "-1/2 * z0 + z1");
  CHECK(MPoly::zero(kZ).str() == "0");
}

TEST_CASE("parse round-trips the canonical serialization") {
  for (const char* text : {"0", "1", "-3/4", "z0^3 + z0*z1 + z1^2", "2 * z0^2*z3 - 7/3 * z2",
                           "z0*z1*z2*z3 - 1"}) {
    MPoly p = P(text);
    CHECK(MPoly::parse(p.str(), kZ) == p);
    CHECK(p.str() == text);
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    MPoly p = rand_poly(rng, kZ, 6, 4);
    CHECK(MPoly::parse(p.str(), kZ) == p);
  }
}

TEST_CASE("parser accepts messy but valid spacing and rejects garbage") {
  CHECK(MPoly::parse("  3/2*z0^2 *z1+ z2 - 4 ", kZ) == P("3/2 * z0^2*z1 + z2 - 4"));
  CHECK(MPoly::parse("z0*z0", kZ) == P("z0^2"));
  CHECK_THROWS_AS(MPoly::parse("z9", kZ), ParseError);
  CHECK_THROWS_AS(MPoly::parse("z0 +", kZ), ParseError);
  CHECK_THROWS_AS(MPoly::parse("3 3", kZ), ParseError);
  CHECK_THROWS_AS(MPoly::parse("z0^x", kZ), ParseError);
  CHECK_THROWS_AS(MPoly::parse("", kZ), ParseError);
}

TEST_CASE("degrees and the zero sentinel") {
  CHECK(!MPoly::zero(kZ).total_degree().has_value());
  CHECK(P("5").total_degree() == 0);
  CHECK(P("z0^2*z1 + z3").total_degree() == 3);
  CHECK(P("z0^2*z1 + z3").degree_in("z1") == 1);
  CHECK(P("z0^2 + z0*z3^4").degree_in_subset({"z0"}) == 2);
  CHECK(P("z0^2 + z1^2").is_homogeneous_in(kZ));
  CHECK(!P("z0^2 + z1").is_homogeneous_in(kZ));
  CHECK(MPoly::zero(kZ).is_homogeneous_in(kZ));
}

TEST_CASE("partial derivatives") {
  CHECK(P("z0^7").derivative("z0") == P("7 * z0^6"));
  CHECK(P("z0^3*z1^4").derivative("z1") == P("4 * z0^3*z1^3"));
  CHECK(P("9/2").derivative("z0").is_zero());
  CHECK_THROWS_AS(P("z0").derivative("w"), Error);
  // Product rule on random pairs.
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    MPoly a = rand_poly(rng, kZ), b = rand_poly(rng, kZ);
    CHECK((a * b).derivative("z1") == a.derivative("z1") * b + a * b.derivative("z1"));
  }
}

TEST_CASE("substitution") {
  CHECK(P("z0^2*z1 + z0 + 1").substitute("z0", 2) == P("4*z1 + 3"));
  CHECK(P("z0^2").substitute("z0", Rat(-1, 2)) == P("1/4"));
  MPoly p = MPoly::parse("z0^2 + a*z1", {"z0", "z1", "a"});
  CHECK(p.substitute("a", 0) == MPoly::parse("z0^2", {"z0", "z1", "a"}));
  CHECK(P("z0^2").substitute_poly("z0", P("z1 + 1")) == P("z1^2 + 2*z1 + 1"));
}

TEST_CASE("fraction-free determinants match the cofactor oracle") {
  CHECK(det_fraction_free<MPoly>({{P("z0 + z1")}}) == P("z0 + z1"));
  CHECK(det_fraction_free<MPoly>({{P("1"), P("0"), P("0")},
                                  {P("0"), P("1"), P("0")},
                                  {P("0"), P("0"), P("1")}}) == P("1"));
  Matrix<MPoly> m2 = {{P("z0"), P("z1")}, {P("z2"), P("z3")}};
  CHECK(det_fraction_free(m2) == P("z0*z3 - z1*z2"));
  CHECK(det_fraction_free(m2) == cofactor_det(m2));

  std::mt19937 rng(101);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 12; ++trial) {
      Matrix<MPoly> m(n, std::vector<MPoly>(n));
      for (auto& row : m)
        for (auto& entry : row) entry = rand_poly(rng, {"z0", "z1"}, 2, 2, 4);
      CHECK(det_fraction_free(m) == cofactor_det(m));
    }
  // Also over plain rationals.
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 12; ++trial) {
      Matrix<Rat> m(n, std::vector<Rat>(n));
      for (auto& row : m)
        for (auto& entry : row) entry = rand_rat(rng);
      CHECK(det_fraction_free(m) == cofactor_det(m));
    }
  CHECK_THROWS_AS(det_fraction_free<Rat>({}), UsageError);
  CHECK_THROWS_AS(det_fraction_free<Rat>({{Rat(1), Rat(2)}}), UsageError);
}

TEST_CASE("solve_linear against the back-substitution oracle") {
  Matrix<MPoly> id = {{P("1"), P("0")}, {P("0"), P("1")}};
  auto x = solve_linear(id, {P("z0^2"), P("z1 - 1")});
  CHECK(x[0] == RatFunc(P("z0^2")));
  CHECK(x[1] == RatFunc(P("z1 - 1")));

  Matrix<MPoly> diag = {{P("z0"), P("0")}, {P("0"), P("z1^2")}};
  auto y = solve_linear(diag, {P("z0*z1"), P("z1^3 + z1^2")});
  CHECK(y[0] == RatFunc(P("z1")));
  CHECK(y[1] == RatFunc(P("z1 + 1")));

  std::mt19937 rng(202);
  for (int trial = 0; trial < 15; ++trial) {
    Matrix<MPoly> a(3, std::vector<MPoly>(3));
    std::vector<MPoly> b(3);
    for (auto& row : a)
      for (auto& entry : row) entry = rand_poly(rng, {"z0", "z1"}, 2, 1, 3);
    for (auto& entry : b) entry = rand_poly(rng, {"z0", "z1"}, 2, 2, 3);
    if (det_fraction_free(a).is_zero()) continue;
    auto sol = solve_linear(a, b);
    for (int i = 0; i < 3; ++i) {
      // Back-substitution, cross-multiplied to stay polynomial.
      RatFunc acc;
      for (int j = 0; j < 3; ++j) acc += RatFunc(a[i][j]) * sol[j];
      CHECK(acc == RatFunc(b[i]));
    }
  }

  Matrix<MPoly> sing = {{P("z0"), P("z0")}, {P("z1"), P("z1")}};
  CHECK_THROWS_AS(solve_linear(sing, {P("1"), P("1")}), SingularSystemError);
}

TEST_CASE("gcd basics") {
  CHECK(gcd_mpoly(P("z0^2"), P("z0^3")) == P("z0^2"));
  CHECK(gcd_mpoly(P("z0^2 + z0"), MPoly::zero(kZ)) == P("z0^2 + z0"));
  CHECK(gcd_mpoly(MPoly::zero(kZ), MPoly::zero(kZ)).is_zero());
  // Normalization: integer-primitive, positive leading coefficient.
  CHECK(gcd_mpoly(P("-2*z0 - 2*z1"), P("4*z0 + 4*z1")) == P("z0 + z1"));
  CHECK(gcd_mpoly(P("2/3"), P("5")) == P("1"));
  CHECK(gcd_mpoly(P("6*z0*z1^2"), P("4*z0^2*z1")) == P("z0*z1"));
}

TEST_CASE("gcd recovers a planted common factor") {
  std::mt19937 rng(303);
  int done = 0;
  while (done < 25) {
    MPoly g = rand_nonzero_poly(rng, kZ, 3, 2, 4);
    MPoly q = rand_nonzero_poly(rng, kZ, 3, 2, 4);
    MPoly r = rand_nonzero_poly(rng, kZ, 3, 2, 4);
    if (!gcd_mpoly(q, r).is_constant()) continue;  // want coprime cofactors
    ++done;
    MPoly computed = gcd_mpoly(g * q, g * r);
    // The planted factor divides the result, and the result divides both
    // products; cofactors after dividing out are coprime.
    CHECK(computed.exact_quotient_by(int_normalize(g).primitive).has_value());
    auto cq = (g * q).exact_quotient_by(computed);
    auto cr = (g * r).exact_quotient_by(computed);
    REQUIRE(cq.has_value());
    REQUIRE(cr.has_value());
    CHECK(gcd_mpoly(*cq, *cr).is_constant());
  }
}

TEST_CASE("gcd of the planted-linear example") {
  MPoly g = P("z0 + z1");
  CHECK(gcd_mpoly(g * P("z0^2 + 1"), g * P("z1 + 3")) == g);
}

TEST_CASE("exact division") {
  CHECK(*P("z0^2*z1").exact_quotient_by(P("z0")) == P("z0*z1"));
  CHECK(*P("z0^2 - 1").exact_quotient_by(P("z0 + 1")) == P("z0 - 1"));
  CHECK(!P("z0^2 + z1^2").exact_quotient_by(P("z0 + z1")).has_value());
  CHECK_THROWS_AS(P("z0").exact_quotient_by(MPoly::zero(kZ)), Error);
  std::mt19937 rng(404);
  for (int trial = 0; trial < 30; ++trial) {
    MPoly a = rand_nonzero_poly(rng, kZ), b = rand_nonzero_poly(rng, kZ);
    auto q = (a * b).exact_quotient_by(b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
}

TEST_CASE("lcm") {
  CHECK(lcm_mpoly(P("z0*z1"), P("z1*z2")) == P("z0*z1*z2"));
  CHECK(lcm_mpoly(P("z0"), MPoly::zero(kZ)).is_zero());
  std::mt19937 rng(505);
  for (int trial = 0; trial < 15; ++trial) {
    MPoly a = rand_nonzero_poly(rng, kZ, 2, 2, 3), b = rand_nonzero_poly(rng, kZ, 2, 2, 3);
    MPoly l = lcm_mpoly(a, b);
    CHECK(l.exact_quotient_by(int_normalize(a).primitive).has_value());
    CHECK(l.exact_quotient_by(int_normalize(b).primitive).has_value());
  }
}

TEST_CASE("rational functions are canonical") {
  // The same fraction built from unreduced inputs has one representation.
  RatFunc a(P("2*z0^2 - 2"), P("4*z0 + 4"));
  RatFunc b(P("z0 - 1"), P("2"));
  CHECK(a == b);
  CHECK(equal_cross(a, b));
  CHECK(a.num() == P("1/2 * z0 - 1/2"));
  CHECK(a.den() == P("1"));

  RatFunc c(P("z0"), P("-z1"));
  CHECK(c.den().leading_coeff() > 0);
  CHECK(c == RatFunc(P("-z0"), P("z1")));

  CHECK_THROWS_AS(RatFunc(P("1"), MPoly::zero(kZ)), Error);
  CHECK(RatFunc(MPoly::zero(kZ), P("z0")).is_zero());
}

TEST_CASE("rational function arithmetic") {
  RatFunc x(P("z0"), P("z1"));
  RatFunc y(P("z1"), P("z0"));
  CHECK(x * y == RatFunc(P("1")));
  CHECK(x + y == RatFunc(P("z0^2 + z1^2"), P("z0*z1")));
  CHECK(x - x == RatFunc());
  CHECK(x / y == RatFunc(P("z0^2"), P("z1^2")));
  CHECK_THROWS_AS(x / RatFunc(), Error);
  std::mt19937 rng(606);
  for (int trial = 0; trial < 15; ++trial) {
    RatFunc f(rand_nonzero_poly(rng, kZ, 3, 2), rand_nonzero_poly(rng, kZ, 3, 2));
    RatFunc g(rand_nonzero_poly(rng, kZ, 3, 2), rand_nonzero_poly(rng, kZ, 3, 2));
    CHECK((f + g) - g == f);
    if (!g.is_zero()) CHECK((f / g) * g == f);
  }
}

TEST_CASE("sparse rank") {
  // Two independent rows plus their sum.
  std::vector<std::map<int, Rat>> rows = {
      {{0, Rat(1)}, {1, Rat(2)}},
      {{1, Rat(1)}, {2, Rat(1)}},
      {{0, Rat(1)}, {1, Rat(3)}, {2, Rat(1)}},
  };
  CHECK(sparse_rank(rows, 3) == 2);
  CHECK(sparse_rank({}, 5) == 0);
  CHECK(sparse_rank({{{0, Rat(1)}}}, 1) == 1);
  CHECK_THROWS_AS(sparse_rank({{{7, Rat(1)}}}, 3), UsageError);
}
