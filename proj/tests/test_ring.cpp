#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tanaka/curve.hpp"
#include "tanaka/trigpoly.hpp"

using namespace tanaka;

namespace {
SymTablePtr tab() { return geom_symbols(); }
TrigPoly P(const std::string& e) { return parse_fnexpr(tab(), e); }
}  // namespace

TEST_CASE("parser and printer round-trip on the ring grammar") {
  for (const char* e :
       {"t^2 + 3*t - 1/2", "t^(alpha)", "t^(alpha+1)*ln(t)", "exp((alpha-1)*t)",
        "cos(beta*t)", "sin(2*t)", "r*s^2*t + y0", "I*t^(-2)", "ln(t)^2",
        "exp((2+I*3)*t)", "alpha*beta*t^(1/2)"}) {
    TrigPoly p = P(e);
    TrigPoly q = parse_fnexpr(tab(), p.str());
    CHECK_MESSAGE(p == q, e);
  }
}

TEST_CASE("closure under d/dt") {
  // d/dt t^a = a t^(a-1)
  CHECK(P("t^(alpha)").dt() == P("alpha*t^(alpha-1)"));
  // d/dt ln t = 1/t
  CHECK(P("ln(t)").dt() == P("t^(-1)"));
  // d/dt e^{at} = a e^{at}
  CHECK(P("exp((alpha)*t)").dt() == P("alpha*exp(alpha*t)"));
  // d/dt cos bt = -b sin bt ; d/dt sin bt = b cos bt
  CHECK(P("cos(beta*t)").dt() == -(P("beta*sin(beta*t)")));
  CHECK(P("sin(beta*t)").dt() == P("beta*cos(beta*t)"));
  // product rule spot check
  TrigPoly f = P("t^2*ln(t)");
  CHECK(f.dt() == P("2*t*ln(t) + t"));
}

TEST_CASE("cos^2 + sin^2 = 1 is an identity of the representation") {
  TrigPoly c = P("cos(beta*t)"), s = P("sin(beta*t)");
  CHECK(c * c + s * s == P("1"));
  TrigPoly c2 = P("cos(2*t)"), s2 = P("sin(2*t)");
  CHECK(c2 * c2 + s2 * s2 == P("1"));
  // angle addition falls out as well
  CHECK(P("cos(1*t)") * P("cos(2*t)") - P("sin(1*t)") * P("sin(2*t)") == P("cos(3*t)"));
}

TEST_CASE("zero test exact: distinct generalized monomials are independent") {
  CHECK(!(P("t^(alpha)") - P("t^(beta)")).is_zero());
  CHECK((P("t^(alpha)*t^(beta)") - P("t^(alpha+beta)")).is_zero());
  CHECK(!(P("ln(t)") - P("t")).is_zero());
}

TEST_CASE("conjugation") {
  TrigPoly z = P("I*exp(I*2*t)");
  CHECK(z.conj() == P("-I*exp(-I*2*t)"));
  CHECK(P("cos(2*t)").conj() == P("cos(2*t)"));
  CHECK(P("sin(2*t)").conj() == P("sin(2*t)"));
}

TEST_CASE("FnFrac arithmetic and normalization") {
  FnFrac a(P("1"), P("s"));
  FnFrac b(P("r"), P("s"));
  FnFrac sum = a + b;
  CHECK(sum == FnFrac(P("1+r"), P("s")));
  FnFrac prod = a * FnFrac(P("s"));
  CHECK(prod == FnFrac::one(tab()));
  // division by single-term denominators is exact
  FnFrac c = FnFrac(P("t^2 + t"), P("t"));
  CHECK(c == FnFrac(P("t + 1")));
}

TEST_CASE("wronskian of the rational normal curve is 12") {
  Curve c;
  c.comp = {P("1"), P("t"), P("t^2"), P("t^3")};
  TrigPoly w = wronskian4(c);
  CHECK(w == P("12"));
  auto rep = curve_nondegenerate(c);
  CHECK(rep.status == NondegReport::TRUE);
}

TEST_CASE("planar curve has vanishing wronskian") {
  Curve c;
  c.comp = {P("1"), P("t"), P("t^2"), P("0")};
  CHECK(wronskian4(c).is_zero());
  CHECK(curve_nondegenerate(c).status == NondegReport::FALSE);
}

TEST_CASE("perturbed cubic stays nondegenerate (column reduction oracle)") {
  Curve c;
  c.comp = {P("1"), P("t"), P("t^2"), P("t^3+t^2")};
  // oracle: column reduction gamma_3 -> gamma_3 - gamma_2 leaves [1,t,t^2,t^3]
  CHECK(wronskian4(c) == P("12"));
  CHECK(curve_nondegenerate(c).status == NondegReport::TRUE);
}

TEST_CASE("type (1111) symbolic wronskian factorization (golden)") {
  Curve c;
  c.comp = {P("1"), P("t"), P("t^(alpha)"), P("t^(beta)")};
  c.constraints.order_1_alpha_beta = true;
  TrigPoly w = wronskian4(c);
  // W = alpha*beta*(alpha-1)*(beta-1)*(beta-alpha) * t^(alpha+beta-5)
  TrigPoly expected =
      P("alpha*beta*(alpha-1)*(beta-1)*(beta-alpha)*t^(alpha+beta-5)");
  CHECK(w == expected);
  auto rep = curve_nondegenerate(c);
  CHECK(rep.status == NondegReport::TRUE);
}

TEST_CASE("type (211) symbolic wronskian (golden) respects the exclusions") {
  Curve c;
  c.comp = {P("1"), P("ln(t)"), P("t^(beta-1)"), P("t^(-beta-3)")};
  c.constraints.exclusions = {{"beta", Rat(1)}, {"beta", Rat(-1)}, {"beta", Rat(-3)}};
  TrigPoly w = wronskian4(c);
  // W = -2 (beta-1)^2 (beta+1) (beta+3)^2 t^(-10)
  TrigPoly expected =
      P("-2*(beta-1)*(beta-1)*(beta+1)*(beta+3)*(beta+3)*t^(-10)");
  CHECK(w == expected);
  CHECK(curve_nondegenerate(c).status == NondegReport::TRUE);
  // dropping an exclusion makes the verdict honest: UNDECIDED
  Curve c2 = c;
  c2.constraints.exclusions = {{"beta", Rat(1)}, {"beta", Rat(-3)}};
  CHECK(curve_nondegenerate(c2).status == NondegReport::UNDECIDED);
}

TEST_CASE("trig curve (1c1c, beta=2): wronskian is a nonzero constant") {
  Curve c;
  c.comp = {P("cos(1*t)"), P("sin(1*t)"), P("cos(2*t)"), P("sin(2*t)")};
  c.domain = "t";
  TrigPoly w = wronskian4(c);
  CHECK(w.is_single_term());
  CHECK(curve_nondegenerate(c).status == NondegReport::TRUE);
}
