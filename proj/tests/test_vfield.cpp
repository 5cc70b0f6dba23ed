#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tanaka/curve.hpp"
#include "tanaka/vfield.hpp"

using namespace tanaka;

namespace {
SymTablePtr tab() { return geom_symbols(); }
ChartPtr chart() {
  static ChartPtr c = std::make_shared<Chart>(
      tab(), std::vector<Chart::Coord>{{"r", tab()->index_of("r")},
                                       {"s", tab()->index_of("s")},
                                       {"t", -1},
                                       {"y0", tab()->index_of("y0")},
                                       {"y1", tab()->index_of("y1")},
                                       {"y2", tab()->index_of("y2")},
                                       {"y3", tab()->index_of("y3")}});
  return c;
}
FnFrac F(const std::string& e) { return FnFrac(parse_fnexpr(tab(), e)); }
}  // namespace

TEST_CASE("coordinate fields commute") {
  VField dr = VField::basis(chart(), 0), ds = VField::basis(chart(), 1);
  CHECK(vf_bracket(dr, ds).is_zero());
}

TEST_CASE("[d_t, t d_r] = d_r") {
  VField dt = VField::basis(chart(), 2);
  VField tdr = VField::basis(chart(), 0).scaled(F("t"));
  VField br = vf_bracket(dt, tdr);
  CHECK(br.coeff[0] == F("1"));
  for (size_t k = 1; k < 7; ++k) CHECK(br.coeff[k].is_zero());
}

TEST_CASE("bracket is bilinear and antisymmetric; Jacobi on fixture fields") {
  VField a = VField::basis(chart(), 0).scaled(F("t^2")) +
             VField::basis(chart(), 2).scaled(F("s"));
  VField b = VField::basis(chart(), 1).scaled(F("r*t")) +
             VField::basis(chart(), 3).scaled(F("ln(t)"));
  VField c = VField::basis(chart(), 2).scaled(F("1")) +
             VField::basis(chart(), 0).scaled(F("s^2"));
  VField ab = vf_bracket(a, b);
  VField ba = vf_bracket(b, a);
  for (size_t k = 0; k < 7; ++k) CHECK((ab.coeff[k] + ba.coeff[k]).is_zero());
  // Jacobi
  VField j1 = vf_bracket(vf_bracket(a, b), c);
  VField j2 = vf_bracket(vf_bracket(b, c), a);
  VField j3 = vf_bracket(vf_bracket(c, a), b);
  for (size_t k = 0; k < 7; ++k)
    CHECK((j1.coeff[k] + j2.coeff[k] + j3.coeff[k]).is_zero());
}

TEST_CASE("field application as derivation") {
  VField x = VField::basis(chart(), 2).scaled(F("s"));  // s d_t
  CHECK(x.apply(F("t^2")) == F("2*s*t"));
  CHECK(x.apply(F("r")) == F("0"));
}

TEST_CASE("FieldSpan rank, membership and expression") {
  VField dr = VField::basis(chart(), 0), ds = VField::basis(chart(), 1);
  VField w = dr.scaled(F("t")) + ds.scaled(F("s"));
  FieldSpan span({dr, ds});
  CHECK(span.rank() == 2);
  CHECK(span.contains(w));
  auto x = span.express(w);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == F("t"));
  CHECK((*x)[1] == F("s"));
  VField dt = VField::basis(chart(), 2);
  CHECK(!span.contains(dt));
}

TEST_CASE("chart mismatch is an error") {
  auto other = std::make_shared<Chart>(
      tab(), std::vector<Chart::Coord>{{"r", tab()->index_of("r")}});
  VField a = VField::basis(chart(), 0), b = VField::basis(other, 0);
  CHECK_THROWS_AS((void)vf_bracket(a, b), std::invalid_argument);
}
