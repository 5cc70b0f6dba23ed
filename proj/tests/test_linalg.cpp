#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tanaka/linalg.hpp"

using namespace tanaka;

namespace {
UnitCtxPtr ctx0() { return std::make_shared<UnitContext>(std::vector<std::string>{}); }
UnitCtxPtr ctx1() { return std::make_shared<UnitContext>(std::vector<std::string>{"u1"}); }

SFrac q(UnitCtxPtr c, long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return SFrac(Scalar::constant(c, GaussQ(r)));
}
}  // namespace

TEST_CASE("rref and rank over rationals") {
  auto c = ctx0();
  SMat m = {{q(c, 1), q(c, 2), q(c, 3)},
            {q(c, 2), q(c, 4), q(c, 6)},
            {q(c, 1), q(c, 0), q(c, 1)}};
  CHECK(rank(m) == 2);
  auto kr = kernel(m);
  REQUIRE(kr.basis.size() == 1);
  // Check M x = 0
  for (const auto& row : m) {
    SFrac s = SFrac::zero(c);
    for (size_t j = 0; j < row.size(); ++j) s = s + row[j] * kr.basis[0][j];
    CHECK(s.is_zero());
  }
}

TEST_CASE("solve") {
  auto c = ctx0();
  SMat m = {{q(c, 2), q(c, 1)}, {q(c, 1), q(c, 3)}};
  SRow b = {q(c, 5), q(c, 10)};
  auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == q(c, 1));
  CHECK((*x)[1] == q(c, 3));
  SMat sing = {{q(c, 1), q(c, 1)}, {q(c, 1), q(c, 1)}};
  SRow bad = {q(c, 0), q(c, 1)};
  CHECK(!solve(sing, bad).has_value());
}

TEST_CASE("unit pivots preferred, genericity recorded otherwise") {
  auto c = ctx1();
  Scalar u = Scalar::unit(c, 0);
  Scalar one = Scalar::constant(c, GaussQ(1));
  // First column entries: u+1 (non-unit) and u (unit). Pivot should pick u.
  SMat m = {{SFrac(u + one), SFrac(one)}, {SFrac(u), SFrac(one)}};
  RrefResult r = rref(m);
  CHECK(r.genericity.empty());
  CHECK(r.pivot_cols.size() == 2);

  // Only non-unit pivots available: genericity note expected.
  SMat m2 = {{SFrac(u + one), SFrac(one)}};
  RrefResult r2 = rref(m2);
  CHECK(r2.genericity.size() == 1);
}

TEST_CASE("kernel canonical form is deterministic") {
  auto c = ctx0();
  SMat m = {{q(c, 1), q(c, 1), q(c, 0), q(c, 2)}};
  auto k1 = kernel(m);
  auto k2 = kernel(m);
  REQUIRE(k1.basis.size() == 3);
  for (size_t i = 0; i < k1.basis.size(); ++i)
    for (size_t j = 0; j < k1.basis[i].size(); ++j)
      CHECK(k1.basis[i][j] == k2.basis[i][j]);
}
