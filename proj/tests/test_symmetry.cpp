#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tanaka/catalog.hpp"
#include "tanaka/freeman.hpp"

using namespace tanaka;

namespace {
SymTablePtr tab() { return geom_symbols(); }

Curve curve1111(long a, long b) {
  Curve c;
  c.name = "(1111)";
  c.comp = {parse_fnexpr(tab(), "1"), parse_fnexpr(tab(), "t"),
            parse_fnexpr(tab(), "t^" + std::to_string(a)),
            parse_fnexpr(tab(), "t^" + std::to_string(b))};
  return c;
}

std::vector<std::vector<Rat>> diag(long a, long b, long c, long d) {
  std::vector<std::vector<Rat>> m(4, std::vector<Rat>(4, Rat(0)));
  m[0][0] = a; m[1][1] = b; m[2][2] = c; m[3][3] = d;
  return m;
}
std::vector<std::vector<Rat>> identity() { return diag(1, 1, 1, 1); }
}  // namespace

TEST_CASE("radial field is a symmetry of every variant-1 tube") {
  for (auto p : {std::pair<long, long>{2, 3}, {2, 4}}) {
    auto m = build_tube(curve1111(p.first, p.second), TubeVariant::TANGENT_VARIETY);
    auto v = is_cr_symmetry(m, SymCandidate::from_matrix(identity()));
    CHECK(v.is_symmetry);
  }
}

TEST_CASE("diagonal generator is a symmetry of the (1111) tube") {
  auto m = build_tube(curve1111(2, 4), TubeVariant::TANGENT_VARIETY);
  // v = diag(0,1,alpha,beta) at (2,4)
  auto v = is_cr_symmetry(m, SymCandidate::from_matrix(diag(0, 1, 2, 4)));
  CHECK(v.is_symmetry);
  // traceless combination too
  auto vt = is_cr_symmetry(m, SymCandidate::from_matrix(diag(-7, -3, 1, 9)));
  CHECK(vt.is_symmetry);
}

TEST_CASE("translations are symmetries; a generic matrix is not") {
  auto m = build_tube(curve1111(2, 4), TubeVariant::TANGENT_VARIETY);
  for (int k = 0; k < 4; ++k)
    CHECK(is_cr_symmetry(m, SymCandidate::from_translation(k)).is_symmetry);
  // a permutation matrix is not an affine symmetry of this tube
  std::vector<std::vector<Rat>> p(4, std::vector<Rat>(4, Rat(0)));
  p[0][1] = 1; p[1][0] = 1; p[2][2] = 1; p[3][3] = 1;
  auto v = is_cr_symmetry(m, SymCandidate::from_matrix(p));
  CHECK(!v.is_symmetry);
  CHECK(!v.residue.empty());
}

TEST_CASE("variant-2 model: translations pass, the radial field fails") {
  Curve q;
  q.comp = {parse_fnexpr(tab(), "1-t^4"), parse_fnexpr(tab(), "t"),
            parse_fnexpr(tab(), "t^2"), parse_fnexpr(tab(), "t^3")};
  auto m = build_tube(q, TubeVariant::OSCULATING_RULED);
  for (int k = 0; k < 4; ++k)
    CHECK(is_cr_symmetry(m, SymCandidate::from_translation(k)).is_symmetry);
  auto rho = is_cr_symmetry(m, SymCandidate::from_matrix(identity()));
  CHECK(!rho.is_symmetry);
  CHECK(!rho.residue.empty());  // the gamma-component obstruction
}

TEST_CASE("rnc_spectrum_test: (2,3) only") {
  CHECK(rnc_spectrum_test(Rat(2), Rat(3)));
  CHECK(!rnc_spectrum_test(Rat(2), Rat(4)));
  CHECK(!rnc_spectrum_test(Rat(3, 2), Rat(5, 2)));
  // spectrum at (2,3) is (-6,-2,2,6): nu = 2
  // 50 random rational pairs with 1 < a < b, (a,b) != (2,3)
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> num(5, 400);
  int tested = 0;
  while (tested < 50) {
    Rat a(num(rng), 100), b(num(rng), 100);
    a.canonicalize();
    b.canonicalize();
    a += 1;
    b += 1;
    if (!(Rat(1) < a && a < b)) continue;
    if (a == 2 && b == 3) continue;
    CHECK(!rnc_spectrum_test(a, b));
    ++tested;
  }
}

TEST_CASE("tube symmetry algebra of (1111) at (2,4)") {
  auto rows = catalog();
  const HomogeneousCurve* row = nullptr;
  for (const auto& r : rows)
    if (r.segre == "(1111)") row = &r;
  REQUIRE(row != nullptr);
  auto rep = tube_symmetry_algebra(*row, Rat(2), Rat(4));
  CHECK(rep.generators_verified);
  CHECK(rep.algebra.dim() == 6);
  CHECK(rep.algebra.check_jacobi().pass);
  CHECK(!rep.maximal);
  REQUIRE(rep.ad_v_spectrum.size() == 4);
  // spectrum of ad(v) on R^4: {-7,-3,1,9}
  CHECK(rep.ad_v_spectrum[0] == GaussQ(-7));
  CHECK(rep.ad_v_spectrum[1] == GaussQ(-3));
  CHECK(rep.ad_v_spectrum[2] == GaussQ(1));
  CHECK(rep.ad_v_spectrum[3] == GaussQ(9));
  // matches the shipped fixture
  auto fx = liealg_load(std::string(TANAKA_FIXTURE_DIR) + "/sec4_tube_symmetry_1111_2_4.json");
  CHECK(fx.dim() == rep.algebra.dim());
  for (size_t i = 0; i < fx.dim(); ++i)
    for (size_t j = i + 1; j < fx.dim(); ++j) {
      Vec a = fx.bracket_basis((int)i, (int)j);
      Vec b = rep.algebra.bracket_basis((int)i, (int)j);
      for (size_t k = 0; k < fx.dim(); ++k) CHECK(a[k] == b[k]);
    }
}

TEST_CASE("translations span an abelian ideal; assembled algebra is R^2 x R^4") {
  auto rows = catalog();
  for (const auto& r : rows) {
    if (r.segre != "(1111)") continue;
    auto rep = tube_symmetry_algebra(r, Rat(2), Rat(5));
    const auto& g = rep.algebra;
    // [T_j, T_k] = 0
    for (int j = 2; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        Vec b = g.bracket_basis(j, k);
        for (const auto& c : b) CHECK(c.is_zero());
      }
    // [v, rho] = 0
    Vec b = g.bracket_basis(0, 1);
    for (const auto& c : b) CHECK(c.is_zero());
  }
}

TEST_CASE("Thm 2 mechanism: distinct ad(v) spectra at (2,4), (2,5), (3,5)") {
  auto rows = catalog();
  const HomogeneousCurve* row = nullptr;
  for (const auto& r : rows)
    if (r.segre == "(1111)") row = &r;
  REQUIRE(row != nullptr);
  auto s1 = tube_symmetry_algebra(*row, Rat(2), Rat(4)).ad_v_spectrum;
  auto s2 = tube_symmetry_algebra(*row, Rat(2), Rat(5)).ad_v_spectrum;
  auto s3 = tube_symmetry_algebra(*row, Rat(3), Rat(5)).ad_v_spectrum;
  CHECK(s1 != s2);
  CHECK(s1 != s3);
  CHECK(s2 != s3);
  // expected values: 4*diag(0,1,a,b) - (1+a+b)
  std::vector<GaussQ> e2 = {GaussQ(-8), GaussQ(-4), GaussQ(0), GaussQ(12)};
  std::vector<GaussQ> e3 = {GaussQ(-9), GaussQ(-5), GaussQ(3), GaussQ(11)};
  CHECK(s2 == e2);
  CHECK(s3 == e3);
}

TEST_CASE("type (4) is flagged MAXIMAL; generators still verified") {
  auto rows = catalog();
  for (const auto& r : rows) {
    if (r.segre != "(4)") continue;
    auto rep = tube_symmetry_algebra(r);
    CHECK(rep.maximal);
    CHECK(rep.generators_verified);
    CHECK(rep.algebra.check_jacobi().pass);
  }
}

TEST_CASE("(1111) at (2,3) is the RNC and is flagged MAXIMAL") {
  auto rows = catalog();
  for (const auto& r : rows) {
    if (r.segre != "(1111)") continue;
    auto rep = tube_symmetry_algebra(r, Rat(2), Rat(3));
    CHECK(rep.maximal);
    CHECK(rep.generators_verified);
  }
}

TEST_CASE("inadmissible parameters are rejected") {
  auto rows = catalog();
  for (const auto& r : rows) {
    if (r.segre == "(211)") {
      CHECK_THROWS_AS((void)tube_symmetry_algebra(r, std::nullopt, Rat(-3)),
                      std::invalid_argument);
    }
    if (r.segre == "(1111)") {
      CHECK_THROWS_AS((void)tube_symmetry_algebra(r, Rat(4), Rat(2)),
                      std::invalid_argument);
    }
  }
}

TEST_CASE("tube symmetry algebra for a trig row (1c2)") {
  auto rows = catalog();
  for (const auto& r : rows) {
    if (r.segre != "(1c2)") continue;
    auto rep = tube_symmetry_algebra(r);  // sample beta = 1
    CHECK(rep.generators_verified);
    CHECK(rep.algebra.check_jacobi().pass);
    CHECK(!rep.maximal);
  }
}
