#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tanaka/scalar.hpp"

#include <random>

using namespace tanaka;

namespace {

UnitCtxPtr ctx1() { return std::make_shared<UnitContext>(std::vector<std::string>{"u1"}); }
UnitCtxPtr ctx2() {
  return std::make_shared<UnitContext>(std::vector<std::string>{"u1", "u2"});
}

Scalar rand_scalar(UnitCtxPtr ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 3), coef(-4, 4), expo(-2, 2);
  std::vector<std::pair<Scalar::Expo, GaussQ>> raw;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Scalar::Expo e(ctx->size());
    for (auto& x : e) x = expo(rng);
    raw.push_back({e, GaussQ(Rat(coef(rng)), Rat(coef(rng)))});
  }
  return Scalar::normalize(ctx, raw);
}

}  // namespace

TEST_CASE("normalize cancels and merges") {
  auto c = ctx1();
  // {(1,[0]), (-1,[0])} -> 0
  Scalar z = Scalar::normalize(c, {{{0}, GaussQ(1)}, {{0}, GaussQ(-1)}});
  CHECK(z.is_zero());
  // {(i,[1]), (i,[1])} -> {(2i,[1])}
  Scalar m = Scalar::normalize(c, {{{1}, GaussQ::i()}, {{1}, GaussQ::i()}});
  CHECK(m.terms().size() == 1);
  CHECK(m.terms().begin()->second == GaussQ(Rat(0), Rat(2)));
  // idempotent
  std::vector<std::pair<Scalar::Expo, GaussQ>> back(m.terms().begin(), m.terms().end());
  CHECK(Scalar::normalize(c, back) == m);
}

TEST_CASE("printer/parser round-trip") {
  auto c = ctx1();
  // u1 = e^{i theta/2}; u1^2 plays e^{i theta}
  Scalar s = Scalar::unit(c, 0, 2);
  CHECK(s.str() == "u1^2");
  CHECK(Scalar::parse(c, s.str()) == s);

  std::mt19937_64 rng(12345);
  for (int k = 0; k < 200; ++k) {
    Scalar r = rand_scalar(c, rng);
    CHECK(Scalar::parse(c, r.str()) == r);
  }
  auto c2 = ctx2();
  for (int k = 0; k < 200; ++k) {
    Scalar r = rand_scalar(c2, rng);
    CHECK(Scalar::parse(c2, r.str()) == r);
  }
  CHECK(Scalar::parse(c, "(1/2)*I*u1^-1").str() == "(1/2*I)*u1^-1");
}

TEST_CASE("conjugation") {
  auto c = ctx1();
  Scalar I = Scalar::constant(c, GaussQ::i());
  CHECK(I.conj() == -I);
  Scalar u = Scalar::unit(c, 0, 2);  // e^{i theta}
  CHECK(u.conj() == Scalar::unit(c, 0, -2));
  // 2*e^{i theta/2} + i -> 2*e^{-i theta/2} - i
  Scalar s = Scalar::parse(c, "2*u1 + I");
  CHECK(s.conj() == Scalar::parse(c, "2*u1^-1 - I"));
  // involution + morphism properties on random samples
  std::mt19937_64 rng(99);
  for (int k = 0; k < 100; ++k) {
    Scalar a = rand_scalar(c, rng), b = rand_scalar(c, rng);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
}

TEST_CASE("ring axioms on random samples") {
  auto c = ctx2();
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100; ++k) {
    Scalar a = rand_scalar(c, rng), b = rand_scalar(c, rng), d = rand_scalar(c, rng);
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK((a + b) + d == a + (b + d));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("conj(s)*s real for single terms") {
  auto c = ctx1();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-5, 5), expo(-3, 3);
  for (int k = 0; k < 50; ++k) {
    Rat q(coef(rng), 7);
    q.canonicalize();
    Scalar s = Scalar::normalize(c, {{{expo(rng)}, GaussQ(q)}});
    Scalar p = s.conj() * s;
    for (const auto& [e, co] : p.terms()) CHECK(co.is_real());
  }
}

TEST_CASE("zero test exact") {
  auto c = ctx1();
  Scalar a = Scalar::parse(c, "u1 + I");
  Scalar b = Scalar::parse(c, "I + u1");
  CHECK((a - b).is_zero());
  CHECK(!a.is_zero());
}

TEST_CASE("context mixing is an error") {
  auto a = Scalar::constant(ctx1(), GaussQ(1));
  auto b = Scalar::constant(ctx2(), GaussQ(1));
  CHECK_THROWS_AS((void)(a + b), std::invalid_argument);
}

TEST_CASE("unit inverse") {
  auto c = ctx1();
  Scalar u = Scalar::unit(c, 0, 3);
  Scalar two_u = Scalar::constant(c, GaussQ(2)) * u;
  CHECK(two_u.inverse() * two_u == Scalar::constant(c, GaussQ(1)));
  Scalar notunit = Scalar::parse(c, "u1 + 1");
  CHECK_THROWS_AS((void)notunit.inverse(), std::domain_error);
}
