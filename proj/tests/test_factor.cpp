#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fqsym/factor.hpp"

using namespace fqsym;

TEST_CASE("frozen factorizations over GF(3)") {
  FieldCtx F3 = FieldCtx::make(3, 1);

  Factorization c = factor(Poly::parse(F3, "2"));
  CHECK(c.unit == F3.from_int(2));
  CHECK(c.factors.empty());

  Factorization a = factor(Poly::parse(F3, "t^2+2"));
  CHECK(a.unit == F3.one());
  REQUIRE(a.factors.size() == 2);
  CHECK(a.factors[0].first == Poly::parse(F3, "t+1"));
  CHECK(a.factors[0].second == 1);
  CHECK(a.factors[1].first == Poly::parse(F3, "t+2"));
  CHECK(a.factors[1].second == 1);

  Factorization b = factor(Poly::parse(F3, "2t^2+2"));
  CHECK(b.unit == F3.from_int(2));
  REQUIRE(b.factors.size() == 1);
  CHECK(b.factors[0].first == Poly::parse(F3, "t^2+1"));
  CHECK(b.factors[0].second == 1);

  CHECK_THROWS_AS(factor(Poly::zero(F3)), Error);
}

TEST_CASE("exhaustive round trip, deg <= 4 over GF(2) and GF(3)") {
  for (std::int64_t q : {2, 3}) {
    FieldCtx F = FieldCtx::from_order(q);
    std::int64_t total = 1;
    for (int i = 0; i <= 4; ++i) total *= q;
    for (std::int64_t code = 1; code < total; ++code) {
      std::vector<FFElem> c;
      std::int64_t v = code;
      for (int k = 0; k <= 4; ++k) {
        c.push_back(FFElem{std::uint32_t(v % q)});
        v /= q;
      }
      Poly f = Poly::from_coeffs(F, std::move(c));
      if (f.is_zero()) continue;
      Factorization fac = factor(f);
      CHECK(fac.reassemble(F) == f);
      for (const auto& [P, mult] : fac.factors) {
        CHECK(P.is_monic());
        CHECK(mult >= 1);
        CHECK(is_irreducible(P));
      }
      for (std::size_t i = 1; i < fac.factors.size(); ++i) {
        CHECK(Poly::canonical_less(fac.factors[i - 1].first, fac.factors[i].first));
      }
    }
  }
}

TEST_CASE("random round trip across characteristics, including char 2 towers") {
  std::mt19937_64 rng(4242);
  for (std::int64_t q : {4, 5, 8, 9, 13, 16, 25}) {
    FieldCtx F = FieldCtx::from_order(q);
    for (int t = 0; t < 200; ++t) {
      int d = 1 + int(rng() % 7);
      std::vector<FFElem> c(std::size_t(d) + 1);
      for (auto& x : c) x = FFElem{std::uint32_t(rng() % std::uint64_t(q))};
      Poly f = Poly::from_coeffs(F, std::move(c));
      if (f.is_zero()) continue;
      Factorization fac = factor(f);
      CHECK(fac.reassemble(F) == f);
      for (const auto& [P, mult] : fac.factors) CHECK(is_irreducible(P));
    }
  }
}

TEST_CASE("repeated factors and pure powers") {
  FieldCtx F3 = FieldCtx::make(3, 1);
  Poly p = Poly::parse(F3, "t+1");
  Poly f = Poly::one(F3);
  for (int i = 0; i < 6; ++i) f = f * p;
  Factorization fac = factor(f);
  REQUIRE(fac.factors.size() == 1);
  CHECK(fac.factors[0].first == p);
  CHECK(fac.factors[0].second == 6);

  // multiplicity divisible by the characteristic (exercises the p-th root path)
  FieldCtx F2 = FieldCtx::make(2, 1);
  Poly g = Poly::parse(F2, "t^2+t+1");
  Poly h = g * g * g * g;  // (t^2+t+1)^4 over GF(2)
  Factorization fac2 = factor(h);
  REQUIRE(fac2.factors.size() == 1);
  CHECK(fac2.factors[0].first == g);
  CHECK(fac2.factors[0].second == 4);
}

TEST_CASE("factorization is deterministic for a fixed seed") {
  FieldCtx F5 = FieldCtx::make(5, 1);
  Poly f = Poly::parse(F5, "t^6+2t^4+3t^2+4t+1");
  Factorization a = factor(f, 12345);
  Factorization b = factor(f, 12345);
  REQUIRE(a.factors.size() == b.factors.size());
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    CHECK(a.factors[i].first == b.factors[i].first);
    CHECK(a.factors[i].second == b.factors[i].second);
  }
  CHECK(a.unit == b.unit);
}
