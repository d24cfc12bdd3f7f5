#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fqsym/factor.hpp"
#include "fqsym/poly.hpp"

using namespace fqsym;

namespace {

Poly rand_poly(const FieldCtx& F, int max_deg, std::mt19937_64& rng) {
  std::vector<FFElem> c(1 + rng() % std::uint64_t(max_deg + 1));
  for (auto& x : c) x = FFElem{std::uint32_t(rng() % std::uint64_t(F.q()))};
  return Poly::from_coeffs(F, std::move(c));
}

// trial-division oracle: no monic divisor of degree in [1, deg/2]
bool irreducible_by_trial_division(const Poly& f) {
  const FieldCtx& F = f.field();
  int n = f.deg();
  for (int d = 1; 2 * d <= n; ++d) {
    std::int64_t total = 1;
    for (int i = 0; i < d; ++i) total *= F.q();
    for (std::int64_t code = 0; code < total; ++code)
      if (poly_mod(f, Poly::monic_from_code(F, d, code)).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("division with remainder") {
  FieldCtx F3 = FieldCtx::make(3, 1);
  Poly f = Poly::parse(F3, "t^2+1");
  Poly g = Poly::parse(F3, "t+1");
  auto [q, r] = divrem(f, g);
  CHECK(q == Poly::parse(F3, "t+2"));
  CHECK(r == Poly::parse(F3, "2"));

  auto [q1, r1] = divrem(f, Poly::one(F3));
  CHECK(q1 == f);
  CHECK(r1.is_zero());

  auto [q0, r0] = divrem(Poly::zero(F3), g);
  CHECK(q0.is_zero());
  CHECK(r0.is_zero());

  CHECK_THROWS_AS(divrem(f, Poly::zero(F3)), Error);
  FieldCtx F5 = FieldCtx::make(5, 1);
  CHECK_THROWS_AS(divrem(f, Poly::t(F5)), Error);  // field mismatch

  std::mt19937_64 rng(7);
  for (std::int64_t qq : {2, 3, 9}) {
    FieldCtx F = FieldCtx::from_order(qq);
    for (int t = 0; t < 500; ++t) {
      Poly a = rand_poly(F, 8, rng), b = rand_poly(F, 5, rng);
      if (b.is_zero()) continue;
      auto [quot, rem] = divrem(a, b);
      CHECK(b * quot + rem == a);
      CHECK((rem.is_zero() || rem.deg() < b.deg()));
    }
  }
}

TEST_CASE("gcd and Bezout") {
  FieldCtx F5 = FieldCtx::make(5, 1);
  CHECK(poly_gcd(Poly::parse(F5, "t^2+4"), Poly::parse(F5, "t+4")) == Poly::parse(F5, "t+4"));
  Poly f = Poly::parse(F5, "2*t^3+1");
  CHECK(poly_gcd(f, Poly::zero(F5)) == f.monic());
  CHECK_THROWS_AS(poly_gcd(Poly::zero(F5), Poly::zero(F5)), Error);

  FieldCtx F3 = FieldCtx::make(3, 1);
  auto bz = poly_bezout(Poly::t(F3), Poly::parse(F3, "t+1"));
  CHECK(bz.d == Poly::one(F3));
  CHECK(bz.u * Poly::t(F3) + bz.v * Poly::parse(F3, "t+1") == Poly::one(F3));
  CHECK(coprime(Poly::t(F3), Poly::parse(F3, "t+1")));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    Poly a = rand_poly(F5, 6, rng), b = rand_poly(F5, 6, rng);
    if (a.is_zero() && b.is_zero()) continue;
    auto z = poly_bezout(a, b);
    CHECK(z.u * a + z.v * b == z.d);
    CHECK(z.d.is_monic());
    if (!a.is_zero()) CHECK(poly_mod(a, z.d).is_zero());
    if (!b.is_zero()) CHECK(poly_mod(b, z.d).is_zero());
  }
}

TEST_CASE("modular exponentiation") {
  FieldCtx F3 = FieldCtx::make(3, 1);
  Poly P = Poly::parse(F3, "t+1");
  CHECK(powmod(Poly::t(F3), 3, P) == Poly::parse(F3, "2"));
  CHECK(powmod(Poly::t(F3), 2, P) == Poly::one(F3));
  CHECK(powmod(Poly::t(F3), 0, P) == Poly::one(F3));
  // Fermat with a big exponent over a quadratic modulus
  Poly Q = Poly::parse(F3, "t^2+1");
  CHECK(powmod(Poly::parse(F3, "t+2"), BigInt(8), Q) == Poly::one(F3));
}

TEST_CASE("irreducibility matches trial division, deg <= 4, q in {2,3,4,5}") {
  FieldCtx F3 = FieldCtx::make(3, 1);
  CHECK(is_irreducible(Poly::parse(F3, "t+2")));
  CHECK(is_irreducible(Poly::parse(F3, "t^2+1")));
  FieldCtx F5 = FieldCtx::make(5, 1);
  CHECK_FALSE(is_irreducible(Poly::parse(F5, "t^2+1")));
  CHECK_THROWS_AS(is_irreducible(Poly::parse(F5, "3")), Error);

  for (std::int64_t q : {2, 3, 4, 5}) {
    FieldCtx F = FieldCtx::from_order(q);
    for (int n = 2; n <= 4; ++n) {
      std::int64_t total = 1;
      for (int i = 0; i < n; ++i) total *= q;
      for (std::int64_t code = 0; code < total; ++code) {
        Poly cand = Poly::monic_from_code(F, n, code);
        CHECK(is_irreducible(cand) == irreducible_by_trial_division(cand));
      }
    }
  }
}

TEST_CASE("resultant: frozen values, swap law, product-over-roots oracle") {
  FieldCtx F3 = FieldCtx::make(3, 1);
  CHECK(resultant(Poly::parse(F3, "t+1"), Poly::parse(F3, "t+2")) == F3.one());

  std::mt19937_64 rng(23);
  for (std::int64_t q : {3, 5, 7}) {
    FieldCtx F = FieldCtx::from_order(q);
    // Res(t - a, g) = g(a)
    for (std::int64_t a0 = 0; a0 < q; ++a0) {
      Poly lin = Poly::t(F) - Poly::constant(F, FFElem{std::uint32_t(a0)});
      for (int t = 0; t < 25; ++t) {
        Poly g = rand_poly(F, 4, rng);
        if (g.is_zero()) continue;
        CHECK(resultant(lin, g) == g.eval(FFElem{std::uint32_t(a0)}));
      }
    }
    // swap antisymmetry, checked not assumed
    for (int t = 0; t < 300; ++t) {
      Poly f = rand_poly(F, 4, rng), g = rand_poly(F, 4, rng);
      if (f.is_zero() || g.is_zero()) continue;
      FFElem rhs = resultant(g, f);
      int df = f.is_constant() ? 0 : f.deg(), dg = g.is_constant() ? 0 : g.deg();
      if ((df * dg) % 2 != 0) rhs = F.neg(rhs);
      CHECK(resultant(f, g) == rhs);
    }
  }

  // Euclidean route equals the product-over-roots route for every pair of
  // nonzero polynomials of degree <= 3
  for (std::int64_t q : {3, 5}) {
    FieldCtx F = FieldCtx::from_order(q);
    std::int64_t total = q * q * q * q;
    auto decode = [&](std::int64_t code) {
      std::vector<FFElem> c;
      for (int i = 0; i < 4; ++i) {
        c.push_back(FFElem{std::uint32_t(code % q)});
        code /= q;
      }
      return Poly::from_coeffs(F, std::move(c));
    };
    for (std::int64_t fc = 1; fc < total; ++fc) {
      Poly f = decode(fc);
      // hoist the factorization of f; the norm route reuses it per g
      Factorization fac = f.is_constant() ? Factorization{f.leading(), {}} : factor(f);
      std::vector<QuotientRing> rings;
      for (const auto& [P, mult] : fac.factors) rings.emplace_back(P, false);
      std::uint64_t mismatches = 0;
      for (std::int64_t gc = 1; gc < total; ++gc) {
        Poly g = decode(gc);
        int dg = g.is_constant() ? 0 : g.deg();
        FFElem expect = F.pow(f.leading(), BigInt(dg));
        for (std::size_t k = 0; k < rings.size(); ++k) {
          const QuotientRing& R = rings[k];
          Poly norm = Poly::one(F);
          Poly cur = R.reduce(g);
          for (int i = 0; i < R.modulus().deg(); ++i) {
            norm = R.mul(norm, cur);
            cur = R.pow(cur, BigInt(q));
          }
          FFElem nval = norm.is_zero() ? F.zero() : norm.coeff(0);
          expect = F.mul(expect, F.pow(nval, BigInt(fac.factors[k].second)));
        }
        if (resultant(f, g) != expect) ++mismatches;
      }
      CHECK(mismatches == 0);
    }
  }
}

TEST_CASE("Frobenius substitution identity") {
  FieldCtx F3 = FieldCtx::make(3, 1);
  CHECK(frobenius_substitution_check(Poly::parse(F3, "2"), 1));
  CHECK(frobenius_substitution_check(Poly::parse(F3, "t+1"), 1));
  FieldCtx F5 = FieldCtx::make(5, 1);
  CHECK(frobenius_substitution_check(Poly::parse(F5, "t^2+2t"), 1));
  FieldCtx F4 = FieldCtx::make(2, 2);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    Poly Q = rand_poly(F4, 3, rng);
    CHECK(frobenius_substitution_check(Q, 1));
    CHECK(frobenius_substitution_check(Q, 2));
  }
}

TEST_CASE("root orbits") {
  FieldCtx F3 = FieldCtx::make(3, 1);
  CHECK(verify_root_orbit(Poly::parse(F3, "t+1")));
  CHECK(verify_root_orbit(Poly::parse(F3, "t^2+1")));
  FieldCtx F5 = FieldCtx::make(5, 1);
  CHECK(verify_root_orbit(Poly::parse(F5, "t^2+2")));
  CHECK_THROWS_AS(verify_root_orbit(Poly::parse(F3, "t^2+2")), Error);  // splits
}

TEST_CASE("quotient ring") {
  FieldCtx F3 = FieldCtx::make(3, 1);
  QuotientRing R(Poly::parse(F3, "t^2+1"));
  CHECK(R.size() == BigInt(9));
  Poly g = R.generator();
  CHECK(R.unit_order(g) == BigInt(8));
  for (BigInt code = 1; code < 9; ++code) {
    Poly a = R.element(code);
    CHECK(R.mul(a, R.inv(a)) == Poly::one(F3));
    CHECK(R.pow(a, BigInt(8)) == Poly::one(F3));
    CHECK(R.code_of(a) == code);
  }
}

TEST_CASE("parser and canonical printer") {
  FieldCtx F3 = FieldCtx::make(3, 1);
  CHECK(Poly::parse(F3, "t^2+1").to_string() == "t^2+1");
  CHECK(Poly::parse(F3, "2*t^3+t").to_string() == "2*t^3+t");
  CHECK(Poly::parse(F3, "2t3 + t").to_string() == "2*t^3+t");  // sugar forms
  CHECK(Poly::parse(F3, "t - 1").to_string() == "t+2");
  CHECK(Poly::parse(F3, "[1,0,1]") == Poly::parse(F3, "t^2+1"));
  CHECK(Poly::parse(F3, "0").is_zero());
  CHECK(Poly::zero(F3).to_string() == "0");
  CHECK(Poly::parse(F3, "t+4") == Poly::parse(F3, "t+1"));
  CHECK_THROWS_AS(Poly::parse(F3, "t^"), Error);
  CHECK_THROWS_AS(Poly::parse(F3, "w+1"), Error);

  FieldCtx F9 = FieldCtx::make(3, 2);
  Poly p = Poly::parse(F9, "[1,2]*t^2+[0,1]*t+2");
  CHECK(Poly::parse(F9, p.to_string()) == p);
  CHECK(Poly::parse(F9, p.to_compact()) == p);
  CHECK(Poly::parse(F9, "[2,1]") == Poly::constant(F9, F9.from_coeffs({2, 1})));
  CHECK(Poly::parse(F9, "[[2,1],[0,1]]").deg() == 1);

  std::mt19937_64 rng(99);
  for (std::int64_t q : {3, 5, 7, 9}) {
    FieldCtx F = FieldCtx::from_order(q);
    for (int t = 0; t < 2000; ++t) {
      Poly a = rand_poly(F, 6, rng);
      CHECK(Poly::parse(F, a.to_string()) == a);
      CHECK(Poly::parse(F, a.to_compact()) == a);
    }
  }
}

TEST_CASE("Fermat analogue, exhaustive: deg P <= 3 over q in {3,5,7}") {
  for (std::int64_t q : {3, 5, 7}) {
    FieldCtx F = FieldCtx::from_order(q);
    for (int d = 1; d <= 3; ++d) {
      std::int64_t total = 1;
      for (int i = 0; i < d; ++i) total *= q;
      for (std::int64_t pc = 0; pc < total; ++pc) {
        Poly P = Poly::monic_from_code(F, d, pc);
        if (!is_irreducible(P)) continue;
        BigInt exponent = big_pow(BigInt(q), std::uint64_t(d)) - 1;
        for (std::int64_t ac = 1; ac < total; ++ac) {
          std::vector<FFElem> c;
          std::int64_t v = ac;
          for (int i = 0; i < d; ++i) {
            c.push_back(FFElem{std::uint32_t(v % q)});
            v /= q;
          }
          Poly alpha = Poly::from_coeffs(F, std::move(c));
          CHECK(powmod(alpha, exponent, P) == Poly::one(F));
        }
      }
    }
  }
}

TEST_CASE("exponents beyond machine words: Fermat at degree 30 over GF(7)") {
  FieldCtx F7 = FieldCtx::make(7, 1);
  std::mt19937_64 rng(2024);
  Poly P;
  do {
    std::vector<FFElem> c(31);
    for (int i = 0; i < 30; ++i) c[std::size_t(i)] = FFElem{std::uint32_t(rng() % 7)};
    c[30] = F7.one();
    P = Poly::from_coeffs(F7, std::move(c));
  } while (!is_irreducible(P));
  BigInt exponent = big_pow(BigInt(7), 30) - 1;  // needs 85 bits
  CHECK(big_bits(exponent) > 64);
  for (int t = 0; t < 3; ++t) {
    Poly alpha = rand_poly(F7, 29, rng);
    if (alpha.is_zero()) continue;
    CHECK(powmod(alpha, exponent, P) == Poly::one(F7));
    // the symbol-shaped exponent divides out exactly
    CHECK(powmod(poly_pow(alpha, 2), exponent / 2, P) == powmod(alpha, exponent, P));
  }
}

TEST_CASE("field moduli are irreducible by the polynomial-ring test") {
  for (std::int64_t q : {4, 8, 9, 16, 25, 27}) {
    FieldCtx F = FieldCtx::from_order(q);
    FieldCtx base = FieldCtx::make(F.p(), 1);
    Poly modulus = Poly::from_ints(base, F.modulus());
    CHECK(modulus.is_monic());
    CHECK(modulus.deg() == F.e());
    CHECK(is_irreducible(modulus));
    // lexicographic minimality: no earlier monic candidate is irreducible
    std::int64_t code_limit = 0;
    {
      std::int64_t code = 0, weight = 1;
      for (int i = 0; i < F.e(); ++i) {
        code += F.modulus()[std::size_t(i)] * weight;
        weight *= F.p();
      }
      code_limit = code;
    }
    for (std::int64_t c = 0; c < code_limit; ++c)
      CHECK_FALSE(is_irreducible(Poly::monic_from_code(base, F.e(), c)));
  }
}

TEST_CASE("canonical order sorts by degree then high coefficients") {
  FieldCtx F3 = FieldCtx::make(3, 1);
  CHECK(Poly::canonical_less(Poly::parse(F3, "t+2"), Poly::parse(F3, "t^2")));
  CHECK(Poly::canonical_less(Poly::parse(F3, "t"), Poly::parse(F3, "t+1")));
  CHECK(Poly::canonical_less(Poly::parse(F3, "t^2+2t"), Poly::parse(F3, "2t^2")));
  CHECK_FALSE(Poly::canonical_less(Poly::parse(F3, "t"), Poly::parse(F3, "t")));
}
