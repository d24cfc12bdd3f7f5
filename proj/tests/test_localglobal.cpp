#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "fqsym/localglobal.hpp"
#include "fqsym/primes.hpp"

using namespace fqsym;

TEST_CASE("local solvability: frozen cases") {
  FieldCtx F3 = FieldCtx::make(3, 1);
  LocalReport rep = local_solvable(Poly::t(F3), Poly::parse(F3, "t+1"), 2);
  CHECK_FALSE(rep.locally_solvable);
  CHECK(rep.reason == LocalReport::Reason::SymbolObstruction);
  CHECK(rep.obstruction.value == F3.from_int(2));
  CHECK(rep.hensel_lift_applies);

  FieldCtx F5 = FieldCtx::make(5, 1);
  LocalReport ex = local_solvable(Poly::parse(F5, "2t^2"), Poly::t(F5), 2);
  CHECK(ex.reason == LocalReport::Reason::Excluded);
  CHECK_FALSE(ex.locally_solvable);

  // an exact square is locally solvable away from its support
  Poly sq = Poly::parse(F3, "t^2+2t+1");
  LocalReport ok = local_solvable(sq, Poly::t(F3), 2);
  CHECK(ok.locally_solvable);
  CHECK(ok.reason == LocalReport::Reason::ResidueFieldSolvable);

  CHECK_THROWS_AS(local_solvable(Poly::t(F3), Poly::parse(F3, "t+1"), 3), Error);  // p | n
  CHECK_THROWS_AS(local_solvable(Poly::t(F3), Poly::parse(F3, "t^2+2"), 2), Error);  // reducible
}

TEST_CASE("global n-th power extraction") {
  FieldCtx F3 = FieldCtx::make(3, 1);
  auto beta = global_nth_power(Poly::parse(F3, "t^2+2t+1"), 2);
  REQUIRE(beta.has_value());
  CHECK(*beta == Poly::parse(F3, "t+1"));
  CHECK_FALSE(global_nth_power(Poly::t(F3), 2).has_value());

  FieldCtx F5 = FieldCtx::make(5, 1);
  auto b5 = global_nth_power(Poly::parse(F5, "4t^2"), 2);
  REQUIRE(b5.has_value());
  CHECK(*b5 == Poly::parse(F5, "2t"));

  // soundness on random inputs: returned root powers back exactly
  std::mt19937_64 rng(1001);
  for (std::int64_t q : {3, 5, 9}) {
    FieldCtx F = FieldCtx::from_order(q);
    for (std::int64_t n : {2, 4}) {
      if ((q - 1) % n != 0 && q % 2 == 0) continue;
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<FFElem> c(2 + rng() % 3);
        for (auto& x : c) x = FFElem{std::uint32_t(rng() % std::uint64_t(q))};
        Poly base = Poly::from_coeffs(F, std::move(c));
        if (base.is_zero()) continue;
        Poly alpha = poly_pow(base, std::uint64_t(n));
        auto root = global_nth_power(alpha, n);
        REQUIRE(root.has_value());
        CHECK(poly_pow(*root, std::uint64_t(n)) == alpha);
      }
    }
  }
  CHECK_THROWS_AS(global_nth_power(Poly::zero(F3), 2), Error);
}

TEST_CASE("witness primes: frozen cases and parallel agreement") {
  FieldCtx F3 = FieldCtx::make(3, 1);
  auto w = find_witness_prime(Poly::t(F3), 2, 1);
  REQUIRE(w.has_value());
  CHECK(*w == Poly::parse(F3, "t+1"));

  FieldCtx F5 = FieldCtx::make(5, 1);
  auto w5 = find_witness_prime(Poly::parse(F5, "2t^2"), 2, 1);
  REQUIRE(w5.has_value());
  CHECK(*w5 == Poly::parse(F5, "t+1"));

  CHECK_FALSE(find_witness_prime(Poly::parse(F3, "t^2+2t+1"), 2, 4).has_value());

  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<FFElem> c(2 + rng() % 5);
    for (auto& x : c) x = FFElem{std::uint32_t(rng() % 5)};
    Poly alpha = Poly::from_coeffs(F5, std::move(c));
    if (alpha.is_zero()) continue;
    auto par = find_witness_prime(alpha, 2, 3);
    auto ser = find_witness_prime_serial(alpha, 2, 3);
    CHECK(par.has_value() == ser.has_value());
    if (par) CHECK(*par == *ser);
  }
}

TEST_CASE("gw_scan verdicts: frozen cases") {
  FieldCtx F3 = FieldCtx::make(3, 1);
  GWReport power = gw_scan(Poly::parse(F3, "t^2+2t+1"), 2, 3);
  CHECK(power.verdict == GWReport::Verdict::GlobalPower);
  REQUIRE(power.globally_power.has_value());
  CHECK(*power.globally_power == Poly::parse(F3, "t+1"));
  CHECK(power.witnesses.empty());
  CHECK(power.excluded_primes == std::vector<Poly>{Poly::parse(F3, "t+1")});

  GWReport witness = gw_scan(Poly::t(F3), 2, 2);
  CHECK(witness.verdict == GWReport::Verdict::WitnessFound);
  REQUIRE_FALSE(witness.witnesses.empty());
  CHECK(witness.witnesses.front() == Poly::parse(F3, "t+1"));

  FieldCtx F5 = FieldCtx::make(5, 1);
  GWReport t4 = gw_scan(poly_pow(Poly::t(F5), 4), 4, 2);
  CHECK(t4.verdict == GWReport::Verdict::GlobalPower);
  CHECK(*t4.globally_power == Poly::t(F5));

  CHECK_THROWS_AS(gw_scan(Poly::parse(F3, "2"), 2, 2), Error);        // constant input
  CHECK_THROWS_AS(gw_scan(Poly::t(F3), 3, 2), Error);                 // p | n
}

TEST_CASE("residue-field test equals brute enumeration for deg P <= 2, q in {3,5}") {
  for (std::int64_t q : {3, 5}) {
    FieldCtx F = FieldCtx::from_order(q);
    for (std::int64_t n : {2, 4}) {
      if (n % F.p() == 0) continue;
      for (int d = 1; d <= 2; ++d) {
        for (const Poly& P : monic_primes(F, d)) {
          QuotientRing R(P, false);
          BigInt size = R.size();
          std::set<BigInt> powers;
          for (BigInt code = 1; code < size; ++code)
            powers.insert(R.code_of(R.pow(R.element(code), BigInt(n))));
          for (BigInt code = 1; code < size; ++code) {
            Poly alpha = R.element(code);
            LocalReport rep = local_solvable(alpha, P, n);
            CHECK(rep.locally_solvable == (powers.count(code) > 0));
          }
        }
      }
    }
  }
}

TEST_CASE("reduction consistency: n can be replaced by gcd(n, q^d - 1)") {
  std::mt19937_64 rng(13);
  FieldCtx F5 = FieldCtx::make(5, 1);
  for (const Poly& P : monic_primes(F5, 2)) {
    std::int64_t qd1 = 24;
    for (std::int64_t n : {2, 3, 4, 6, 7, 8, 9, 12}) {
      std::int64_t g = std::gcd(n, qd1);
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<FFElem> c(1 + rng() % 4);
        for (auto& x : c) x = FFElem{std::uint32_t(rng() % 5)};
        Poly alpha = Poly::from_coeffs(F5, std::move(c));
        if (alpha.is_zero() || poly_mod(alpha, P).is_zero()) continue;
        CHECK(local_solvable(alpha, P, n).locally_solvable ==
              local_solvable(alpha, P, g).locally_solvable);
      }
    }
  }
}

TEST_CASE("forward soundness: a global power has no witness at any bound") {
  std::mt19937_64 rng(55);
  for (std::int64_t q : {3, 5}) {
    FieldCtx F = FieldCtx::from_order(q);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<FFElem> c(2 + rng() % 2);
      for (auto& x : c) x = FFElem{std::uint32_t(rng() % std::uint64_t(q))};
      Poly base = Poly::from_coeffs(F, std::move(c));
      if (base.is_zero() || base.is_constant()) continue;
      Poly alpha = base * base;
      GWReport rep = gw_scan(alpha, 2, 3);
      CHECK(rep.verdict == GWReport::Verdict::GlobalPower);
      CHECK(rep.witnesses.empty());
      CHECK(poly_pow(*rep.globally_power, 2) == alpha);
    }
  }
}
