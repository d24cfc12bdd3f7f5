#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fqsym/primes.hpp"

using namespace fqsym;

TEST_CASE("frozen counts and lists over GF(3)") {
  FieldCtx F3 = FieldCtx::make(3, 1);
  std::vector<Poly> deg1 = monic_primes(F3, 1);
  REQUIRE(deg1.size() == 3);
  CHECK(deg1[0] == Poly::parse(F3, "t"));
  CHECK(deg1[1] == Poly::parse(F3, "t+1"));
  CHECK(deg1[2] == Poly::parse(F3, "t+2"));
  CHECK(count_monic_primes(F3, 1) == BigInt(3));
  CHECK(count_monic_primes(F3, 2) == BigInt(3));   // (9-3)/2
  CHECK(count_monic_primes(F3, 4) == BigInt(18));  // (81-9)/4
}

TEST_CASE("enumeration equals the Moebius count and meets the lower bound") {
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    FieldCtx F = FieldCtx::from_order(q);
    for (int n = 1; n <= 4; ++n) {
      std::vector<Poly> primes = monic_primes(F, n);
      CHECK(BigInt(primes.size()) == count_monic_primes(F, n));
      CHECK(prime_count_lower_bound_holds(F, n));
      for (const Poly& P : primes) {
        CHECK(P.is_monic());
        CHECK(P.deg() == n);
      }
      for (std::size_t i = 1; i < primes.size(); ++i)
        CHECK(Poly::canonical_less(primes[i - 1], primes[i]));
    }
  }
}

TEST_CASE("parallel enumeration is identical to the serial reference") {
  for (std::int64_t q : {3, 5, 9}) {
    FieldCtx F = FieldCtx::from_order(q);
    for (int n = 1; n <= 4; ++n) {
      CHECK(monic_primes(F, n) == monic_primes_serial(F, n));
    }
  }
}

TEST_CASE("size guard") {
  FieldCtx F = FieldCtx::from_order(1024);
  CHECK_THROWS_AS(monic_primes(F, 3), Error);  // 2^30 candidates
}

TEST_CASE("disk cache: build, reload, survive corruption") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "fqsym_test_cache";
  fs::remove_all(dir);
  FieldCtx F5 = FieldCtx::make(5, 1);

  std::vector<Poly> direct = monic_primes(F5, 3);
  std::vector<Poly> built = monic_primes_cached(F5, 3, dir.string());
  CHECK(built == direct);
  fs::path file = dir / "q5_deg3.txt";
  REQUIRE(fs::exists(file));

  std::vector<Poly> reloaded = monic_primes_cached(F5, 3, dir.string());
  CHECK(reloaded == direct);

  SUBCASE("corrupted entry rebuilds") {
    std::ofstream out(file, std::ios::app);
    out << "t^3\n";  // reducible line appended
    out.close();
    std::vector<Poly> rebuilt = monic_primes_cached(F5, 3, dir.string());
    CHECK(rebuilt == direct);
  }
  SUBCASE("stale version header rebuilds") {
    std::ofstream out(file, std::ios::trunc);
    out << "# fqsym 0.0.0 q=5 deg=3\nt^3+t+1\n";
    out.close();
    std::vector<Poly> rebuilt = monic_primes_cached(F5, 3, dir.string());
    CHECK(rebuilt == direct);
  }
  fs::remove_all(dir);
}
