#include "fqsym/cli_core.hpp"

#include <chrono>
#include <iomanip>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "fqsym/family.hpp"
#include "fqsym/primes.hpp"
#include "fqsym/scan.hpp"

namespace fqsym {

namespace {

using nlohmann::json;

json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

json scan_to_json(const ScanResult& r) {
  return json{{"cases", r.cases}, {"failures", r.failures}, {"witnesses", r.witnesses}};
}

json gw_report_to_json(const GWReport& rep) {
  json out;
  out["schema_version"] = 1;
  out["alpha"] = rep.alpha.to_string();
  out["n"] = rep.n;
  out["degree_bound"] = rep.degree_bound;
  json excluded = json::array();
  for (const Poly& P : rep.excluded_primes) excluded.push_back(P.to_string());
  out["excluded_primes"] = excluded;
  json witnesses = json::array();
  for (const Poly& P : rep.witnesses) witnesses.push_back(P.to_string());
  out["witnesses"] = witnesses;
  out["globally_power"] = rep.globally_power ? json(rep.globally_power->to_string()) : json(nullptr);
  out["verdict"] = GWReport::verdict_name(rep.verdict);
  return out;
}

// ---------------------------------------------------------------------------
// selftest suites

struct SuiteCtx {
  bool full = false;
  std::uint64_t seed = kDefaultSeed;
  bool corrupt = false;
  std::string cache_dir;
};

void record(SuiteResult& r, bool ok, const std::string& witness) {
  ++r.cases;
  if (!ok) {
    ++r.failures;
    if (r.witnesses.size() < 8) r.witnesses.push_back(witness);
  }
}

void merge(SuiteResult& r, const ScanResult& s) {
  r.cases += s.cases;
  r.failures += s.failures;
  for (const auto& w : s.witnesses)
    if (r.witnesses.size() < 8) r.witnesses.push_back(w);
}

std::vector<std::int64_t> divisors_of(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= m; ++d)
    if (m % d == 0) out.push_back(d);
  return out;
}

SuiteResult suite_ff(const SuiteCtx& c) {
  SuiteResult r;
  r.name = "ff";
  std::vector<std::int64_t> orders = c.full ? std::vector<std::int64_t>{2, 3, 4, 5, 7, 8, 9, 25, 27}
                                            : std::vector<std::int64_t>{2, 3, 4, 5, 8, 9};
  std::mt19937_64 rng(c.seed);
  for (std::int64_t q : orders) {
    FieldCtx F = FieldCtx::from_order(q);
    // field axioms: exhaustive triples for q <= 9, random for larger
    auto check_triple = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
      FFElem a{x}, b{y}, d{z};
      bool ok = F.mul(F.mul(a, b), d) == F.mul(a, F.mul(b, d)) &&
                F.mul(a, F.add(b, d)) == F.add(F.mul(a, b), F.mul(a, d)) &&
                F.add(F.add(a, b), d) == F.add(a, F.add(b, d));
      record(r, ok, "axioms q=" + std::to_string(q));
    };
    if (q <= 9) {
      for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y)
          for (std::uint32_t z = 0; z < q; ++z) check_triple(x, y, z);
    } else {
      for (int t = 0; t < 200; ++t)
        check_triple(std::uint32_t(rng() % q), std::uint32_t(rng() % q), std::uint32_t(rng() % q));
    }
    // Lagrange + order formula + subgroup uniqueness
    for (std::int64_t a = 1; a < q; ++a) {
      FFElem x{std::uint32_t(a)};
      record(r, F.pow(x, BigInt(q - 1)) == F.one(), "pow q-1, q=" + std::to_string(q));
      std::int64_t expected = (q - 1) / std::gcd(F.dlog(x), q - 1);
      record(r, F.mult_order(x) == expected, "order formula q=" + std::to_string(q));
    }
    for (std::int64_t d : divisors_of(q - 1)) {
      auto sub = F.nth_roots_of_unity(d);
      std::uint64_t solutions = 0;
      for (std::int64_t a = 1; a < q; ++a)
        if (F.pow(FFElem{std::uint32_t(a)}, BigInt(d)) == F.one()) ++solutions;
      record(r, std::int64_t(sub.size()) == d && solutions == std::uint64_t(d),
             "subgroup d=" + std::to_string(d) + " q=" + std::to_string(q));
    }
    // is_nth_power vs brute enumeration
    for (std::int64_t n = 1; n <= (c.full ? 12 : 6); ++n) {
      std::vector<bool> powerset(std::size_t(q), false);
      for (std::int64_t b = 1; b < q; ++b)
        powerset[F.pow(FFElem{std::uint32_t(b)}, BigInt(n)).code] = true;
      for (std::int64_t a = 1; a < q; ++a) {
        bool brute = powerset[std::size_t(a)];
        record(r, F.is_nth_power(FFElem{std::uint32_t(a)}, BigInt(n)) == brute,
               "is_nth_power q=" + std::to_string(q) + " n=" + std::to_string(n));
      }
    }
  }
  if (c.corrupt) {
    FieldCtx F = FieldCtx::make(5, 1);
    FFElem two = F.from_int(2);
    FFElem perturbed = F.add(F.pow(two, BigInt(3)), F.one());
    record(r, perturbed == F.from_int(3), "fault-injection: 2^3 in GF(5)");
  }
  return r;
}

SuiteResult suite_poly(const SuiteCtx& c) {
  SuiteResult r;
  r.name = "poly";
  std::mt19937_64 rng(c.seed ^ 0x90210ULL);
  int roundtrips = c.full ? 10000 : 1000;
  for (std::int64_t q : {3, 5, 7}) {
    FieldCtx F = FieldCtx::from_order(q);
    for (int t = 0; t < roundtrips; ++t) {
      int d = int(rng() % 7);
      std::vector<FFElem> coeffs(std::size_t(d) + 1);
      for (auto& x : coeffs) x = FFElem{std::uint32_t(rng() % std::uint64_t(q))};
      Poly p = Poly::from_coeffs(F, std::move(coeffs));
      bool ok = Poly::parse(F, p.to_string()) == p && Poly::parse(F, p.to_compact()) == p;
      record(r, ok, "roundtrip q=" + std::to_string(q) + " poly=" + p.to_string());
    }
    // divrem reconstruction and degree bound on random pairs
    for (int t = 0; t < (c.full ? 2000 : 400); ++t) {
      Poly f = Poly::from_ints(F, [&] {
        std::vector<std::int64_t> v(1 + rng() % 7);
        for (auto& x : v) x = std::int64_t(rng() % std::uint64_t(q));
        return v;
      }());
      Poly g = Poly::from_ints(F, [&] {
        std::vector<std::int64_t> v(1 + rng() % 5);
        for (auto& x : v) x = std::int64_t(rng() % std::uint64_t(q));
        return v;
      }());
      if (g.is_zero()) continue;
      auto [quot, rem] = divrem(f, g);
      bool ok = g * quot + rem == f && (rem.is_zero() || rem.deg() < g.deg());
      record(r, ok, "divrem q=" + std::to_string(q));
      if (!f.is_zero()) {
        auto bz = poly_bezout(f, g);
        bool bok = bz.u * f + bz.v * g == bz.d && bz.d.is_monic();
        record(r, bok, "bezout q=" + std::to_string(q));
      }
    }
  }
  // extension-field parser round-trip
  {
    FieldCtx F9 = FieldCtx::from_order(9);
    for (int t = 0; t < (c.full ? 2000 : 300); ++t) {
      int d = int(rng() % 5);
      std::vector<FFElem> coeffs(std::size_t(d) + 1);
      for (auto& x : coeffs) x = FFElem{std::uint32_t(rng() % 9)};
      Poly p = Poly::from_coeffs(F9, std::move(coeffs));
      record(r, Poly::parse(F9, p.to_string()) == p && Poly::parse(F9, p.to_compact()) == p,
             "roundtrip q=9 poly=" + p.to_string());
    }
  }
  if (c.corrupt) {
    FieldCtx F = FieldCtx::make(3, 1);
    Poly p = Poly::parse(F, "t^2+1");
    record(r, p.to_string() == "t^2+2", "fault-injection: print t^2+1");
  }
  return r;
}

SuiteResult suite_factor(const SuiteCtx& c) {
  SuiteResult r;
  r.name = "factor";
  for (std::int64_t q : {2, 3}) {
    FieldCtx F = FieldCtx::from_order(q);
    std::int64_t total = 1;
    for (int i = 0; i <= 4; ++i) total *= q;
    for (std::int64_t code = 1; code < total; ++code) {
      std::vector<FFElem> coeffs;
      std::int64_t v = code;
      for (int k = 0; k <= 4; ++k) {
        coeffs.push_back(FFElem{std::uint32_t(v % q)});
        v /= q;
      }
      Poly f = Poly::from_coeffs(F, std::move(coeffs));
      if (f.is_zero()) continue;
      Factorization fac = factor(f, c.seed);
      bool ok = fac.reassemble(F) == f;
      for (const auto& [P, mult] : fac.factors) {
        ok = ok && P.is_monic() && mult > 0 && (P.deg() == 1 || is_irreducible(P));
      }
      for (std::size_t i = 1; i < fac.factors.size(); ++i)
        ok = ok && Poly::canonical_less(fac.factors[i - 1].first, fac.factors[i].first);
      record(r, ok, "factor q=" + std::to_string(q) + " f=" + f.to_string());
    }
  }
  std::mt19937_64 rng(c.seed ^ 0xFAC7ULL);
  for (std::int64_t q : c.full ? std::vector<std::int64_t>{4, 5, 9, 13} : std::vector<std::int64_t>{4, 5}) {
    FieldCtx F = FieldCtx::from_order(q);
    for (int t = 0; t < (c.full ? 400 : 100); ++t) {
      int d = 1 + int(rng() % 6);
      std::vector<FFElem> coeffs(std::size_t(d) + 1);
      for (auto& x : coeffs) x = FFElem{std::uint32_t(rng() % std::uint64_t(q))};
      Poly f = Poly::from_coeffs(F, std::move(coeffs));
      if (f.is_zero()) continue;
      Factorization fac = factor(f, c.seed);
      record(r, fac.reassemble(F) == f, "factor q=" + std::to_string(q) + " f=" + f.to_string());
    }
  }
  if (c.corrupt) {
    FieldCtx F = FieldCtx::make(3, 1);
    Factorization fac = factor(Poly::parse(F, "t^2+2"), c.seed);
    record(r, fac.factors.size() == 1, "fault-injection: t^2+2 over GF(3) splits");
  }
  return r;
}

SuiteResult suite_primes(const SuiteCtx& c) {
  SuiteResult r;
  r.name = "primes";
  int max_n = c.full ? 6 : 4;
  for (std::int64_t q : c.full ? std::vector<std::int64_t>{2, 3, 4, 5, 7, 8, 9}
                               : std::vector<std::int64_t>{2, 3, 4, 5}) {
    FieldCtx F = FieldCtx::from_order(q);
    for (int n = 1; n <= max_n; ++n) {
      std::vector<Poly> primes = monic_primes(F, n);
      BigInt count = count_monic_primes(F, n);
      record(r, BigInt(primes.size()) == count,
             "count q=" + std::to_string(q) + " n=" + std::to_string(n));
      record(r, prime_count_lower_bound_holds(F, n),
             "bound q=" + std::to_string(q) + " n=" + std::to_string(n));
      // spot-check agreement with the trial-division oracle at small degree
      if (n <= 3 && q <= 5) {
        std::int64_t total = 1;
        for (int i = 0; i < n; ++i) total *= q;
        std::size_t idx = 0;
        for (std::int64_t code = 0; code < total; ++code) {
          Poly cand = Poly::monic_from_code(F, n, code);
          bool reducible = false;
          for (int d = 1; !reducible && 2 * d <= n; ++d) {
            std::int64_t dt = 1;
            for (int i = 0; i < d; ++i) dt *= q;
            for (std::int64_t dc = 0; dc < dt; ++dc)
              if (poly_mod(cand, Poly::monic_from_code(F, d, dc)).is_zero()) {
                reducible = true;
                break;
              }
          }
          bool in_list = idx < primes.size() && primes[idx] == cand;
          if (in_list) ++idx;
          record(r, in_list == !reducible, "oracle q=" + std::to_string(q) + " cand=" + cand.to_string());
        }
      }
    }
  }
  if (c.corrupt) {
    FieldCtx F = FieldCtx::make(3, 1);
    record(r, count_monic_primes(F, 2) == BigInt(4), "fault-injection: N_3(2)");
  }
  return r;
}

SuiteResult suite_symbol(const SuiteCtx& c) {
  SuiteResult r;
  r.name = "symbol";
  std::mt19937_64 rng(c.seed ^ 0x5b01ULL);
  for (std::int64_t q : {3, 5}) {
    FieldCtx F = FieldCtx::from_order(q);
    for (std::int64_t n : divisors_of(q - 1)) {
      merge(r, power_criterion_scan(F, n, 2));
      // multiplicativity and periodicity, exhaustive over deg P <= 2
      for (int d = 1; d <= 2; ++d) {
        for (const Poly& P : monic_primes_serial(F, d)) {
          std::int64_t residues = 1;
          for (int i = 0; i < d; ++i) residues *= q;
          for (std::int64_t ca = 1; ca < residues; ++ca) {
            Poly a = Poly::from_coeffs(F, [&] {
              std::vector<FFElem> v;
              std::int64_t x = ca;
              for (int i = 0; i < d; ++i) {
                v.push_back(FFElem{std::uint32_t(x % q)});
                x /= q;
              }
              return v;
            }());
            SymbolValue sa = residue_symbol_prime(a, P, n);
            record(r, sa.is_zero() || F.pow(sa.value, BigInt(n)) == F.one(), "mu_n membership");
            // periodicity: a + P has the same symbol
            SymbolValue shifted = residue_symbol_prime(a + P, P, n);
            record(r, shifted == sa, "periodicity P=" + P.to_string());
            for (std::int64_t cb = 1; cb < residues; ++cb) {
              Poly b = Poly::from_coeffs(F, [&] {
                std::vector<FFElem> v;
                std::int64_t x = cb;
                for (int i = 0; i < d; ++i) {
                  v.push_back(FFElem{std::uint32_t(x % q)});
                  x /= q;
                }
                return v;
              }());
              SymbolValue sb = residue_symbol_prime(b, P, n);
              SymbolValue sab = residue_symbol_prime(a * b, P, n);
              record(r, sab.value == F.mul(sa.value, sb.value),
                     "multiplicativity P=" + P.to_string());
            }
          }
          // constant symbol closed form
          for (std::int64_t a0 = 1; a0 < q; ++a0) {
            FFElem a{std::uint32_t(a0)};
            SymbolValue closed = constant_symbol(a, P, n);
            SymbolValue direct = residue_symbol_prime(Poly::constant(F, a), P, n);
            record(r, closed == direct, "constant lemma P=" + P.to_string());
          }
          // preimages reach every root of unity
          for (FFElem zeta : F.nth_roots_of_unity(n)) {
            Poly pre = find_preimage(zeta, P, n);
            bool ok = residue_symbol_prime(pre, P, n).value == zeta &&
                      (pre.is_zero() || pre.is_constant() || pre.deg() < P.deg());
            record(r, ok, "preimage P=" + P.to_string());
          }
        }
      }
    }
  }
  (void)rng;
  if (c.corrupt) {
    FieldCtx F = FieldCtx::make(3, 1);
    SymbolValue s = residue_symbol_prime(Poly::t(F), Poly::parse(F, "t+1"), 2);
    FFElem perturbed = F.mul(s.value, F.from_int(2));
    record(r, perturbed == F.from_int(2), "fault-injection: (t/(t+1))_2");
  }
  return r;
}

SuiteResult suite_reciprocity(const SuiteCtx& c) {
  SuiteResult r;
  r.name = "reciprocity";
  std::vector<std::int64_t> qs = c.full ? std::vector<std::int64_t>{3, 5, 7, 9, 11, 13}
                                        : std::vector<std::int64_t>{3, 5};
  int max_deg = c.full ? 3 : 2;
  for (std::int64_t q : qs) {
    FieldCtx F = FieldCtx::from_order(q);
    for (std::int64_t n : divisors_of(q - 1)) merge(r, reciprocity_scan(F, n, max_deg));
  }
  int trials = c.full ? 1000 : 150;
  for (std::int64_t q : {3, 5, 7}) {
    FieldCtx F = FieldCtx::from_order(q);
    for (std::int64_t n : divisors_of(q - 1))
      merge(r, general_reciprocity_scan(F, n, trials, 4, c.seed));
  }
  // corollary shadow: symmetric symbol when 2n | q-1
  {
    FieldCtx F13 = FieldCtx::from_order(13);
    for (std::int64_t n : {2, 3}) merge(r, symmetry_scan(F13, n, c.full ? 2 : 1));
  }
  if (c.corrupt) {
    FieldCtx F = FieldCtx::make(3, 1);
    auto rep = check_reciprocity_monic(Poly::parse(F, "t+1"), Poly::t(F), 2);
    record(r, !rep.holds, "fault-injection: monic law q=3");
  }
  return r;
}

SuiteResult suite_resultant(const SuiteCtx& c) {
  SuiteResult r;
  r.name = "resultant";
  std::mt19937_64 rng(c.seed ^ 0x4e5ULL);
  std::vector<std::int64_t> qs = c.full ? std::vector<std::int64_t>{3, 5, 7} : std::vector<std::int64_t>{3, 5};
  int max_deg = c.full ? 3 : 2;
  for (std::int64_t q : qs) {
    FieldCtx F = FieldCtx::from_order(q);
    for (std::int64_t n : divisors_of(q - 1)) merge(r, resultant_equivalence_scan(F, n, max_deg));
    // antisymmetry Res(f,g) = (-1)^{deg f deg g} Res(g,f) on random pairs
    for (int t = 0; t < 200; ++t) {
      auto rand_poly = [&](int dmax) {
        std::vector<FFElem> v(1 + rng() % std::uint64_t(dmax + 1));
        for (auto& x : v) x = FFElem{std::uint32_t(rng() % std::uint64_t(q))};
        return Poly::from_coeffs(F, std::move(v));
      };
      Poly f = rand_poly(3), g = rand_poly(3);
      if (f.is_zero() || g.is_zero()) continue;
      FFElem lhs = resultant(f, g);
      FFElem rhs = resultant(g, f);
      int df = f.is_constant() ? 0 : f.deg();
      int dg = g.is_constant() ? 0 : g.deg();
      if ((df * dg) % 2 != 0) rhs = F.neg(rhs);
      record(r, lhs == rhs, "antisymmetry q=" + std::to_string(q));
    }
    // degree-1 identity Res(t - a, g) = g(a)
    for (std::int64_t a0 = 0; a0 < q; ++a0) {
      Poly lin = Poly::t(F) - Poly::constant(F, FFElem{std::uint32_t(a0)});
      for (int t = 0; t < 20; ++t) {
        std::vector<FFElem> v(1 + rng() % 4);
        for (auto& x : v) x = FFElem{std::uint32_t(rng() % std::uint64_t(q))};
        Poly g = Poly::from_coeffs(F, std::move(v));
        if (g.is_zero()) continue;
        record(r, resultant(lin, g) == g.eval(FFElem{std::uint32_t(a0)}), "linear resultant");
      }
    }
  }
  if (c.corrupt) {
    FieldCtx F = FieldCtx::make(3, 1);
    FFElem res = resultant(Poly::parse(F, "t+1"), Poly::parse(F, "t+2"));
    record(r, F.add(res, F.one()) == F.one(), "fault-injection: Res(t+1,t+2)");
  }
  return r;
}

SuiteResult suite_orbit(const SuiteCtx& c) {
  SuiteResult r;
  r.name = "orbit";
  int max_deg = c.full ? 4 : 3;
  for (std::int64_t q : {3, 4}) {
    FieldCtx F = FieldCtx::from_order(q);
    merge(r, root_orbit_scan(F, max_deg));
    for (int j = 1; j <= 2; ++j) {
      std::mt19937_64 rng(c.seed ^ std::uint64_t(q * 7 + j));
      for (int t = 0; t < 10; ++t) {
        std::vector<FFElem> v(1 + rng() % 3);
        for (auto& x : v) x = FFElem{std::uint32_t(rng() % std::uint64_t(q))};
        Poly Q = Poly::from_coeffs(F, std::move(v));
        record(r, frobenius_substitution_check(Q, j), "frobenius q=" + std::to_string(q));
      }
    }
  }
  if (c.corrupt) {
    FieldCtx F = FieldCtx::make(3, 1);
    record(r, !verify_root_orbit(Poly::parse(F, "t^2+1")), "fault-injection: orbit t^2+1");
  }
  return r;
}

SuiteResult suite_localglobal(const SuiteCtx& c) {
  SuiteResult r;
  r.name = "localglobal";
  std::mt19937_64 rng(c.seed ^ 0x10CA1ULL);
  // forward: exact powers are globally detected and locally unobstructed
  for (std::int64_t q : {3, 5}) {
    FieldCtx F = FieldCtx::from_order(q);
    for (std::int64_t n : divisors_of(q - 1)) {
      if (n == 1) continue;
      for (int t = 0; t < (c.full ? 10 : 4); ++t) {
        std::vector<FFElem> v(2 + rng() % 2);
        for (auto& x : v) x = FFElem{std::uint32_t(rng() % std::uint64_t(q))};
        Poly beta = Poly::from_coeffs(F, std::move(v));
        if (beta.is_zero() || beta.is_constant()) continue;
        Poly alpha = poly_pow(beta, std::uint64_t(n));
        GWReport rep = gw_scan(alpha, n, c.full ? 5 : 3);
        bool ok = rep.verdict == GWReport::Verdict::GlobalPower && rep.witnesses.empty() &&
                  rep.globally_power && poly_pow(*rep.globally_power, std::uint64_t(n)) == alpha;
        record(r, ok, "forward q=" + std::to_string(q) + " alpha=" + alpha.to_string());
      }
    }
  }
  // converse at desk scale
  {
    FieldCtx F5 = FieldCtx::from_order(5);
    ConverseScanResult conv = gw_converse_scan(F5, 2, c.full ? 200 : 30, 6, 4, c.seed);
    record(r, conv.inconclusive == 0 && conv.sampled == conv.witnesses_found,
           "converse escapes=" + std::to_string(conv.inconclusive));
    r.cases += conv.sampled;
  }
  // reduction consistency: local test only depends on gcd(n, q^d - 1)
  {
    FieldCtx F = FieldCtx::from_order(3);
    for (const Poly& P : monic_primes_serial(F, 2)) {
      for (std::int64_t n : {2, 4, 8}) {
        std::int64_t qd1 = 8;  // 3^2 - 1
        std::int64_t g = std::gcd(n, qd1);
        for (int t = 0; t < 5; ++t) {
          std::vector<FFElem> v(1 + rng() % 3);
          for (auto& x : v) x = FFElem{std::uint32_t(rng() % 3)};
          Poly alpha = Poly::from_coeffs(F, std::move(v));
          if (alpha.is_zero() || poly_mod(alpha, P).is_zero()) continue;
          LocalReport a = local_solvable(alpha, P, n);
          LocalReport b = local_solvable(alpha, P, g);
          record(r, a.locally_solvable == b.locally_solvable, "reduction P=" + P.to_string());
        }
      }
    }
  }
  if (c.corrupt) {
    FieldCtx F = FieldCtx::make(3, 1);
    auto root = global_nth_power(Poly::parse(F, "t^2+2t+1"), 2);
    record(r, root && *root == Poly::parse(F, "t+2"), "fault-injection: sqrt (t+1)^2");
  }
  return r;
}

SuiteResult suite_family(const SuiteCtx& c) {
  SuiteResult r;
  r.name = "family";
  std::mt19937_64 rng(c.seed ^ 0xFA31ULL);
  std::vector<std::string> idx{"s1", "s2", "s3", "s4"};
  int trials = c.full ? 1000 : 200;
  for (int t = 0; t < trials; ++t) {
    IntFamily a{idx, {}}, b{idx, {}};
    for (int i = 0; i < 4; ++i) {
      a.values.push_back(BigInt(rng() % 1000000) - 500000);
      b.values.push_back(BigInt(rng() % 1000000) - 500000);
    }
    bool zero_pair = false;
    for (int i = 0; i < 4; ++i) zero_pair |= (a.values[std::size_t(i)] == 0 && b.values[std::size_t(i)] == 0);
    if (zero_pair) continue;
    auto bz = family_bezout(a, b);
    auto g = family_gcd(a, b);
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
      const auto& ai = a.values[std::size_t(i)];
      const auto& bi = b.values[std::size_t(i)];
      const auto& di = g.values[std::size_t(i)];
      ok = ok && bz.d.values[std::size_t(i)] == di && ai * bz.e.values[std::size_t(i)] + bi * bz.f.values[std::size_t(i)] == di;
      ok = ok && di > 0 && ai % di == 0 && bi % di == 0;
    }
    record(r, ok, "family gcd/bezout");
  }
  // order formula, exhaustive over the (5, 7, 9, 11) family
  {
    FamilyCtx ctx;
    for (std::int64_t q : {5, 7, 9, 11}) {
      ctx.indices.push_back("q" + std::to_string(q));
      ctx.fields.push_back(FieldCtx::from_order(q));
    }
    std::vector<std::int64_t> ms;
    for (const auto& f : ctx.fields) ms.push_back(f.q() - 1);
    std::vector<std::int64_t> exps(ctx.size(), 1);
    bool done = false;
    while (!done) {
      IndexFamily<FFElem> elems{ctx.indices, {}};
      bool ok = true;
      for (std::size_t i = 0; i < ctx.size(); ++i) {
        FFElem g = ctx.fields[i].primitive_root();
        elems.values.push_back(ctx.fields[i].pow(g, BigInt(exps[i])));
      }
      IntFamily orders = family_order(elems, ctx);
      for (std::size_t i = 0; i < ctx.size(); ++i) {
        std::int64_t expected = ms[i] / std::gcd(exps[i], ms[i]);
        ok = ok && orders.values[i] == BigInt(expected);
      }
      record(r, ok, "order formula");
      // next exponent tuple
      done = true;
      for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (exps[i] < ms[i]) {
          ++exps[i];
          for (std::size_t j = 0; j < i; ++j) exps[j] = 1;
          done = false;
          break;
        }
      }
      if (!c.full && r.cases > std::uint64_t(trials) + 400) break;  // quick level samples a prefix
    }
  }
  // transfer checks across the shipped presets
  TransferOptions opts;
  opts.seed = c.seed;
  opts.max_degree = 2;
  opts.random_trials = c.full ? 25 : 8;
  for (const std::string& preset : preset_names()) {
    FamilyCtx ctx = make_preset(preset);
    IntFamily n = default_power_family(ctx, 2);
    for (const std::string& prop : transfer_catalog()) {
      TransferResult res = transfer_check(prop, ctx, n, opts);
      record(r, res.all, "transfer " + prop + " preset=" + preset);
    }
  }
  if (c.corrupt) {
    FamilyCtx ctx = make_preset("distinct-primes");
    IntFamily n = default_power_family(ctx, 2);
    TransferOptions bad = opts;
    bad.corrupt_at = 1;
    TransferResult res = transfer_check("reciprocity_monic", ctx, n, bad);
    record(r, res.all, "fault-injection: corrupted index must fail");
  }
  return r;
}

SuiteResult suite_cache(const SuiteCtx& c) {
  SuiteResult r;
  r.name = "cache";
  namespace fs = std::filesystem;
  fs::path dir = fs::path(c.cache_dir.empty() ? "fqsym_cache" : c.cache_dir) / "selftest";
  FieldCtx F = FieldCtx::from_order(5);
  std::vector<Poly> direct = monic_primes(F, 3);
  std::vector<Poly> first = monic_primes_cached(F, 3, dir.string());
  record(r, first == direct, "cache initial build");
  std::vector<Poly> reread = monic_primes_cached(F, 3, dir.string());
  record(r, reread == direct, "cache reload");
  // corrupt one line and expect a rebuild
  fs::path file = dir / "q5_deg3.txt";
  {
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto pos = text.rfind("t^3");
    if (pos != std::string::npos) text.replace(pos, 3, "t^2");
    std::ofstream out(file, std::ios::trunc);
    out << text;
  }
  std::vector<Poly> rebuilt = monic_primes_cached(F, 3, dir.string());
  record(r, rebuilt == direct, "cache rebuild after corruption");
  std::error_code ec;
  fs::remove_all(dir, ec);
  if (c.corrupt) record(r, rebuilt.size() == direct.size() + 1, "fault-injection: cache size");
  return r;
}

using SuiteFn = SuiteResult (*)(const SuiteCtx&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"ff", suite_ff},           {"poly", suite_poly},
      {"factor", suite_factor},   {"primes", suite_primes},
      {"symbol", suite_symbol},   {"reciprocity", suite_reciprocity},
      {"resultant", suite_resultant}, {"orbit", suite_orbit},
      {"localglobal", suite_localglobal}, {"family", suite_family},
      {"cache", suite_cache},
  };
  return table;
}

}  // namespace

std::vector<std::string> selftest_suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suites()) out.push_back(name);
  return out;
}

std::vector<SuiteResult> run_selftest(const std::string& level, std::uint64_t seed,
                                      const std::string& fault, const std::string& cache_dir) {
  if (level != "quick" && level != "full") raise(ErrorCode::BadConfig, "level must be quick or full");
  if (!fault.empty()) {
    bool known = false;
    for (const auto& [name, fn] : suites()) known |= name == fault;
    if (!known) raise(ErrorCode::BadConfig, "unknown suite '" + fault + "' for fault injection");
  }
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : suites()) {
    SuiteCtx ctx;
    ctx.full = level == "full";
    ctx.seed = seed;
    ctx.corrupt = fault == name;
    ctx.cache_dir = cache_dir;
    auto start = std::chrono::steady_clock::now();
    SuiteResult r = fn(ctx);
    r.seconds = seconds_since(start);
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// command dispatch

namespace {

json run_report(const std::string& command, std::uint64_t seed, double wall_ms, json payload,
                std::uint64_t passes, std::uint64_t failures) {
  json rep;
  rep["command"] = command;
  rep["version"] = kVersion;
  rep["seed"] = seed;
  rep["wall_ms"] = wall_ms;
  rep["payload"] = std::move(payload);
  rep["passes"] = passes;
  rep["failures"] = failures;
  return rep;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string out = "fqsym";
  for (const auto& a : args) {
    out += ' ';
    out += a;
  }
  return out;
}

}  // namespace

CliOutcome run_cli(const std::vector<std::string>& args) {
  CLI::App app{"power residue symbols, reciprocity scans, and local-global checks over GF(q)[t]"};
  app.require_subcommand(1);

  std::uint64_t seed = kDefaultSeed;
  app.add_option("--seed", seed, "seed for randomized routines");

  std::int64_t q = 0;
  std::int64_t n = 1;
  int deg = 1, max_deg = 2, bound = 3;
  std::string alpha_text, modulus_text, poly_text, out_dir, cache_flag, config_path;
  std::string method = "exp", property = "all", level = "quick", fault;
  bool exhaustive = false, general = false;
  int trials = 100;

  auto* field_info = app.add_subcommand("field-info", "describe GF(q)");
  field_info->add_option("--q", q, "prime power")->required();

  auto* primes_cmd = app.add_subcommand("primes", "monic prime tables");
  auto* primes_list = primes_cmd->add_subcommand("list", "enumerate monic primes");
  primes_list->add_option("--q", q)->required();
  primes_list->add_option("--deg", deg)->required();
  primes_list->add_option("--cache", cache_flag, "cache directory (or FQSYM_CACHE_DIR)");
  auto* primes_count = primes_cmd->add_subcommand("count", "count monic primes");
  primes_count->add_option("--q", q)->required();
  primes_count->add_option("--deg", deg)->required();

  auto* factor_cmd = app.add_subcommand("factor", "factor a polynomial");
  factor_cmd->add_option("--q", q)->required();
  factor_cmd->add_option("--poly", poly_text)->required();

  auto* symbol_cmd = app.add_subcommand("symbol", "n-th power residue symbol");
  symbol_cmd->add_option("--q", q)->required();
  symbol_cmd->add_option("--n", n)->required();
  symbol_cmd->add_option("--alpha", alpha_text)->required();
  symbol_cmd->add_option("--modulus", modulus_text)->required();
  symbol_cmd->add_option("--method", method, "exp or resultant");

  auto* recip_cmd = app.add_subcommand("reciprocity", "reciprocity law checks");
  recip_cmd->add_option("--q", q)->required();
  recip_cmd->add_option("--n", n)->required();
  recip_cmd->add_option("--max-deg", max_deg);
  recip_cmd->add_flag("--exhaustive", exhaustive, "all ordered pairs of distinct monic primes");
  recip_cmd->add_flag("--general", general, "four-factor law on random coprime pairs");
  recip_cmd->add_option("--trials", trials);

  auto* res_cmd = app.add_subcommand("resultant-check", "exponentiation route vs resultant route");
  res_cmd->add_option("--q", q)->required();
  res_cmd->add_option("--n", n)->required();
  res_cmd->add_option("--max-deg", max_deg);

  auto* gw_cmd = app.add_subcommand("gw-scan", "local-global scan for x^n = alpha");
  gw_cmd->add_option("--q", q)->required();
  gw_cmd->add_option("--n", n)->required();
  gw_cmd->add_option("--alpha", alpha_text)->required();
  gw_cmd->add_option("--bound", bound, "prime degree bound");
  gw_cmd->add_option("--out", out_dir, "directory for the JSON report");

  auto* family_cmd = app.add_subcommand("family-run", "transfer checks over an indexed family");
  family_cmd->add_option("--config", config_path, "JSON config; or use --preset");
  std::string preset;
  family_cmd->add_option("--preset", preset, "constant-q | growing-powers-of-p | distinct-primes");
  family_cmd->add_option("--property", property, "catalog property or 'all'");

  auto* selftest_cmd = app.add_subcommand("selftest", "run the invariant suites");
  selftest_cmd->add_option("--level", level, "quick or full");
  selftest_cmd->add_option("--inject-fault", fault, "suite name to perturb (negative control)");
  selftest_cmd->add_option("--cache", cache_flag, "cache directory for the cache suite");

  std::vector<const char*> argv;
  argv.push_back("fqsym");
  for (const auto& a : args) argv.push_back(a.c_str());

  CliOutcome outcome;
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    if (e.get_exit_code() == 0) {
      // --help and friends
      os << app.help();
      outcome.diagnostics = os.str();
      outcome.exit_code = 0;
      return outcome;
    }
    os << "usage error: " << e.what();
    outcome.diagnostics = os.str();
    outcome.exit_code = 2;
    return outcome;
  }

  auto start = std::chrono::steady_clock::now();
  const std::string echo = join_args(args);

  try {
    if (field_info->parsed()) {
      FieldCtx F = FieldCtx::from_order(q);
      json payload;
      payload["p"] = F.p();
      payload["e"] = F.e();
      payload["q"] = F.q();
      payload["modulus"] = F.e() == 1 ? json(nullptr) : json(F.modulus());
      payload["primitive_root"] = F.to_string(F.primitive_root());
      payload["unit_group_prime_factors"] = F.unit_group_prime_factors();
      outcome.report = run_report(echo, seed, seconds_since(start) * 1000, payload, 0, 0);
    } else if (primes_list->parsed() || primes_count->parsed()) {
      FieldCtx F = FieldCtx::from_order(q);
      json payload;
      payload["q"] = F.q();
      payload["deg"] = deg;
      payload["count"] = big_to_json(count_monic_primes(F, deg));
      payload["lower_bound_ok"] = prime_count_lower_bound_holds(F, deg);
      if (primes_list->parsed()) {
        std::vector<Poly> primes = monic_primes_cached(F, deg, resolve_cache_dir(cache_flag));
        json list = json::array();
        for (const Poly& P : primes) list.push_back(P.to_string());
        payload["primes"] = list;
        payload["cache_dir"] = resolve_cache_dir(cache_flag);
        if (BigInt(primes.size()) != count_monic_primes(F, deg))
          raise(ErrorCode::SizeExceeded, "enumeration disagrees with the count formula");
      }
      outcome.report = run_report(echo, seed, seconds_since(start) * 1000, payload, 0, 0);
    } else if (factor_cmd->parsed()) {
      FieldCtx F = FieldCtx::from_order(q);
      Poly f = Poly::parse(F, poly_text);
      Factorization fac = factor(f, seed);
      json payload;
      payload["input"] = f.to_string();
      payload["unit"] = F.to_string(fac.unit);
      json factors = json::array();
      for (const auto& [P, mult] : fac.factors)
        factors.push_back(json{{"prime", P.to_string()}, {"multiplicity", mult}});
      payload["factors"] = factors;
      payload["seed"] = seed;
      outcome.report = run_report(echo, seed, seconds_since(start) * 1000, payload, 0, 0);
    } else if (symbol_cmd->parsed()) {
      FieldCtx F = FieldCtx::from_order(q);
      Poly alpha = Poly::parse(F, alpha_text);
      Poly beta = Poly::parse(F, modulus_text);
      SymbolValue value;
      if (method == "exp") {
        value = residue_symbol(alpha, beta, n);
      } else if (method == "resultant") {
        value = symbol_via_resultant(alpha, beta, n);
      } else {
        raise(ErrorCode::BadConfig, "method must be exp or resultant");
      }
      json payload;
      payload["q"] = F.q();
      payload["n"] = n;
      payload["alpha"] = alpha.to_string();
      payload["modulus"] = beta.to_string();
      payload["value"] = F.to_string(value.value);
      auto mu = mu_index(F, value, n);
      payload["mu_index"] = mu ? json(*mu) : json(nullptr);
      payload["method"] = method;
      outcome.report = run_report(echo, seed, seconds_since(start) * 1000, payload, 0, 0);
    } else if (recip_cmd->parsed()) {
      FieldCtx F = FieldCtx::from_order(q);
      ScanResult res;
      json payload;
      payload["q"] = F.q();
      payload["n"] = n;
      if (general) {
        res = general_reciprocity_scan(F, n, trials, max_deg, seed);
        payload["trials"] = trials;
      } else {
        exhaustive = true;
        res = reciprocity_scan(F, n, max_deg);
      }
      payload["exhaustive"] = exhaustive && !general;
      payload["max_deg"] = max_deg;
      payload["scan"] = scan_to_json(res);
      outcome.report = run_report(echo, seed, seconds_since(start) * 1000, payload,
                                  res.cases - res.failures, res.failures);
      if (res.failures) outcome.exit_code = 1;
    } else if (res_cmd->parsed()) {
      FieldCtx F = FieldCtx::from_order(q);
      ScanResult res = resultant_equivalence_scan(F, n, max_deg);
      json payload;
      payload["q"] = F.q();
      payload["n"] = n;
      payload["max_deg"] = max_deg;
      payload["scan"] = scan_to_json(res);
      outcome.report = run_report(echo, seed, seconds_since(start) * 1000, payload,
                                  res.cases - res.failures, res.failures);
      if (res.failures) outcome.exit_code = 1;
    } else if (gw_cmd->parsed()) {
      FieldCtx F = FieldCtx::from_order(q);
      Poly alpha = Poly::parse(F, alpha_text);
      GWReport rep = gw_scan(alpha, n, bound);
      json payload = gw_report_to_json(rep);
      if (!out_dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(out_dir);
        std::string name = "gw_q" + std::to_string(F.q()) + "_n" + std::to_string(n) + "_" +
                           hex64(fnv1a(alpha.to_string())) + ".json";
        fs::path path = fs::path(out_dir) / name;
        std::ofstream out(path, std::ios::trunc);
        out << payload.dump(2) << "\n";
        payload["report_path"] = path.string();
      }
      outcome.report = run_report(echo, seed, seconds_since(start) * 1000, payload, 0, 0);
    } else if (family_cmd->parsed()) {
      FamilyCtx ctx;
      IntFamily nfam;
      if (!preset.empty()) {
        ctx = make_preset(preset);
        nfam = default_power_family(ctx, 2);
      } else if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) raise(ErrorCode::BadConfig, "cannot open config " + config_path);
        json cfg = json::parse(in, nullptr, true, true);
        if (cfg.contains("preset")) {
          ctx = make_preset(cfg["preset"].get<std::string>());
        } else if (cfg.contains("q")) {
          std::vector<std::int64_t> qs = cfg["q"].get<std::vector<std::int64_t>>();
          for (std::size_t i = 0; i < qs.size(); ++i) {
            ctx.indices.push_back("s" + std::to_string(i + 1));
            ctx.fields.push_back(FieldCtx::from_order(qs[i]));
          }
        } else {
          raise(ErrorCode::BadConfig, "config needs 'preset' or 'q'");
        }
        if (cfg.contains("indices")) {
          auto idx = cfg["indices"].get<std::vector<std::string>>();
          if (idx.size() != ctx.size()) raise(ErrorCode::BadConfig, "indices/q length mismatch");
          ctx.indices = idx;
        }
        if (cfg.contains("n")) {
          auto ns = cfg["n"].get<std::vector<std::int64_t>>();
          if (ns.size() != ctx.size()) raise(ErrorCode::BadConfig, "n/q length mismatch");
          nfam.indices = ctx.indices;
          for (auto v : ns) nfam.values.push_back(BigInt(v));
        } else {
          nfam = default_power_family(ctx, 2);
        }
      } else {
        raise(ErrorCode::BadConfig, "family-run needs --config or --preset");
      }
      TransferOptions opts;
      opts.seed = seed;
      std::vector<std::string> props;
      if (property == "all")
        props = transfer_catalog();
      else
        props.push_back(property);
      json runs = json::array();
      bool all = true;
      std::uint64_t passes = 0, failures = 0;
      for (const std::string& prop : props) {
        TransferResult res = transfer_check(prop, ctx, nfam, opts);
        all &= res.all;
        json per_index = json::array();
        for (const auto& o : res.per_index) {
          json line{{"property", prop}, {"index", o.index}, {"ok", o.ok}, {"cases", o.cases}};
          if (!o.witness.empty()) line["witness"] = o.witness;
          outcome.lines.push_back(line.dump());
          per_index.push_back(line);
          if (o.ok)
            ++passes;
          else
            ++failures;
        }
        runs.push_back(json{{"property", prop}, {"all", res.all}, {"per_index", per_index}});
      }
      json payload;
      payload["properties"] = runs;
      payload["all"] = all;
      json qs = json::array();
      for (const auto& f : ctx.fields) qs.push_back(f.q());
      payload["q"] = qs;
      payload["indices"] = ctx.indices;
      outcome.report = run_report(echo, seed, seconds_since(start) * 1000, payload, passes, failures);
      if (!all) outcome.exit_code = 1;
    } else if (selftest_cmd->parsed()) {
      std::vector<SuiteResult> results = run_selftest(level, seed, fault, resolve_cache_dir(cache_flag));
      json suites_json = json::array();
      std::uint64_t passes = 0, failures = 0;
      for (const SuiteResult& s : results) {
        suites_json.push_back(json{{"name", s.name},
                                   {"cases", s.cases},
                                   {"failures", s.failures},
                                   {"seconds", s.seconds},
                                   {"witnesses", s.witnesses}});
        passes += s.cases - s.failures;
        failures += s.failures;
      }
      json payload;
      payload["level"] = level;
      payload["suites"] = suites_json;
      if (!fault.empty()) payload["injected_fault"] = fault;
      outcome.report = run_report(echo, seed, seconds_since(start) * 1000, payload, passes, failures);
      if (failures) outcome.exit_code = 1;
    }
  } catch (const Error& e) {
    json err;
    err["error"] = error_code_name(e.code());
    err["message"] = e.what();
    outcome.diagnostics = err.dump();
    outcome.exit_code = 3;
    return outcome;
  }
  return outcome;
}

}  // namespace fqsym
