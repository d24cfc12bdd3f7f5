#include "fqsym/scan.hpp"

#include <random>
#include <set>

#include "fqsym/primes.hpp"

namespace fqsym {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct ItemOut {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> witnesses;
};

// Evaluates items independently (optionally with OpenMP) and merges in
// input order; the parallel result is identical to the serial one.
template <class Fn>
ScanResult run_items(std::size_t count, bool parallel, Fn&& eval) {
  std::vector<ItemOut> outs(count);
  std::exception_ptr pending;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < std::int64_t(count); ++i) {
    try {
      outs[std::size_t(i)] = eval(std::size_t(i));
    } catch (...) {
#pragma omp critical
      if (!pending) pending = std::current_exception();
    }
  }
  if (pending) std::rethrow_exception(pending);
  ScanResult result;
  for (const ItemOut& o : outs) {
    result.cases += o.cases;
    result.failures += o.failures;
    for (const std::string& w : o.witnesses)
      if (result.witnesses.size() < kMaxWitnesses) result.witnesses.push_back(w);
  }
  return result;
}

std::vector<Poly> primes_up_to(const FieldCtx& f, int max_deg) {
  std::vector<Poly> out;
  for (int d = 1; d <= max_deg; ++d)
    for (Poly& P : monic_primes_serial(f, d)) out.push_back(std::move(P));
  return out;
}

ScanResult reciprocity_scan_impl(const FieldCtx& f, std::int64_t n, int max_deg, bool parallel) {
  std::vector<Poly> primes = primes_up_to(f, max_deg);
  std::size_t m = primes.size();
  // Both ordered orientations of a pair are checked from one pair of
  // symbol evaluations; the sign factor is self-inverse.
  return run_items(m, parallel, [&](std::size_t i) {
    ItemOut out;
    for (std::size_t j = i + 1; j < m; ++j) {
      SymbolValue q_over_p = residue_symbol_prime_trusted(primes[j], primes[i], n);
      SymbolValue p_over_q = residue_symbol_prime_trusted(primes[i], primes[j], n);
      BigInt exponent = BigInt((f.q() - 1) / n) * primes[i].deg() * primes[j].deg();
      FFElem sign = f.pow(f.neg(f.one()), exponent);
      ++out.cases;
      if (q_over_p.value != f.mul(sign, p_over_q.value)) {
        ++out.failures;
        out.witnesses.push_back("P=" + primes[i].to_string() + " Q=" + primes[j].to_string());
      }
      ++out.cases;
      if (p_over_q.value != f.mul(sign, q_over_p.value)) {
        ++out.failures;
        out.witnesses.push_back("P=" + primes[j].to_string() + " Q=" + primes[i].to_string());
      }
    }
    return out;
  });
}

Poly random_poly_of_degree(const FieldCtx& F, int deg, std::mt19937_64& rng, bool force_nonmonic) {
  std::vector<FFElem> c(std::size_t(deg) + 1);
  for (int i = 0; i < deg; ++i) c[std::size_t(i)] = FFElem{std::uint32_t(rng() % std::uint64_t(F.q()))};
  std::uint32_t lead;
  do {
    lead = std::uint32_t(1 + rng() % std::uint64_t(F.q() - 1));
  } while (force_nonmonic && F.q() > 2 && lead == 1);
  c[std::size_t(deg)] = FFElem{lead};
  return Poly::from_coeffs(F, std::move(c));
}

ScanResult general_reciprocity_scan_impl(const FieldCtx& f, std::int64_t n, int trials, int max_deg,
                                         std::uint64_t seed, bool parallel) {
  return run_items(std::size_t(trials), parallel, [&](std::size_t t) {
    ItemOut out;
    std::mt19937_64 rng(splitmix64(seed ^ (0xABCD0000ULL + t)));
    for (int attempt = 0; attempt < 64; ++attempt) {
      int da = int(rng() % std::uint64_t(max_deg + 1));
      int db = int(rng() % std::uint64_t(max_deg + 1));
      Poly a = random_poly_of_degree(f, da, rng, true);
      Poly b = random_poly_of_degree(f, db, rng, true);
      if (!coprime(a, b)) continue;
      ++out.cases;
      GeneralReciprocityReport rep = check_general_reciprocity(a, b, n);
      if (!rep.holds) {
        ++out.failures;
        out.witnesses.push_back("alpha=" + a.to_string() + " beta=" + b.to_string());
      }
      return out;
    }
    return out;  // no coprime pair found in the attempt budget; contributes no case
  });
}

ScanResult resultant_equivalence_scan_impl(const FieldCtx& f, std::int64_t n, int max_deg, bool parallel) {
  // work item = one monic denominator, factored once
  std::vector<Poly> denoms;
  denoms.push_back(Poly::one(f));
  for (int d = 1; d <= max_deg; ++d) {
    std::int64_t total = 1;
    for (int i = 0; i < d; ++i) total *= f.q();
    for (std::int64_t code = 0; code < total; ++code) denoms.push_back(Poly::monic_from_code(f, d, code));
  }
  std::int64_t alphas = 1;
  for (int i = 0; i <= max_deg; ++i) alphas *= f.q();
  return run_items(denoms.size(), parallel, [&](std::size_t i) {
    ItemOut out;
    const Poly& beta = denoms[i];
    Factorization fac = beta.is_constant() ? Factorization{} : factor(beta);
    for (std::int64_t code = 1; code < alphas; ++code) {
      Poly alpha = Poly::from_coeffs(f, [&] {
        std::vector<FFElem> c;
        std::int64_t v = code;
        for (int k = 0; k <= max_deg; ++k) {
          c.push_back(FFElem{std::uint32_t(v % f.q())});
          v /= f.q();
        }
        return c;
      }());
      if (!coprime(alpha, beta)) continue;
      ++out.cases;
      SymbolValue via_exp = beta.is_constant() ? SymbolValue{f.one()} : residue_symbol_factored(alpha, f, fac, n);
      SymbolValue via_res = symbol_via_resultant(alpha, beta, n);
      if (!(via_exp == via_res)) {
        ++out.failures;
        out.witnesses.push_back("alpha=" + alpha.to_string() + " beta=" + beta.to_string());
      }
    }
    return out;
  });
}

ScanResult symmetry_scan_impl(const FieldCtx& f, std::int64_t n, int max_deg, bool parallel) {
  std::vector<Poly> primes = primes_up_to(f, max_deg);
  std::size_t m = primes.size();
  return run_items(m, parallel, [&](std::size_t i) {
    ItemOut out;
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      ++out.cases;
      SymbolValue ab = residue_symbol_prime_trusted(primes[i], primes[j], n);
      SymbolValue ba = residue_symbol_prime_trusted(primes[j], primes[i], n);
      if (!(ab == ba)) {
        ++out.failures;
        out.witnesses.push_back("alpha=" + primes[i].to_string() + " beta=" + primes[j].to_string());
      }
    }
    return out;
  });
}

ScanResult fermat_scan_impl(const FieldCtx& f, int trials, int max_deg_p, std::uint64_t seed, bool parallel) {
  std::vector<std::vector<Poly>> primes_by_deg;
  for (int d = 1; d <= max_deg_p; ++d) primes_by_deg.push_back(monic_primes_serial(f, d));
  return run_items(std::size_t(trials), parallel, [&](std::size_t t) {
    ItemOut out;
    std::mt19937_64 rng(splitmix64(seed ^ (0xFE44A7ULL + t)));
    const auto& bucket = primes_by_deg[rng() % primes_by_deg.size()];
    const Poly& P = bucket[rng() % bucket.size()];
    for (int attempt = 0; attempt < 64; ++attempt) {
      int da = int(rng() % std::uint64_t(P.deg() + 3));
      Poly alpha = random_poly_of_degree(f, da, rng, false);
      if (poly_mod(alpha, P).is_zero()) continue;
      ++out.cases;
      BigInt exponent = big_pow(BigInt(f.q()), std::uint64_t(P.deg())) - 1;
      if (powmod(alpha, exponent, P) != Poly::one(f)) {
        ++out.failures;
        out.witnesses.push_back("alpha=" + alpha.to_string() + " P=" + P.to_string());
      }
      return out;
    }
    return out;
  });
}

ScanResult power_criterion_scan_impl(const FieldCtx& f, std::int64_t n, int max_deg_p, bool parallel) {
  std::vector<Poly> primes = primes_up_to(f, max_deg_p);
  return run_items(primes.size(), parallel, [&](std::size_t i) {
    ItemOut out;
    const Poly& P = primes[i];
    int d = P.deg();
    QuotientRing R(P, false);
    // n-th powers of the unit group, by brute enumeration
    std::set<BigInt> powers;
    BigInt residues = R.size();
    for (BigInt code = 1; code < residues; ++code)
      powers.insert(R.code_of(R.pow(R.element(code), BigInt(n))));
    // every alpha of degree < 2d coprime to P
    std::int64_t alphas = 1;
    for (int k = 0; k < 2 * d; ++k) alphas *= f.q();
    for (std::int64_t code = 1; code < alphas; ++code) {
      std::vector<FFElem> c;
      std::int64_t v = code;
      for (int k = 0; k < 2 * d; ++k) {
        c.push_back(FFElem{std::uint32_t(v % f.q())});
        v /= f.q();
      }
      Poly alpha = Poly::from_coeffs(f, std::move(c));
      Poly reduced = poly_mod(alpha, P);
      if (reduced.is_zero()) continue;
      ++out.cases;
      bool symbol_one = residue_symbol_prime_trusted(alpha, P, n).value == f.one();
      bool enumerated = powers.count(R.code_of(reduced)) > 0;
      if (symbol_one != enumerated) {
        ++out.failures;
        out.witnesses.push_back("alpha=" + alpha.to_string() + " P=" + P.to_string());
      }
    }
    return out;
  });
}

ScanResult root_orbit_scan_impl(const FieldCtx& f, int max_deg, bool parallel) {
  std::vector<Poly> primes = primes_up_to(f, max_deg);
  return run_items(primes.size(), parallel, [&](std::size_t i) {
    ItemOut out;
    out.cases = 1;
    if (!verify_root_orbit(primes[i])) {
      out.failures = 1;
      out.witnesses.push_back("P=" + primes[i].to_string());
    }
    return out;
  });
}

ConverseScanResult gw_converse_scan_impl(const FieldCtx& f, std::int64_t n, int count, int max_deg,
                                         int witness_bound, std::uint64_t seed, bool parallel) {
  struct TrialOut {
    bool sampled = false;
    bool found = false;
    std::string escape;
  };
  std::vector<TrialOut> outs(static_cast<std::size_t>(count));
  std::exception_ptr pending;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t t = 0; t < count; ++t) {
    try {
      std::mt19937_64 rng(splitmix64(seed ^ (0x6A5C00ULL + std::uint64_t(t))));
      for (int attempt = 0; attempt < 256; ++attempt) {
        int d = 1 + int(rng() % std::uint64_t(max_deg));
        Poly alpha = random_poly_of_degree(f, d, rng, false);
        if (global_nth_power(alpha, n)) continue;  // want a non-power
        TrialOut& out = outs[std::size_t(t)];
        out.sampled = true;
        auto witness = find_witness_prime_serial(alpha, n, witness_bound);
        if (witness) {
          out.found = true;
        } else {
          out.escape = "alpha=" + alpha.to_string();
        }
        break;
      }
    } catch (...) {
#pragma omp critical
      if (!pending) pending = std::current_exception();
    }
  }
  if (pending) std::rethrow_exception(pending);
  ConverseScanResult result;
  for (const TrialOut& o : outs) {
    if (!o.sampled) continue;
    ++result.sampled;
    if (o.found)
      ++result.witnesses_found;
    else {
      ++result.inconclusive;
      result.escapes.push_back(o.escape);
    }
  }
  return result;
}

}  // namespace

ScanResult reciprocity_scan(const FieldCtx& f, std::int64_t n, int max_deg) {
  return reciprocity_scan_impl(f, n, max_deg, true);
}
ScanResult reciprocity_scan_serial(const FieldCtx& f, std::int64_t n, int max_deg) {
  return reciprocity_scan_impl(f, n, max_deg, false);
}

ScanResult general_reciprocity_scan(const FieldCtx& f, std::int64_t n, int trials, int max_deg,
                                    std::uint64_t seed) {
  return general_reciprocity_scan_impl(f, n, trials, max_deg, seed, true);
}
ScanResult general_reciprocity_scan_serial(const FieldCtx& f, std::int64_t n, int trials, int max_deg,
                                           std::uint64_t seed) {
  return general_reciprocity_scan_impl(f, n, trials, max_deg, seed, false);
}

ScanResult resultant_equivalence_scan(const FieldCtx& f, std::int64_t n, int max_deg) {
  return resultant_equivalence_scan_impl(f, n, max_deg, true);
}
ScanResult resultant_equivalence_scan_serial(const FieldCtx& f, std::int64_t n, int max_deg) {
  return resultant_equivalence_scan_impl(f, n, max_deg, false);
}

ScanResult symmetry_scan(const FieldCtx& f, std::int64_t n, int max_deg) {
  return symmetry_scan_impl(f, n, max_deg, true);
}
ScanResult symmetry_scan_serial(const FieldCtx& f, std::int64_t n, int max_deg) {
  return symmetry_scan_impl(f, n, max_deg, false);
}

ScanResult fermat_scan(const FieldCtx& f, int trials, int max_deg_p, std::uint64_t seed) {
  return fermat_scan_impl(f, trials, max_deg_p, seed, true);
}
ScanResult fermat_scan_serial(const FieldCtx& f, int trials, int max_deg_p, std::uint64_t seed) {
  return fermat_scan_impl(f, trials, max_deg_p, seed, false);
}

ScanResult power_criterion_scan(const FieldCtx& f, std::int64_t n, int max_deg_p) {
  return power_criterion_scan_impl(f, n, max_deg_p, true);
}
ScanResult power_criterion_scan_serial(const FieldCtx& f, std::int64_t n, int max_deg_p) {
  return power_criterion_scan_impl(f, n, max_deg_p, false);
}

ScanResult root_orbit_scan(const FieldCtx& f, int max_deg) { return root_orbit_scan_impl(f, max_deg, true); }
ScanResult root_orbit_scan_serial(const FieldCtx& f, int max_deg) {
  return root_orbit_scan_impl(f, max_deg, false);
}

ConverseScanResult gw_converse_scan(const FieldCtx& f, std::int64_t n, int count, int max_deg,
                                    int witness_bound, std::uint64_t seed) {
  return gw_converse_scan_impl(f, n, count, max_deg, witness_bound, seed, true);
}
ConverseScanResult gw_converse_scan_serial(const FieldCtx& f, std::int64_t n, int count, int max_deg,
                                           int witness_bound, std::uint64_t seed) {
  return gw_converse_scan_impl(f, n, count, max_deg, witness_bound, seed, false);
}

}  // namespace fqsym
