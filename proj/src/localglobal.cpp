#include "fqsym/localglobal.hpp"

#include <numeric>
#include "fqsym/primes.hpp"

namespace fqsym {

const char* LocalReport::reason_name(Reason r) {
  switch (r) {
    case Reason::ResidueFieldSolvable: return "ResidueFieldSolvable";
    case Reason::SymbolObstruction: return "SymbolObstruction";
    case Reason::Excluded: return "Excluded";
  }
  return "?";
}

const char* GWReport::verdict_name(Verdict v) {
  switch (v) {
    case Verdict::GlobalPower: return "GlobalPower";
    case Verdict::WitnessFound: return "WitnessFound";
    case Verdict::InconclusiveAtBound: return "InconclusiveAtBound";
  }
  return "?";
}

LocalReport local_solvable(const Poly& alpha, const Poly& P, std::int64_t n) {
  const FieldCtx& F = P.field();
  if (n < 1) raise(ErrorCode::DoesNotDivide, "power index must be positive");
  if (n % F.p() == 0)
    raise(ErrorCode::CharacteristicDividesN, "n must be prime to the characteristic");
  if (P.is_zero() || P.is_constant() || !P.is_monic() || !is_irreducible(P))
    raise(ErrorCode::NotIrreducible, "local test needs a monic prime");

  LocalReport rep;
  rep.prime = P;
  Poly reduced = poly_mod(alpha, P);
  if (reduced.is_zero()) {
    rep.reason = LocalReport::Reason::Excluded;
    rep.locally_solvable = false;
    return rep;
  }
  int d = P.deg();
  BigInt qd1 = big_pow(BigInt(F.q()), std::uint64_t(d)) - 1;
  BigInt g = big_gcd(BigInt(n), qd1);
  Poly power = powmod(reduced, qd1 / g, P);
  rep.locally_solvable = power == Poly::one(F);
  rep.hensel_lift_applies = true;  // gcd(n, p) = 1 and alpha is a unit mod P
  if (rep.locally_solvable) {
    rep.reason = LocalReport::Reason::ResidueFieldSolvable;
  } else {
    rep.reason = LocalReport::Reason::SymbolObstruction;
    // Witness at the finest level visible in the base field.
    std::int64_t n0 = std::gcd(n, F.q() - 1);
    rep.obstruction = residue_symbol_prime_trusted(alpha, P, n0);
  }
  return rep;
}

std::optional<Poly> global_nth_power(const Poly& alpha, std::int64_t n) {
  if (alpha.is_zero()) raise(ErrorCode::ZeroPolynomial, "zero has no factorization");
  if (n < 1) raise(ErrorCode::DoesNotDivide, "power index must be positive");
  const FieldCtx& F = alpha.field();
  Factorization fac = factor(alpha);
  for (const auto& [P, mult] : fac.factors)
    if (mult % n != 0) return std::nullopt;
  auto root = F.nth_root(fac.unit, n);
  if (!root.ok) return std::nullopt;
  Poly beta = Poly::constant(F, root.value);
  for (const auto& [P, mult] : fac.factors)
    for (int i = 0; i < mult / int(n); ++i) beta = beta * P;
  return beta;
}

namespace {

// Local failure at P, with divisors of alpha skipped.
bool fails_locally(const Poly& alpha, const Poly& P, std::int64_t n) {
  LocalReport rep = local_solvable(alpha, P, n);
  return rep.reason != LocalReport::Reason::Excluded && !rep.locally_solvable;
}

}  // namespace

std::optional<Poly> find_witness_prime_serial(const Poly& alpha, std::int64_t n, int degree_bound) {
  const FieldCtx& F = alpha.field();
  for (int d = 1; d <= degree_bound; ++d) {
    for (const Poly& P : monic_primes_serial(F, d))
      if (fails_locally(alpha, P, n)) return P;
  }
  return std::nullopt;
}

std::optional<Poly> find_witness_prime(const Poly& alpha, std::int64_t n, int degree_bound) {
  const FieldCtx& F = alpha.field();
  for (int d = 1; d <= degree_bound; ++d) {
    std::vector<Poly> primes = monic_primes(F, d);
    std::int64_t first = -1;
    // take the least failing index so the result matches the serial sweep
#pragma omp parallel
    {
      std::int64_t local_first = -1;
#pragma omp for schedule(dynamic, 16) nowait
      for (std::int64_t i = 0; i < std::int64_t(primes.size()); ++i) {
        if (local_first != -1 && i > local_first) continue;
        if (fails_locally(alpha, primes[std::size_t(i)], n)) {
          if (local_first == -1 || i < local_first) local_first = i;
        }
      }
#pragma omp critical
      {
        if (local_first != -1 && (first == -1 || local_first < first)) first = local_first;
      }
    }
    if (first != -1) return primes[std::size_t(first)];
  }
  return std::nullopt;
}

GWReport gw_scan(const Poly& alpha, std::int64_t n, int degree_bound) {
  const FieldCtx& F = alpha.field();
  if (alpha.is_zero() || alpha.is_constant())
    raise(ErrorCode::ZeroInput, "scan needs a polynomial of positive degree");
  if (n % F.p() == 0)
    raise(ErrorCode::CharacteristicDividesN, "n must be prime to the characteristic");

  GWReport rep;
  rep.alpha = alpha;
  rep.n = n;
  rep.degree_bound = degree_bound;
  rep.globally_power = global_nth_power(alpha, n);

  for (int d = 1; d <= degree_bound; ++d) {
    std::vector<Poly> primes = monic_primes(F, d);
    std::vector<unsigned char> excluded(primes.size(), 0), failing(primes.size(), 0);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < std::int64_t(primes.size()); ++i) {
      LocalReport lr = local_solvable(alpha, primes[std::size_t(i)], n);
      if (lr.reason == LocalReport::Reason::Excluded)
        excluded[std::size_t(i)] = 1;
      else if (!lr.locally_solvable)
        failing[std::size_t(i)] = 1;
    }
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (excluded[i]) rep.excluded_primes.push_back(primes[i]);
      if (failing[i]) rep.witnesses.push_back(primes[i]);
    }
  }

  if (rep.globally_power) {
    rep.verdict = GWReport::Verdict::GlobalPower;
  } else if (!rep.witnesses.empty()) {
    rep.verdict = GWReport::Verdict::WitnessFound;
  } else {
    rep.verdict = GWReport::Verdict::InconclusiveAtBound;
  }
  return rep;
}

}  // namespace fqsym
