#ifndef FQSYM_LOCALGLOBAL_HPP
#define FQSYM_LOCALGLOBAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "fqsym/symbol.hpp"

namespace fqsym {

// Verdict of the local test x^n = alpha at one monic prime P.
struct LocalReport {
  enum class Reason { ResidueFieldSolvable, SymbolObstruction, Excluded };

  Poly prime;
  bool locally_solvable = false;
  Reason reason = Reason::ResidueFieldSolvable;
  // Obstruction witness: the gcd(n, q-1)-th power residue symbol of alpha
  // at P.  Meaningful when reason == SymbolObstruction.
  SymbolValue obstruction;
  // The simple-root hypothesis for lifting residue-field solutions is
  // automatic here (the derivative n x^{n-1} is a unit at any candidate);
  // recorded so reports carry the justification.
  bool hensel_lift_applies = false;

  static const char* reason_name(Reason r);
};

// Residue-field test at P with d = deg P, g = gcd(n, q^d - 1):
// solvable iff alpha^{(q^d-1)/g} = 1 mod P.  Primes dividing alpha are
// reported as Excluded.  Requires gcd(n, p) = 1.
LocalReport local_solvable(const Poly& alpha, const Poly& P, std::int64_t n);

// Exact global root: factor alpha; a root exists iff every multiplicity is
// divisible by n and the sign is an n-th power in GF(q).  The returned
// beta satisfies beta^n = alpha exactly.
std::optional<Poly> global_nth_power(const Poly& alpha, std::int64_t n);

// First monic prime (canonical order, degree then code) up to degree B
// where the local test fails, skipping divisors of alpha.
std::optional<Poly> find_witness_prime(const Poly& alpha, std::int64_t n, int degree_bound);
std::optional<Poly> find_witness_prime_serial(const Poly& alpha, std::int64_t n, int degree_bound);

struct GWReport {
  enum class Verdict { GlobalPower, WitnessFound, InconclusiveAtBound };

  Poly alpha;
  std::int64_t n = 0;
  int degree_bound = 0;
  std::vector<Poly> excluded_primes;
  std::vector<Poly> witnesses;
  std::optional<Poly> globally_power;
  Verdict verdict = Verdict::InconclusiveAtBound;

  static const char* verdict_name(Verdict v);
};

// Combines the exact global test with an exhaustive local sweep over all
// monic primes of degree <= B.  A bound escape (not a global power, no
// witness within B) is reported explicitly, never silently.
GWReport gw_scan(const Poly& alpha, std::int64_t n, int degree_bound);

}  // namespace fqsym

#endif
