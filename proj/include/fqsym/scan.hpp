#ifndef FQSYM_SCAN_HPP
#define FQSYM_SCAN_HPP

#include <string>
#include <vector>

#include "fqsym/localglobal.hpp"
#include "fqsym/symbol.hpp"

namespace fqsym {

// Outcome of one exhaustive or sampled theorem scan.  Witness strings are
// collected in canonical input order (capped), so the parallel kernels
// reproduce the serial output exactly.
struct ScanResult {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> witnesses;  // first few failing inputs

  friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

inline constexpr std::size_t kMaxWitnesses = 8;

// Monic reciprocity over every ordered pair of distinct monic irreducibles
// of degree <= max_deg.
ScanResult reciprocity_scan(const FieldCtx& f, std::int64_t n, int max_deg);
ScanResult reciprocity_scan_serial(const FieldCtx& f, std::int64_t n, int max_deg);

// Four-factor general law on seeded random coprime pairs with non-unit
// leading coefficients (when the field has any).
ScanResult general_reciprocity_scan(const FieldCtx& f, std::int64_t n, int trials, int max_deg,
                                    std::uint64_t seed);
ScanResult general_reciprocity_scan_serial(const FieldCtx& f, std::int64_t n, int trials, int max_deg,
                                           std::uint64_t seed);

// Exponentiation route vs resultant route over every coprime pair with
// monic denominator, both degrees <= max_deg.
ScanResult resultant_equivalence_scan(const FieldCtx& f, std::int64_t n, int max_deg);
ScanResult resultant_equivalence_scan_serial(const FieldCtx& f, std::int64_t n, int max_deg);

// Symmetric symbol (alpha/beta)_n = (beta/alpha)_n over ordered pairs of
// distinct monic irreducibles; meaningful when 2n | q-1.
ScanResult symmetry_scan(const FieldCtx& f, std::int64_t n, int max_deg);
ScanResult symmetry_scan_serial(const FieldCtx& f, std::int64_t n, int max_deg);

// alpha^{q^d - 1} = 1 mod P on seeded random coprime pairs.
ScanResult fermat_scan(const FieldCtx& f, int trials, int max_deg_p, std::uint64_t seed);
ScanResult fermat_scan_serial(const FieldCtx& f, int trials, int max_deg_p, std::uint64_t seed);

// Symbol-vs-enumeration power criterion: for every monic prime P with
// deg <= max_deg_p and every alpha coprime to P with deg < 2 deg P,
// (alpha/P)_n = 1 iff some beta^n = alpha mod P.
ScanResult power_criterion_scan(const FieldCtx& f, std::int64_t n, int max_deg_p);
ScanResult power_criterion_scan_serial(const FieldCtx& f, std::int64_t n, int max_deg_p);

// Root orbits of every monic irreducible of degree <= max_deg.
ScanResult root_orbit_scan(const FieldCtx& f, int max_deg);
ScanResult root_orbit_scan_serial(const FieldCtx& f, int max_deg);

// Desk-scale converse of the local-global theorem: draws seeded random
// non-n-th-powers of degree <= max_deg and hunts witness primes up to
// witness_bound.  Escapes (no witness within the bound) are counted and
// listed, never suppressed.
struct ConverseScanResult {
  std::uint64_t sampled = 0;
  std::uint64_t witnesses_found = 0;
  std::uint64_t inconclusive = 0;
  std::vector<std::string> escapes;

  friend bool operator==(const ConverseScanResult&, const ConverseScanResult&) = default;
};
ConverseScanResult gw_converse_scan(const FieldCtx& f, std::int64_t n, int count, int max_deg,
                                    int witness_bound, std::uint64_t seed);
ConverseScanResult gw_converse_scan_serial(const FieldCtx& f, std::int64_t n, int count, int max_deg,
                                           int witness_bound, std::uint64_t seed);

}  // namespace fqsym

#endif
