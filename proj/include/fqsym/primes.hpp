#ifndef FQSYM_PRIMES_HPP
#define FQSYM_PRIMES_HPP

#include <string>
#include <vector>

#include "fqsym/poly.hpp"

namespace fqsym {

// All monic irreducibles of the given degree, in canonical (enumeration
// code) order.  The parallel kernel marks candidates with OpenMP and
// collects in order, so its output is bit-identical to the serial one.
std::vector<Poly> monic_primes(const FieldCtx& f, int degree);
std::vector<Poly> monic_primes_serial(const FieldCtx& f, int degree);

// First `limit` monic irreducibles of the degree in canonical order,
// stopping early; for large q where the full table is not needed.
std::vector<Poly> first_monic_primes(const FieldCtx& f, int degree, std::size_t limit);

// Gauss/Moebius count (1/n) * sum_{d | n} mu(d) q^{n/d}; the independent
// route the enumeration is checked against.
BigInt count_monic_primes(const FieldCtx& f, int degree);

// icard-style lower bound: n * count >= q^{n/2}, compared exactly as
// (n*count)^2 >= q^n.
bool prime_count_lower_bound_holds(const FieldCtx& f, int degree);

// Disk-backed table: one polynomial per line under dir, keyed by q and
// degree, invalidated by artifact version.  Entries are re-verified on
// load; any mismatch rebuilds the table.
std::vector<Poly> monic_primes_cached(const FieldCtx& f, int degree, const std::string& cache_dir);

// Resolves the cache directory: explicit flag beats FQSYM_CACHE_DIR beats
// the builtin default next to the current directory.
std::string resolve_cache_dir(const std::string& flag_value);

}  // namespace fqsym

#endif
