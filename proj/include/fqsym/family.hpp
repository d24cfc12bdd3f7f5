#ifndef FQSYM_FAMILY_HPP
#define FQSYM_FAMILY_HPP

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fqsym/symbol.hpp"

namespace fqsym {

// One value per index of a finite truncated index set.  All componentwise
// machinery in this module evaluates per index and reports an explicit
// `all` summary instead of quantifying over a filter.
template <class T>
struct IndexFamily {
  std::vector<std::string> indices;
  std::vector<T> values;

  std::size_t size() const { return values.size(); }

  void check_nonempty() const {
    if (values.empty() || values.size() != indices.size())
      raise(ErrorCode::IndexMismatch, "family must be nonempty with one value per index");
  }
};

template <class T>
IndexFamily<T> make_family(std::vector<std::string> idx, std::vector<T> vals) {
  IndexFamily<T> f{std::move(idx), std::move(vals)};
  f.check_nonempty();
  return f;
}

template <class T>
IndexFamily<T> constant_family(const std::vector<std::string>& idx, T v) {
  return IndexFamily<T>{idx, std::vector<T>(idx.size(), v)};
}

using IntFamily = IndexFamily<BigInt>;

void require_same_indices(const std::vector<std::string>& a, const std::vector<std::string>& b);

IntFamily family_add(const IntFamily& a, const IntFamily& b);
IntFamily family_mul(const IntFamily& a, const IntFamily& b);
// Componentwise a_i ^ b_i with nonnegative exponents.
IntFamily family_pow(const IntFamily& a, const IntFamily& b);

enum class Ordering { Less, Equal, Greater };
struct FamilyComparison {
  std::vector<Ordering> per_index;
  enum class Summary { AllLess, AllEqual, AllGreater, Mixed } summary;
};
FamilyComparison family_cmp(const IntFamily& a, const IntFamily& b);

// Componentwise gcd; each index must have a nonzero argument.
IntFamily family_gcd(const IntFamily& a, const IntFamily& b);

struct FamilyBezout {
  IntFamily d, e, f;  // a*e + b*f = d at every index
};
FamilyBezout family_bezout(const IntFamily& a, const IntFamily& b);

// Componentwise minimum of nonempty finite sets.
IntFamily family_min(const IndexFamily<std::set<BigInt>>& sets);

// A family of component fields; the truncation's stand-in for one large
// field of varying size.
struct FamilyCtx {
  std::vector<std::string> indices;
  std::vector<FieldCtx> fields;

  std::size_t size() const { return fields.size(); }
  IntFamily orders_minus_one() const;  // family of q_s - 1
};

// Presets shipped with the artifact.
//   constant-q:          the same field at every index
//   growing-powers-of-p: p, p^2, p^3, ... (one characteristic)
//   distinct-primes:     3, 5, 7, 11, 13 (no common characteristic)
FamilyCtx make_preset(const std::string& name);
std::vector<std::string> preset_names();

// Componentwise multiplicative order of nonzero elements.
IntFamily family_order(const IndexFamily<FFElem>& a, const FamilyCtx& ctx);

// Componentwise prime residue symbol with a per-index power n_s | q_s - 1.
IndexFamily<SymbolValue> family_symbol(const IndexFamily<Poly>& alpha, const IndexFamily<Poly>& P,
                                       const IntFamily& n, const FamilyCtx& ctx);

// ---------------------------------------------------------------------------
// Transfer checks: a closed catalog of per-index theorem checks.  The
// summary `all` is the truncation-level statement; any failing index comes
// back with a witness payload.

struct IndexOutcome {
  std::string index;
  bool ok = false;
  std::uint64_t cases = 0;
  std::string witness;  // nonempty on failure
};

struct TransferResult {
  std::string property;
  std::vector<IndexOutcome> per_index;
  bool all = true;
};

struct TransferOptions {
  std::uint64_t seed = kDefaultSeed;
  int max_degree = 2;      // degree bound for exhaustive sub-scans
  int random_trials = 25;  // per-index trials for sampled properties
  // Exhaustive sub-scans stop after this many cases per index, taking a
  // deterministic canonical prefix; keeps large component fields tractable.
  std::uint64_t max_cases_per_index = 10000;
  // Fault injection for negative controls: at this index the evaluator
  // perturbs one computed value before comparing, so the detection and
  // witness path is exercised for real.
  std::optional<std::size_t> corrupt_at;
};

const std::vector<std::string>& transfer_catalog();

TransferResult transfer_check(const std::string& property, const FamilyCtx& ctx,
                              const IntFamily& n, const TransferOptions& opts = {});
TransferResult transfer_check_serial(const std::string& property, const FamilyCtx& ctx,
                                     const IntFamily& n, const TransferOptions& opts = {});

// Per-index n_s: the largest divisor of q_s - 1 not exceeding the hint,
// used when presets need a valid power index at every component.
IntFamily default_power_family(const FamilyCtx& ctx, std::int64_t hint = 2);

}  // namespace fqsym

#endif
