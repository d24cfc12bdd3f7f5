#ifndef FQSYM_SYMBOL_HPP
#define FQSYM_SYMBOL_HPP

#include <optional>

#include "fqsym/factor.hpp"
#include "fqsym/poly.hpp"

namespace fqsym {

// Value of an n-th power residue symbol: zero when the lower argument
// shares a factor with the upper one, otherwise an n-th root of unity.
struct SymbolValue {
  FFElem value{0};
  bool is_zero() const { return value == FFElem{0}; }
  friend bool operator==(SymbolValue, SymbolValue) = default;
};

// Discrete log of a nonzero symbol value relative to the fixed primitive
// n-th root g^{(q-1)/n}; used for readable reports.
std::optional<std::int64_t> mu_index(const FieldCtx& f, SymbolValue v, std::int64_t n);

// (alpha/P)_n for monic irreducible P: zero if P | alpha, else the constant
// alpha^{(q^d - 1)/n} mod P.  Requires n | q - 1.
SymbolValue residue_symbol_prime(const Poly& alpha, const Poly& P, std::int64_t n);

// Same evaluation with the preconditions assumed rather than re-verified;
// for scan kernels whose moduli come straight from the prime enumerator.
SymbolValue residue_symbol_prime_trusted(const Poly& alpha, const Poly& P, std::int64_t n);

// General denominator: factor beta, multiply prime symbols with
// multiplicities; the sign of beta is ignored and nonzero constants give 1.
SymbolValue residue_symbol(const Poly& alpha, const Poly& beta, std::int64_t n);

// Same with the denominator already factored; scans factor each beta once.
SymbolValue residue_symbol_factored(const Poly& alpha, const FieldCtx& f, const Factorization& beta_factors,
                                    std::int64_t n);

// Closed form a^{((q-1)/n) * deg P} for constant numerators.
SymbolValue constant_symbol(FFElem a, const Poly& P, std::int64_t n);

// Leading coefficient of f raised to (q-1)/n; 1 for monic f.
FFElem sign_n(const Poly& f, std::int64_t n);

struct MonicReciprocityReport {
  SymbolValue lhs;       // (Q/P)_n
  SymbolValue rhs;       // (P/Q)_n
  FFElem sign_factor{};  // (-1)^{((q-1)/n) deg P deg Q}
  bool holds = false;
};

// Checks (Q/P)_n = (-1)^{((q-1)/n) deg P deg Q} (P/Q)_n.
MonicReciprocityReport check_reciprocity_monic(const Poly& P, const Poly& Q, std::int64_t n);

struct GeneralReciprocityReport {
  SymbolValue alpha_over_beta;
  SymbolValue beta_over_alpha;
  FFElem minus_one_power{};
  FFElem sign_alpha_power{};
  FFElem sign_beta_power{};  // already inverted, i.e. sign_n(beta)^{-deg alpha}
  FFElem lhs{};              // (a/b) * (b/a)^{-1}
  FFElem rhs{};              // product of the three factors
  bool holds = false;
};

// Checks the four-factor identity for coprime nonzero alpha, beta:
// (a/b)(b/a)^{-1} = (-1)^{((q-1)/n) deg a deg b} sign_n(a)^{deg b} sign_n(b)^{-deg a}.
GeneralReciprocityReport check_general_reciprocity(const Poly& alpha, const Poly& beta, std::int64_t n);

// Resultant route: Res(beta, alpha)^{(q-1)/n} for monic beta coprime to
// alpha; agrees with residue_symbol.
SymbolValue symbol_via_resultant(const Poly& alpha, const Poly& beta, std::int64_t n);

// Finds the reduced residue alpha (deg < deg P) with (alpha/P)_n = zeta by
// walking powers of a generator of the quotient field's unit group.
Poly find_preimage(FFElem zeta, const Poly& P, std::int64_t n);

}  // namespace fqsym

#endif
