#include "fqsym/symbol.hpp"

#include <map>
#include <tuple>

namespace fqsym {

namespace {

void require_divides(const FieldCtx& f, std::int64_t n) {
  if (n < 1 || (f.q() - 1) % n != 0)
    raise(ErrorCode::DoesNotDivide,
          "n = " + std::to_string(n) + " must divide q-1 = " + std::to_string(f.q() - 1));
}

void require_prime_modulus(const Poly& P) {
  if (P.is_zero() || P.is_constant()) raise(ErrorCode::ConstantPolynomial, "modulus must have positive degree");
  if (!P.is_monic()) raise(ErrorCode::NotMonic, "modulus must be monic");
  if (!is_irreducible(P)) raise(ErrorCode::NotIrreducible, "modulus must be irreducible");
}

}  // namespace

std::optional<std::int64_t> mu_index(const FieldCtx& f, SymbolValue v, std::int64_t n) {
  require_divides(f, n);
  if (v.is_zero()) return std::nullopt;
  FFElem zeta = f.pow(f.primitive_root(), BigInt((f.q() - 1) / n));
  FFElem cur = f.one();
  for (std::int64_t i = 0; i < n; ++i) {
    if (cur == v.value) return i;
    cur = f.mul(cur, zeta);
  }
  raise(ErrorCode::NotRootOfUnity, "value is not an n-th root of unity");
}

SymbolValue residue_symbol_prime_trusted(const Poly& alpha, const Poly& P, std::int64_t n) {
  const FieldCtx& F = P.field();
  int d = P.deg();
  // scans hit the same (q, d, n) exponent millions of times
  static thread_local std::map<std::tuple<std::int64_t, int, std::int64_t>, BigInt> exponents;
  auto [it, fresh] = exponents.try_emplace({F.q(), d, n});
  if (fresh) it->second = (big_pow(BigInt(F.q()), std::uint64_t(d)) - 1) / n;
  // P | alpha lands on the zero residue, and stays there under the power
  Poly power = powmod(alpha, it->second, P);
  if (!power.is_constant())
    raise(ErrorCode::NotIrreducible, "symbol power is not constant; modulus cannot be prime");
  return SymbolValue{power.coeff(0)};
}

SymbolValue residue_symbol_prime(const Poly& alpha, const Poly& P, std::int64_t n) {
  require_divides(P.field(), n);
  require_prime_modulus(P);
  return residue_symbol_prime_trusted(alpha, P, n);
}

SymbolValue residue_symbol(const Poly& alpha, const Poly& beta, std::int64_t n) {
  if (beta.is_zero()) raise(ErrorCode::ZeroModulus, "symbol denominator is zero");
  const FieldCtx& F = beta.field();
  require_divides(F, n);
  if (beta.is_constant()) return SymbolValue{F.one()};
  return residue_symbol_factored(alpha, F, factor(beta), n);
}

SymbolValue residue_symbol_factored(const Poly& alpha, const FieldCtx& F, const Factorization& beta_factors,
                                    std::int64_t n) {
  require_divides(F, n);
  FFElem acc = F.one();
  for (const auto& [P, mult] : beta_factors.factors) {
    SymbolValue s = residue_symbol_prime_trusted(alpha, P, n);
    if (s.is_zero()) return SymbolValue{F.zero()};
    acc = F.mul(acc, F.pow(s.value, BigInt(mult)));
  }
  return SymbolValue{acc};
}

SymbolValue constant_symbol(FFElem a, const Poly& P, std::int64_t n) {
  const FieldCtx& F = P.field();
  require_divides(F, n);
  require_prime_modulus(P);
  if (a == F.zero()) return SymbolValue{F.zero()};
  BigInt exponent = BigInt((F.q() - 1) / n) * P.deg();
  return SymbolValue{F.pow(a, exponent)};
}

FFElem sign_n(const Poly& f, std::int64_t n) {
  if (f.is_zero()) raise(ErrorCode::ZeroPolynomial, "sign of the zero polynomial");
  const FieldCtx& F = f.field();
  require_divides(F, n);
  return F.pow(f.leading(), BigInt((F.q() - 1) / n));
}

MonicReciprocityReport check_reciprocity_monic(const Poly& P, const Poly& Q, std::int64_t n) {
  const FieldCtx& F = P.field();
  require_divides(F, n);
  require_prime_modulus(P);
  require_prime_modulus(Q);
  MonicReciprocityReport rep;
  rep.lhs = residue_symbol_prime_trusted(Q, P, n);
  rep.rhs = residue_symbol_prime_trusted(P, Q, n);
  BigInt exponent = BigInt((F.q() - 1) / n) * P.deg() * Q.deg();
  rep.sign_factor = F.pow(F.neg(F.one()), exponent);
  if (P == Q) {
    rep.holds = rep.lhs.is_zero() && rep.rhs.is_zero();
    return rep;
  }
  rep.holds = rep.lhs.value == F.mul(rep.sign_factor, rep.rhs.value);
  return rep;
}

GeneralReciprocityReport check_general_reciprocity(const Poly& alpha, const Poly& beta, std::int64_t n) {
  if (alpha.is_zero() || beta.is_zero()) raise(ErrorCode::ZeroInput, "reciprocity needs nonzero inputs");
  const FieldCtx& F = alpha.field();
  require_divides(F, n);
  if (!coprime(alpha, beta)) raise(ErrorCode::NotCoprime, "inputs must be coprime");

  GeneralReciprocityReport rep;
  rep.alpha_over_beta = residue_symbol(alpha, beta, n);
  rep.beta_over_alpha = residue_symbol(beta, alpha, n);
  // Coprime inputs keep both symbols nonzero.
  int da = alpha.is_constant() ? 0 : alpha.deg();
  int db = beta.is_constant() ? 0 : beta.deg();
  BigInt exponent = BigInt((F.q() - 1) / n) * da * db;
  rep.minus_one_power = F.pow(F.neg(F.one()), exponent);
  rep.sign_alpha_power = F.pow(sign_n(alpha, n), BigInt(db));
  rep.sign_beta_power = F.inv(F.pow(sign_n(beta, n), BigInt(da)));
  rep.lhs = F.mul(rep.alpha_over_beta.value, F.inv(rep.beta_over_alpha.value));
  rep.rhs = F.mul(F.mul(rep.minus_one_power, rep.sign_alpha_power), rep.sign_beta_power);
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

SymbolValue symbol_via_resultant(const Poly& alpha, const Poly& beta, std::int64_t n) {
  const FieldCtx& F = beta.field();
  require_divides(F, n);
  if (beta.is_zero()) raise(ErrorCode::ZeroModulus, "symbol denominator is zero");
  if (!beta.is_monic()) raise(ErrorCode::NotMonic, "resultant route needs a monic denominator");
  if (alpha.is_zero() || !coprime(alpha, beta)) raise(ErrorCode::NotCoprime, "inputs must be coprime");
  if (beta.is_constant()) return SymbolValue{F.one()};
  FFElem res = resultant(beta, alpha);
  return SymbolValue{F.pow(res, BigInt((F.q() - 1) / n))};
}

Poly find_preimage(FFElem zeta, const Poly& P, std::int64_t n) {
  const FieldCtx& F = P.field();
  require_divides(F, n);
  require_prime_modulus(P);
  if (zeta == F.zero() || F.pow(zeta, BigInt(n)) != F.one())
    raise(ErrorCode::NotRootOfUnity, "target is not an n-th root of unity");
  if (zeta == F.one()) return Poly::one(F);
  QuotientRing R(P, false);
  Poly g = R.generator();
  SymbolValue base = residue_symbol_prime_trusted(g, P, n);
  // base generates mu_n, so zeta = base^j for a unique j < n.
  FFElem cur = F.one();
  Poly pw = Poly::one(F);
  for (std::int64_t j = 0; j < n; ++j) {
    if (cur == zeta) return pw;
    cur = F.mul(cur, base.value);
    pw = R.mul(pw, g);
  }
  raise(ErrorCode::NotRootOfUnity, "generator symbol failed to reach target");
}

}  // namespace fqsym
