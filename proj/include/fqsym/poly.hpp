#ifndef FQSYM_POLY_HPP
#define FQSYM_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqsym/ff.hpp"

namespace fqsym {

// Univariate polynomial over a FieldCtx.  Coefficients are stored low
// degree first with no trailing zeros; the zero polynomial has an empty
// coefficient vector and reports its degree as "none" rather than -1.
class Poly {
 public:
  Poly() = default;

  static Poly zero(const FieldCtx& f) { return Poly(f, {}); }
  static Poly one(const FieldCtx& f) { return Poly(f, {f.one()}); }
  static Poly constant(const FieldCtx& f, FFElem c) { return Poly(f, {c}); }
  static Poly t(const FieldCtx& f) { return Poly(f, {f.zero(), f.one()}); }
  static Poly from_coeffs(const FieldCtx& f, std::vector<FFElem> c);
  static Poly from_ints(const FieldCtx& f, const std::vector<std::int64_t>& c);
  // Monic polynomial of the given degree whose lower coefficients are the
  // base-q digits of `code`; the enumeration order used everywhere.
  static Poly monic_from_code(const FieldCtx& f, int degree, std::int64_t code);

  const FieldCtx& field() const { return field_; }
  const std::vector<FFElem>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return int(coeffs_.size()) - 1;
  }
  // Degree of a known-nonzero polynomial.
  int deg() const;

  FFElem coeff(int i) const {
    if (i < 0 || std::size_t(i) >= coeffs_.size()) return FFElem{0};
    return coeffs_[std::size_t(i)];
  }
  FFElem leading() const;
  bool is_monic() const { return !coeffs_.empty() && leading() == field_.one(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Poly monic() const;  // divide by the leading coefficient
  FFElem eval(FFElem x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  Poly scaled(FFElem c) const;
  Poly shifted(int k) const;  // multiply by t^k

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Canonical order: by degree, then coefficient tuples compared from the
  // highest power down.  Matches the monic enumeration order.
  static bool canonical_less(const Poly& a, const Poly& b);

  std::string to_string() const;

  // Text grammar: sum of terms c*t^k / t^k / c with '^' and '*' optional
  // where unambiguous, plus the compact form [c0,c1,...].
  static Poly parse(const FieldCtx& f, const std::string& text);

  std::string to_compact() const;  // "[c0,c1,...]"

 private:
  Poly(const FieldCtx& f, std::vector<FFElem> c) : field_(f), coeffs_(std::move(c)) { trim(); }
  void trim();

  FieldCtx field_;
  std::vector<FFElem> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

// f = g*quotient + remainder with remainder zero or deg(remainder) < deg(g).
DivRem divrem(const Poly& f, const Poly& g);

Poly poly_mod(const Poly& f, const Poly& g);

// Monic gcd; gcd(f, 0) = monic(f).
Poly poly_gcd(const Poly& f, const Poly& g);

struct Bezout {
  Poly d;  // monic gcd
  Poly u;
  Poly v;  // u*f + v*g = d
};
Bezout poly_bezout(const Poly& f, const Poly& g);

bool coprime(const Poly& f, const Poly& g);

// f^k mod P by square-and-multiply.
Poly powmod(const Poly& f, const BigInt& k, const Poly& P);

// Plain power (exponent small enough for a dense result).
Poly poly_pow(const Poly& f, std::uint64_t k);

// Rabin test; degree must be at least 1.
bool is_irreducible(const Poly& f);

// Res(f, g) = lc(f)^{deg g} * prod g(r_i) over the roots r_i of f.
FFElem resultant(const Poly& f, const Poly& g);

// Frobenius substitution: checks Q(t)^{q^j} == Q(t^{q^j}) coefficientwise.
bool frobenius_substitution_check(const Poly& Q, int j);

// Builds GF(q)[t]/P for irreducible monic P of degree d, takes the class
// of t and confirms its d Frobenius conjugates are pairwise distinct and
// multiply back to P.  True for every irreducible input.
bool verify_root_orbit(const Poly& P);

// Arithmetic in GF(q)[t]/(P) with P monic irreducible; elements are the
// reduced representatives of degree < deg P.
class QuotientRing {
 public:
  explicit QuotientRing(Poly modulus, bool check_irreducible = true);

  const Poly& modulus() const { return modulus_; }
  const FieldCtx& base() const { return modulus_.field(); }
  int ext_degree() const { return modulus_.deg(); }
  BigInt size() const;  // q^d

  Poly reduce(const Poly& a) const { return poly_mod(a, modulus_); }
  Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }
  Poly pow(const Poly& a, const BigInt& k) const { return powmod(a, k, modulus_); }
  Poly inv(const Poly& a) const;

  // Residue with the given enumeration code (base-q digits).
  Poly element(const BigInt& code) const;
  BigInt code_of(const Poly& reduced) const;

  // Least residue (canonical order) generating the unit group.
  Poly generator() const;

  // Multiplicative order of a nonzero residue.
  BigInt unit_order(const Poly& a) const;

 private:
  Poly modulus_;
  std::vector<std::pair<BigInt, int>> size_minus_one_factors_;  // (prime, mult) of q^d - 1
};

}  // namespace fqsym

#endif
