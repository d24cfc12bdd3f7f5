#ifndef FQSYM_FF_HPP
#define FQSYM_FF_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fqsym/bigint.hpp"
#include "fqsym/error.hpp"
#include "fqsym/version.hpp"

namespace fqsym {

// Element of GF(p^e), stored as the base-p digit code
// a_0 + a_1*p + ... + a_{e-1}*p^{e-1} of its coordinate vector.
// Numeric order on codes equals lexicographic order on the coefficient
// tuple (a_{e-1}, ..., a_0), the order used everywhere for determinism.
struct FFElem {
  std::uint32_t code = 0;
  friend bool operator==(FFElem, FFElem) = default;
  friend auto operator<=>(FFElem, FFElem) = default;
};

// Immutable handle to a concrete finite field GF(p^e).  Construction is
// deterministic: for e > 1 the defining modulus is the lexicographically
// least monic irreducible of degree e over GF(p).  Handles are cheap to
// copy and safe to share across threads.
class FieldCtx {
 public:
  FieldCtx() = default;  // empty handle; only assignment is allowed before use

  static FieldCtx make(std::int64_t p, int e);

  // Parses a prime power q = p^e and builds the field.
  static FieldCtx from_order(std::int64_t q);

  bool valid() const { return d_ != nullptr; }
  std::int64_t p() const;
  int e() const;
  std::int64_t q() const;

  // Defining modulus as int coefficients, low degree first, length e+1
  // (monic).  Empty for prime fields.
  const std::vector<std::int64_t>& modulus() const;

  // Two handles designate the same field iff (p, e) agree; the modulus is
  // then identical by the determinism contract.
  bool same(const FieldCtx& o) const;

  FFElem zero() const { return FFElem{0}; }
  FFElem one() const { return FFElem{1}; }
  // Image of an integer under Z -> GF(p) c GF(q).
  FFElem from_int(std::int64_t v) const;
  FFElem elem(std::uint32_t code) const;

  FFElem add(FFElem a, FFElem b) const;
  FFElem sub(FFElem a, FFElem b) const;
  FFElem neg(FFElem a) const;
  FFElem mul(FFElem a, FFElem b) const;
  FFElem inv(FFElem a) const;
  FFElem div(FFElem a, FFElem b) const { return mul(a, inv(b)); }

  // Square-and-multiply; 0^0 = 1 so constant-term evaluation stays uniform.
  FFElem pow(FFElem a, const BigInt& k) const;

  // Multiplicative order of a nonzero element; divides q - 1.
  std::int64_t mult_order(FFElem a) const;

  // Least element (coefficient-tuple order) generating GF(q)^x.
  FFElem primitive_root() const;

  // True iff a is an n-th power in GF(q); a = 0 counts (0 = 0^n).
  bool is_nth_power(FFElem a, const BigInt& n) const;

  // The unique subgroup of order n, ascending code order.  Requires n | q-1.
  std::vector<FFElem> nth_roots_of_unity(std::int64_t n) const;

  // Some x with x^n = a, least discrete log, or nothing if a is not an
  // n-th power.  a = 0 yields 0.
  struct MaybeElem { bool ok = false; FFElem value{}; };
  MaybeElem nth_root(FFElem a, std::int64_t n) const;

  // Discrete log base primitive_root(); a must be nonzero.
  std::int64_t dlog(FFElem a) const;

  // Coordinates (a_0, ..., a_{e-1}) over GF(p).
  std::vector<std::int64_t> coeffs(FFElem a) const;
  FFElem from_coeffs(const std::vector<std::int64_t>& c) const;

  // "7" for prime fields, "[a0,a1,...]" for extensions.
  std::string to_string(FFElem a) const;
  FFElem parse(const std::string& text) const;

  // Prime factors of q - 1 (ascending, distinct).
  const std::vector<std::int64_t>& unit_group_prime_factors() const;

  std::string describe() const;  // "p^e" form plus modulus

  struct Data;  // immutable implementation record, shared between handles

 private:
  explicit FieldCtx(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  const Data& data() const;
  std::shared_ptr<const Data> d_;
};

}  // namespace fqsym

#endif
