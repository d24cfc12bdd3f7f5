#ifndef FQSYM_BIGINT_HPP
#define FQSYM_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <tuple>

namespace fqsym {

// Exponents like (q^d - 1)/n outgrow machine words quickly, so every
// exponent-shaped quantity in the engine is a BigInt.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, std::uint64_t k) {
  BigInt r = 1, b = base;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
inline std::tuple<BigInt, BigInt, BigInt> big_bezout(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b;
  BigInt old_x = 1, x = 0;
  BigInt old_y = 0, y = 1;
  while (r != 0) {
    BigInt qt = old_r / r;
    old_r -= qt * r; std::swap(old_r, r);
    old_x -= qt * x; std::swap(old_x, x);
    old_y -= qt * y; std::swap(old_y, y);
  }
  if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
  return {old_r, old_x, old_y};
}

// Number of bits needed: position of most significant set bit + 1; 0 for zero.
inline std::size_t big_bits(const BigInt& v) {
  if (v == 0) return 0;
  return boost::multiprecision::msb(v) + 1;
}

inline bool big_bit(const BigInt& v, std::size_t i) { return boost::multiprecision::bit_test(v, i); }

}  // namespace fqsym

#endif
