#include "fqsym/ff.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <mutex>
#include <sstream>

namespace fqsym {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::SizeExceeded: return "SizeExceeded";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::DoesNotDivide: return "DoesNotDivide";
    case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotRootOfUnity: return "NotRootOfUnity";
    case ErrorCode::ZeroModulus: return "ZeroModulus";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::CharacteristicDividesN: return "CharacteristicDividesN";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::ZeroAtIndex: return "ZeroAtIndex";
    case ErrorCode::EmptyAtIndex: return "EmptyAtIndex";
    case ErrorCode::BothZeroAtIndex: return "BothZeroAtIndex";
    case ErrorCode::UnknownProperty: return "UnknownProperty";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "Error";
}

namespace {

bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// --- dense polynomial arithmetic over the prime field GF(p), used only to
// --- locate the defining modulus of an extension.  Coefficients low first.
using ZpPoly = std::vector<std::int64_t>;

void zp_trim(ZpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& m, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  // m is monic
  for (std::size_t i = c.size(); i-- > m.size() - 1;) {
    std::int64_t lead = c[i] % p;
    if (!lead) continue;
    c[i] = 0;
    for (std::size_t j = 0; j + 1 < m.size(); ++j)
      c[i - (m.size() - 1) + j] = (c[i - (m.size() - 1) + j] + lead * (p - m[j])) % p;
  }
  c.resize(m.size() - 1);
  zp_trim(c);
  return c;
}

ZpPoly zp_powmod_x(std::int64_t exp, const ZpPoly& m, std::int64_t p) {
  ZpPoly result{1};
  ZpPoly base{0, 1};
  if (m.size() == 2) base = zp_mulmod(base, {1}, m, p);  // reduce x when deg m = 1
  while (exp) {
    if (exp & 1) result = zp_mulmod(result, base, m, p);
    base = zp_mulmod(base, base, m, p);
    exp >>= 1;
  }
  return result;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::int64_t p) {
  auto inv_mod_p = [p](std::int64_t v) {
    std::int64_t r = 1, base = v % p, k = p - 2;
    while (k) {
      if (k & 1) r = r * base % p;
      base = base * base % p;
      k >>= 1;
    }
    return r;
  };
  zp_trim(a);
  zp_trim(b);
  while (!b.empty()) {
    // a mod b
    std::int64_t binv = inv_mod_p(b.back());
    while (a.size() >= b.size()) {
      std::int64_t c = a.back() * binv % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
      zp_trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// Rabin criterion over GF(p): f of degree m is irreducible iff x^{p^m} = x
// mod f and gcd(x^{p^{m/r}} - x, f) = 1 for every prime r | m.
bool zp_irreducible(const ZpPoly& f, std::int64_t p) {
  int m = int(f.size()) - 1;
  if (m <= 0) return false;
  if (m == 1) return true;
  auto pow_i64 = [](std::int64_t b, int k) {
    std::int64_t r = 1;
    while (k--) r *= b;
    return r;
  };
  for (std::int64_t r : prime_factors(m)) {
    ZpPoly h = zp_powmod_x(pow_i64(p, int(m / r)), f, p);
    // h - x
    if (h.size() < 2) h.resize(2, 0);
    h[1] = ((h[1] - 1) % p + p) % p;
    zp_trim(h);
    ZpPoly g = zp_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  ZpPoly h = zp_powmod_x(pow_i64(p, m), f, p);
  if (h.size() < 2) h.resize(2, 0);
  h[1] = ((h[1] - 1) % p + p) % p;
  zp_trim(h);
  return h.empty();
}

}  // namespace

struct FieldCtx::Data {
  std::int64_t p = 0;
  int e = 0;
  std::int64_t q = 0;
  std::vector<std::int64_t> modulus;        // low first, length e+1, monic; empty for e == 1
  std::vector<std::int64_t> unit_factors;   // distinct prime factors of q - 1
  std::uint32_t generator = 1;
  // Discrete-log tables, built when q fits; exp has length 2(q-1) so a
  // single table lookup serves products without a modular reduction.
  std::vector<std::uint32_t> exp_table;
  std::vector<std::int64_t> log_table;

  bool has_tables() const { return !exp_table.empty(); }

  std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (e == 1) return std::uint32_t((std::uint64_t(a) * b) % std::uint64_t(p));
    if (has_tables()) return exp_table[std::size_t(log_table[a]) + std::size_t(log_table[b])];
    return mul_digits(a, b);
  }

  std::uint32_t mul_digits(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t A[32], B[32], C[64] = {0};
    decode(a, A);
    decode(b, B);
    for (int i = 0; i < e; ++i) {
      if (!A[i]) continue;
      for (int j = 0; j < e; ++j) C[i + j] += A[i] * B[j];
    }
    for (int i = 2 * e - 2; i >= e; --i) {
      std::uint64_t c = C[i] % std::uint64_t(p);
      C[i] = 0;
      if (!c) continue;
      for (int j = 0; j < e; ++j) C[i - e + j] = (C[i - e + j] + c * std::uint64_t(p - modulus[j])) % std::uint64_t(p);
    }
    std::uint64_t code = 0;
    for (int i = e - 1; i >= 0; --i) code = code * std::uint64_t(p) + C[i] % std::uint64_t(p);
    return std::uint32_t(code);
  }

  void decode(std::uint32_t code, std::uint64_t* digits) const {
    std::uint64_t v = code;
    for (int i = 0; i < e; ++i) {
      digits[i] = v % std::uint64_t(p);
      v /= std::uint64_t(p);
    }
  }

  std::uint32_t pow_raw(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t r = 1, b = a;
    while (k) {
      if (k & 1) r = mul_raw(r, b);
      b = mul_raw(b, b);
      k >>= 1;
    }
    return r;
  }
};

namespace {
std::mutex g_field_mutex;
std::map<std::pair<std::int64_t, int>, std::shared_ptr<const FieldCtx::Data>> g_field_cache;
}  // namespace

FieldCtx FieldCtx::make(std::int64_t p, int e) {
  if (!is_prime_i64(p)) raise(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (e < 1) raise(ErrorCode::SizeExceeded, "extension degree must be positive");
  {
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto it = g_field_cache.find({p, e});
    if (it != g_field_cache.end()) return FieldCtx(it->second);
  }

  std::int64_t q = 1;
  for (int i = 0; i < e; ++i) {
    if (q > kMaxFieldSize / p) raise(ErrorCode::SizeExceeded, "p^e exceeds the configured field bound");
    q *= p;
  }

  auto d = std::make_shared<Data>();
  d->p = p;
  d->e = e;
  d->q = q;

  if (e > 1) {
    // Lexicographically least monic irreducible of degree e over GF(p),
    // coefficient tuples compared high degree first.  The candidate code c
    // encodes the low part, so ascending c is exactly that order.
    for (std::int64_t c = 0;; ++c) {
      ZpPoly f(std::size_t(e) + 1, 0);
      std::int64_t v = c;
      for (int i = 0; i < e; ++i) {
        f[i] = v % p;
        v /= p;
      }
      f[e] = 1;
      if (zp_irreducible(f, p)) {
        d->modulus = f;
        break;
      }
    }
  }

  d->unit_factors = prime_factors(q - 1);

  // Least generator of GF(q)^x in coefficient-tuple order.
  for (std::uint32_t cand = 1;; ++cand) {
    bool full = true;
    for (std::int64_t r : d->unit_factors) {
      if (d->pow_raw(cand, std::uint64_t((q - 1) / r)) == 1) {
        full = false;
        break;
      }
    }
    if (full || q == 2) {
      d->generator = cand;
      break;
    }
  }

  if (q <= (std::int64_t(1) << 16)) {
    // Fill via the digit multiply; the table path only becomes live once
    // exp_table is populated.
    std::vector<std::uint32_t> exp(std::size_t(2 * (q - 1)));
    std::vector<std::int64_t> lg(std::size_t(q), 0);
    std::uint32_t cur = 1;
    for (std::int64_t i = 0; i < q - 1; ++i) {
      exp[std::size_t(i)] = cur;
      exp[std::size_t(i + q - 1)] = cur;
      lg[cur] = i;
      cur = (d->e == 1) ? std::uint32_t((std::uint64_t(cur) * d->generator) % std::uint64_t(p))
                        : d->mul_digits(cur, d->generator);
    }
    d->exp_table = std::move(exp);
    d->log_table = std::move(lg);
  }

  std::lock_guard<std::mutex> lock(g_field_mutex);
  auto [it, inserted] = g_field_cache.try_emplace({p, e}, d);
  return FieldCtx(it->second);
}

FieldCtx FieldCtx::from_order(std::int64_t q) {
  if (q < 2) raise(ErrorCode::NotPrime, "field order must be at least 2");
  for (std::int64_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      int e = 0;
      std::int64_t v = q;
      while (v % p == 0) {
        v /= p;
        ++e;
      }
      if (v != 1) raise(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
      return make(p, e);
    }
  }
  return make(q, 1);
}

const FieldCtx::Data& FieldCtx::data() const {
  if (!d_) raise(ErrorCode::FieldMismatch, "empty field handle");
  return *d_;
}

std::int64_t FieldCtx::p() const { return data().p; }
int FieldCtx::e() const { return data().e; }
std::int64_t FieldCtx::q() const { return data().q; }
const std::vector<std::int64_t>& FieldCtx::modulus() const { return data().modulus; }

bool FieldCtx::same(const FieldCtx& o) const {
  return d_ && o.d_ && d_->p == o.d_->p && d_->e == o.d_->e;
}

FFElem FieldCtx::from_int(std::int64_t v) const {
  const auto& d = data();
  std::int64_t r = v % d.p;
  if (r < 0) r += d.p;
  return FFElem{std::uint32_t(r)};
}

FFElem FieldCtx::elem(std::uint32_t code) const {
  if (code >= std::uint64_t(data().q)) raise(ErrorCode::FieldMismatch, "element code outside field");
  return FFElem{code};
}

FFElem FieldCtx::add(FFElem a, FFElem b) const {
  const auto& d = data();
  if (d.e == 1) {
    std::uint64_t s = std::uint64_t(a.code) + b.code;
    if (s >= std::uint64_t(d.p)) s -= std::uint64_t(d.p);
    return FFElem{std::uint32_t(s)};
  }
  std::uint64_t A[32], B[32];
  d.decode(a.code, A);
  d.decode(b.code, B);
  std::uint64_t code = 0;
  for (int i = d.e - 1; i >= 0; --i) {
    std::uint64_t s = A[i] + B[i];
    if (s >= std::uint64_t(d.p)) s -= std::uint64_t(d.p);
    code = code * std::uint64_t(d.p) + s;
  }
  return FFElem{std::uint32_t(code)};
}

FFElem FieldCtx::neg(FFElem a) const {
  const auto& d = data();
  if (d.e == 1) return FFElem{a.code ? std::uint32_t(d.p - a.code) : 0};
  std::uint64_t A[32];
  d.decode(a.code, A);
  std::uint64_t code = 0;
  for (int i = d.e - 1; i >= 0; --i) code = code * std::uint64_t(d.p) + (A[i] ? std::uint64_t(d.p) - A[i] : 0);
  return FFElem{std::uint32_t(code)};
}

FFElem FieldCtx::sub(FFElem a, FFElem b) const { return add(a, neg(b)); }

FFElem FieldCtx::mul(FFElem a, FFElem b) const { return FFElem{data().mul_raw(a.code, b.code)}; }

FFElem FieldCtx::inv(FFElem a) const {
  const auto& d = data();
  if (a.code == 0) raise(ErrorCode::ZeroElement, "inverse of zero");
  if (d.has_tables()) return FFElem{d.exp_table[std::size_t(d.q - 1 - d.log_table[a.code])]};
  return FFElem{d.pow_raw(a.code, std::uint64_t(d.q - 2))};
}

FFElem FieldCtx::pow(FFElem a, const BigInt& k) const {
  const auto& d = data();
  if (k < 0) raise(ErrorCode::DoesNotDivide, "negative exponent; invert first");
  if (a.code == 0) return k == 0 ? one() : zero();
  BigInt r = k % (d.q - 1);
  return FFElem{d.pow_raw(a.code, r.convert_to<std::uint64_t>())};
}

std::int64_t FieldCtx::mult_order(FFElem a) const {
  const auto& d = data();
  if (a.code == 0) raise(ErrorCode::ZeroElement, "order of zero");
  std::int64_t m = d.q - 1;
  for (std::int64_t r : d.unit_factors) {
    while (m % r == 0 && d.pow_raw(a.code, std::uint64_t(m / r)) == 1) m /= r;
  }
  return m;
}

FFElem FieldCtx::primitive_root() const { return FFElem{data().generator}; }

bool FieldCtx::is_nth_power(FFElem a, const BigInt& n) const {
  const auto& d = data();
  if (n < 1) raise(ErrorCode::DoesNotDivide, "power index must be positive");
  if (a.code == 0) return true;
  BigInt g = big_gcd(n, BigInt(d.q - 1));
  std::int64_t gi = g.convert_to<std::int64_t>();
  return d.pow_raw(a.code, std::uint64_t((d.q - 1) / gi)) == 1;
}

std::vector<FFElem> FieldCtx::nth_roots_of_unity(std::int64_t n) const {
  const auto& d = data();
  if (n < 1 || (d.q - 1) % n != 0)
    raise(ErrorCode::DoesNotDivide, std::to_string(n) + " does not divide q-1 = " + std::to_string(d.q - 1));
  std::uint32_t z = d.pow_raw(d.generator, std::uint64_t((d.q - 1) / n));
  std::vector<FFElem> out;
  out.reserve(std::size_t(n));
  std::uint32_t cur = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    out.push_back(FFElem{cur});
    cur = d.mul_raw(cur, z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t FieldCtx::dlog(FFElem a) const {
  const auto& d = data();
  if (a.code == 0) raise(ErrorCode::ZeroElement, "log of zero");
  if (d.has_tables()) return d.log_table[a.code];
  std::uint32_t cur = 1;
  for (std::int64_t i = 0; i < d.q - 1; ++i) {
    if (cur == a.code) return i;
    cur = d.mul_raw(cur, d.generator);
  }
  raise(ErrorCode::ZeroElement, "discrete log not found");
}

FieldCtx::MaybeElem FieldCtx::nth_root(FFElem a, std::int64_t n) const {
  const auto& d = data();
  if (n < 1) raise(ErrorCode::DoesNotDivide, "power index must be positive");
  if (a.code == 0) return {true, zero()};
  std::int64_t m = d.q - 1;
  std::int64_t k = dlog(a);
  std::int64_t g = std::gcd(n, m);
  if (k % g != 0) return {};
  // Solve n*x = k (mod m); least nonnegative solution keeps the result
  // deterministic.
  std::int64_t n1 = (n / g) % (m / g), m1 = m / g, k1 = (k / g) % m1;
  // inverse of n1 mod m1
  std::int64_t t0 = 0, t1 = 1, r0 = m1, r1 = n1 % m1;
  while (r1) {
    std::int64_t qt = r0 / r1;
    r0 -= qt * r1;
    std::swap(r0, r1);
    t0 -= qt * t1;
    std::swap(t0, t1);
  }
  std::int64_t inv = ((t0 % m1) + m1) % m1;
  std::int64_t x = (k1 % m1) * inv % m1;
  return {true, FFElem{d.pow_raw(d.generator, std::uint64_t(x))}};
}

std::vector<std::int64_t> FieldCtx::coeffs(FFElem a) const {
  const auto& d = data();
  std::vector<std::int64_t> out(std::size_t(d.e));
  std::uint64_t v = a.code;
  for (int i = 0; i < d.e; ++i) {
    out[std::size_t(i)] = std::int64_t(v % std::uint64_t(d.p));
    v /= std::uint64_t(d.p);
  }
  return out;
}

FFElem FieldCtx::from_coeffs(const std::vector<std::int64_t>& c) const {
  const auto& d = data();
  if (c.size() > std::size_t(d.e)) raise(ErrorCode::ParseError, "too many coordinates for this field");
  std::uint64_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    std::int64_t r = c[i] % d.p;
    if (r < 0) r += d.p;
    code = code * std::uint64_t(d.p) + std::uint64_t(r);
  }
  return FFElem{std::uint32_t(code)};
}

std::string FieldCtx::to_string(FFElem a) const {
  const auto& d = data();
  if (d.e == 1) return std::to_string(a.code);
  std::ostringstream os;
  auto c = coeffs(a);
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ']';
  return os.str();
}

FFElem FieldCtx::parse(const std::string& text) const {
  const auto& d = data();
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '[') {
    ++pos;
    std::vector<std::int64_t> c;
    while (true) {
      skip_ws();
      std::size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) raise(ErrorCode::ParseError, "expected integer in coefficient list");
      c.push_back(std::stoll(text.substr(start, pos - start)));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      raise(ErrorCode::ParseError, "expected ',' or ']' in coefficient list");
    }
    skip_ws();
    if (pos != text.size()) raise(ErrorCode::ParseError, "trailing characters after element");
    return from_coeffs(c);
  }
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) raise(ErrorCode::ParseError, "expected field element");
  std::int64_t v = std::stoll(text.substr(start, pos - start));
  skip_ws();
  if (pos != text.size()) raise(ErrorCode::ParseError, "trailing characters after element");
  if (d.e > 1 && (v < 0 || v >= d.p))
    raise(ErrorCode::ParseError, "bare integers in extensions must lie in [0, p-1]");
  return from_int(v);
}

const std::vector<std::int64_t>& FieldCtx::unit_group_prime_factors() const { return data().unit_factors; }

std::string FieldCtx::describe() const {
  const auto& d = data();
  std::ostringstream os;
  os << d.p;
  if (d.e > 1) {
    os << '^' << d.e << " mod [";
    for (std::size_t i = 0; i < d.modulus.size(); ++i) {
      if (i) os << ',';
      os << d.modulus[i];
    }
    os << ']';
  }
  return os.str();
}

}  // namespace fqsym
