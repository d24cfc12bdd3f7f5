#include "fqsym/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fqsym {

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == FFElem{0}) coeffs_.pop_back();
}

Poly Poly::from_coeffs(const FieldCtx& f, std::vector<FFElem> c) { return Poly(f, std::move(c)); }

Poly Poly::from_ints(const FieldCtx& f, const std::vector<std::int64_t>& c) {
  std::vector<FFElem> v;
  v.reserve(c.size());
  for (auto x : c) v.push_back(f.from_int(x));
  return Poly(f, std::move(v));
}

Poly Poly::monic_from_code(const FieldCtx& f, int degree, std::int64_t code) {
  std::vector<FFElem> c(std::size_t(degree) + 1);
  for (int i = 0; i < degree; ++i) {
    c[std::size_t(i)] = FFElem{std::uint32_t(code % f.q())};
    code /= f.q();
  }
  c[std::size_t(degree)] = f.one();
  return Poly(f, std::move(c));
}

int Poly::deg() const {
  if (coeffs_.empty()) raise(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
  return int(coeffs_.size()) - 1;
}

FFElem Poly::leading() const {
  if (coeffs_.empty()) raise(ErrorCode::ZeroPolynomial, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero()) raise(ErrorCode::ZeroPolynomial, "cannot normalize the zero polynomial");
  if (is_monic()) return *this;
  return scaled(field_.inv(leading()));
}

FFElem Poly::eval(FFElem x) const {
  const FieldCtx& f = field_;
  FFElem acc{0};
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs_[i]);
  return acc;
}

namespace {
const FieldCtx& common_field(const Poly& a, const Poly& b) {
  if (a.field().valid() && b.field().valid()) {
    if (!a.field().same(b.field())) raise(ErrorCode::FieldMismatch, "operands over different fields");
    return a.field();
  }
  if (a.field().valid()) return a.field();
  if (b.field().valid()) return b.field();
  raise(ErrorCode::FieldMismatch, "operands carry no field");
}
}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  const FieldCtx& f = common_field(a, b);
  std::vector<FFElem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), FFElem{0});
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(int(i)), b.coeff(int(i)));
  return Poly(f, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  const FieldCtx& f = common_field(a, b);
  std::vector<FFElem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), FFElem{0});
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(int(i)), b.coeff(int(i)));
  return Poly(f, std::move(c));
}

Poly operator-(const Poly& a) {
  const FieldCtx& f = a.field();
  std::vector<FFElem> c(a.coeffs_);
  for (auto& x : c) x = f.neg(x);
  return Poly(f, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  const FieldCtx& f = common_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly::zero(f);
  std::vector<FFElem> c(a.coeffs_.size() + b.coeffs_.size() - 1, FFElem{0});
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == FFElem{0}) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return Poly(f, std::move(c));
}

Poly Poly::scaled(FFElem c) const {
  std::vector<FFElem> v(coeffs_);
  for (auto& x : v) x = field_.mul(x, c);
  return Poly(field_, std::move(v));
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<FFElem> v(coeffs_.size() + std::size_t(k), FFElem{0});
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + k);
  return Poly(field_, std::move(v));
}

bool Poly::canonical_less(const Poly& a, const Poly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  }
  return false;
}

DivRem divrem(const Poly& f, const Poly& g) {
  const FieldCtx& F = common_field(f, g);
  if (g.is_zero()) raise(ErrorCode::DivisionByZeroPoly, "division by the zero polynomial");
  if (f.is_zero() || f.coeffs().size() < g.coeffs().size()) return {Poly::zero(F), f.is_zero() ? Poly::zero(F) : f};
  std::vector<FFElem> r(f.coeffs());
  int dg = g.deg();
  FFElem lg_inv = F.inv(g.leading());
  std::vector<FFElem> q(r.size() - std::size_t(dg), FFElem{0});
  for (std::size_t i = r.size(); i-- > std::size_t(dg);) {
    if (r[i] == FFElem{0}) continue;
    FFElem c = F.mul(r[i], lg_inv);
    q[i - std::size_t(dg)] = c;
    for (int j = 0; j <= dg; ++j) {
      std::size_t k = i - std::size_t(dg) + std::size_t(j);
      r[k] = F.sub(r[k], F.mul(c, g.coeff(j)));
    }
  }
  return {Poly::from_coeffs(F, std::move(q)), Poly::from_coeffs(F, std::move(r))};
}

Poly poly_mod(const Poly& f, const Poly& g) { return divrem(f, g).remainder; }

Poly poly_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) raise(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a.monic();
}

Bezout poly_bezout(const Poly& f, const Poly& g) {
  const FieldCtx& F = common_field(f, g);
  if (f.is_zero() && g.is_zero()) raise(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  Poly r0 = f, r1 = g;
  Poly u0 = Poly::one(F), u1 = Poly::zero(F);
  Poly v0 = Poly::zero(F), v1 = Poly::one(F);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = r1;
    r1 = r;
    Poly u2 = u0 - q * u1;
    u0 = u1;
    u1 = u2;
    Poly v2 = v0 - q * v1;
    v0 = v1;
    v1 = v2;
  }
  FFElem scale = F.inv(r0.leading());
  return {r0.scaled(scale), u0.scaled(scale), v0.scaled(scale)};
}

namespace {

// a := a mod b on raw coefficient stacks (no trailing zeros, b nonempty)
void flat_mod(const FieldCtx& F, std::vector<FFElem>& a, const std::vector<FFElem>& b) {
  FFElem binv = F.inv(b.back());
  while (a.size() >= b.size()) {
    FFElem c = F.mul(a.back(), binv);
    std::size_t shift = a.size() - b.size();
    if (c != FFElem{0}) {
      for (std::size_t j = 0; j + 1 < b.size(); ++j) a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
    }
    a.pop_back();
    while (!a.empty() && a.back() == FFElem{0}) a.pop_back();
  }
}

}  // namespace

bool coprime(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) raise(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  const FieldCtx& F = common_field(f, g);
  static thread_local std::vector<FFElem> a, b;
  a = f.coeffs();
  b = g.coeffs();
  while (!b.empty()) {
    flat_mod(F, a, b);
    std::swap(a, b);
  }
  return a.size() == 1;
}

namespace {

// Square-and-multiply against a monic modulus on thread-local scratch, so
// the hot loops of the scans allocate only for the returned value.  The
// generic path below allocates per step and is kept for non-monic moduli.
Poly powmod_monic(const Poly& f, const BigInt& k, const Poly& P) {
  const FieldCtx& F = P.field();
  const std::size_t d = std::size_t(P.deg());
  static thread_local std::vector<FFElem> base, res, tmp;

  // reduce f into `base` in place (P monic)
  base.assign(std::max(f.coeffs().size(), d), FFElem{0});
  std::copy(f.coeffs().begin(), f.coeffs().end(), base.begin());
  for (std::size_t i = base.size(); i-- > d;) {
    FFElem c = base[i];
    if (c == FFElem{0}) continue;
    base[i] = FFElem{0};
    for (std::size_t j = 0; j < d; ++j)
      base[i - d + j] = F.sub(base[i - d + j], F.mul(c, P.coeff(int(j))));
  }
  base.resize(d);

  res.assign(d, FFElem{0});
  res[0] = F.one();
  tmp.assign(2 * d, FFElem{0});

  auto mul_reduce = [&](const std::vector<FFElem>& a, const std::vector<FFElem>& b,
                        std::vector<FFElem>& out) {
    std::fill(tmp.begin(), tmp.end(), FFElem{0});
    for (std::size_t i = 0; i < d; ++i) {
      if (a[i] == FFElem{0}) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (b[j] == FFElem{0}) continue;
        tmp[i + j] = F.add(tmp[i + j], F.mul(a[i], b[j]));
      }
    }
    for (std::size_t i = 2 * d - 1; i >= d && i < tmp.size(); --i) {
      FFElem c = tmp[i];
      if (c == FFElem{0}) continue;
      tmp[i] = FFElem{0};
      for (std::size_t j = 0; j < d; ++j)
        tmp[i - d + j] = F.sub(tmp[i - d + j], F.mul(c, P.coeff(int(j))));
    }
    std::copy(tmp.begin(), tmp.begin() + std::ptrdiff_t(d), out.begin());
  };

  std::size_t bits = big_bits(k);
  for (std::size_t i = bits; i-- > 0;) {
    mul_reduce(res, res, res);
    if (big_bit(k, i)) mul_reduce(res, base, res);
  }
  return Poly::from_coeffs(F, std::vector<FFElem>(res));
}

}  // namespace

Poly powmod(const Poly& f, const BigInt& k, const Poly& P) {
  if (P.is_zero()) raise(ErrorCode::DivisionByZeroPoly, "zero modulus");
  const FieldCtx& F = common_field(f, P);
  if (!P.is_constant() && P.is_monic()) return powmod_monic(f, k, P);
  Poly base = poly_mod(f, P);
  Poly result = poly_mod(Poly::one(F), P);
  std::size_t bits = big_bits(k);
  for (std::size_t i = bits; i-- > 0;) {
    result = poly_mod(result * result, P);
    if (big_bit(k, i)) result = poly_mod(result * base, P);
  }
  return result;
}

Poly poly_pow(const Poly& f, std::uint64_t k) {
  Poly result = Poly::one(f.field());
  Poly base = f;
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

bool is_irreducible(const Poly& f) {
  if (f.is_zero() || f.is_constant())
    raise(ErrorCode::ConstantPolynomial, "irreducibility needs degree >= 1");
  int m = f.deg();
  if (m == 1) return true;
  const FieldCtx& F = f.field();
  BigInt q = F.q();
  Poly x = Poly::t(F);
  // gcd(x^{q^{m/r}} - x, f) = 1 for every prime r | m
  std::vector<int> primes_of_m;
  {
    int mm = m;
    for (int d = 2; d * d <= mm; ++d)
      if (mm % d == 0) {
        primes_of_m.push_back(d);
        while (mm % d == 0) mm /= d;
      }
    if (mm > 1) primes_of_m.push_back(mm);
  }
  for (int r : primes_of_m) {
    Poly h = powmod(x, big_pow(q, std::uint64_t(m / r)), f);
    if (!coprime(h - x, f)) return false;
  }
  Poly h = powmod(x, big_pow(q, std::uint64_t(m)), f);
  return (h - x).is_zero();
}

FFElem resultant(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) raise(ErrorCode::ZeroPolynomial, "resultant of the zero polynomial");
  const FieldCtx& F = common_field(f, g);
  static thread_local std::vector<FFElem> a, b;
  a = f.coeffs();
  b = g.coeffs();
  FFElem acc = F.one();
  while (true) {
    if (a.size() == 1) return F.mul(acc, F.pow(a[0], BigInt(b.size() - 1)));
    if (b.size() == 1) return F.mul(acc, F.pow(b[0], BigInt(a.size() - 1)));
    if (a.size() > b.size()) {
      std::swap(a, b);
      if (((a.size() - 1) * (b.size() - 1)) % 2 != 0) acc = F.neg(acc);
    }
    FFElem lead_a = a.back();
    std::size_t deg_b = b.size() - 1;
    flat_mod(F, b, a);
    if (b.empty()) return F.zero();
    acc = F.mul(acc, F.pow(lead_a, BigInt(deg_b - (b.size() - 1))));
    // deg b < deg a now; the next iteration swaps with the sign factor
  }
}

bool frobenius_substitution_check(const Poly& Q, int j) {
  const FieldCtx& F = Q.field();
  if (Q.is_zero()) return true;
  BigInt qj = big_pow(BigInt(F.q()), std::uint64_t(j));
  if (!Q.is_constant() && qj * Q.deg() > kMaxEnumSize)
    raise(ErrorCode::SizeExceeded, "q^j too large for a dense expansion");
  std::uint64_t step = qj.convert_to<std::uint64_t>();
  Poly lhs = poly_pow(Q, step);
  std::vector<FFElem> spread;
  if (!Q.is_zero()) {
    spread.assign(std::size_t(Q.deg()) * step + 1, FFElem{0});
    for (int i = 0; i <= Q.deg(); ++i) spread[std::size_t(i) * step] = Q.coeff(i);
  }
  Poly rhs = Poly::from_coeffs(F, std::move(spread));
  return lhs == rhs;
}

QuotientRing::QuotientRing(Poly modulus, bool check_irreducible) : modulus_(std::move(modulus)) {
  if (modulus_.is_zero() || modulus_.is_constant())
    raise(ErrorCode::ConstantPolynomial, "quotient modulus must have positive degree");
  if (!modulus_.is_monic()) raise(ErrorCode::NotMonic, "quotient modulus must be monic");
  if (check_irreducible && !is_irreducible(modulus_))
    raise(ErrorCode::NotIrreducible, "quotient modulus must be irreducible");
  BigInt n = size() - 1;
  if (n <= (BigInt(1) << 32)) {
    BigInt m = n;
    for (BigInt d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        int mult = 0;
        while (m % d == 0) {
          m /= d;
          ++mult;
        }
        size_minus_one_factors_.push_back({d, mult});
      }
    }
    if (m > 1) size_minus_one_factors_.push_back({m, 1});
  }
}

BigInt QuotientRing::size() const { return big_pow(BigInt(base().q()), std::uint64_t(ext_degree())); }

Poly QuotientRing::inv(const Poly& a) const {
  Poly r = reduce(a);
  if (r.is_zero()) raise(ErrorCode::ZeroElement, "inverse of zero residue");
  auto bz = poly_bezout(r, modulus_);
  if (!(bz.d.is_constant() && bz.d.coeff(0) == base().one()))
    raise(ErrorCode::NotCoprime, "residue shares a factor with the modulus");
  return reduce(bz.u);
}

Poly QuotientRing::element(const BigInt& code) const {
  BigInt v = code;
  std::vector<FFElem> c;
  c.reserve(std::size_t(ext_degree()));
  for (int i = 0; i < ext_degree(); ++i) {
    c.push_back(FFElem{(v % base().q()).convert_to<std::uint32_t>()});
    v /= base().q();
  }
  return Poly::from_coeffs(base(), std::move(c));
}

BigInt QuotientRing::code_of(const Poly& reduced) const {
  BigInt code = 0;
  for (int i = ext_degree() - 1; i >= 0; --i) code = code * base().q() + reduced.coeff(i).code;
  return code;
}

Poly QuotientRing::generator() const {
  if (size_minus_one_factors_.empty())
    raise(ErrorCode::SizeExceeded, "unit group too large to factor for generator search");
  BigInt n = size() - 1;
  for (BigInt code = 1;; ++code) {
    Poly cand = element(code);
    bool full = true;
    for (const auto& [r, mult] : size_minus_one_factors_) {
      if (pow(cand, n / r) == Poly::one(base())) {
        full = false;
        break;
      }
    }
    if (full) return cand;
  }
}

BigInt QuotientRing::unit_order(const Poly& a) const {
  Poly r = reduce(a);
  if (r.is_zero()) raise(ErrorCode::ZeroElement, "order of zero residue");
  if (size_minus_one_factors_.empty())
    raise(ErrorCode::SizeExceeded, "unit group too large to factor for order computation");
  BigInt m = size() - 1;
  for (const auto& [d, mult] : size_minus_one_factors_) {
    for (int i = 0; i < mult && m % d == 0; ++i) {
      if (pow(r, m / d) == Poly::one(base()))
        m /= d;
      else
        break;
    }
  }
  return m;
}

bool verify_root_orbit(const Poly& P) {
  if (P.is_zero() || P.is_constant() || !P.is_monic() || !is_irreducible(P))
    raise(ErrorCode::NotIrreducible, "root orbit check needs a monic irreducible input");
  const FieldCtx& F = P.field();
  int d = P.deg();
  QuotientRing R(P, false);
  Poly a = R.reduce(Poly::t(F));
  std::vector<Poly> conj;
  conj.reserve(std::size_t(d));
  Poly cur = a;
  for (int i = 0; i < d; ++i) {
    conj.push_back(cur);
    cur = R.pow(cur, BigInt(F.q()));
  }
  for (std::size_t i = 0; i < conj.size(); ++i)
    for (std::size_t j = i + 1; j < conj.size(); ++j)
      if (conj[i] == conj[j]) return false;
  // after d steps Frobenius must return to the start
  if (cur != a) return false;
  // expand prod (x - c_i); coefficients live in the quotient ring
  std::vector<Poly> prod{Poly::one(F)};
  for (const Poly& c : conj) {
    std::vector<Poly> next(prod.size() + 1, Poly::zero(F));
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i + 1] = R.reduce(next[i + 1] + prod[i]);
      next[i] = R.reduce(next[i] - R.mul(prod[i], c));
    }
    prod = std::move(next);
  }
  if (prod.size() != std::size_t(d) + 1) return false;
  for (int i = 0; i <= d; ++i) {
    const Poly& coef = prod[std::size_t(i)];
    if (!coef.is_zero() && !coef.is_constant()) return false;  // must land in the base field
    FFElem v = coef.is_zero() ? F.zero() : coef.coeff(0);
    if (v != P.coeff(i)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// text form

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  const FieldCtx& f = field_;
  std::ostringstream os;
  bool first = true;
  for (int k = deg(); k >= 0; --k) {
    FFElem c = coeff(k);
    if (c == FFElem{0}) continue;
    if (!first) os << '+';
    first = false;
    bool unit = (c == f.one());
    if (k == 0) {
      os << f.to_string(c);
    } else {
      if (!unit) os << f.to_string(c) << '*';
      os << 't';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::string Poly::to_compact() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << field_.to_string(coeffs_[i]);
  }
  os << ']';
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    ws();
    return pos >= s.size();
  }
  char peek() {
    ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

std::int64_t parse_int(Cursor& c) {
  c.ws();
  std::size_t start = c.pos;
  if (c.pos < c.s.size() && (c.s[c.pos] == '-' || c.s[c.pos] == '+')) ++c.pos;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
  if (c.pos == start || (c.pos == start + 1 && !std::isdigit(static_cast<unsigned char>(c.s[start]))))
    raise(ErrorCode::ParseError, "expected integer at position " + std::to_string(start));
  return std::stoll(c.s.substr(start, c.pos - start));
}

FFElem parse_elem(const FieldCtx& f, Cursor& c) {
  if (c.peek() == '[') {
    c.eat('[');
    std::vector<std::int64_t> v;
    if (!c.eat(']')) {
      while (true) {
        v.push_back(parse_int(c));
        if (c.eat(',')) continue;
        if (c.eat(']')) break;
        raise(ErrorCode::ParseError, "expected ',' or ']' in coefficient");
      }
    }
    return f.from_coeffs(v);
  }
  return f.from_int(parse_int(c));
}

}  // namespace

Poly Poly::parse(const FieldCtx& f, const std::string& text) {
  Cursor c{text};
  c.ws();
  // compact form: for e = 1 any leading '['; for e > 1 a '[' followed by '['
  // or ']' (a bare "[a0,...]" is a single extension-field coefficient).
  if (c.peek() == '[') {
    std::size_t save = c.pos;
    c.eat('[');
    char inner = c.peek();
    c.pos = save;
    bool compact = (f.e() == 1) || inner == '[' || inner == ']';
    if (compact) {
      c.eat('[');
      std::vector<FFElem> coeffs;
      if (!c.eat(']')) {
        while (true) {
          coeffs.push_back(parse_elem(f, c));
          if (c.eat(',')) continue;
          if (c.eat(']')) break;
          raise(ErrorCode::ParseError, "expected ',' or ']' in compact polynomial");
        }
      }
      if (!c.eof()) raise(ErrorCode::ParseError, "trailing characters after polynomial");
      return Poly::from_coeffs(f, std::move(coeffs));
    }
  }

  Poly acc = Poly::zero(f);
  bool first = true;
  while (!c.eof()) {
    bool negate = false;
    if (c.eat('+')) {
    } else if (c.eat('-')) {
      negate = true;
    } else if (!first) {
      raise(ErrorCode::ParseError, "expected '+' or '-' between terms");
    }
    first = false;
    c.ws();

    FFElem coeff = f.one();
    bool have_coeff = false;
    char ch = c.peek();
    if (ch == '[' || std::isdigit(static_cast<unsigned char>(ch))) {
      coeff = parse_elem(f, c);
      have_coeff = true;
    }
    c.eat('*');
    int power = 0;
    if (c.peek() == 't') {
      c.eat('t');
      power = 1;
      if (c.eat('^')) {
        power = int(parse_int(c));
      } else if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        power = int(parse_int(c));
      }
      if (power < 0) raise(ErrorCode::ParseError, "negative exponent");
    } else if (!have_coeff) {
      raise(ErrorCode::ParseError, "expected term at position " + std::to_string(c.pos));
    }
    if (negate) coeff = f.neg(coeff);
    acc = acc + Poly::constant(f, coeff).shifted(power);
  }
  return acc;
}

}  // namespace fqsym
