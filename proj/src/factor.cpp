#include "fqsym/factor.hpp"

#include <algorithm>
#include <random>

namespace fqsym {

namespace {

Poly derivative(const Poly& f) {
  const FieldCtx& F = f.field();
  if (f.is_zero() || f.is_constant()) return Poly::zero(F);
  std::vector<FFElem> c(std::size_t(f.deg()), FFElem{0});
  for (int i = 1; i <= f.deg(); ++i) c[std::size_t(i - 1)] = F.mul(f.coeff(i), F.from_int(i));
  return Poly::from_coeffs(F, std::move(c));
}

// f = g(x^p) -> g, taking p-th roots of coefficients (a^{q/p}).
Poly pth_root(const Poly& f) {
  const FieldCtx& F = f.field();
  std::int64_t p = F.p();
  BigInt root_exp = big_pow(BigInt(p), std::uint64_t(F.e() - 1));
  std::vector<FFElem> c;
  for (int i = 0; i <= f.deg(); i += int(p)) c.push_back(F.pow(f.coeff(i), root_exp));
  return Poly::from_coeffs(F, std::move(c));
}

Poly exact_div(const Poly& a, const Poly& b) { return divrem(a, b).quotient; }

// f monic; returns coprime squarefree pieces with their multiplicities.
void squarefree_decompose(const Poly& f, int outer_mult, std::vector<std::pair<Poly, int>>& out) {
  const FieldCtx& F = f.field();
  if (f.is_constant()) return;
  Poly d = derivative(f);
  std::int64_t p = F.p();
  if (d.is_zero()) {
    squarefree_decompose(pth_root(f), outer_mult * int(p), out);
    return;
  }
  Poly c = poly_gcd(f, d);
  Poly w = exact_div(f, c);
  int i = 1;
  while (!(w.is_constant())) {
    Poly y = poly_gcd(w, c);
    Poly z = exact_div(w, y);
    if (!z.is_constant()) out.push_back({z, i * outer_mult});
    ++i;
    w = y;
    c = exact_div(c, y);
  }
  if (!c.is_constant()) squarefree_decompose(pth_root(c), outer_mult * int(p), out);
}

// g squarefree monic; splits into products of factors of one degree each.
std::vector<std::pair<Poly, int>> distinct_degree_split(Poly g) {
  const FieldCtx& F = g.field();
  std::vector<std::pair<Poly, int>> out;
  Poly x = Poly::t(F);
  Poly h = poly_mod(x, g);
  int d = 0;
  while (!g.is_constant() && 2 * (d + 1) <= g.deg()) {
    ++d;
    h = powmod(h, BigInt(F.q()), g);
    Poly G = poly_gcd(h - x, g);
    if (!G.is_constant()) {
      out.push_back({G, d});
      g = exact_div(g, G);
      h = poly_mod(h, g);
    }
  }
  if (!g.is_constant()) out.push_back({g, g.deg()});
  return out;
}

Poly random_poly(const FieldCtx& F, int max_deg, std::mt19937_64& rng) {
  std::vector<FFElem> c(std::size_t(max_deg) + 1);
  for (auto& x : c) x = FFElem{std::uint32_t(rng() % std::uint64_t(F.q()))};
  return Poly::from_coeffs(F, std::move(c));
}

// g = product of irreducibles all of degree d.
void equal_degree_split(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  const FieldCtx& F = g.field();
  if (g.deg() == d) {
    out.push_back(g);
    return;
  }
  BigInt qd = big_pow(BigInt(F.q()), std::uint64_t(d));
  while (true) {
    Poly h = random_poly(F, g.deg() - 1, rng);
    if (h.is_zero()) continue;
    Poly u = poly_gcd(h, g);
    if (!u.is_constant() && u.deg() < g.deg()) {
      equal_degree_split(u, d, rng, out);
      equal_degree_split(exact_div(g, u), d, rng, out);
      return;
    }
    Poly w;
    if (F.p() == 2) {
      // trace map over GF(2): sum of h^{2^i} for i < e*d
      int steps = F.e() * d;
      Poly acc = poly_mod(h, g);
      Poly cur = acc;
      for (int i = 1; i < steps; ++i) {
        cur = poly_mod(cur * cur, g);
        acc = acc + cur;
      }
      w = acc;
    } else {
      w = powmod(h, (qd - 1) / 2, g) - Poly::one(F);
    }
    Poly v = poly_gcd(w.is_zero() ? g : w, g);
    if (!v.is_constant() && v.deg() < g.deg()) {
      equal_degree_split(v, d, rng, out);
      equal_degree_split(exact_div(g, v), d, rng, out);
      return;
    }
  }
}

}  // namespace

Poly Factorization::reassemble(const FieldCtx& f) const {
  Poly acc = Poly::constant(f, unit);
  for (const auto& [P, mult] : factors)
    for (int i = 0; i < mult; ++i) acc = acc * P;
  return acc;
}

Factorization factor(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) raise(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  Factorization out;
  out.unit = f.leading();
  if (f.is_constant()) return out;

  Poly g = f.monic();
  std::mt19937_64 rng(seed);

  std::vector<std::pair<Poly, int>> squarefree;
  squarefree_decompose(g, 1, squarefree);
  for (const auto& [piece, mult] : squarefree) {
    for (const auto& [block, d] : distinct_degree_split(piece)) {
      std::vector<Poly> irreducibles;
      equal_degree_split(block, d, rng, irreducibles);
      for (const Poly& P : irreducibles) out.factors.push_back({P, mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return Poly::canonical_less(a.first, b.first); });
  return out;
}

}  // namespace fqsym
