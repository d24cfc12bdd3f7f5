#include "fqsym/family.hpp"

#include <algorithm>
#include <random>

#include "fqsym/localglobal.hpp"
#include "fqsym/primes.hpp"

namespace fqsym {

void require_same_indices(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a != b) raise(ErrorCode::IndexMismatch, "families live over different index sets");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

IntFamily zip(const IntFamily& a, const IntFamily& b, const std::function<BigInt(const BigInt&, const BigInt&)>& op) {
  a.check_nonempty();
  b.check_nonempty();
  require_same_indices(a.indices, b.indices);
  IntFamily out{a.indices, {}};
  out.values.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.values.push_back(op(a.values[i], b.values[i]));
  return out;
}

}  // namespace

IntFamily family_add(const IntFamily& a, const IntFamily& b) {
  return zip(a, b, [](const BigInt& x, const BigInt& y) { return x + y; });
}

IntFamily family_mul(const IntFamily& a, const IntFamily& b) {
  return zip(a, b, [](const BigInt& x, const BigInt& y) { return x * y; });
}

IntFamily family_pow(const IntFamily& a, const IntFamily& b) {
  return zip(a, b, [](const BigInt& x, const BigInt& y) {
    if (y < 0) raise(ErrorCode::DoesNotDivide, "negative exponent in componentwise power");
    if (y > (std::int64_t(1) << 20)) raise(ErrorCode::SizeExceeded, "componentwise exponent too large");
    return big_pow(x, y.convert_to<std::uint64_t>());
  });
}

FamilyComparison family_cmp(const IntFamily& a, const IntFamily& b) {
  a.check_nonempty();
  b.check_nonempty();
  require_same_indices(a.indices, b.indices);
  FamilyComparison out;
  bool all_lt = true, all_eq = true, all_gt = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Ordering o = a.values[i] < b.values[i]   ? Ordering::Less
                 : a.values[i] == b.values[i] ? Ordering::Equal
                                              : Ordering::Greater;
    out.per_index.push_back(o);
    all_lt &= o == Ordering::Less;
    all_eq &= o == Ordering::Equal;
    all_gt &= o == Ordering::Greater;
  }
  out.summary = all_lt   ? FamilyComparison::Summary::AllLess
                : all_eq ? FamilyComparison::Summary::AllEqual
                : all_gt ? FamilyComparison::Summary::AllGreater
                         : FamilyComparison::Summary::Mixed;
  return out;
}

IntFamily family_gcd(const IntFamily& a, const IntFamily& b) {
  a.check_nonempty();
  b.check_nonempty();
  require_same_indices(a.indices, b.indices);
  IntFamily out{a.indices, {}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.values[i] == 0 && b.values[i] == 0)
      raise(ErrorCode::BothZeroAtIndex, "gcd(0, 0) at index " + a.indices[i]);
    out.values.push_back(big_gcd(a.values[i], b.values[i]));
  }
  return out;
}

FamilyBezout family_bezout(const IntFamily& a, const IntFamily& b) {
  a.check_nonempty();
  b.check_nonempty();
  require_same_indices(a.indices, b.indices);
  FamilyBezout out{{a.indices, {}}, {a.indices, {}}, {a.indices, {}}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.values[i] == 0 && b.values[i] == 0)
      raise(ErrorCode::BothZeroAtIndex, "gcd(0, 0) at index " + a.indices[i]);
    auto [d, x, y] = big_bezout(a.values[i], b.values[i]);
    out.d.values.push_back(d);
    out.e.values.push_back(x);
    out.f.values.push_back(y);
  }
  return out;
}

IntFamily family_min(const IndexFamily<std::set<BigInt>>& sets) {
  sets.check_nonempty();
  IntFamily out{sets.indices, {}};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets.values[i].empty()) raise(ErrorCode::EmptyAtIndex, "empty set at index " + sets.indices[i]);
    out.values.push_back(*sets.values[i].begin());
  }
  return out;
}

IntFamily FamilyCtx::orders_minus_one() const {
  IntFamily out{indices, {}};
  for (const auto& f : fields) out.values.push_back(BigInt(f.q() - 1));
  return out;
}

namespace {
FamilyCtx ctx_from_orders(const std::vector<std::int64_t>& qs) {
  FamilyCtx ctx;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    ctx.indices.push_back("s" + std::to_string(i + 1));
    ctx.fields.push_back(FieldCtx::from_order(qs[i]));
  }
  return ctx;
}
}  // namespace

FamilyCtx make_preset(const std::string& name) {
  if (name == "constant-q") return ctx_from_orders({5, 5, 5, 5, 5, 5});
  if (name == "growing-powers-of-p") return ctx_from_orders({3, 9, 27, 81, 243});
  if (name == "distinct-primes") return ctx_from_orders({3, 5, 7, 11, 13});
  raise(ErrorCode::BadConfig, "unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() { return {"constant-q", "growing-powers-of-p", "distinct-primes"}; }

IntFamily default_power_family(const FamilyCtx& ctx, std::int64_t hint) {
  IntFamily out{ctx.indices, {}};
  for (const auto& f : ctx.fields) {
    std::int64_t best = 1;
    for (std::int64_t d = 1; d <= hint; ++d)
      if ((f.q() - 1) % d == 0) best = d;
    out.values.push_back(BigInt(best));
  }
  return out;
}

IntFamily family_order(const IndexFamily<FFElem>& a, const FamilyCtx& ctx) {
  a.check_nonempty();
  require_same_indices(a.indices, ctx.indices);
  IntFamily out{a.indices, {}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.values[i] == FFElem{0}) raise(ErrorCode::ZeroAtIndex, "zero element at index " + a.indices[i]);
    out.values.push_back(BigInt(ctx.fields[i].mult_order(a.values[i])));
  }
  return out;
}

IndexFamily<SymbolValue> family_symbol(const IndexFamily<Poly>& alpha, const IndexFamily<Poly>& P,
                                       const IntFamily& n, const FamilyCtx& ctx) {
  alpha.check_nonempty();
  P.check_nonempty();
  n.check_nonempty();
  require_same_indices(alpha.indices, P.indices);
  require_same_indices(alpha.indices, n.indices);
  require_same_indices(alpha.indices, ctx.indices);
  IndexFamily<SymbolValue> out{alpha.indices, {}};
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    try {
      std::int64_t ni = n.values[i].convert_to<std::int64_t>();
      out.values.push_back(residue_symbol_prime(alpha.values[i], P.values[i], ni));
    } catch (const Error& err) {
      raise(err.code(), std::string("at index ") + alpha.indices[i] + ": " + err.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// transfer catalog

namespace {

struct EvalInput {
  FieldCtx field;
  std::int64_t n = 1;
  std::uint64_t seed = 0;
  int max_degree = 2;
  int trials = 25;
  std::uint64_t max_cases = 2000;
  bool corrupt = false;
};

Poly random_nonzero_poly(const FieldCtx& F, int max_deg, std::mt19937_64& rng) {
  while (true) {
    int d = int(rng() % std::uint64_t(max_deg + 1));
    std::vector<FFElem> c(std::size_t(d) + 1);
    for (auto& x : c) x = FFElem{std::uint32_t(rng() % std::uint64_t(F.q()))};
    Poly p = Poly::from_coeffs(F, std::move(c));
    if (!p.is_zero()) return p;
  }
}

// rejection sampling keeps this cheap even when the field is large
Poly random_prime(const FieldCtx& F, int max_deg, std::mt19937_64& rng) {
  int d = 1 + int(rng() % std::uint64_t(max_deg));
  while (true) {
    std::vector<FFElem> c(std::size_t(d) + 1);
    for (int i = 0; i < d; ++i) c[std::size_t(i)] = FFElem{std::uint32_t(rng() % std::uint64_t(F.q()))};
    c[std::size_t(d)] = F.one();
    Poly cand = Poly::from_coeffs(F, std::move(c));
    if (is_irreducible(cand)) return cand;
  }
}

// A nonidentity perturbation inside mu_n when possible, else +1 shift;
// applied only under fault injection.
FFElem perturb(const FieldCtx& F, FFElem v, std::int64_t n) {
  if (n > 1) {
    FFElem zeta = F.pow(F.primitive_root(), BigInt((F.q() - 1) / n));
    return F.mul(v, zeta);
  }
  return F.add(v, F.one());
}

IndexOutcome eval_fermat_little(const EvalInput& in) {
  IndexOutcome out;
  std::mt19937_64 rng(in.seed);
  for (int t = 0; t < in.trials; ++t) {
    Poly P = random_prime(in.field, std::max(1, in.max_degree), rng);
    Poly alpha = random_nonzero_poly(in.field, P.deg() + 2, rng);
    if (poly_mod(alpha, P).is_zero()) continue;
    ++out.cases;
    BigInt exponent = big_pow(BigInt(in.field.q()), std::uint64_t(P.deg())) - 1;
    Poly power = powmod(alpha, exponent, P);
    if (in.corrupt && out.cases == 1) power = power + Poly::one(in.field);
    if (power != Poly::one(in.field)) {
      out.ok = false;
      out.witness = "alpha=" + alpha.to_string() + " P=" + P.to_string();
      return out;
    }
  }
  out.ok = true;
  return out;
}

IndexOutcome eval_reciprocity_monic(const EvalInput& in) {
  IndexOutcome out;
  std::vector<Poly> primes;
  std::size_t per_degree = std::size_t(in.max_cases) + 1;
  for (int d = 1; d <= in.max_degree; ++d)
    for (const Poly& P : first_monic_primes(in.field, d, per_degree)) primes.push_back(P);
  bool first = true;
  for (const Poly& P : primes) {
    for (const Poly& Q : primes) {
      if (P == Q) continue;
      if (out.cases >= in.max_cases) {
        out.ok = true;
        return out;
      }
      ++out.cases;
      MonicReciprocityReport rep = check_reciprocity_monic(P, Q, in.n);
      bool holds = rep.holds;
      if (in.corrupt && first) {
        holds = rep.lhs.value == in.field.mul(rep.sign_factor, perturb(in.field, rep.rhs.value, in.n));
        first = false;
      }
      if (!holds) {
        out.ok = false;
        out.witness = "P=" + P.to_string() + " Q=" + Q.to_string();
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

IndexOutcome eval_general_reciprocity(const EvalInput& in) {
  IndexOutcome out;
  std::mt19937_64 rng(in.seed);
  for (int t = 0; t < in.trials; ++t) {
    Poly a = random_nonzero_poly(in.field, in.max_degree + 1, rng);
    Poly b = random_nonzero_poly(in.field, in.max_degree + 1, rng);
    if (a.is_zero() || b.is_zero() || !coprime(a, b)) continue;
    ++out.cases;
    GeneralReciprocityReport rep = check_general_reciprocity(a, b, in.n);
    bool holds = rep.holds;
    if (in.corrupt && out.cases == 1) holds = perturb(in.field, rep.lhs, in.n) == rep.rhs;
    if (!holds) {
      out.ok = false;
      out.witness = "alpha=" + a.to_string() + " beta=" + b.to_string();
      return out;
    }
  }
  out.ok = true;
  return out;
}

IndexOutcome eval_resultant_equivalence(const EvalInput& in) {
  IndexOutcome out;
  std::mt19937_64 rng(in.seed);
  for (int t = 0; t < in.trials; ++t) {
    Poly a = random_nonzero_poly(in.field, in.max_degree + 1, rng);
    Poly b = random_nonzero_poly(in.field, in.max_degree + 1, rng).monic();
    if (b.is_constant() || !coprime(a, b)) continue;
    ++out.cases;
    SymbolValue via_res = symbol_via_resultant(a, b, in.n);
    SymbolValue via_exp = residue_symbol(a, b, in.n);
    if (in.corrupt && out.cases == 1) via_res.value = perturb(in.field, via_res.value, in.n);
    if (!(via_res == via_exp)) {
      out.ok = false;
      out.witness = "alpha=" + a.to_string() + " beta=" + b.to_string();
      return out;
    }
  }
  out.ok = true;
  return out;
}

IndexOutcome eval_root_orbit(const EvalInput& in) {
  IndexOutcome out;
  bool first = true;
  for (int d = 1; d <= in.max_degree; ++d) {
    for (const Poly& P : first_monic_primes(in.field, d, std::size_t(in.max_cases) + 1)) {
      if (out.cases >= in.max_cases) {
        out.ok = true;
        return out;
      }
      ++out.cases;
      bool ok = verify_root_orbit(P);
      if (in.corrupt && first) {
        ok = false;
        first = false;
      }
      if (!ok) {
        out.ok = false;
        out.witness = "P=" + P.to_string();
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

IndexOutcome eval_symbol_power_criterion(const EvalInput& in) {
  IndexOutcome out;
  const FieldCtx& F = in.field;
  int dmax = std::min(in.max_degree, 2);
  bool first = true;
  for (int d = 1; d <= dmax; ++d) {
    if (big_pow(BigInt(F.q()), std::uint64_t(d)) > 4096) continue;  // oracle enumerates all residues
    for (const Poly& P : first_monic_primes(F, d, 8)) {
      QuotientRing R(P, false);
      BigInt count = R.size();
      // the n-th powers of the unit group, by enumeration
      std::set<std::string> powers;
      for (BigInt code = 1; code < count; ++code)
        powers.insert(R.pow(R.element(code), BigInt(in.n)).to_string());
      for (BigInt code = 1; code < count; ++code) {
        if (out.cases >= in.max_cases) {
          out.ok = true;
          return out;
        }
        Poly alpha = R.element(code);
        ++out.cases;
        bool symbol_one = residue_symbol_prime_trusted(alpha, P, in.n).value == F.one();
        bool enumerated = powers.count(alpha.to_string()) > 0;
        if (in.corrupt && first) {
          symbol_one = !symbol_one;
          first = false;
        }
        if (symbol_one != enumerated) {
          out.ok = false;
          out.witness = "alpha=" + alpha.to_string() + " P=" + P.to_string();
          return out;
        }
      }
    }
  }
  out.ok = true;
  return out;
}

IndexOutcome eval_gcd_componentwise(const EvalInput& in) {
  IndexOutcome out;
  std::mt19937_64 rng(in.seed);
  for (int t = 0; t < in.trials; ++t) {
    BigInt a = BigInt(rng() % 100000) - 50000;
    BigInt b = BigInt(rng() % 100000) - 50000;
    if (a == 0 && b == 0) continue;
    ++out.cases;
    auto [d, x, y] = big_bezout(a, b);
    BigInt lhs = a * x + b * y;
    if (in.corrupt && out.cases == 1) lhs += 1;
    bool ok = lhs == d && d > 0 && a % d == 0 && b % d == 0;
    if (!ok) {
      out.ok = false;
      out.witness = "a=" + a.str() + " b=" + b.str();
      return out;
    }
  }
  out.ok = true;
  return out;
}

IndexOutcome eval_cyclic_subgroup_uniqueness(const EvalInput& in) {
  IndexOutcome out;
  const FieldCtx& F = in.field;
  std::int64_t m = F.q() - 1;
  bool first = true;
  for (std::int64_t d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    ++out.cases;
    std::vector<FFElem> subgroup = F.nth_roots_of_unity(d);
    // Elements of order dividing d, by exhaustive enumeration; uniqueness
    // of the order-d subgroup is exactly |{x : x^d = 1}| = d.
    std::vector<FFElem> solutions;
    for (std::int64_t c = 1; c < F.q(); ++c) {
      FFElem x{std::uint32_t(c)};
      if (F.pow(x, BigInt(d)) == F.one()) solutions.push_back(x);
    }
    bool ok = std::int64_t(subgroup.size()) == d && solutions == subgroup;
    if (in.corrupt && first) {
      ok = false;
      first = false;
    }
    if (!ok) {
      out.ok = false;
      out.witness = "d=" + std::to_string(d);
      return out;
    }
  }
  out.ok = true;
  return out;
}

using Evaluator = IndexOutcome (*)(const EvalInput&);

const std::vector<std::pair<std::string, Evaluator>>& evaluators() {
  static const std::vector<std::pair<std::string, Evaluator>> table = {
      {"fermat_little", eval_fermat_little},
      {"reciprocity_monic", eval_reciprocity_monic},
      {"general_reciprocity", eval_general_reciprocity},
      {"resultant_equivalence", eval_resultant_equivalence},
      {"root_orbit", eval_root_orbit},
      {"symbol_power_criterion", eval_symbol_power_criterion},
      {"gcd_componentwise", eval_gcd_componentwise},
      {"cyclic_subgroup_uniqueness", eval_cyclic_subgroup_uniqueness},
  };
  return table;
}

TransferResult transfer_check_impl(const std::string& property, const FamilyCtx& ctx, const IntFamily& n,
                                   const TransferOptions& opts, bool parallel) {
  require_same_indices(ctx.indices, n.indices);
  Evaluator eval = nullptr;
  for (const auto& [name, fn] : evaluators())
    if (name == property) eval = fn;
  if (!eval) raise(ErrorCode::UnknownProperty, "no transfer property named '" + property + "'");

  TransferResult result;
  result.property = property;
  result.per_index.resize(ctx.size());

  std::exception_ptr pending;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < std::int64_t(ctx.size()); ++i) {
    try {
      EvalInput in;
      in.field = ctx.fields[std::size_t(i)];
      in.n = n.values[std::size_t(i)].convert_to<std::int64_t>();
      if (in.n < 1 || (in.field.q() - 1) % in.n != 0)
        raise(ErrorCode::DoesNotDivide,
              "n does not divide q-1 at index " + ctx.indices[std::size_t(i)]);
      in.seed = splitmix64(opts.seed ^ (0x1234ULL + std::uint64_t(i)));
      in.max_degree = opts.max_degree;
      in.trials = opts.random_trials;
      in.max_cases = opts.max_cases_per_index;
      in.corrupt = opts.corrupt_at && *opts.corrupt_at == std::size_t(i);
      IndexOutcome outcome = eval(in);
      outcome.index = ctx.indices[std::size_t(i)];
      result.per_index[std::size_t(i)] = std::move(outcome);
    } catch (...) {
#pragma omp critical
      if (!pending) pending = std::current_exception();
    }
  }
  if (pending) std::rethrow_exception(pending);

  for (const auto& o : result.per_index) result.all &= o.ok;
  return result;
}

}  // namespace

const std::vector<std::string>& transfer_catalog() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : evaluators()) v.push_back(name);
    return v;
  }();
  return names;
}

TransferResult transfer_check(const std::string& property, const FamilyCtx& ctx, const IntFamily& n,
                              const TransferOptions& opts) {
  return transfer_check_impl(property, ctx, n, opts, true);
}

TransferResult transfer_check_serial(const std::string& property, const FamilyCtx& ctx, const IntFamily& n,
                                     const TransferOptions& opts) {
  return transfer_check_impl(property, ctx, n, opts, false);
}

}  // namespace fqsym
