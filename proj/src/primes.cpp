#include "fqsym/primes.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "fqsym/version.hpp"

namespace fqsym {

namespace {

std::int64_t checked_pow_q(std::int64_t q, int n) {
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > kMaxEnumSize / q) raise(ErrorCode::SizeExceeded, "q^n exceeds the enumeration bound");
    total *= q;
  }
  return total;
}

// No root in GF(q) is a cheap pre-filter before the Rabin test; only valid
// as a rejection for degree >= 2.
bool has_root(const Poly& f) {
  const FieldCtx& F = f.field();
  for (std::int64_t c = 0; c < F.q(); ++c)
    if (f.eval(FFElem{std::uint32_t(c)}) == FFElem{0}) return true;
  return false;
}

bool candidate_irreducible(const FieldCtx& f, int degree, std::int64_t code) {
  Poly cand = Poly::monic_from_code(f, degree, code);
  if (degree == 1) return true;
  if (has_root(cand)) return false;
  if (degree <= 3) return true;  // root-free suffices through cubic
  return is_irreducible(cand);
}

std::vector<int> moebius_table(int n) {
  std::vector<int> mu(std::size_t(n) + 1, 1);
  std::vector<bool> composite(std::size_t(n) + 1, false);
  std::vector<int> primes;
  for (int i = 2; i <= n; ++i) {
    if (!composite[std::size_t(i)]) {
      primes.push_back(i);
      mu[std::size_t(i)] = -1;
    }
    for (int p : primes) {
      if (std::int64_t(i) * p > n) break;
      composite[std::size_t(i * p)] = true;
      if (i % p == 0) {
        mu[std::size_t(i * p)] = 0;
        break;
      }
      mu[std::size_t(i * p)] = -mu[std::size_t(i)];
    }
  }
  return mu;
}

}  // namespace

std::vector<Poly> monic_primes_serial(const FieldCtx& f, int degree) {
  if (degree < 1) raise(ErrorCode::SizeExceeded, "degree must be positive");
  std::int64_t total = checked_pow_q(f.q(), degree);
  std::vector<Poly> out;
  for (std::int64_t code = 0; code < total; ++code)
    if (candidate_irreducible(f, degree, code)) out.push_back(Poly::monic_from_code(f, degree, code));
  return out;
}

std::vector<Poly> monic_primes(const FieldCtx& f, int degree) {
  if (degree < 1) raise(ErrorCode::SizeExceeded, "degree must be positive");
  std::int64_t total = checked_pow_q(f.q(), degree);
  std::vector<unsigned char> flag(std::size_t(total), 0);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t code = 0; code < total; ++code)
    flag[std::size_t(code)] = candidate_irreducible(f, degree, code) ? 1 : 0;
  std::vector<Poly> out;
  for (std::int64_t code = 0; code < total; ++code)
    if (flag[std::size_t(code)]) out.push_back(Poly::monic_from_code(f, degree, code));
  return out;
}

std::vector<Poly> first_monic_primes(const FieldCtx& f, int degree, std::size_t limit) {
  if (degree < 1) raise(ErrorCode::SizeExceeded, "degree must be positive");
  std::int64_t total = 1;
  bool capped = false;
  for (int i = 0; i < degree && !capped; ++i) {
    if (total > kMaxEnumSize / f.q())
      capped = true;  // candidate space huge; the early stop below still applies
    else
      total *= f.q();
  }
  std::vector<Poly> out;
  for (std::int64_t code = 0; out.size() < limit && (capped || code < total); ++code)
    if (candidate_irreducible(f, degree, code)) out.push_back(Poly::monic_from_code(f, degree, code));
  return out;
}

BigInt count_monic_primes(const FieldCtx& f, int degree) {
  if (degree < 1) raise(ErrorCode::SizeExceeded, "degree must be positive");
  auto mu = moebius_table(degree);
  BigInt sum = 0;
  for (int d = 1; d <= degree; ++d) {
    if (degree % d != 0) continue;
    sum += BigInt(mu[std::size_t(d)]) * big_pow(BigInt(f.q()), std::uint64_t(degree / d));
  }
  return sum / degree;
}

bool prime_count_lower_bound_holds(const FieldCtx& f, int degree) {
  BigInt count = count_monic_primes(f, degree);
  BigInt lhs = count * degree;
  return lhs * lhs >= big_pow(BigInt(f.q()), std::uint64_t(degree));
}

std::string resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("FQSYM_CACHE_DIR"); env && *env) return env;
  return "fqsym_cache";
}

std::vector<Poly> monic_primes_cached(const FieldCtx& f, int degree, const std::string& cache_dir) {
  namespace fs = std::filesystem;
  fs::path dir(cache_dir);
  fs::path file = dir / ("q" + std::to_string(f.q()) + "_deg" + std::to_string(degree) + ".txt");
  BigInt expected = count_monic_primes(f, degree);

  auto try_load = [&]() -> std::vector<Poly> {
    std::ifstream in(file);
    if (!in) return {};
    std::string header;
    if (!std::getline(in, header)) return {};
    std::string want = std::string("# fqsym ") + kVersion + " q=" + std::to_string(f.q()) +
                       " deg=" + std::to_string(degree);
    if (header != want) return {};
    std::vector<Poly> out;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      Poly P;
      try {
        P = Poly::parse(f, line);
      } catch (const Error&) {
        return {};
      }
      if (P.is_zero() || P.is_constant() || P.deg() != degree || !P.is_monic() || !is_irreducible(P))
        return {};
      out.push_back(P);
    }
    if (BigInt(out.size()) != expected) return {};
    for (std::size_t i = 1; i < out.size(); ++i)
      if (!Poly::canonical_less(out[i - 1], out[i])) return {};
    return out;
  };

  std::vector<Poly> loaded = try_load();
  if (!loaded.empty() || expected == 0) {
    if (BigInt(loaded.size()) == expected) return loaded;
  }

  std::vector<Poly> fresh = monic_primes(f, degree);
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::ofstream out(file, std::ios::trunc);
  if (out) {
    out << "# fqsym " << kVersion << " q=" << f.q() << " deg=" << degree << "\n";
    for (const Poly& P : fresh) out << P.to_string() << "\n";
  }
  return fresh;
}

}  // namespace fqsym
