#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "fqsym/family.hpp"

using namespace fqsym;

namespace {
IntFamily ints(std::vector<std::string> idx, std::vector<std::int64_t> vals) {
  IntFamily f{std::move(idx), {}};
  for (auto v : vals) f.values.push_back(BigInt(v));
  return f;
}
const std::vector<std::string> kIdx{"s1", "s2", "s3"};
}  // namespace

TEST_CASE("componentwise arithmetic") {
  IntFamily a = ints(kIdx, {2, 3, 5});
  IntFamily b = ints(kIdx, {3, 3, 3});
  CHECK(family_mul(a, b).values == ints(kIdx, {6, 9, 15}).values);
  CHECK(family_add(a, ints(kIdx, {0, 0, 0})).values == a.values);
  CHECK(family_pow(a, b).values == ints(kIdx, {8, 27, 125}).values);

  auto cmp = family_cmp(ints(kIdx, {1, 5, 2}), ints(kIdx, {3, 4, 2}));
  CHECK(cmp.per_index == std::vector<Ordering>{Ordering::Less, Ordering::Greater, Ordering::Equal});
  CHECK(cmp.summary == FamilyComparison::Summary::Mixed);
  CHECK(family_cmp(a, a).summary == FamilyComparison::Summary::AllEqual);

  CHECK_THROWS_AS(family_add(a, ints({"x", "y"}, {1, 2})), Error);  // index mismatch
}

TEST_CASE("componentwise gcd and Bezout certificates") {
  IntFamily a = ints(kIdx, {4, 6, 8});
  IntFamily b = ints(kIdx, {6, 9, 12});
  CHECK(family_gcd(a, b).values == ints(kIdx, {2, 3, 4}).values);
  CHECK(family_gcd(a, ints(kIdx, {0, 0, 0})).values == ints(kIdx, {4, 6, 8}).values);

  auto bz = family_bezout(ints({"s1", "s2"}, {4, 6}), ints({"s1", "s2"}, {6, 9}));
  CHECK(bz.d.values == ints({"s1", "s2"}, {2, 3}).values);
  for (std::size_t i = 0; i < 2; ++i) {
    BigInt lhs = BigInt(i == 0 ? 4 : 6) * bz.e.values[i] + BigInt(i == 0 ? 6 : 9) * bz.f.values[i];
    CHECK(lhs == bz.d.values[i]);
  }

  CHECK_THROWS_AS(family_gcd(ints(kIdx, {0, 1, 2}), ints(kIdx, {0, 1, 2})), Error);
}

TEST_CASE("componentwise minimum") {
  IndexFamily<std::set<BigInt>> sets{{"s1", "s2"}, {{BigInt(3), BigInt(1)}, {BigInt(2), BigInt(7)}}};
  CHECK(family_min(sets).values == ints({"s1", "s2"}, {1, 2}).values);

  IndexFamily<std::set<BigInt>> empty_at{{"s1"}, {{}}};
  CHECK_THROWS_AS(family_min(empty_at), Error);
}

TEST_CASE("element orders across a family") {
  FamilyCtx ctx;
  ctx.indices = {"a", "b"};
  ctx.fields = {FieldCtx::from_order(5), FieldCtx::from_order(7)};

  IndexFamily<FFElem> ones{ctx.indices, {ctx.fields[0].one(), ctx.fields[1].one()}};
  CHECK(family_order(ones, ctx).values == std::vector<BigInt>{1, 1});

  // g = (2, 3), a = (2, 2): orders 4/gcd(2,4) = 2 and 6/gcd(2,6) = 3
  IndexFamily<FFElem> squares{ctx.indices,
                              {ctx.fields[0].pow(ctx.fields[0].from_int(2), 2),
                               ctx.fields[1].pow(ctx.fields[1].from_int(3), 2)}};
  CHECK(family_order(squares, ctx).values == std::vector<BigInt>{2, 3});

  IndexFamily<FFElem> gens{ctx.indices, {ctx.fields[0].primitive_root(), ctx.fields[1].primitive_root()}};
  CHECK(family_order(gens, ctx).values == std::vector<BigInt>{4, 6});

  IndexFamily<FFElem> with_zero{ctx.indices, {ctx.fields[0].zero(), ctx.fields[1].one()}};
  CHECK_THROWS_AS(family_order(with_zero, ctx), Error);
}

TEST_CASE("componentwise residue symbols") {
  FamilyCtx ctx;
  ctx.indices = {"a", "b"};
  ctx.fields = {FieldCtx::from_order(3), FieldCtx::from_order(5)};
  const FieldCtx& F3 = ctx.fields[0];
  const FieldCtx& F5 = ctx.fields[1];

  IndexFamily<Poly> alpha{ctx.indices, {Poly::t(F3), Poly::t(F5)}};
  IndexFamily<Poly> mods{ctx.indices, {Poly::parse(F3, "t+1"), Poly::parse(F5, "t+1")}};
  IntFamily n = ints({"a", "b"}, {2, 2});

  auto symbols = family_symbol(alpha, mods, n, ctx);
  CHECK(symbols.values[0].value == F3.from_int(2));
  CHECK(symbols.values[1].value == F5.one());

  IndexFamily<Poly> divisible{ctx.indices, {Poly::parse(F3, "t+1"), Poly::t(F5)}};
  auto with_zero = family_symbol(divisible, mods, n, ctx);
  CHECK(with_zero.values[0].is_zero());

  // a precondition failure aborts naming the failing index
  IntFamily bad_n = ints({"a", "b"}, {2, 3});
  try {
    family_symbol(alpha, mods, bad_n, ctx);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("index b") != std::string::npos);
  }
}

TEST_CASE("order formula holds across the (5,7,9,11) family") {
  FamilyCtx ctx;
  for (std::int64_t q : {5, 7, 9, 11}) {
    ctx.indices.push_back("q" + std::to_string(q));
    ctx.fields.push_back(FieldCtx::from_order(q));
  }
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const FieldCtx& F = ctx.fields[i];
    std::int64_t m = F.q() - 1;
    FFElem g = F.primitive_root();
    for (std::int64_t a = 1; a <= m; ++a) {
      IndexFamily<FFElem> fam{ctx.indices, {}};
      for (std::size_t j = 0; j < ctx.size(); ++j)
        fam.values.push_back(j == i ? ctx.fields[j].pow(g, BigInt(a)) : ctx.fields[j].one());
      IntFamily orders = family_order(fam, ctx);
      CHECK(orders.values[i] == BigInt(m / std::gcd(a, m)));
    }
  }
}

TEST_CASE("transfer checks across presets") {
  for (const std::string& preset : preset_names()) {
    FamilyCtx ctx = make_preset(preset);
    IntFamily n = default_power_family(ctx, 2);
    TransferOptions opts;
    opts.max_degree = 2;
    opts.random_trials = 10;
    for (const char* prop : {"fermat_little", "gcd_componentwise", "cyclic_subgroup_uniqueness"}) {
      TransferResult res = transfer_check(prop, ctx, n, opts);
      CHECK(res.all);
      CHECK(res.per_index.size() == ctx.size());
    }
  }
  FamilyCtx ctx = make_preset("distinct-primes");
  IntFamily n = default_power_family(ctx, 2);
  CHECK_THROWS_AS(transfer_check("no_such_property", ctx, n), Error);
}

TEST_CASE("fault injection produces a per-index failure with a witness") {
  FamilyCtx ctx = make_preset("distinct-primes");
  IntFamily n = default_power_family(ctx, 2);
  TransferOptions opts;
  opts.max_degree = 2;
  opts.random_trials = 5;
  opts.corrupt_at = 2;
  for (const std::string& prop : transfer_catalog()) {
    TransferResult res = transfer_check(prop, ctx, n, opts);
    CHECK_FALSE(res.all);
    CHECK_FALSE(res.per_index[2].ok);
    CHECK_FALSE(res.per_index[2].witness.empty());
    CHECK(res.per_index[0].ok);
    CHECK(res.per_index[1].ok);
  }
}

TEST_CASE("parallel transfer equals serial transfer") {
  FamilyCtx ctx = make_preset("growing-powers-of-p");
  IntFamily n = default_power_family(ctx, 2);
  TransferOptions opts;
  opts.max_degree = 2;
  opts.random_trials = 10;
  for (const std::string& prop : transfer_catalog()) {
    TransferResult par = transfer_check(prop, ctx, n, opts);
    TransferResult ser = transfer_check_serial(prop, ctx, n, opts);
    CHECK(par.all == ser.all);
    REQUIRE(par.per_index.size() == ser.per_index.size());
    for (std::size_t i = 0; i < par.per_index.size(); ++i) {
      CHECK(par.per_index[i].ok == ser.per_index[i].ok);
      CHECK(par.per_index[i].cases == ser.per_index[i].cases);
      CHECK(par.per_index[i].witness == ser.per_index[i].witness);
    }
  }
}

TEST_CASE("mixed characteristics: no prime divides every component order") {
  FamilyCtx ctx = make_preset("distinct-primes");
  for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    bool divides_all = true;
    for (const auto& f : ctx.fields) divides_all &= (f.p() == p);
    CHECK_FALSE(divides_all);
  }
}
