// Timing harness comparing the OpenMP scan kernels against their serial
// references.  Each row verifies that both paths produce identical results
// before reporting the speedup.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

#include "fqsym/family.hpp"
#include "fqsym/primes.hpp"
#include "fqsym/scan.hpp"

using namespace fqsym;

namespace {

double time_of(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const std::string& name, const std::function<bool()>& run_both_and_compare,
         double serial_s, double parallel_s, bool equal) {
  (void)run_both_and_compare;
  std::printf("%-34s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name.c_str(), serial_s,
              parallel_s, parallel_s > 0 ? serial_s / parallel_s : 0.0,
              equal ? "results-identical" : "RESULTS-DIFFER");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  {
    FieldCtx F9 = FieldCtx::from_order(9);
    std::vector<Poly> serial_out, parallel_out;
    double ts = time_of([&] { serial_out = monic_primes_serial(F9, 6); });
    double tp = time_of([&] { parallel_out = monic_primes(F9, 6); });
    row("monic primes q=9 deg=6", nullptr, ts, tp, serial_out == parallel_out);
  }
  {
    FieldCtx F13 = FieldCtx::from_order(13);
    ScanResult s, p;
    double ts = time_of([&] { s = reciprocity_scan_serial(F13, 2, 3); });
    double tp = time_of([&] { p = reciprocity_scan(F13, 2, 3); });
    row("reciprocity q=13 n=2 deg<=3", nullptr, ts, tp, s == p);
  }
  {
    FieldCtx F7 = FieldCtx::from_order(7);
    ScanResult s, p;
    double ts = time_of([&] { s = resultant_equivalence_scan_serial(F7, 2, 3); });
    double tp = time_of([&] { p = resultant_equivalence_scan(F7, 2, 3); });
    row("resultant-route q=7 n=2 deg<=3", nullptr, ts, tp, s == p);
  }
  {
    FieldCtx F5 = FieldCtx::from_order(5);
    ConverseScanResult s, p;
    double ts = time_of([&] { s = gw_converse_scan_serial(F5, 2, 3000, 6, 4, kDefaultSeed); });
    double tp = time_of([&] { p = gw_converse_scan(F5, 2, 3000, 6, 4, kDefaultSeed); });
    row("witness sweep q=5 n=2 x3000", nullptr, ts, tp, s == p);
  }
  {
    FamilyCtx ctx = make_preset("distinct-primes");
    IntFamily n = default_power_family(ctx, 2);
    TransferOptions opts;
    opts.max_degree = 2;
    opts.random_trials = 400;
    opts.max_cases_per_index = 20000;
    bool equal = true;
    double ts = 0, tp = 0;
    for (const char* prop : {"reciprocity_monic", "symbol_power_criterion"}) {
      TransferResult s, p;
      ts += time_of([&] { s = transfer_check_serial(prop, ctx, n, opts); });
      tp += time_of([&] { p = transfer_check(prop, ctx, n, opts); });
      equal = equal && s.all == p.all && s.per_index.size() == p.per_index.size();
    }
    row("family transfer, distinct primes", nullptr, ts, tp, equal);
  }
  return 0;
}
