// Timing comparison of the three enumeration paths: the naive per-subset
// reference, the bit-kernel enumerator on one worker, and the same kernel
// with one worker per hardware thread.  Counts are cross-checked on every
// run; a mismatch aborts with exit 1.

#include <chrono>
#include <cstdio>
#include <optional>

#include "sumsetlab/exact_enum.hpp"
#include "sumsetlab/reference.hpp"

using namespace sumsetlab;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

int run_family(const char* name, Kind kind,
               std::variant<PresetName, IntervalSpec> interval) {
  std::printf("%s\n", name);
  std::printf("  %3s  %12s  %12s  %12s  %8s\n", "n", "naive ms", "serial ms",
              "parallel ms", "par/ser");
  for (int n : {14, 16, 18, 20, 22}) {
    const DistQuery q{Ensemble::Free, kind, interval, n};

    std::optional<ExactPmf> naive;
    double naive_ms = 0.0;
    if (n <= 18) {  // the reference walks element lists; keep it honest
      const auto t0 = Clock::now();
      naive = ref::exact_pmf(q);
      naive_ms = ms_since(t0);
    }

    EnumOptions serial;
    serial.workers = 1;
    const auto t1 = Clock::now();
    const ExactPmf one = exact_pmf(q, serial);
    const double serial_ms = ms_since(t1);

    EnumOptions parallel;  // workers = 0: one per hardware thread
    const auto t2 = Clock::now();
    const ExactPmf many = exact_pmf(q, parallel);
    const double parallel_ms = ms_since(t2);

    if (many.counts != one.counts ||
        (naive && naive->counts != one.counts)) {
      std::fprintf(stderr, "count mismatch at n=%d\n", n);
      return 1;
    }

    if (naive) {
      std::printf("  %3d  %12.2f  %12.2f  %12.2f  %7.2fx\n", n, naive_ms,
                  serial_ms, parallel_ms, serial_ms / parallel_ms);
    } else {
      std::printf("  %3d  %12s  %12.2f  %12.2f  %7.2fx\n", n, "-", serial_ms,
                  parallel_ms, serial_ms / parallel_ms);
    }
  }
  return 0;
}

}  // namespace

int main() {
  int rc = run_family("missing sums in [0,2n-2], free subsets", Kind::Sum,
                      PresetName::All);
  if (rc == 0) {
    rc = run_family("missing differences in [0,n-1], free subsets",
                    Kind::Diff, PresetName::DiffHalf);
  }
  return rc;
}
