// Compares the serial and OpenMP table-validation kernels on large D(n)
// instances. Both must produce identical reports; the parallel kernel is
// the default in the library.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "idealord/certify.hpp"
#include "idealord/instances.hpp"
#include "idealord/ordered_semigroup.hpp"

using namespace idealord;

namespace {

double time_ms(const FiniteOrderedSemigroup& s, Exec exec, int reps, bool& passed) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport rep = validate(s, exec);
    auto t1 = std::chrono::steady_clock::now();
    passed = rep.passed;
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 3;

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel falls back to serial\n");
#endif
  std::printf("%-12s %6s %12s %12s %9s\n", "instance", "k", "serial(ms)", "parallel(ms)", "speedup");

  // highly composite moduli give the largest divisor tables
  for (std::uint64_t n : {720720ULL, 831600ULL, 942480ULL, 997920ULL}) {
    DivisorSemigroup d = build_divisor_semigroup(n);
    bool ok_s = false, ok_p = false;
    double ts = time_ms(d.table, Exec::Serial, reps, ok_s);
    double tp = time_ms(d.table, Exec::Parallel, reps, ok_p);

    json a = strip_timing(to_json(validate_serial(d.table)));
    json b = strip_timing(to_json(validate(d.table, Exec::Parallel)));
    if (!ok_s || !ok_p || a != b) {
      std::printf("MISMATCH on D(%llu)\n", static_cast<unsigned long long>(n));
      return 1;
    }
    std::printf("D(%-10llu) %6zu %12.2f %12.2f %8.2fx\n", static_cast<unsigned long long>(n),
                d.table.size(), ts, tp, ts / tp);
  }
  return 0;
}
