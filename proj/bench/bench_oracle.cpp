// Compares the three oracle paths on the same instances: the serial
// recompute-per-subfamily reference, the incremental Gray-code walk on one
// thread, and the same walk split across OpenMP workers. Values must agree
// bit for bit; only the wall time differs.

#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "carleson/generators.hpp"
#include "carleson/oracle.hpp"

namespace {

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return 0.0;
#endif
}

int threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

struct Timing {
  double seconds;
  carleson::OracleReport report;
};

template <typename Fn>
Timing timed(Fn&& fn) {
  const double start = now();
  carleson::OracleReport report = fn();
  return {now() - start, std::move(report)};
}

void run_case(const char* name, const carleson::SetCollection& c,
              bool include_ref) {
  std::printf("%s: %zu sets, %zu atoms, %llu subfamilies\n", name, c.size(),
              c.space()->size(),
              static_cast<unsigned long long>((1ull << c.size()) - 1));

  Timing incremental = timed([&] { return carleson::carleson_exact(c, 1); });
  Timing parallel = timed([&] { return carleson::carleson_exact(c, 0); });
  std::printf("  carleson  incremental x1   %8.3fs   value %s\n",
              incremental.seconds,
              carleson::rat_to_string(incremental.report.value).c_str());
  std::printf("  carleson  incremental x%-2d  %8.3fs   %s\n", threads(),
              parallel.seconds,
              parallel.report.value == incremental.report.value &&
                      parallel.report.argmax == incremental.report.argmax
                  ? "matches"
                  : "MISMATCH");
  if (include_ref) {
    Timing ref = timed([&] { return carleson::carleson_exact_ref(c); });
    std::printf("  carleson  reference        %8.3fs   %s\n", ref.seconds,
                ref.report.value == incremental.report.value &&
                        ref.report.argmax == incremental.report.argmax
                    ? "matches"
                    : "MISMATCH");
  }

  Timing weak_inc = timed([&] { return carleson::weak_carleson_exact(c, 1); });
  Timing weak_par = timed([&] { return carleson::weak_carleson_exact(c, 0); });
  std::printf("  weak      incremental x1   %8.3fs   value %s\n",
              weak_inc.seconds,
              carleson::rat_to_string(weak_inc.report.value).c_str());
  std::printf("  weak      incremental x%-2d  %8.3fs   %s\n", threads(),
              weak_par.seconds,
              weak_par.report.value == weak_inc.report.value &&
                      weak_par.report.argmax == weak_inc.report.argmax
                  ? "matches"
                  : "MISMATCH");
  if (include_ref) {
    Timing ref = timed([&] { return carleson::weak_carleson_exact_ref(c); });
    std::printf("  weak      reference        %8.3fs   %s\n", ref.seconds,
                ref.report.value == weak_inc.report.value &&
                        ref.report.argmax == weak_inc.report.argmax
                    ? "matches"
                    : "MISMATCH");
  }
}

}  // namespace

int main() {
  std::printf("oracle benchmark, %d OpenMP threads\n\n", threads());

  run_case("dyadic intervals d4 n14",
           carleson::gen_dyadic(carleson::DyadicKind::intervals, 1, 4, 14, 42),
           /*include_ref=*/true);
  run_case("dyadic rectangles 2d d3 n16",
           carleson::gen_dyadic(carleson::DyadicKind::rectangles, 2, 3, 16, 7),
           /*include_ref=*/false);
  run_case("dyadic intervals d5 n20",
           carleson::gen_dyadic(carleson::DyadicKind::intervals, 1, 5, 20, 3),
           /*include_ref=*/false);
  return 0;
}
