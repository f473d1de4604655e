// bench_enum: timing comparison between the OpenMP enumeration kernels and
// their serial reference implementations, with a result-equality check.
//
// Usage: bench_enum [repeats]   (default 3; best-of wall time is reported)
// Exit code 0 on agreement, 3 when any kernel pair disagrees.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "growth/extremal.hpp"
#include "growth/young.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double timed_ms(const std::function<void()>& fn, int repeats) {
  double best = 0.0;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (r == 0 || ms < best) best = ms;
  }
  return best;
}

struct Row {
  std::string name;
  long long candidates = 0;
  int value = 0;
  double serial_ms = 0.0;
  double parallel_ms = 0.0;
  bool agree = true;
};

Row bench_mu_en(const std::string& name, const growth::YoungDiagram& z, int repeats) {
  Row row;
  row.name = name;
  growth::MuEnResult serial, parallel;
  row.serial_ms = timed_ms([&] { serial = growth::mu_en_exact_serial(z); }, repeats);
  row.parallel_ms = timed_ms([&] { parallel = growth::mu_en_exact(z); }, repeats);
  row.candidates = serial.candidates;
  row.value = serial.value;
  row.agree = serial.value == parallel.value && serial.witness == parallel.witness &&
              serial.candidates == parallel.candidates;
  return row;
}

Row bench_mu_th(const std::string& name, const growth::YoungDiagram& z,
                growth::ThinSearchCaps caps, int repeats) {
  Row row;
  row.name = name;
  growth::MuThResult serial, parallel;
  row.serial_ms = timed_ms([&] { serial = growth::mu_th_search_serial(z, caps); }, repeats);
  row.parallel_ms = timed_ms([&] { parallel = growth::mu_th_search(z, caps); }, repeats);
  row.candidates = serial.candidates;
  row.value = serial.value;
  row.agree = serial.found == parallel.found && serial.value == parallel.value &&
              serial.witness == parallel.witness && serial.candidates == parallel.candidates;
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled (serial build)\n");
#endif
  std::printf("repeats: %d (best-of)\n\n", repeats);

  std::vector<Row> rows;
  rows.push_back(bench_mu_en("mu-en R_{6,6}", growth::YoungDiagram::rectangle(6, 6), repeats));
  rows.push_back(bench_mu_en("mu-en R_{7,5}", growth::YoungDiagram::rectangle(7, 5), repeats));
  rows.push_back(
      bench_mu_en("mu-en S_{1,1,7}", growth::YoungDiagram::staircase(1, 1, 7), repeats));
  rows.push_back(bench_mu_th("mu-th R_{3,3}", growth::YoungDiagram::rectangle(3, 3), {}, repeats));
  rows.push_back(bench_mu_th("mu-th R_{4,2}", growth::YoungDiagram::rectangle(4, 2), {}, repeats));

  std::printf("%-16s %12s %8s %12s %12s %9s %7s\n", "case", "candidates", "value",
              "serial_ms", "parallel_ms", "speedup", "agree");
  bool all_agree = true;
  for (const Row& r : rows) {
    const double speedup = r.parallel_ms > 0.0 ? r.serial_ms / r.parallel_ms : 0.0;
    std::printf("%-16s %12lld %8d %12.2f %12.2f %8.2fx %7s\n", r.name.c_str(), r.candidates,
                r.value, r.serial_ms, r.parallel_ms, speedup, r.agree ? "yes" : "NO");
    all_agree = all_agree && r.agree;
  }
  if (!all_agree) {
    std::fprintf(stderr, "kernel disagreement detected\n");
    return 3;
  }
  return 0;
}
