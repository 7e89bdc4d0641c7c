// Times the census kernels on the serial reference path and on OpenMP worker
// counts, and checks both produce identical reports.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "distspec/census.hpp"
#include "distspec/enumerate.hpp"
#include "distspec/graph6.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace dspec;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

bool same_section(const TheoremSection& a, const TheoremSection& b) {
  return section_json(a) == section_json(b);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Graph> graphs;
  for (int n = 4; n <= 6; ++n) {
    auto g = enumerate_connected(n);
    graphs.insert(graphs.end(), g.begin(), g.end());
  }
  if (argc > 1) {
    std::ifstream in(argv[1]);
    if (!in) {
      std::fprintf(stderr, "cannot open %s\n", argv[1]);
      return 2;
    }
    auto extra = read_graph6_lines(in);
    graphs.insert(graphs.end(), extra.begin(), extra.end());
  }
  int max_jobs = 4;
#ifdef _OPENMP
  max_jobs = omp_get_max_threads();
#endif

  std::printf("census input: %zu graphs\n", graphs.size());
  std::printf("%-28s %10s %10s %10s\n", "kernel", "serial[s]", "parallel[s]", "speedup");

  auto bench = [&](const char* name, auto&& run, auto&& equal) {
    auto t0 = Clock::now();
    auto serial = run(1);
    auto t1 = Clock::now();
    auto parallel = run(max_jobs);
    auto t2 = Clock::now();
    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::printf("%-28s %10.3f %10.3f %9.2fx %s\n", name, ts, tp, tp > 0 ? ts / tp : 0.0,
                equal(serial, parallel) ? "" : "MISMATCH");
    return equal(serial, parallel);
  };

  bool ok = true;
  ok &= bench(
      "theorem31", [&](int jobs) { return verify_theorem31(graphs, jobs); }, same_section);
  ok &= bench(
      "theorem41", [&](int jobs) { return verify_theorem41(graphs, jobs); }, same_section);
  ok &= bench(
      "theorem42", [&](int jobs) { return verify_theorem42(graphs, jobs); }, same_section);
  ok &= bench(
      "table3 (I<=4, J<=3)", [&](int jobs) { return verify_table3(4, 3, jobs); },
      [](const auto& a, const auto& b) { return table_json(a) == table_json(b); });
  ok &= bench(
      "cospectral (order 14)",
      [&](int jobs) { return cospectral_search(enumerate_members(14, TheoremSet::thm31), jobs); },
      [](const auto& a, const auto& b) { return cospectral_json(a) == cospectral_json(b); });

  if (!ok) {
    std::printf("serial and parallel results differ\n");
    return 1;
  }
  return 0;
}
