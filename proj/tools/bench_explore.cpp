// Benchmark: serial reference explorer vs the OpenMP kernels, on the
// exhaustive Nielsen graph of a finite quotient and of an abelian group.

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gsn/nielsen.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double run(const gsn::HandlePtr& h, int k, int threads, gsn::ComponentReport& out) {
  gsn::MoveSet ms = gsn::MoveSet::nielsen(k);
  auto t0 = Clock::now();
  out = gsn::explore_exhaustive(h, k, ms, 2000000, threads);
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool same_partition(const gsn::ComponentReport& a, const gsn::ComponentReport& b) {
  if (a.components.size() != b.components.size()) return false;
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    if (a.components[i].size != b.components[i].size) return false;
    if (a.components[i].representative.key != b.components[i].representative.key) return false;
  }
  return a.total_generating == b.total_generating;
}

}  // namespace

int main(int argc, char** argv) {
  int threads = 4;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  if (argc > 1) threads = std::atoi(argv[1]);

  struct Case {
    const char* desc;
    int k;
  };
  const Case cases[] = {
      {"abelian:13,13", 2},
      {"abelian:5,5", 3},
      {"quotient:p=3,depth=2", 2},
  };

  std::cout << "threads for parallel runs: " << threads << "\n";
  for (const auto& c : cases) {
    auto h = gsn::GroupHandle::parse(c.desc);
    gsn::ComponentReport serial, parallel;
    double ts = run(h, c.k, 1, serial);
    double tp = run(h, c.k, threads, parallel);
    std::cout << c.desc << " k=" << c.k << ": " << serial.components.size()
              << " components, " << serial.total_generating << " generating tuples\n"
              << "  serial   " << ts << " s\n"
              << "  parallel " << tp << " s  (speedup " << ts / tp << "x)\n";
    if (!same_partition(serial, parallel)) {
      std::cout << "  MISMATCH between serial and parallel partitions\n";
      return 1;
    }
  }
  return 0;
}
