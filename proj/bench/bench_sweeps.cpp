// Wall-time comparison of the serial sweep path (jobs=1) against the
// OpenMP path on the same suite.  Usage: roofbasis_bench [n m height [jobs]]

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "roofbasis/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

int main(int argc, char** argv) {
  roofbasis::SuiteSpec suite{3, 0, 9};
  int jobs = 4;
#ifdef _OPENMP
  jobs = omp_get_max_threads();
#endif
  if (argc >= 4) {
    suite.n = std::atoi(argv[1]);
    suite.m = std::atoll(argv[2]);
    suite.height = std::atoll(argv[3]);
  }
  if (argc >= 5) jobs = std::atoi(argv[4]);
  if (suite.n < 2 || jobs < 2) {
    std::cerr << "usage: roofbasis_bench [n m height [jobs]]  (n >= 2, jobs >= 2)\n";
    return 1;
  }

  std::cout << "suite n=" << suite.n << " m=" << suite.m << " H=" << suite.height
            << ", parallel jobs=" << jobs << "\n";
#ifndef _OPENMP
  std::cout << "note: built without OpenMP; both columns run the serial path\n";
#endif
  std::cout << std::left << std::setw(13) << "sweep" << std::right << std::setw(10) << "cases"
            << std::setw(12) << "serial s" << std::setw(12) << "parallel s" << std::setw(10)
            << "speedup" << "\n";

  struct Row {
    const char* name;
    roofbasis::SweepReport (*run)(const roofbasis::SuiteSpec&, int);
  };
  const Row rows[] = {
      {"roof-ceiling", roofbasis::sweep_roof_ceiling},
      {"triangular", roofbasis::sweep_triangular},
      {"upinv", roofbasis::sweep_upinv},
  };

  bool clean = true;
  for (const Row& row : rows) {
    const roofbasis::SweepReport serial = row.run(suite, 1);
    const roofbasis::SweepReport parallel = row.run(suite, jobs);
    clean = clean && serial.ok() && parallel.ok();
    std::cout << std::left << std::setw(13) << row.name << std::right << std::setw(10)
              << serial.cases << std::setw(12) << std::fixed << std::setprecision(3)
              << serial.seconds << std::setw(12) << parallel.seconds << std::setw(10)
              << std::setprecision(2) << (serial.seconds / (parallel.seconds > 0 ? parallel.seconds : 1e-9))
              << "\n";
    if (!serial.ok() || !parallel.ok())
      std::cout << "  FAILURES: serial " << serial.failures << ", parallel " << parallel.failures
                << "\n";
  }
  return clean ? 0 : 2;
}
