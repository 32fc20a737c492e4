#pragma once

#include <string>
#include <vector>

#include "roofbasis/integer_set.hpp"

namespace roofbasis {

// One exhaustive enumeration: every n-bounded set of order m with height
// at most `height`.
struct SuiteSpec {
  int n = 2;
  long long m = 0;
  long long height = 0;
};

// The desk-scale defaults; `verify all` over these finishes well inside the
// documented five-minute budget on one core.
std::vector<SuiteSpec> default_suites();

struct SweepReport {
  std::string suite;
  long long cases = 0;
  long long failures = 0;
  double seconds = 0.0;
  std::string info;                // extra statistics, may be empty
  std::vector<std::string> notes;  // first few counterexamples
  bool ok() const { return failures == 0; }
};

// roof(J) == ceiling(J) on every element of the suite's crystal.
SweepReport sweep_roof_ceiling(const SuiteSpec& s, int jobs = 1);

// standard_vector(J) is triangular: support lex-below J, heights and
// weights constant across the support, and |coefficient at J| equal to the
// run-factorial product.
SweepReport sweep_triangular(const SuiteSpec& s, int jobs = 1);

// Closed-formula preimages equal the brute-force search on every element.
SweepReport sweep_upinv(const SuiteSpec& s, int jobs = 1);

// Over every reduced word of length <= max_len: top-down generation equals
// bottom-up generation equals the canonical-word generation, characters of
// the two agree, and multiplicities sum to the crystal size.
SweepReport sweep_character(int n, long long m, int max_len, int jobs = 1);

// Human-readable multi-line rendering of a report.
std::string format_report(const SweepReport& r);

}  // namespace roofbasis
