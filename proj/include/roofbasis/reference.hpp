#pragma once

#include <vector>

#include "roofbasis/integer_set.hpp"

namespace roofbasis {

// Brute-force preimage search kept deliberately naive: try every removal q
// above the tail and every vacant insertion p below it, and keep the
// candidates whose up() lands back on jh.  Independent of the closed
// formula in up_inverse(); the verification sweep compares the two.
std::vector<IntegerSet> brute_up_inverse(const IntegerSet& jh);

}  // namespace roofbasis
