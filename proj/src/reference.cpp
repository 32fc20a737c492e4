#include "roofbasis/reference.hpp"

#include <algorithm>
#include <stdexcept>

#include "roofbasis/roof.hpp"

namespace roofbasis {

std::vector<IntegerSet> brute_up_inverse(const IntegerSet& jh) {
  if (!is_bounded(jh)) throw std::invalid_argument("brute_up_inverse: set is not n-bounded");
  std::vector<IntegerSet> out;
  for (long long q : jh.above) {
    for (long long p = jh.tail + 1; p < q; ++p) {
      if (jh.contains(p)) continue;
      std::vector<long long> elems;
      for (long long x : jh.above)
        if (x != q) elems.push_back(x);
      elems.push_back(p);
      IntegerSet cand = canonicalize(jh.n, jh.tail, std::move(elems));
      if (!is_bounded(cand) || is_stable(cand)) continue;
      auto [raised, step] = up(cand);
      if (raised == jh) out.push_back(std::move(cand));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IntegerSet& a, const IntegerSet& b) { return lex_compare(a, b) < 0; });
  return out;
}

}  // namespace roofbasis
