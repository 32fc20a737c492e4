#pragma once

#include <utility>
#include <vector>

#include "roofbasis/integer_set.hpp"

namespace roofbasis {

// One raise: the element p left the set and q entered, p < q.
struct UpStep {
  long long p = 0;
  long long q = 0;

  bool operator==(const UpStep&) const = default;
};

// Moves the maximal loose end p to the least vacant slot q > p that extends
// a seam of a different residue class (q-n present, q absent, q != p mod n).
// Requires an n-bounded, not yet n-stable input.  Raises height by q-p,
// preserves order and n-boundedness.
std::pair<IntegerSet, UpStep> up(const IntegerSet& j);

struct RoofResult {
  IntegerSet stable;
  std::vector<UpStep> steps;  // in application order
};

// Iterates up() to the n-stable closure, recording the trace.
RoofResult roof(const IntegerSet& j);

// All J with up(J) == jh, by the closed candidate formula: for each seam top
// q (q, q-n present, q+n vacant, q > p_hat - n) the admissible insertions p
// are the doubly-vacant slots strictly between max(p_hat, q_hat) and q, plus
// p_hat - n when p_hat - 2n is also vacant and p_hat - n clears max(p_tilde,
// q_hat).  Here p_hat > p_tilde are the two largest loose ends and q_hat is
// the largest tight end below q.  Insertions landing in q's own residue
// class are excluded; up never moves within a class.
std::vector<IntegerSet> up_inverse(const IntegerSet& jh);

// Canonical reduced word for the minimal y with y(L_m) = k: repeatedly
// reflect at the minimal hole (least vacant r with r+1 present) until L_m,
// recording r mod n.  The recorded letters already read left to right.
ReducedWord reduced_word_from_extremal(const IntegerSet& k);

// All n-stable sets below kw in the componentwise order, kw included.
// Recursion on the minimal-hole reflection s: ideal(kw) = ideal(s kw) union
// s ideal(s kw), memoized.  Output sorted lexicographically.
std::vector<IntegerSet> enumerate_stable_below(const IntegerSet& kw);

// Union of the up_inverse closures over every stable set below kw; by the
// roof criterion this is the full generated family.  Sorted lexicographically.
std::vector<IntegerSet> demazure_bottom_up(const IntegerSet& kw);

// Membership via the roof criterion: roof(j) <= kw componentwise.
bool member(const IntegerSet& j, const IntegerSet& kw);

}  // namespace roofbasis
