#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "roofbasis/integer_set.hpp"

namespace roofbasis {

// Leftover brackets of the residue-i pair cancellation: elements congruent
// to i and i+1 are merged in increasing order, and every i-element
// immediately followed by an (i+1)-element cancels, iterated to a fixed
// point.  What survives is `upper` (residue i+1, all below) then `lower`
// (residue i).  The infinite tail contributes at most one token: its top
// slot, when tail = i mod n.
struct Signature {
  std::vector<long long> upper;  // ascending, residue i+1
  std::vector<long long> lower;  // ascending, residue i
};
Signature signature(int i, const IntegerSet& j);

// Lowering: moves the least leftover i-element up by one.  Absent when the
// lower list is empty.
std::optional<IntegerSet> crystal_f(int i, const IntegerSet& j);

// Raising: moves the greatest leftover (i+1)-element down by one.  Absent
// when the upper list is empty.  Inverse to crystal_f where defined.
std::optional<IntegerSet> crystal_e(int i, const IntegerSet& j);

// Iterate to exhaustion; returns the end set and the number of moves.
std::pair<IntegerSet, int> crystal_f_max(int i, IntegerSet j);
std::pair<IntegerSet, int> crystal_e_max(int i, IntegerSet j);

// Closure of {L_m} under f-strings along the word, rightmost letter first.
// Rejects non-reduced words.  Sorted lexicographically.
std::vector<IntegerSet> demazure_top_down(const ReducedWord& w, long long m);

// Membership without generating the set: strip e_i^max along the word left
// to right and test arrival at the vacuum L_m (m = order of j).
bool demazure_member_top_down(const ReducedWord& w, const IntegerSet& j);

struct CeilingCache {
  std::unordered_map<IntegerSet, IntegerSet, SetHash> memo;
};

// Minimal extremal set above j, by the raising recursion: with a = tail and
// r = min of the part above, strip e^max at residue r-1 and reflect the
// smaller answer back: ceiling(j) = s_{r-1}(ceiling(e_{r-1}^max j)).
// Agrees with roof() on every n-bounded set; computed independently of it.
IntegerSet ceiling(const IntegerSet& j);
IntegerSet ceiling(const IntegerSet& j, CeilingCache& cache);

struct CeilingStep {
  long long r = 0;   // least element above the tail before the strip
  IntegerSet next;   // after stripping e^max at residue r-1
};
IntegerSet ceiling_with_chain(const IntegerSet& j, std::vector<CeilingStep>& chain);

// wt = Lambda_label - sum_i alpha[i] a_i, label = order mod n.  The alpha
// vector solves alpha[c] - alpha[c-1] = -(excess of residue-c members over
// the vacuum), normalized so the entries sum to height(j).
struct Weight {
  int n = 2;
  int label = 0;
  std::vector<long long> alpha;

  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;
};
Weight weight(const IntegerSet& j);

std::map<Weight, long long> character(const std::vector<IntegerSet>& elems);

// Every n-bounded set of the given order with height at most max_height,
// generated through the partition correspondence.  Ordered by height, then
// lexicographically.
std::vector<IntegerSet> enumerate_crystal(int n, long long m, long long max_height);

}  // namespace roofbasis
