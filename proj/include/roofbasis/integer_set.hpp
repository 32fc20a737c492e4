#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace roofbasis {

// A semi-infinite subset of Z containing all sufficiently small integers,
// kept in canonical form: the set is Z_{<=tail} plus finitely many larger
// elements.  Canonical means tail is maximal, i.e. tail+1 is vacant, so
// `above` is strictly increasing with above[0] >= tail+2 and equality of
// canonical forms is structural equality.
struct IntegerSet {
  int n = 2;                     // residue modulus, n >= 2
  long long tail = 0;            // every integer <= tail is in the set
  std::vector<long long> above;  // elements > tail+1, strictly increasing

  bool operator==(const IntegerSet&) const = default;
  auto operator<=>(const IntegerSet&) const = default;  // structural, for containers

  bool contains(long long x) const;
  long long max_elem() const { return above.empty() ? tail : above.back(); }
  // t-th element counted down from the largest (t = 0, 1, 2, ...);
  // equals the top-down enumeration entry j_{-t}.
  long long elem(long long t) const;
  int res(long long x) const { return static_cast<int>(((x % n) + n) % n); }
};

// Normalizes (n, tail, elems) into canonical form.  Elements <= tail are
// absorbed into the tail, duplicates are dropped, and a leading run
// tail+1, tail+2, ... is folded into the tail.  Throws on n < 2.
IntegerSet canonicalize(int n, long long tail, std::vector<long long> elems);

bool is_canonical(const IntegerSet& j);

// L_m = Z_{<=m}, the order-m vacuum set.
IntegerSet lowest_set(int n, long long m);

// order = |J \ Z_{<=0}| - |Z_{<=0} \ J| = tail + |above|.
long long order_of(const IntegerSet& j);

// Sum of displacements of the enumeration from its L_m rest position;
// zero exactly on L_m, and equal to the weight of the attached partition.
long long height_of(const IntegerSet& j);

// Gaps between consecutive elements never exceed n.
bool is_bounded(const IntegerSet& j);

// Closed under subtracting n.  Implies n-bounded.
bool is_stable(const IntegerSet& j);

// p in J with p-n vacant: bottom ends of the finite seams.  Ascending.
std::vector<long long> loose_ends(const IntegerSet& j);

// q vacant with q-n in J: the slot just above each seam's top.  Ascending.
std::vector<long long> tight_ends(const IntegerSet& j);

// Maximal arithmetic runs of step n inside J.  An infinite seam descends
// into the tail; a finite one starts at a loose end.
struct Seam {
  bool infinite = false;
  long long bottom = 0;  // meaningful only when finite
  long long top = 0;
};
std::vector<Seam> seams(const IntegerSet& j);

// Componentwise order on the top-down enumerations.  Requires equal moduli;
// returns false when the orders differ (incomparable).
bool bruhat_leq(const IntegerSet& k, const IntegerSet& j);

// -1, 0, +1 per the lexicographic order: the deepest differing enumeration
// entry decides.  Requires equal moduli and equal orders, else throws.
int lex_compare(const IntegerSet& k, const IntegerSet& j);

// s_i = product of transpositions (i+kn, i+1+kn): members congruent to i
// move up one, members congruent to i+1 move down one, then recanonicalize.
// An involution; preserves order and n-stability.
IntegerSet simple_reflection(int i, const IntegerSet& j);

// Word in the simple reflections, leftmost letter first.
struct ReducedWord {
  int n = 2;
  std::vector<int> letters;  // residues mod n

  bool operator==(const ReducedWord&) const = default;
};

// Applies the word as a composition: rightmost letter acts first.
IntegerSet weyl_apply(const ReducedWord& w, IntegerSet j);

// Coxeter length of the word's product, computed as the inversion count of
// the affine permutation it defines (w(x+n) = w(x)+n, window w(0..n-1)).
long long word_length(const ReducedWord& w);
bool word_is_reduced(const ReducedWord& w);

// Partition attached to J: lambda_k = j_{-(k-1)} - (m-k+1), the displacement
// of the k-th largest element.  Weakly decreasing, sum equals height(J);
// J is n-bounded iff successive differences (last part included, against 0)
// are at most n-1.
std::vector<long long> to_partition(const IntegerSet& j);
IntegerSet from_partition(int n, long long m, const std::vector<long long>& lambda);

// Count of elements above `cutoff` per residue class.  cutoff must be at
// most tail so the discarded region is residue-balanced.
std::vector<long long> residue_counts(const IntegerSet& j, long long cutoff);

struct SetHash {
  size_t operator()(const IntegerSet& j) const;
};

}  // namespace roofbasis
