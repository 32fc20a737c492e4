#include "roofbasis/integer_set.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace roofbasis {

bool IntegerSet::contains(long long x) const {
  if (x <= tail) return true;
  return std::binary_search(above.begin(), above.end(), x);
}

long long IntegerSet::elem(long long t) const {
  const long long k = static_cast<long long>(above.size());
  if (t < k) return above[static_cast<size_t>(k - 1 - t)];
  return tail - (t - k);
}

IntegerSet canonicalize(int n, long long tail, std::vector<long long> elems) {
  if (n < 2) throw std::invalid_argument("canonicalize: modulus must be at least 2");
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  size_t i = 0;
  while (i < elems.size() && elems[i] <= tail) ++i;  // already inside the tail
  while (i < elems.size() && elems[i] == tail + 1) {  // fold the leading run
    ++tail;
    ++i;
  }
  IntegerSet out;
  out.n = n;
  out.tail = tail;
  out.above.assign(elems.begin() + static_cast<long>(i), elems.end());
  return out;
}

bool is_canonical(const IntegerSet& j) {
  if (j.n < 2) return false;
  long long prev = j.tail + 1;  // above[0] must exceed tail+1
  for (long long x : j.above) {
    if (x <= prev) return false;
    prev = x;
  }
  return true;
}

IntegerSet lowest_set(int n, long long m) {
  if (n < 2) throw std::invalid_argument("lowest_set: modulus must be at least 2");
  IntegerSet out;
  out.n = n;
  out.tail = m;
  return out;
}

long long order_of(const IntegerSet& j) {
  return j.tail + static_cast<long long>(j.above.size());
}

long long height_of(const IntegerSet& j) {
  // With k elements above the tail, entry t from the bottom of `above` sits
  // at rest position tail+1+t, so each term below is >= 1.
  long long h = 0;
  for (size_t t = 0; t < j.above.size(); ++t)
    h += j.above[t] - j.tail - 1 - static_cast<long long>(t);
  return h;
}

bool is_bounded(const IntegerSet& j) {
  long long prev = j.tail;
  for (long long x : j.above) {
    if (x - prev > j.n) return false;
    prev = x;
  }
  return true;
}

bool is_stable(const IntegerSet& j) {
  for (long long x : j.above)
    if (!j.contains(x - j.n)) return false;
  return true;
}

std::vector<long long> loose_ends(const IntegerSet& j) {
  // p-n vacant forces p-n > tail, so candidates live in `above`.
  std::vector<long long> out;
  for (long long x : j.above)
    if (!j.contains(x - j.n)) out.push_back(x);
  return out;
}

std::vector<long long> tight_ends(const IntegerSet& j) {
  // q = x+n for a seam top x; tops are found among the last n tail slots
  // and the elements above.
  std::vector<long long> out;
  for (long long x = j.tail - j.n + 1; x <= j.tail; ++x)
    if (!j.contains(x + j.n)) out.push_back(x + j.n);
  for (long long x : j.above)
    if (!j.contains(x + j.n)) out.push_back(x + j.n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Seam> seams(const IntegerSet& j) {
  // Walk each residue class upward from its topmost tail slot.
  std::vector<Seam> out;
  for (int c = 0; c < j.n; ++c) {
    long long top = j.tail - ((j.res(j.tail) - c + j.n) % j.n);  // largest x <= tail, x = c mod n
    while (j.contains(top + j.n)) top += j.n;
    out.push_back(Seam{true, 0, top});
  }
  for (long long x : j.above) {
    if (j.contains(x - j.n)) continue;  // interior of a seam, or already walked
    Seam s;
    s.infinite = false;
    s.bottom = x;
    s.top = x;
    while (j.contains(s.top + j.n)) s.top += j.n;
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(),
            [](const Seam& a, const Seam& b) { return a.top < b.top; });
  return out;
}

bool bruhat_leq(const IntegerSet& k, const IntegerSet& j) {
  if (k.n != j.n) throw std::invalid_argument("bruhat_leq: modulus mismatch");
  if (order_of(k) != order_of(j)) return false;
  const long long t_max =
      static_cast<long long>(std::max(k.above.size(), j.above.size()));
  for (long long t = 0; t < t_max; ++t)
    if (k.elem(t) > j.elem(t)) return false;
  return true;  // below t_max both enumerations sit at m-t
}

int lex_compare(const IntegerSet& k, const IntegerSet& j) {
  if (k.n != j.n) throw std::invalid_argument("lex_compare: modulus mismatch");
  if (order_of(k) != order_of(j))
    throw std::invalid_argument("lex_compare: order mismatch");
  // The deepest differing entry is the first difference in the bottom-up
  // enumeration, so it decides.
  const long long t_max =
      static_cast<long long>(std::max(k.above.size(), j.above.size()));
  for (long long t = t_max - 1; t >= 0; --t) {
    const long long a = k.elem(t);
    const long long b = j.elem(t);
    if (a != b) return a < b ? -1 : 1;
  }
  return 0;
}

IntegerSet simple_reflection(int i, const IntegerSet& j) {
  const int n = j.n;
  i = ((i % n) + n) % n;
  // Pairs fully inside the tail are fixed; the only straddling pair is
  // (tail, tail+1) when tail = i mod n, which moves the tail top up.
  long long base = j.tail;
  std::vector<long long> elems;
  if (j.res(j.tail) == i) {
    base = j.tail - 1;
    elems.push_back(j.tail + 1);
  }
  for (long long x : j.above) {
    const int r = j.res(x);
    if (r == i)
      elems.push_back(x + 1);
    else if (r == (i + 1) % n)
      elems.push_back(x - 1);
    else
      elems.push_back(x);
  }
  return canonicalize(n, base, std::move(elems));
}

IntegerSet weyl_apply(const ReducedWord& w, IntegerSet j) {
  if (w.n != j.n) throw std::invalid_argument("weyl_apply: modulus mismatch");
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    j = simple_reflection(*it, j);
  return j;
}

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

long long word_length(const ReducedWord& w) {
  const int n = w.n;
  if (n < 2) throw std::invalid_argument("word_length: modulus must be at least 2");
  // Window values of the affine permutation; left-composing a reflection
  // applies it to the values.
  std::vector<long long> win(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c) win[static_cast<size_t>(c)] = c;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const int i = ((*it % n) + n) % n;
    for (auto& v : win) {
      const int r = static_cast<int>(((v % n) + n) % n);
      if (r == i)
        v += 1;
      else if (r == (i + 1) % n)
        v -= 1;
    }
  }
  // inversions (a, b): a in the window, b > a anywhere, w(a) > w(b)
  long long len = 0;
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      const long long k_lo = (c > a) ? 0 : 1;
      const long long d = win[static_cast<size_t>(a)] - win[static_cast<size_t>(c)];
      const long long k_hi = floor_div(d - 1, n);  // k < d/n
      if (k_hi >= k_lo) len += k_hi - k_lo + 1;
    }
  }
  return len;
}

bool word_is_reduced(const ReducedWord& w) {
  return word_length(w) == static_cast<long long>(w.letters.size());
}

std::vector<long long> to_partition(const IntegerSet& j) {
  const long long m = order_of(j);
  std::vector<long long> lambda;
  for (long long t = 0; t < static_cast<long long>(j.above.size()); ++t)
    lambda.push_back(j.elem(t) - (m - t));
  // entries from the tail region are zero by construction
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  return lambda;
}

IntegerSet from_partition(int n, long long m, const std::vector<long long>& lambda) {
  long long prev = -1;
  for (long long part : lambda) {
    if (part < 0) throw std::invalid_argument("from_partition: negative part");
    if (prev >= 0 && part > prev)
      throw std::invalid_argument("from_partition: parts must be weakly decreasing");
    prev = part;
  }
  size_t len = lambda.size();
  while (len > 0 && lambda[len - 1] == 0) --len;
  std::vector<long long> elems;
  for (size_t t = 0; t < len; ++t)
    elems.push_back(lambda[t] + m - static_cast<long long>(t));
  return canonicalize(n, m - static_cast<long long>(len), std::move(elems));
}

std::vector<long long> residue_counts(const IntegerSet& j, long long cutoff) {
  if (cutoff > j.tail)
    throw std::invalid_argument("residue_counts: cutoff must not exceed the tail");
  std::vector<long long> cnt(static_cast<size_t>(j.n), 0);
  for (long long x = cutoff + 1; x <= j.tail; ++x) ++cnt[static_cast<size_t>(j.res(x))];
  for (long long x : j.above) ++cnt[static_cast<size_t>(j.res(x))];
  return cnt;
}

size_t SetHash::operator()(const IntegerSet& j) const {
  size_t h = 1469598103934665603ULL;
  auto mix = [&h](long long v) {
    h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(j.n);
  mix(j.tail);
  for (long long x : j.above) mix(x);
  return h;
}

}  // namespace roofbasis
