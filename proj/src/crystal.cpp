#include "roofbasis/crystal.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace roofbasis {

Signature signature(int i, const IntegerSet& j) {
  const int n = j.n;
  i = ((i % n) + n) % n;
  const int ip1 = (i + 1) % n;
  // Inside the tail every i-element is followed by its i+1 neighbor, so the
  // pairs cancel; the single survivor is the tail top when it has residue i
  // (its partner tail+1 is vacant by canonicity).
  Signature sig;
  std::vector<long long>& stack = sig.lower;
  auto feed = [&](long long x, int r) {
    if (r == i) {
      stack.push_back(x);
    } else {
      if (!stack.empty())
        stack.pop_back();
      else
        sig.upper.push_back(x);
    }
  };
  if (j.res(j.tail) == i) feed(j.tail, i);
  for (long long x : j.above) {
    const int r = j.res(x);
    if (r == i || r == ip1) feed(x, r);
  }
  return sig;
}

namespace {

IntegerSet move_element(const IntegerSet& j, long long from, long long to) {
  std::vector<long long> elems;
  elems.reserve(j.above.size() + 1);
  long long base = j.tail;
  if (from == j.tail) {
    base = j.tail - 1;
  }
  for (long long x : j.above)
    if (x != from) elems.push_back(x);
  elems.push_back(to);
  return canonicalize(j.n, base, std::move(elems));
}

}  // namespace

std::optional<IntegerSet> crystal_f(int i, const IntegerSet& j) {
  const Signature sig = signature(i, j);
  if (sig.lower.empty()) return std::nullopt;
  const long long r = sig.lower.front();
  assert(!j.contains(r + 1));  // r would have cancelled otherwise
  return move_element(j, r, r + 1);
}

std::optional<IntegerSet> crystal_e(int i, const IntegerSet& j) {
  const Signature sig = signature(i, j);
  if (sig.upper.empty()) return std::nullopt;
  const long long r = sig.upper.back();
  assert(r > j.tail);          // tail contributes no upper token
  assert(!j.contains(r - 1));  // r would have cancelled otherwise
  return move_element(j, r, r - 1);
}

std::pair<IntegerSet, int> crystal_f_max(int i, IntegerSet j) {
  int count = 0;
  while (auto next = crystal_f(i, j)) {
    j = std::move(*next);
    ++count;
  }
  return {std::move(j), count};
}

std::pair<IntegerSet, int> crystal_e_max(int i, IntegerSet j) {
  int count = 0;
  while (auto next = crystal_e(i, j)) {
    j = std::move(*next);
    ++count;
  }
  return {std::move(j), count};
}

std::vector<IntegerSet> demazure_top_down(const ReducedWord& w, long long m) {
  if (!word_is_reduced(w)) throw std::invalid_argument("demazure_top_down: word is not reduced");
  std::set<IntegerSet> acc;
  acc.insert(lowest_set(w.n, m));
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    std::set<IntegerSet> next = acc;
    for (const IntegerSet& j : acc) {
      IntegerSet cur = j;
      while (auto moved = crystal_f(*it, cur)) {
        cur = std::move(*moved);
        next.insert(cur);
      }
    }
    acc.swap(next);
  }
  std::vector<IntegerSet> out(acc.begin(), acc.end());
  std::sort(out.begin(), out.end(),
            [](const IntegerSet& a, const IntegerSet& b) { return lex_compare(a, b) < 0; });
  return out;
}

bool demazure_member_top_down(const ReducedWord& w, const IntegerSet& j) {
  if (w.n != j.n) throw std::invalid_argument("demazure_member_top_down: modulus mismatch");
  if (!word_is_reduced(w))
    throw std::invalid_argument("demazure_member_top_down: word is not reduced");
  IntegerSet cur = j;
  for (int letter : w.letters) cur = crystal_e_max(letter, std::move(cur)).first;
  return cur == lowest_set(j.n, order_of(j));
}

namespace {

IntegerSet ceiling_impl(const IntegerSet& j, CeilingCache* cache,
                        std::vector<CeilingStep>* chain) {
  if (!is_bounded(j)) throw std::invalid_argument("ceiling: set is not n-bounded");
  if (j.above.empty()) return j;  // the vacuum is its own extremal
  if (cache) {
    auto it = cache->memo.find(j);
    if (it != cache->memo.end()) return it->second;
  }
  const long long r = j.above.front();
  const int i = j.res(r - 1);
  auto [stripped, count] = crystal_e_max(i, j);
  if (count == 0) throw std::logic_error("ceiling: raising stalled below the extremal");
  if (chain) chain->push_back(CeilingStep{r, stripped});
  IntegerSet out = simple_reflection(i, ceiling_impl(stripped, cache, chain));
  if (cache) cache->memo.emplace(j, out);
  return out;
}

}  // namespace

IntegerSet ceiling(const IntegerSet& j) {
  CeilingCache cache;
  return ceiling_impl(j, &cache, nullptr);
}

IntegerSet ceiling(const IntegerSet& j, CeilingCache& cache) {
  return ceiling_impl(j, &cache, nullptr);
}

IntegerSet ceiling_with_chain(const IntegerSet& j, std::vector<CeilingStep>& chain) {
  return ceiling_impl(j, nullptr, &chain);
}

Weight weight(const IntegerSet& j) {
  const int n = j.n;
  const long long m = order_of(j);
  const IntegerSet vac = lowest_set(n, m);
  const long long cutoff = std::min(j.tail, m);
  const auto cnt_j = residue_counts(j, cutoff);
  const auto cnt_v = residue_counts(vac, cutoff);
  std::vector<long long> excess(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c)
    excess[static_cast<size_t>(c)] = cnt_j[static_cast<size_t>(c)] - cnt_v[static_cast<size_t>(c)];

  // alpha[c] - alpha[c-1] = -excess[c] cyclically; the excesses sum to zero,
  // so a solution exists and is unique up to a constant shift.
  std::vector<long long> alpha(static_cast<size_t>(n), 0);
  for (int c = 1; c < n; ++c)
    alpha[static_cast<size_t>(c)] = alpha[static_cast<size_t>(c - 1)] - excess[static_cast<size_t>(c)];
  if (alpha[0] - alpha[static_cast<size_t>(n - 1)] != -excess[0])
    throw std::logic_error("weight: residue excesses do not balance");
  long long sum = 0;
  for (long long a : alpha) sum += a;
  const long long target = height_of(j);
  if ((target - sum) % n != 0)
    throw std::logic_error("weight: height normalization is not integral");
  const long long shift = (target - sum) / n;
  for (auto& a : alpha) a += shift;

  Weight w;
  w.n = n;
  w.label = static_cast<int>(((m % n) + n) % n);
  w.alpha = std::move(alpha);
  return w;
}

std::map<Weight, long long> character(const std::vector<IntegerSet>& elems) {
  std::map<Weight, long long> out;
  for (const IntegerSet& j : elems) ++out[weight(j)];
  return out;
}

namespace {

void partitions_rec(int n, long long budget, long long prev,
                    std::vector<long long>& parts,
                    std::vector<std::vector<long long>>& out) {
  if (prev <= n - 1) out.push_back(parts);  // the last part stands over 0
  const long long lo = std::max<long long>(1, prev - (n - 1));
  for (long long next = std::min(prev, budget); next >= lo; --next) {
    // staircase lower bound on what picking `next` still forces below it
    long long forced = 0;
    for (long long v = next - (n - 1); v > 0; v -= (n - 1)) forced += v;
    if (next + forced > budget) continue;
    parts.push_back(next);
    partitions_rec(n, budget - next, next, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<IntegerSet> enumerate_crystal(int n, long long m, long long max_height) {
  if (n < 2) throw std::invalid_argument("enumerate_crystal: modulus must be at least 2");
  if (max_height < 0) throw std::invalid_argument("enumerate_crystal: negative height bound");
  // partitions with successive differences at most n-1, the last part
  // measured against zero; exactly the n-bounded sets of order m
  std::vector<std::vector<long long>> parts_list;
  parts_list.push_back({});  // the vacuum
  std::vector<long long> parts;
  for (long long first = 1; first <= max_height; ++first) {
    long long forced = 0;
    for (long long v = first - (n - 1); v > 0; v -= (n - 1)) forced += v;
    if (first + forced > max_height) continue;
    parts.push_back(first);
    partitions_rec(n, max_height - first, first, parts, parts_list);
    parts.pop_back();
  }
  std::vector<IntegerSet> out;
  out.reserve(parts_list.size());
  for (const auto& lambda : parts_list) out.push_back(from_partition(n, m, lambda));
  std::sort(out.begin(), out.end(), [](const IntegerSet& a, const IntegerSet& b) {
    const long long ha = height_of(a);
    const long long hb = height_of(b);
    if (ha != hb) return ha < hb;
    return lex_compare(a, b) < 0;
  });
  return out;
}

}  // namespace roofbasis
