#include "roofbasis/roof.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace roofbasis {

namespace {

IntegerSet replace_above(const IntegerSet& j, long long out, long long in) {
  std::vector<long long> elems;
  elems.reserve(j.above.size() + 1);
  for (long long x : j.above)
    if (x != out) elems.push_back(x);
  elems.push_back(in);
  return canonicalize(j.n, j.tail, std::move(elems));
}

}  // namespace

std::pair<IntegerSet, UpStep> up(const IntegerSet& j) {
  if (!is_bounded(j)) throw std::invalid_argument("up: set is not n-bounded");
  const auto loose = loose_ends(j);
  if (loose.empty()) throw std::invalid_argument("up: set is already n-stable");
  const long long p = loose.back();
  const long long lim = j.max_elem() + j.n;  // some seam top + n lands here
  for (long long q = p + 1; q <= lim; ++q) {
    if (j.contains(q)) continue;
    if (!j.contains(q - j.n)) continue;
    if ((q - p) % j.n == 0) continue;
    return {replace_above(j, p, q), UpStep{p, q}};
  }
  throw std::logic_error("up: no admissible landing below the scan limit");
}

RoofResult roof(const IntegerSet& j) {
  if (!is_bounded(j)) throw std::invalid_argument("roof: set is not n-bounded");
  RoofResult out;
  out.stable = j;
  while (!is_stable(out.stable)) {
    auto [next, step] = up(out.stable);
    out.stable = std::move(next);
    out.steps.push_back(step);
    if (out.steps.size() > 1000000)
      throw std::logic_error("roof: raise chain failed to stabilize");
  }
  return out;
}

std::vector<IntegerSet> up_inverse(const IntegerSet& jh) {
  if (!is_bounded(jh)) throw std::invalid_argument("up_inverse: set is not n-bounded");
  const int n = jh.n;
  constexpr long long kNegInf = std::numeric_limits<long long>::min() / 4;
  const auto loose = loose_ends(jh);
  const long long p_hat = loose.empty() ? kNegInf : loose.back();
  const long long p_tilde = loose.size() < 2 ? kNegInf : loose[loose.size() - 2];
  const auto tights = tight_ends(jh);

  std::vector<IntegerSet> out;
  auto emit = [&](long long q, long long p) {
    IntegerSet pre = replace_above(jh, q, p);
    assert(is_bounded(pre));
    out.push_back(std::move(pre));
  };
  // A tight end strictly between p and q would be a closer landing for the
  // re-raised p, except when it sits in p's own residue class (never chosen).
  auto blocked = [&](long long p, long long q) {
    for (long long t : tights) {
      if (t >= q) break;
      if (t > p && (t - p) % n != 0) return true;
    }
    return false;
  };

  for (long long q : jh.above) {
    if (!jh.contains(q - n)) continue;   // needs a seam of length >= 2 below q
    if (jh.contains(q + n)) continue;    // q must top its seam
    if (p_hat != kNegInf && q <= p_hat - n) continue;
    // doubly-vacant slots above every loose end
    const long long lo = std::max(p_hat, jh.tail);  // vacancy also forces p > tail
    for (long long p = lo + 1; p < q; ++p) {
      if (jh.contains(p)) continue;
      if (jh.contains(p - n)) continue;
      if ((q - p) % n == 0) continue;
      if (blocked(p, q)) continue;
      emit(q, p);
    }
    // sliding the maximal finite seam down by one
    if (p_hat != kNegInf) {
      const long long p = p_hat - n;  // above the tail: p_hat is loose
      if (!jh.contains(p - n) && p_tilde < p && (q - p) % n != 0 && !blocked(p, q))
        emit(q, p);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IntegerSet& a, const IntegerSet& b) { return lex_compare(a, b) < 0; });
  return out;
}

ReducedWord reduced_word_from_extremal(const IntegerSet& k) {
  if (!is_stable(k)) throw std::invalid_argument("reduced_word_from_extremal: set is not n-stable");
  ReducedWord word;
  word.n = k.n;
  IntegerSet cur = k;
  long long guard = height_of(k);  // each reflection lowers height by >= 1
  while (!cur.above.empty()) {
    long long r = 0;
    bool found = false;
    for (long long x : cur.above) {
      if (!cur.contains(x - 1)) {  // minimal hole; x = min(above) gives tail+1 at worst
        r = x - 1;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("reduced_word_from_extremal: no hole in a non-vacuum set");
    word.letters.push_back(cur.res(r));
    cur = simple_reflection(cur.res(r), cur);
    if (--guard < 0) throw std::logic_error("reduced_word_from_extremal: descent failed to reach L_m");
  }
  return word;
}

namespace {

const std::vector<IntegerSet>& stable_ideal(const IntegerSet& k,
                                            std::map<IntegerSet, std::vector<IntegerSet>>& memo) {
  auto it = memo.find(k);
  if (it != memo.end()) return it->second;
  std::vector<IntegerSet> ideal;
  if (k.above.empty()) {
    ideal.push_back(k);
  } else {
    long long r = 0;
    for (long long x : k.above) {
      if (!k.contains(x - 1)) {
        r = x - 1;
        break;
      }
    }
    const int i = k.res(r);
    const IntegerSet lower = simple_reflection(i, k);
    // lifting: ideal(k) = ideal(s k) together with its image under s
    std::set<IntegerSet> acc;
    for (const IntegerSet& v : stable_ideal(lower, memo)) {
      acc.insert(v);
      acc.insert(simple_reflection(i, v));
    }
    ideal.assign(acc.begin(), acc.end());
  }
  return memo.emplace(k, std::move(ideal)).first->second;
}

}  // namespace

std::vector<IntegerSet> enumerate_stable_below(const IntegerSet& kw) {
  if (!is_stable(kw)) throw std::invalid_argument("enumerate_stable_below: set is not n-stable");
  std::map<IntegerSet, std::vector<IntegerSet>> memo;
  std::vector<IntegerSet> out = stable_ideal(kw, memo);
  std::sort(out.begin(), out.end(),
            [](const IntegerSet& a, const IntegerSet& b) { return lex_compare(a, b) < 0; });
  return out;
}

std::vector<IntegerSet> demazure_bottom_up(const IntegerSet& kw) {
  std::set<IntegerSet> seen;
  std::deque<IntegerSet> queue;
  for (IntegerSet& k : enumerate_stable_below(kw)) {
    if (seen.insert(k).second) queue.push_back(std::move(k));
  }
  while (!queue.empty()) {
    IntegerSet cur = std::move(queue.front());
    queue.pop_front();
    for (IntegerSet& pre : up_inverse(cur)) {
      if (seen.insert(pre).second) queue.push_back(std::move(pre));
    }
  }
  std::vector<IntegerSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(),
            [](const IntegerSet& a, const IntegerSet& b) { return lex_compare(a, b) < 0; });
  return out;
}

bool member(const IntegerSet& j, const IntegerSet& kw) {
  if (j.n != kw.n) throw std::invalid_argument("member: modulus mismatch");
  if (!is_stable(kw)) throw std::invalid_argument("member: extremal set is not n-stable");
  if (order_of(j) != order_of(kw)) throw std::invalid_argument("member: order mismatch");
  return bruhat_leq(roof(j).stable, kw);
}

}  // namespace roofbasis
