#include "roofbasis/fock.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace roofbasis {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void check_keys(const FockVector& v) {
  const IntegerSet* first = nullptr;
  for (const auto& [k, c] : v) {
    assert(c != 0);
    if (!first) {
      first = &k;
      continue;
    }
    if (k.n != first->n || order_of(k) != order_of(*first))
      throw std::logic_error("fock: mixed moduli or orders in one vector");
  }
}

// Single substitution e_K -> sign * e_{K\q+p}; q present, p vacant, p < q.
// p vacant forces p > tail, so the crossing count runs over `above` only.
void add_term(FockVector& acc, const IntegerSet& k, const Coeff& c,
              long long p, long long q) {
  long long crossings = 0;
  std::vector<long long> elems;
  elems.reserve(k.above.size() + 1);
  for (long long x : k.above) {
    if (x == q) continue;
    if (x > p && x < q) ++crossings;
    elems.push_back(x);
  }
  elems.push_back(p);
  IntegerSet moved = canonicalize(k.n, k.tail, std::move(elems));
  Coeff& slot = acc[std::move(moved)];
  if (crossings % 2 == 0)
    slot += c;
  else
    slot -= c;
}

void drop_zeros(FockVector& v) {
  for (auto it = v.begin(); it != v.end();)
    it = (it->second == 0) ? v.erase(it) : std::next(it);
}

}  // namespace

FockVector basis_vector(const IntegerSet& k) {
  FockVector v;
  v.emplace(k, 1);
  return v;
}

Coeff coefficient(const FockVector& v, const IntegerSet& k) {
  auto it = v.find(k);
  return it == v.end() ? Coeff(0) : it->second;
}

FockVector e_prime_apply(long long p, long long q, const FockVector& v) {
  if (p >= q) throw std::invalid_argument("e_prime_apply: requires p < q");
  check_keys(v);
  FockVector out;
  for (const auto& [k, c] : v) {
    if (!k.contains(q) || k.contains(p)) continue;
    add_term(out, k, c, p, q);
  }
  drop_zeros(out);
  return out;
}

FockVector e_hat_apply(const OperatorSpec& op, const FockVector& v) {
  if (op.p >= op.q) throw std::invalid_argument("e_hat_apply: requires p < q");
  check_keys(v);
  FockVector out;
  for (const auto& [k, c] : v) {
    // p + shift must be vacant (so above the tail) and q + shift present
    const long long n = k.n;
    const long long k_lo = floor_div(k.tail - op.p, n) + 1;
    const long long k_hi = floor_div(k.max_elem() - op.q, n);
    for (long long s = k_lo; s <= k_hi; ++s) {
      const long long p = op.p + s * n;
      const long long q = op.q + s * n;
      if (!k.contains(q) || k.contains(p)) continue;
      add_term(out, k, c, p, q);
    }
  }
  drop_zeros(out);
  return out;
}

FockVector standard_vector(const IntegerSet& j) {
  const RoofResult r = roof(j);
  FockVector v = basis_vector(r.stable);
  for (auto it = r.steps.rbegin(); it != r.steps.rend(); ++it)
    v = e_hat_apply(OperatorSpec{it->p, it->q}, v);
  return v;
}

std::vector<TraceRun> trace_runs(const std::vector<UpStep>& steps, int n) {
  if (n < 2) throw std::invalid_argument("trace_runs: modulus must be at least 2");
  std::vector<TraceRun> runs;
  for (const UpStep& s : steps) {
    const bool fresh =
        runs.empty() || ((s.p - runs.back().p0) % n + n) % n != 0;
    if (fresh) {
      runs.push_back(TraceRun{s.p, {}});
    }
    ++runs.back().mu[s.q - s.p];
  }
  return runs;
}

Coeff leading_coefficient_formula(const IntegerSet& j) {
  const RoofResult r = roof(j);
  Coeff out = 1;
  for (const TraceRun& run : trace_runs(r.steps, j.n))
    for (const auto& [d, mu] : run.mu) out *= factorial(mu);
  return out;
}

FockVector divided_vector(const IntegerSet& j) {
  const RoofResult r = roof(j);
  const auto runs = trace_runs(r.steps, j.n);
  FockVector v = basis_vector(r.stable);
  // later runs act first; operators inside a run commute, so grouping the
  // equal jumps into divided powers is sound
  for (auto rit = runs.rbegin(); rit != runs.rend(); ++rit) {
    for (const auto& [d, mu] : rit->mu) {
      const OperatorSpec op{rit->p0, rit->p0 + d};
      for (long long k = 0; k < mu; ++k) v = e_hat_apply(op, v);
      const Coeff den = factorial(mu);
      for (auto& [key, c] : v) {
        if (c % den != 0)
          throw std::logic_error("divided_vector: inexact division by a run factorial");
        c /= den;
      }
    }
  }
  return v;
}

FockVector mod_p_reduce(const FockVector& v, long long p) {
  if (p < 2) throw std::invalid_argument("mod_p_reduce: modulus must be at least 2");
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("mod_p_reduce: modulus is not prime");
  FockVector out;
  for (const auto& [k, c] : v) {
    Coeff r = c % p;
    if (r < 0) r += p;
    if (r != 0) out.emplace(k, std::move(r));
  }
  return out;
}

Coeff factorial(long long k) {
  if (k < 0) throw std::invalid_argument("factorial: negative argument");
  Coeff out = 1;
  for (long long i = 2; i <= k; ++i) out *= i;
  return out;
}

}  // namespace roofbasis
