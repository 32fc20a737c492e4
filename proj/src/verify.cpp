#include "roofbasis/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <set>
#include <sstream>

#include "roofbasis/crystal.hpp"
#include "roofbasis/fock.hpp"
#include "roofbasis/io.hpp"
#include "roofbasis/reference.hpp"
#include "roofbasis/roof.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace roofbasis {

namespace {

constexpr size_t kMaxNotes = 8;

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string suite_name(const char* kind, const SuiteSpec& s) {
  std::ostringstream os;
  os << kind << "(n=" << s.n << ",m=" << s.m << ",H=" << s.height << ")";
  return os.str();
}

// Runs check(i) over [0, count); a nonempty return is a failure note.
// jobs <= 1 takes the plain serial path, which the tests pin the parallel
// path against.  check must not throw; wrap bodies in guarded().
template <class Check>
void run_indexed(long long count, int jobs, std::vector<std::string>& notes, Check&& check) {
  notes.assign(static_cast<size_t>(count), std::string());
  if (jobs <= 1) {
    for (long long i = 0; i < count; ++i) notes[static_cast<size_t>(i)] = check(i);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
  for (long long i = 0; i < count; ++i) notes[static_cast<size_t>(i)] = check(i);
#else
  for (long long i = 0; i < count; ++i) notes[static_cast<size_t>(i)] = check(i);
#endif
}

template <class Body>
std::string guarded(const std::string& subject, Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return subject + ": unexpected exception: " + e.what();
  }
}

void collect(SweepReport& r, const std::vector<std::string>& notes) {
  r.cases = static_cast<long long>(notes.size());
  for (const std::string& s : notes) {
    if (s.empty()) continue;
    ++r.failures;
    if (r.notes.size() < kMaxNotes) r.notes.push_back(s);
  }
}

}  // namespace

std::vector<SuiteSpec> default_suites() {
  return {{2, 0, 10}, {3, 0, 8}, {4, 0, 7}, {5, 14, 6}};
}

SweepReport sweep_roof_ceiling(const SuiteSpec& s, int jobs) {
  SweepReport r;
  r.suite = suite_name("roof-ceiling", s);
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<IntegerSet> elems = enumerate_crystal(s.n, s.m, s.height);
  const long long count = static_cast<long long>(elems.size());

  std::vector<std::string> notes(static_cast<size_t>(count));
  auto check = [&elems](long long i, CeilingCache& cache) {
    const IntegerSet& j = elems[static_cast<size_t>(i)];
    return guarded(format_set(j), [&]() -> std::string {
      const RoofResult rr = roof(j);
      if (!is_stable(rr.stable)) return format_set(j) + ": roof output is not stable";
      const IntegerSet c = ceiling(j, cache);
      if (rr.stable != c)
        return format_set(j) + ": roof " + format_set(rr.stable) + " != ceiling " + format_set(c);
      return std::string();
    });
  };

  if (jobs <= 1) {
    CeilingCache cache;
    for (long long i = 0; i < count; ++i) notes[static_cast<size_t>(i)] = check(i, cache);
  } else {
#ifdef _OPENMP
#pragma omp parallel num_threads(jobs)
    {
      CeilingCache cache;
#pragma omp for schedule(dynamic, 16)
      for (long long i = 0; i < count; ++i) notes[static_cast<size_t>(i)] = check(i, cache);
    }
#else
    CeilingCache cache;
    for (long long i = 0; i < count; ++i) notes[static_cast<size_t>(i)] = check(i, cache);
#endif
  }

  collect(r, notes);
  r.seconds = elapsed_since(t0);
  return r;
}

SweepReport sweep_triangular(const SuiteSpec& s, int jobs) {
  SweepReport r;
  r.suite = suite_name("triangular", s);
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<IntegerSet> elems = enumerate_crystal(s.n, s.m, s.height);

  std::vector<std::string> notes;
  run_indexed(static_cast<long long>(elems.size()), jobs, notes, [&elems](long long i) {
    const IntegerSet& j = elems[static_cast<size_t>(i)];
    return guarded(format_set(j), [&]() -> std::string {
      const FockVector v = standard_vector(j);
      if (v.empty()) return format_set(j) + ": empty expansion";
      const long long h = height_of(j);
      const Weight w = weight(j);
      for (const auto& [k, c] : v) {
        if (c == 0) return format_set(j) + ": stored zero coefficient at " + format_set(k);
        if (lex_compare(k, j) > 0)
          return format_set(j) + ": support exceeds it at " + format_set(k);
        if (height_of(k) != h)
          return format_set(j) + ": height drift at " + format_set(k);
        if (!(weight(k) == w))
          return format_set(j) + ": weight drift at " + format_set(k);
      }
      const Coeff lead = coefficient(v, j);
      if (lead == 0) return format_set(j) + ": vanishing leading coefficient";
      if (abs(lead) != leading_coefficient_formula(j))
        return format_set(j) + ": leading coefficient " + lead.str() +
               " vs formula " + leading_coefficient_formula(j).str();
      return std::string();
    });
  });

  collect(r, notes);
  r.seconds = elapsed_since(t0);
  return r;
}

SweepReport sweep_upinv(const SuiteSpec& s, int jobs) {
  SweepReport r;
  r.suite = suite_name("upinv", s);
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<IntegerSet> elems = enumerate_crystal(s.n, s.m, s.height);

  std::vector<std::string> notes;
  run_indexed(static_cast<long long>(elems.size()), jobs, notes, [&elems](long long i) {
    const IntegerSet& jh = elems[static_cast<size_t>(i)];
    return guarded(format_set(jh), [&]() -> std::string {
      std::vector<IntegerSet> formula = up_inverse(jh);
      std::vector<IntegerSet> brute = brute_up_inverse(jh);
      std::sort(formula.begin(), formula.end());
      std::sort(brute.begin(), brute.end());
      if (formula != brute) {
        std::ostringstream os;
        os << format_set(jh) << ": formula " << formula.size() << " preimages vs brute "
           << brute.size();
        std::set<IntegerSet> a(formula.begin(), formula.end());
        std::set<IntegerSet> b(brute.begin(), brute.end());
        for (const IntegerSet& x : a)
          if (!b.count(x)) os << "; formula-only " << format_set(x);
        for (const IntegerSet& x : b)
          if (!a.count(x)) os << "; brute-only " << format_set(x);
        return os.str();
      }
      return std::string();
    });
  });

  collect(r, notes);
  r.seconds = elapsed_since(t0);
  return r;
}

SweepReport sweep_character(int n, long long m, int max_len, int jobs) {
  SweepReport r;
  {
    std::ostringstream os;
    os << "character(n=" << n << ",m=" << m << ",len<=" << max_len << ")";
    r.suite = os.str();
  }
  const auto t0 = std::chrono::steady_clock::now();

  // All reduced words up to the length bound, shortest first.
  std::vector<ReducedWord> words;
  std::vector<std::vector<int>> frontier = {{}};
  for (int len = 0; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& letters : frontier) {
      ReducedWord w{n, letters};
      if (!word_is_reduced(w)) continue;
      words.push_back(w);
      if (len == max_len) continue;
      for (int a = 0; a < n; ++a) {
        std::vector<int> ext = letters;
        ext.push_back(a);
        next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }

  // Group by the extremal set the word produces; words in one group are
  // distinct reduced expressions of the same element.
  std::map<IntegerSet, long long> cosets;
  const IntegerSet vac = lowest_set(n, m);
  for (const ReducedWord& w : words) ++cosets[weyl_apply(w, vac)];
  long long multi = 0;
  for (const auto& [k, c] : cosets)
    if (c > 1) ++multi;
  {
    std::ostringstream os;
    os << "words=" << words.size() << " elements=" << cosets.size()
       << " with-multiple-words=" << multi;
    r.info = os.str();
  }

  std::vector<std::string> notes;
  run_indexed(static_cast<long long>(words.size()), jobs, notes, [&words, &vac, m](long long i) {
    const ReducedWord& w = words[static_cast<size_t>(i)];
    const std::string label = "word [" + format_word_compact(w) + "]";
    return guarded(label, [&]() -> std::string {
      const IntegerSet kw = weyl_apply(w, vac);
      const std::vector<IntegerSet> td = demazure_top_down(w, m);
      const std::vector<IntegerSet> bu = demazure_bottom_up(kw);
      const std::vector<IntegerSet> canon = demazure_top_down(reduced_word_from_extremal(kw), m);
      const std::set<IntegerSet> td_set(td.begin(), td.end());
      const std::set<IntegerSet> bu_set(bu.begin(), bu.end());
      const std::set<IntegerSet> canon_set(canon.begin(), canon.end());
      if (td_set != bu_set) {
        std::ostringstream os;
        os << label << ": top-down " << td.size() << " elements vs bottom-up " << bu.size();
        for (const IntegerSet& x : td_set)
          if (!bu_set.count(x)) os << "; top-down-only " << format_set(x);
        for (const IntegerSet& x : bu_set)
          if (!td_set.count(x)) os << "; bottom-up-only " << format_set(x);
        return os.str();
      }
      if (td_set != canon_set)
        return label + ": canonical word generates a different family";
      const std::map<Weight, long long> ch_td = character(td);
      const std::map<Weight, long long> ch_bu = character(bu);
      if (!(ch_td == ch_bu)) return label + ": characters differ between generations";
      long long total = 0;
      for (const auto& [wt, mult] : ch_td) total += mult;
      if (total != static_cast<long long>(td.size())) {
        std::ostringstream os;
        os << label << ": multiplicities sum to " << total << " but the crystal has "
           << td.size() << " elements";
        return os.str();
      }
      return std::string();
    });
  });

  collect(r, notes);
  r.seconds = elapsed_since(t0);
  return r;
}

std::string format_report(const SweepReport& r) {
  std::ostringstream os;
  os << r.suite << ": " << r.cases << " cases, " << r.failures << " failures, " << r.seconds
     << " s";
  if (!r.info.empty()) os << " [" << r.info << "]";
  os << "\n";
  for (const std::string& s : r.notes) os << "  " << s << "\n";
  if (r.failures > static_cast<long long>(r.notes.size()))
    os << "  ... " << (r.failures - static_cast<long long>(r.notes.size()))
       << " further failures suppressed\n";
  return os.str();
}

}  // namespace roofbasis
