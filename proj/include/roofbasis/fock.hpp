#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "roofbasis/integer_set.hpp"
#include "roofbasis/roof.hpp"

namespace roofbasis {

using Coeff = boost::multiprecision::cpp_int;

// Exact integer combination of wedge basis vectors e_K.  Keys share one
// modulus and one order; zero coefficients are never stored.
using FockVector = std::map<IntegerSet, Coeff>;

FockVector basis_vector(const IntegerSet& k);

Coeff coefficient(const FockVector& v, const IntegerSet& k);

// One matrix unit on wedges: e_K -> sign * e_{K\q+p} when q is present and
// p vacant, zero otherwise.  The sign is -1 to the number of members
// strictly between p and q (the crossings picked up moving p into q's
// slot).  Requires p < q.
FockVector e_prime_apply(long long p, long long q, const FockVector& v);

// Shift class of matrix units, p < q; only finitely many shifts act on any
// key.
struct OperatorSpec {
  long long p = 0;
  long long q = 0;
};
FockVector e_hat_apply(const OperatorSpec& op, const FockVector& v);

// v_J: the roof trace applied to the extremal wedge, first step outermost,
// so the step recorded first is applied last.
FockVector standard_vector(const IntegerSet& j);

// Seam runs of a trace: maximal blocks of consecutive steps whose departure
// slots share a residue class.  Each run maps jump size d = q-p to its
// multiplicity.
struct TraceRun {
  long long p0 = 0;                   // departure slot of the run's first step
  std::map<long long, long long> mu;  // jump size -> count
};
std::vector<TraceRun> trace_runs(const std::vector<UpStep>& steps, int n);

// |leading coefficient of v_J|: product over runs of mu_d! per jump size.
Coeff leading_coefficient_formula(const IntegerSet& j);

// The divided form: per run, apply each repeated shift operator mu times
// and divide by mu! exactly.  Leading coefficient is +-1.  Throws when a
// division fails to be exact.
FockVector divided_vector(const IntegerSet& j);

// Coefficients reduced into [0, p); zero terms dropped.  p must be prime.
FockVector mod_p_reduce(const FockVector& v, long long p);

Coeff factorial(long long k);

}  // namespace roofbasis
