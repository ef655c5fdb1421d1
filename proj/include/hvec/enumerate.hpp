// Enumeration and counting of h-vectors by length: the census L(n), the
// refinements L_k(n), and the tail sequences s(n) and tau(n).
#pragma once

#include <map>
#include <vector>

#include "hvec/macaulay.hpp"

namespace hvec {

// All h-vectors with entry sum n, in ascending lexicographic order, bucketed
// by first entry h_1. The length-1 vector (1) has no h_1 and lives in a
// dedicated k = 0 bucket.
struct LengthCensus {
  Int n = 0;
  std::vector<HVector> vectors;
  std::map<Int, std::vector<std::size_t>> by_first_entry;  // k -> indices into vectors
};

// Depth-first extension from (1): at degree t >= 1 an entry m is admissible
// when 1 <= m <= min(remaining budget, h_t^<t>); h_1 is unconstrained.
LengthCensus enumerate_L(Int n);

// |L(n)|, computed by memoized counting over (degree, last entry, budget)
// states without materializing vectors. The table is rebuilt per call.
Int count_L(Int n);

// |L_k(n)| = number of h-vectors of length n with h_1 = k. Zero when k >= n;
// count_Lk(1, k) = 0 for every k >= 1 (the vector (1) sits in the k = 0
// bucket).
Int count_Lk(Int n, Int k);

// Smallest k >= 1 with n <= C(k+2, 2).
Int s_of(Int n);

// tau(n) = sum of count_Lk(n, k) for k = s(n)..n-1; tau(1) = 1 (the k = 0
// bucket counted once).
Int tau_direct(Int n);

// Same sequence via the two-case recurrence
//   tau(n) = tau(n-1) + count_Lk(n, s(n))   if s(n) = s(n-1)
//   tau(n) = tau(n-1)                       if s(n) > s(n-1)
// anchored with s(1) treated as the bucket index 0 of the vector (1), which
// makes the recurrence agree with tau_direct at every n.
Int tau_recursive(Int n);

// True iff count_Lk(n+1, k+1) == count_Lk(n, k). Only defined under the
// hypothesis C(k+2, 2) >= n; otherwise a domain error.
bool check_shift_identity(Int n, Int k);

}  // namespace hvec
