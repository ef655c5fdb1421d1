#include "hvec/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hvec {

namespace {

// Memoized count of completions of a partial vector whose last entry is
// `last` at degree t with `budget` remaining. One instance per top-level
// call; no state is shared across calls.
class GrowthCounter {
 public:
  explicit GrowthCounter(Int n)
      : n_(n),
        memo_(static_cast<std::size_t>((n + 1) * (n + 1) * (n + 1)), -1),
        bounds_(static_cast<std::size_t>((n + 1) * (n + 1)), -1) {}

  Int ways(Int t, Int last, Int budget) {
    if (budget == 0) return 1;
    const std::size_t key = static_cast<std::size_t>((t * (n_ + 1) + last) * (n_ + 1) + budget);
    if (memo_[key] >= 0) return memo_[key];
    Int total = 0;
    const Int top = std::min(budget, bound(last, t));
    for (Int m = 1; m <= top; ++m) {
      total = checked_add(total, ways(t + 1, m, budget - m));
    }
    memo_[key] = total;
    return total;
  }

 private:
  Int bound(Int last, Int t) {
    const std::size_t key = static_cast<std::size_t>(last * (n_ + 1) + t);
    if (bounds_[key] < 0) bounds_[key] = macaulay_bound(last, t);
    return bounds_[key];
  }

  Int n_;
  Vec memo_;
  Vec bounds_;
};

void require_positive(Int n, const char* what) {
  if (n < 1) throw std::domain_error(std::string(what) + ": n must be >= 1");
}

void extend(Vec& partial, Int budget, std::vector<HVector>& out) {
  if (budget == 0) {
    out.emplace_back(partial);
    return;
  }
  const Int t = static_cast<Int>(partial.size()) - 1;
  const Int top = t == 0 ? budget : std::min(budget, macaulay_bound(partial.back(), t));
  for (Int m = 1; m <= top; ++m) {
    partial.push_back(m);
    extend(partial, budget - m, out);
    partial.pop_back();
  }
}

}  // namespace

LengthCensus enumerate_L(Int n) {
  require_positive(n, "enumerate_L");
  LengthCensus census;
  census.n = n;
  Vec partial = {1};
  extend(partial, n - 1, census.vectors);
  for (std::size_t i = 0; i < census.vectors.size(); ++i) {
    const Vec& e = census.vectors[i].entries();
    const Int k = e.size() > 1 ? e[1] : 0;
    census.by_first_entry[k].push_back(i);
  }
  return census;
}

Int count_L(Int n) {
  require_positive(n, "count_L");
  if (n == 1) return 1;
  GrowthCounter counter(n);
  Int total = 0;
  for (Int h1 = 1; h1 < n; ++h1) {
    total = checked_add(total, counter.ways(1, h1, n - 1 - h1));
  }
  return total;
}

Int count_Lk(Int n, Int k) {
  require_positive(n, "count_Lk");
  if (k < 1) throw std::domain_error("count_Lk: k must be >= 1");
  if (k >= n) return 0;
  GrowthCounter counter(n);
  return counter.ways(1, k, n - 1 - k);
}

Int s_of(Int n) {
  require_positive(n, "s_of");
  Int k = 1;
  while (binom(k + 2, 2) < n) ++k;
  return k;
}

Int tau_direct(Int n) {
  require_positive(n, "tau_direct");
  if (n == 1) return 1;
  GrowthCounter counter(n);
  Int total = 0;
  for (Int k = s_of(n); k < n; ++k) {
    total = checked_add(total, counter.ways(1, k, n - 1 - k));
  }
  return total;
}

Int tau_recursive(Int n) {
  require_positive(n, "tau_recursive");
  Int tau = 1;
  Int prev_s = 0;  // the (1) bucket, k = 0
  for (Int m = 2; m <= n; ++m) {
    const Int s = s_of(m);
    if (s == prev_s) tau = checked_add(tau, count_Lk(m, s));
    prev_s = s;
  }
  return tau;
}

bool check_shift_identity(Int n, Int k) {
  require_positive(n, "check_shift_identity");
  if (k < 1) throw std::domain_error("check_shift_identity: k must be >= 1");
  if (binom(k + 2, 2) < n) {
    throw std::domain_error("check_shift_identity: requires C(k+2,2) >= n");
  }
  return count_Lk(n + 1, k + 1) == count_Lk(n, k);
}

}  // namespace hvec
