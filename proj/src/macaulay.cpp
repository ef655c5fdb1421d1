#include "hvec/macaulay.hpp"

#include <numeric>
#include <stdexcept>

namespace hvec {

Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("integer addition overflow");
  }
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer multiplication overflow");
  }
  return out;
}

Int binom(Int n, Int k) {
  if (n < 0 || k < 0) throw std::domain_error("binom: negative argument");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) {
    // r * (n-k+i) stays divisible by i, so the division is exact
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

Int MacaulayRep::value() const {
  Int total = 0;
  Int index = degree;
  for (Int top : tops) {
    total = checked_add(total, binom(top, index));
    --index;
  }
  return total;
}

MacaulayRep macaulay_rep(Int a, Int d) {
  if (a < 1) throw std::domain_error("macaulay_rep: a must be >= 1");
  if (d < 1) throw std::domain_error("macaulay_rep: d must be >= 1");
  MacaulayRep rep;
  rep.degree = d;
  Int rem = a;
  Int i = d;
  while (rem > 0) {
    // largest b with C(b, i) <= rem, located by ascending scan from b = i
    Int b = i;
    while (binom(b + 1, i) <= rem) ++b;
    rep.tops.push_back(b);
    rem -= binom(b, i);
    --i;
  }
  return rep;
}

Int macaulay_bound(Int a, Int d) {
  if (a < 0) throw std::domain_error("macaulay_bound: a must be >= 0");
  if (a == 0) return 0;
  const MacaulayRep rep = macaulay_rep(a, d);
  Int total = 0;
  Int i = rep.degree;
  for (Int top : rep.tops) {
    total = checked_add(total, binom(top + 1, i + 1));
    --i;
  }
  return total;
}

bool is_valid_growth(Int current, Int next, Int t) {
  if (t < 1) throw std::domain_error("is_valid_growth: t must be >= 1");
  if (current < 1 || next < 1) {
    throw std::domain_error("is_valid_growth: entries must be positive");
  }
  return next <= macaulay_bound(current, t);
}

bool is_h_vector(std::span<const Int> entries) {
  if (entries.empty() || entries.front() != 1) return false;
  for (Int e : entries) {
    if (e < 1) return false;
  }
  for (std::size_t t = 1; t + 1 < entries.size(); ++t) {
    if (entries[t + 1] > macaulay_bound(entries[t], static_cast<Int>(t))) {
      return false;
    }
  }
  return true;
}

bool is_h_vector(const CandidateVector& v) { return is_h_vector(std::span<const Int>(v.entries())); }

CandidateVector::CandidateVector(Vec entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.front() != 1) {
    throw std::invalid_argument("CandidateVector: must start with 1");
  }
  for (Int e : entries_) {
    if (e < 1) throw std::invalid_argument("CandidateVector: entries must be positive");
  }
}

Int CandidateVector::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), Int{0}, checked_add);
}

HVector::HVector(Vec entries) : entries_(std::move(entries)) {
  if (!is_h_vector(std::span<const Int>(entries_))) {
    throw std::invalid_argument("HVector: sequence violates the growth condition");
  }
}

Int HVector::length() const {
  return std::accumulate(entries_.begin(), entries_.end(), Int{0}, checked_add);
}

}  // namespace hvec
