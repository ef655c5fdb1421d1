// Exact checked integer arithmetic, Macaulay binomial representations, the
// growth bound a^<d>, and validation of candidate h-vectors.
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace hvec {

using Int = std::int64_t;
using Vec = std::vector<Int>;

// Checked 64-bit arithmetic. Overflow throws std::overflow_error instead of
// wrapping or silently widening.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

// Exact binomial coefficient C(n, k); 0 when k > n.
Int binom(Int n, Int k);

// The unique decomposition a = C(b_d, d) + C(b_{d-1}, d-1) + ... + C(b_j, j)
// with b_d > b_{d-1} > ... > b_j >= j >= 1. `tops` holds b_d, ..., b_j in
// descending index order.
struct MacaulayRep {
  Int degree = 0;
  Vec tops;

  Int lower_index() const { return degree - static_cast<Int>(tops.size()) + 1; }
  Int value() const;  // reconstructs the represented integer
};

// Greedy construction of the representation of a in degree d. Requires a >= 1
// and d >= 1; a = 0 is a domain error (only macaulay_bound handles zero).
MacaulayRep macaulay_rep(Int a, Int d);

// The growth bound a^<d> = sum of C(b_i + 1, i + 1); 0^<d> = 0.
Int macaulay_bound(Int a, Int d);

// True iff `next` is an admissible successor of `current` at degree t >= 1,
// i.e. next <= current^<t>.
bool is_valid_growth(Int current, Int next, Int t);

// True iff `entries` is a valid h-vector: nonempty, leading 1, positive
// entries, and admissible growth at every consecutive pair.
bool is_h_vector(std::span<const Int> entries);

// An unvalidated positive-integer sequence starting with 1. Shared raw shape
// of enumeration candidates; carries no growth guarantee.
class CandidateVector {
 public:
  explicit CandidateVector(Vec entries);  // throws std::invalid_argument

  const Vec& entries() const noexcept { return entries_; }
  Int sum() const;

  friend bool operator==(const CandidateVector&, const CandidateVector&) = default;
  friend auto operator<=>(const CandidateVector&, const CandidateVector&) = default;

 private:
  Vec entries_;
};

bool is_h_vector(const CandidateVector& v);

// A validated h-vector (1, h_1, ..., h_s). Construction enforces the growth
// condition, so instances can be assumed valid everywhere downstream.
class HVector {
 public:
  explicit HVector(Vec entries);  // throws std::invalid_argument

  const Vec& entries() const noexcept { return entries_; }
  Int length() const;        // sum of entries
  Int socle_degree() const { return static_cast<Int>(entries_.size()) - 1; }

  friend bool operator==(const HVector&, const HVector&) = default;
  friend auto operator<=>(const HVector&, const HVector&) = default;

 private:
  Vec entries_;
};

}  // namespace hvec
