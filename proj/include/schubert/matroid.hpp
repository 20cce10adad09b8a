#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/polynomial.hpp"

namespace schubert {

/// Sorted, duplicate-free subset of the ground set [n] (1-based).
using ElementSet = std::vector<int>;

/// The set S defining the Schubert matroid SM_n(S). The ground set is [n]
/// with n = max(S); trailing loops beyond max(S) do not change the polytope.
class SchubertSet {
 public:
  /// Accepts elements in any order; rejects empty input, non-positive or
  /// repeated elements.
  explicit SchubertSet(std::vector<int> elements);

  const ElementSet& elements() const { return elements_; }
  int ground_size() const { return elements_.back(); }
  int rank() const { return static_cast<int>(elements_.size()); }
  /// 0/1 vector of length ground_size().
  std::vector<int> indicator() const;

  friend bool operator==(const SchubertSet&, const SchubertSet&) = default;

 private:
  ElementSet elements_;
};

/// Run-length block encoding (r_1, ..., r_{2m}) of the indicator vector:
/// r_1 zeros, r_2 ones, r_3 zeros, ... Even length, r_1 >= 0, r_i > 0 for i >= 2.
class RSequence {
 public:
  explicit RSequence(std::vector<long> blocks);

  std::span<const long> blocks() const { return blocks_; }
  /// Number of (zero-run, one-run) pairs m.
  int pairs() const { return static_cast<int>(blocks_.size() / 2); }
  /// r_{2j-1}, the j-th zero run (j is 1-based).
  long zero_run(int j) const { return blocks_[static_cast<std::size_t>(2 * j - 2)]; }
  /// r_{2j}, the j-th one run (j is 1-based).
  long one_run(int j) const { return blocks_[static_cast<std::size_t>(2 * j - 1)]; }
  long ground_size() const;
  long rank() const;

  friend bool operator==(const RSequence&, const RSequence&) = default;

 private:
  std::vector<long> blocks_;
};

RSequence set_to_rsequence(const SchubertSet& set);
SchubertSet rsequence_to_set(const RSequence& r);

/// Per-pair caps of the offset path: u_i = min{r_{2i-1}, sum_{j>i} r_{2j}},
/// v_i = min{r_{2i}, sum_{j<i} r_{2j-1}}; empty sums are 0.
struct UVBounds {
  std::vector<long> u;
  std::vector<long> v;
};

UVBounds uv_bounds(const RSequence& r);

// Named families.
RSequence uniform_rsequence(long k, long n);        // U_{k,n}: (n-k, k)
RSequence minimal_rsequence(long k, long n);        // T_{k,n}: (1, k-1, n-k-1, 1), (1, k) when k = n-1
RSequence sparse_paving_rsequence(long k, long n);  // Sp_{k,n}: (k-1, 1, 1, n-k-1)
RSequence catalan_rsequence(long n, long a, long b);  // (a, b) repeated n times

/// T <= S: equal size and the i-th smallest of T is at most the i-th smallest of S.
bool is_basis(const SchubertSet& set, std::span<const int> subset);

/// I is independent iff, sorted, its j-th element is at most the j-th element
/// of the |I| largest elements of S.
bool is_independent(const SchubertSet& set, std::span<const int> subset);

/// Rank by greedy matching: scan T downward, pairing each element with the
/// largest unmatched element of S that is >= it.
int rank(const SchubertSet& set, std::span<const int> subset);

struct SubsetClass {
  bool basis = false;
  bool independent = false;
  bool circuit = false;
  bool flat = false;
  bool hyperplane = false;

  bool circuit_hyperplane() const { return circuit && hyperplane; }
};

SubsetClass classify_subset(const SchubertSet& set, std::span<const int> subset);

/// All bases {T : T <= S}, each sorted, in lexicographic order.
std::vector<ElementSet> enumerate_bases(const SchubertSet& set);

/// Subsets of size rk(M) that are both circuits and hyperplanes.
std::vector<ElementSet> circuit_hyperplanes(const SchubertSet& set);

/// Brute force: every rank-sized subset is a basis or a circuit-hyperplane.
bool is_sparse_paving(const SchubertSet& set);

/// The structural characterization of sparse paving Schubert matroids:
/// uniform (a single pair) or r = (k-1, 1, 1, n-k-1).
bool matches_sparse_paving_pattern(const RSequence& r);

/// r-sequence of a matroid isomorphic to the dual: the reversed block
/// sequence. When r_1 = 0 the reversal ends in an empty one-run; that pair
/// (trailing loops) is dropped. Throws InvalidArgument for r = (0, k), whose
/// dual has rank 0.
RSequence dual_rsequence(const RSequence& r);

/// "{2,6,7,10}" (braces optional, whitespace ignored).
SchubertSet parse_set_literal(std::string_view text);
/// "1,1,3,2,2,1".
RSequence parse_rsequence_literal(std::string_view text);

std::string format_set(std::span<const int> elements);

}  // namespace schubert
