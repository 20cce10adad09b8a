#pragma once

#include <compare>
#include <span>
#include <vector>

#include "schubert/polynomial.hpp"

namespace schubert {

/// C(n, k) for 0 <= k <= n, and 0 whenever k < 0 or n < k. In particular
/// C(0, 0) = 1 and every negative n gives 0 for k >= 0.
BigInt binomial(long n, long k);

/// n! for n >= 0.
BigInt factorial(long n);

/// Unsigned Stirling numbers of the first kind, [n, k] = (n-1)[n-1, k] + [n-1, k-1]
/// with [0, 0] = 1. Zero outside 0 <= k <= n.
BigInt stirling_first_unsigned(long n, long k);

/// Row table of unsigned Stirling numbers of the first kind up to max_n, for
/// callers that need many entries. at() returns 0 outside the triangle.
class StirlingTable {
 public:
  explicit StirlingTable(long max_n);
  const BigInt& at(long n, long k) const;
  long max_n() const { return max_n_; }

 private:
  long max_n_;
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_ = 0;
};

/// Eulerian number A(m, k): permutations of [m] with exactly k descents.
/// A(m, 0) = 1 and A(m, 1) = 2^m - m - 1; zero for k < 0 or k >= max(m, 1).
BigInt eulerian(long m, long k);

/// Weighted Lah number W(l, n, m) from the alternating double sum over
/// binomials and Stirling numbers. Requires l >= 0, 1 <= m <= n.
BigInt weighted_lah(long l, long n, long m);

/// Ordered tuple of positive parts together with its cyclic-class data:
/// length, number of distinct rotations (class size d) and period sum
/// T = total * d / length.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int total() const { return total_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int class_size() const { return class_size_; }
  int period_sum() const { return total_ * class_size_ / length(); }

  /// Lexicographically largest rotation; the representative enumerate_gamma returns.
  Composition canonical() const;
  bool is_rotation_of(const Composition& other) const;

  friend auto operator<=>(const Composition& lhs, const Composition& rhs) {
    return lhs.parts_ <=> rhs.parts_;
  }
  friend bool operator==(const Composition& lhs, const Composition& rhs) {
    return lhs.parts_ == rhs.parts_;
  }

 private:
  std::vector<int> parts_;
  int total_ = 0;
  int class_size_ = 1;
};

/// One representative per cyclic class of compositions of n with at least
/// two parts, every part >= 2. Sorted descending lexicographically.
std::vector<Composition> enumerate_gamma(int n);

}  // namespace schubert
