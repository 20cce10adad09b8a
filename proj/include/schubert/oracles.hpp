#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "schubert/matroid.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

/// Size limits for the brute-force oracles. Exceeding one raises BudgetExceeded.
struct OracleBudget {
  int max_boxes = 12;                       // Kohnert closure and key polynomials
  int max_ground = 8;                       // lattice_points_direct: n
  long max_dilation = 4;                    // lattice_points_direct: t
  std::uint64_t max_f_tuples = 20'000'000;  // f_bruteforce: (t+1)^{a+b}
};

/// Box (row, col), rows numbered from the top, columns from the left, both from 1.
struct Cell {
  int row;
  int col;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Finite set of cells kept in sorted order, which doubles as the canonical form.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool contains(Cell cell) const;
  /// Boxes per row for rows 1..rows (the exponent vector of x^D).
  std::vector<int> row_counts(int rows) const;

  friend auto operator<=>(const Diagram&, const Diagram&) = default;

 private:
  std::vector<Cell> cells_;
};

Diagram skyline(std::span<const int> alpha);

/// Diagrams reachable by one Kohnert move: the rightmost box of some row
/// jumps up its column to the first empty cell, passing only occupied cells.
std::set<Diagram> kohnert_moves(const Diagram& diagram);

/// All Kohnert diagrams of the skyline of alpha (breadth-first, deduplicated).
std::set<Diagram> kohnert_closure(std::span<const int> alpha, const OracleBudget& budget = {});

/// Number of distinct row-count vectors over the closure.
BigInt kohnert_monomial_count(std::span<const int> alpha, const OracleBudget& budget = {});

/// Polynomial in x_1..x_n with integer coefficients; zero terms are never stored.
class MultivariatePolynomial {
 public:
  using Exponents = std::vector<int>;

  explicit MultivariatePolynomial(int variables = 0) : variables_(variables) {}
  static MultivariatePolynomial monomial(Exponents exponents, BigInt coefficient = 1);

  int variables() const { return variables_; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  BigInt coefficient(const Exponents& exponents) const;

  void add_term(const Exponents& exponents, const BigInt& coefficient);
  MultivariatePolynomial& operator+=(const MultivariatePolynomial& other);
  MultivariatePolynomial& operator-=(const MultivariatePolynomial& other);
  /// Multiply by x_i (0-based index).
  MultivariatePolynomial times_variable(int index) const;
  /// Interchange x_i and x_{i+1} (0-based i).
  MultivariatePolynomial swapped(int index) const;

  friend bool operator==(const MultivariatePolynomial&, const MultivariatePolynomial&) = default;

  /// e.g. "x1^2*x2 + x2^2*x3".
  std::string to_string() const;

 private:
  int variables_;
  std::map<Exponents, BigInt> terms_;
};

/// (f - s_i f) / (x_i - x_{i+1}) by exact division; ConsistencyError if the
/// division leaves a remainder. Index i is 0-based.
MultivariatePolynomial divided_difference(const MultivariatePolynomial& f, int index);

/// Sum of x^D over the Kohnert closure of alpha, with multiplicities.
MultivariatePolynomial kohnert_polynomial(std::span<const int> alpha, const OracleBudget& budget = {});

enum class SwapChoice { Smallest, Largest };

/// Key polynomial by the divided-difference recursion, choosing the smallest
/// (or largest) ascent i with alpha_i < alpha_{i+1} at each step.
MultivariatePolynomial key_polynomial(std::span<const int> alpha, const OracleBudget& budget = {},
                                      SwapChoice choice = SwapChoice::Smallest);

/// rk(T) = max over bases B of |T intersect B|, straight from the definition.
int rank_by_bases(const SchubertSet& set, std::span<const int> subset);
/// I is independent iff some basis contains it.
bool independent_by_bases(const SchubertSet& set, std::span<const int> subset);

/// Lattice points of t * P(SM_n(S)) counted directly: beta in [0, t]^n with
/// sum t|S| and sum_{i in T} beta_i <= t rk(T) for every proper subset T.
BigInt lattice_points_direct(const SchubertSet& set, long t, const OracleBudget& budget = {});

/// counts[s] = #{x in [0, t]^parts : sum x = s}, by direct enumeration.
std::vector<BigInt> solution_histogram(long parts, long t, const OracleBudget& budget = {});

/// Direct enumeration of x in [0, t]^{a+b} with sum b t + c.
BigInt f_bruteforce(long a, long b, long c, long t, const OracleBudget& budget = {});

}  // namespace schubert
