#include "schubert/oracles.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <sstream>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

void require_box_budget(std::span<const int> alpha, const OracleBudget& budget) {
  long boxes = 0;
  for (int part : alpha) {
    if (part < 0) throw InvalidArgument("composition entries must be nonnegative");
    boxes += part;
  }
  if (boxes > budget.max_boxes)
    throw BudgetExceeded("diagram has " + std::to_string(boxes) + " boxes, budget is " +
                         std::to_string(budget.max_boxes));
}

bool is_weakly_decreasing(std::span<const int> alpha) {
  return std::is_sorted(alpha.begin(), alpha.end(), std::greater<>());
}

std::uint32_t mask_of(std::span<const int> elements) {
  std::uint32_t mask = 0;
  for (int e : elements) mask |= 1U << (e - 1);
  return mask;
}

std::vector<std::uint32_t> basis_masks(const SchubertSet& set) {
  std::vector<std::uint32_t> masks;
  for (const auto& b : enumerate_bases(set)) masks.push_back(mask_of(b));
  return masks;
}

int rank_from_masks(const std::vector<std::uint32_t>& bases, std::uint32_t subset) {
  int best = 0;
  for (std::uint32_t b : bases) best = std::max(best, std::popcount(b & subset));
  return best;
}

void require_subset(const SchubertSet& set, std::span<const int> subset) {
  for (int e : subset) {
    if (e < 1 || e > set.ground_size())
      throw InvalidArgument("element " + std::to_string(e) + " outside ground set");
  }
  if (set.ground_size() > 31) throw BudgetExceeded("definitional rank supports ground sets up to 31");
}

}  // namespace

Diagram::Diagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
  for (const Cell& c : cells_) {
    if (c.row < 1 || c.col < 1) throw InvalidArgument("Diagram: coordinates must be >= 1");
  }
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool Diagram::contains(Cell cell) const { return std::binary_search(cells_.begin(), cells_.end(), cell); }

std::vector<int> Diagram::row_counts(int rows) const {
  std::vector<int> counts(static_cast<std::size_t>(rows), 0);
  for (const Cell& c : cells_) {
    if (c.row > rows) throw InvalidArgument("Diagram::row_counts: cell below the requested rows");
    ++counts[static_cast<std::size_t>(c.row - 1)];
  }
  return counts;
}

Diagram skyline(std::span<const int> alpha) {
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 0) throw InvalidArgument("skyline: entries must be nonnegative");
    for (int j = 1; j <= alpha[i]; ++j) cells.push_back({static_cast<int>(i) + 1, j});
  }
  return Diagram(std::move(cells));
}

std::set<Diagram> kohnert_moves(const Diagram& diagram) {
  std::set<Diagram> out;
  const auto& cells = diagram.cells();
  // Cells are sorted by (row, col): the last cell of each row run is its rightmost box.
  for (std::size_t idx = 0; idx < cells.size(); ++idx) {
    if (idx + 1 < cells.size() && cells[idx + 1].row == cells[idx].row) continue;
    const Cell box = cells[idx];
    int target = box.row - 1;
    while (target >= 1 && diagram.contains({target, box.col})) --target;
    if (target < 1) continue;
    std::vector<Cell> moved = cells;
    moved[idx] = {target, box.col};
    out.insert(Diagram(std::move(moved)));
  }
  return out;
}

std::set<Diagram> kohnert_closure(std::span<const int> alpha, const OracleBudget& budget) {
  require_box_budget(alpha, budget);
  std::set<Diagram> seen{skyline(alpha)};
  std::deque<const Diagram*> frontier{&*seen.begin()};
  while (!frontier.empty()) {
    const Diagram* current = frontier.front();
    frontier.pop_front();
    for (auto& next : kohnert_moves(*current)) {
      auto [it, inserted] = seen.insert(next);
      if (inserted) frontier.push_back(&*it);
    }
  }
  return seen;
}

BigInt kohnert_monomial_count(std::span<const int> alpha, const OracleBudget& budget) {
  std::set<std::vector<int>> weights;
  const int rows = static_cast<int>(alpha.size());
  for (const Diagram& d : kohnert_closure(alpha, budget)) weights.insert(d.row_counts(rows));
  return BigInt(static_cast<unsigned long>(weights.size()));
}

MultivariatePolynomial MultivariatePolynomial::monomial(Exponents exponents, BigInt coefficient) {
  MultivariatePolynomial p(static_cast<int>(exponents.size()));
  p.add_term(exponents, coefficient);
  return p;
}

BigInt MultivariatePolynomial::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultivariatePolynomial::add_term(const Exponents& exponents, const BigInt& coefficient) {
  if (static_cast<int>(exponents.size()) != variables_)
    throw InvalidArgument("MultivariatePolynomial: exponent vector has wrong length");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

MultivariatePolynomial& MultivariatePolynomial::operator+=(const MultivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultivariatePolynomial& MultivariatePolynomial::operator-=(const MultivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultivariatePolynomial MultivariatePolynomial::times_variable(int index) const {
  MultivariatePolynomial out(variables_);
  for (const auto& [key, c] : terms_) {
    Exponents e = key;
    ++e[static_cast<std::size_t>(index)];
    out.terms_.emplace(std::move(e), c);
  }
  return out;
}

MultivariatePolynomial MultivariatePolynomial::swapped(int index) const {
  MultivariatePolynomial out(variables_);
  for (const auto& [key, c] : terms_) {
    Exponents e = key;
    std::swap(e[static_cast<std::size_t>(index)], e[static_cast<std::size_t>(index) + 1]);
    out.terms_.emplace(std::move(e), c);
  }
  return out;
}

std::string MultivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest exponent vectors first, which lists x1-heavy monomials first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    first = false;
    const BigInt magnitude = abs(c);
    std::string monomial;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += 'x' + std::to_string(v + 1);
      if (e[v] > 1) monomial += '^' + std::to_string(e[v]);
    }
    if (monomial.empty()) {
      out << magnitude.get_str();
    } else {
      if (magnitude != 1) out << magnitude.get_str() << '*';
      out << monomial;
    }
  }
  return out.str();
}

MultivariatePolynomial divided_difference(const MultivariatePolynomial& f, int index) {
  const int vars = f.variables();
  if (index < 0 || index + 1 >= vars) throw InvalidArgument("divided_difference: index out of range");
  MultivariatePolynomial numerator = f;
  numerator -= f.swapped(index);

  // Synthetic division by (x_i - y), y = x_{i+1}: write numerator = sum_p C_p x_i^p,
  // then Q_{p-1} = C_p + y Q_p from the top down, remainder C_0 + y Q_0.
  const auto i = static_cast<std::size_t>(index);
  int top = 0;
  std::map<int, MultivariatePolynomial> by_power;
  for (const auto& [e, c] : numerator.terms()) {
    auto rest = e;
    rest[i] = 0;
    auto [it, _] = by_power.try_emplace(e[i], vars);
    it->second.add_term(rest, c);
    top = std::max(top, e[i]);
  }
  MultivariatePolynomial quotient(vars);
  MultivariatePolynomial carry(vars);  // Q_p
  for (int p = top; p >= 1; --p) {
    MultivariatePolynomial q = carry.times_variable(index + 1);
    if (auto it = by_power.find(p); it != by_power.end()) q += it->second;
    for (const auto& [key, c] : q.terms()) {
      auto e = key;
      e[i] = p - 1;
      quotient.add_term(e, c);
    }
    carry = std::move(q);
  }
  MultivariatePolynomial remainder = carry.times_variable(index + 1);
  if (auto it = by_power.find(0); it != by_power.end()) remainder += it->second;
  if (remainder.term_count() != 0)
    throw ConsistencyError("divided_difference: nonzero remainder " + remainder.to_string());
  return quotient;
}

MultivariatePolynomial kohnert_polynomial(std::span<const int> alpha, const OracleBudget& budget) {
  const int rows = static_cast<int>(alpha.size());
  MultivariatePolynomial p(rows);
  for (const Diagram& d : kohnert_closure(alpha, budget)) p.add_term(d.row_counts(rows), 1);
  return p;
}

MultivariatePolynomial key_polynomial(std::span<const int> alpha, const OracleBudget& budget,
                                      SwapChoice choice) {
  require_box_budget(alpha, budget);
  std::vector<int> exponents(alpha.begin(), alpha.end());
  if (is_weakly_decreasing(exponents)) return MultivariatePolynomial::monomial(exponents);

  int ascent = -1;
  for (int i = 0; i + 1 < static_cast<int>(exponents.size()); ++i) {
    if (exponents[i] < exponents[i + 1]) {
      ascent = i;
      if (choice == SwapChoice::Smallest) break;
    }
  }
  std::swap(exponents[static_cast<std::size_t>(ascent)], exponents[static_cast<std::size_t>(ascent) + 1]);
  return divided_difference(key_polynomial(exponents, budget, choice).times_variable(ascent), ascent);
}

int rank_by_bases(const SchubertSet& set, std::span<const int> subset) {
  require_subset(set, subset);
  return rank_from_masks(basis_masks(set), mask_of(subset));
}

bool independent_by_bases(const SchubertSet& set, std::span<const int> subset) {
  require_subset(set, subset);
  const std::uint32_t mask = mask_of(subset);
  for (std::uint32_t b : basis_masks(set)) {
    if ((b & mask) == mask) return true;
  }
  return false;
}

BigInt lattice_points_direct(const SchubertSet& set, long t, const OracleBudget& budget) {
  const int n = set.ground_size();
  if (t < 0) throw InvalidArgument("lattice_points_direct: t must be nonnegative");
  if (n > budget.max_ground)
    throw BudgetExceeded("ground set size " + std::to_string(n) + " exceeds budget " +
                         std::to_string(budget.max_ground));
  if (t > budget.max_dilation)
    throw BudgetExceeded("dilation " + std::to_string(t) + " exceeds budget " +
                         std::to_string(budget.max_dilation));

  const auto bases = basis_masks(set);
  const std::uint32_t subsets = 1U << n;
  std::vector<long> capacity(subsets);
  for (std::uint32_t mask = 0; mask < subsets; ++mask) capacity[mask] = t * rank_from_masks(bases, mask);

  const long total = t * set.rank();
  std::vector<long> beta(static_cast<std::size_t>(n), 0);
  std::vector<long> subset_sum(subsets, 0);
  unsigned long count = 0;

  auto check = [&] {
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      const int low = std::countr_zero(mask);
      subset_sum[mask] = subset_sum[mask & (mask - 1)] + beta[static_cast<std::size_t>(low)];
      if (subset_sum[mask] > capacity[mask]) return false;
    }
    return true;
  };

  // Fill coordinates left to right; the remaining sum must fit in the remaining slots.
  auto fill = [&](auto&& self, int position, long remaining) -> void {
    if (position == n) {
      if (remaining == 0 && check()) ++count;
      return;
    }
    const long slots_after = static_cast<long>(n - position - 1);
    for (long value = 0; value <= std::min(t, remaining); ++value) {
      if (remaining - value > slots_after * t) continue;
      beta[static_cast<std::size_t>(position)] = value;
      self(self, position + 1, remaining - value);
    }
  };
  fill(fill, 0, total);
  return BigInt(count);
}

std::vector<BigInt> solution_histogram(long parts, long t, const OracleBudget& budget) {
  if (parts < 0 || t < 0) throw InvalidArgument("solution_histogram: parts and t must be nonnegative");
  long double tuples = 1;
  for (long i = 0; i < parts; ++i) tuples *= static_cast<long double>(t + 1);
  if (tuples > static_cast<long double>(budget.max_f_tuples))
    throw BudgetExceeded("(t+1)^(a+b) tuples exceed budget " + std::to_string(budget.max_f_tuples));

  std::vector<unsigned long> counts(static_cast<std::size_t>(parts * t) + 1, 0);
  std::vector<long> x(static_cast<std::size_t>(parts), 0);
  long sum = 0;
  while (true) {
    ++counts[static_cast<std::size_t>(sum)];
    long i = 0;
    while (i < parts && x[static_cast<std::size_t>(i)] == t) {
      sum -= t;
      x[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == parts) break;
    ++x[static_cast<std::size_t>(i)];
    ++sum;
  }
  return {counts.begin(), counts.end()};
}

BigInt f_bruteforce(long a, long b, long c, long t, const OracleBudget& budget) {
  if (a < 0 || b < 0 || t < 0) throw InvalidArgument("f_bruteforce: a, b, t must be nonnegative");
  if (a + b < 1) throw InvalidArgument("f_bruteforce: a + b must be at least 1");
  const auto histogram = solution_histogram(a + b, t, budget);
  const long target = b * t + c;
  if (target < 0 || target >= static_cast<long>(histogram.size())) return 0;
  return histogram[static_cast<std::size_t>(target)];
}

}  // namespace schubert
