#pragma once

// Slow reference implementations used only by tests. They share no code with
// the library beyond the BigInt type.

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <vector>

#include "schubert/polynomial.hpp"

namespace naive {

using schubert::BigInt;

inline BigInt pascal(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<BigInt> row{1};
  for (long i = 1; i <= n; ++i) {
    std::vector<BigInt> next(static_cast<std::size_t>(i) + 1, 1);
    for (long j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

// #{x in [0, t]^parts : sum x = target} by plain convolution.
inline BigInt bounded_solutions(long parts, long t, long target) {
  if (target < 0) return 0;
  std::vector<BigInt> ways(static_cast<std::size_t>(target) + 1, 0);
  ways[0] = 1;
  for (long p = 0; p < parts; ++p) {
    std::vector<BigInt> next(ways.size(), 0);
    for (std::size_t s = 0; s < ways.size(); ++s)
      for (long x = 0; x <= t && s + static_cast<std::size_t>(x) < ways.size(); ++x) next[s + x] += ways[s];
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(target)];
}

inline BigInt f(long a, long b, long c, long t) { return bounded_solutions(a + b, t, b * t + c); }

inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1U) s.push_back(i + 1);
    out.push_back(s);
  }
  return out;
}

// Bases of SM_n(S): |S|-subsets T with t_i <= s_i after sorting.
inline std::vector<std::vector<int>> bases(const std::vector<int>& s, int n) {
  std::vector<std::vector<int>> out;
  for (auto& t : subsets_of_size(n, static_cast<int>(s.size()))) {
    bool dominated = true;
    for (std::size_t i = 0; i < s.size(); ++i) dominated = dominated && t[i] <= s[i];
    if (dominated) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int rank(const std::vector<std::vector<int>>& bases, const std::vector<int>& subset) {
  int best = 0;
  for (const auto& b : bases) {
    int common = 0;
    for (int e : subset) common += std::count(b.begin(), b.end(), e) > 0;
    best = std::max(best, common);
  }
  return best;
}

// Lattice points of t * P(SM_n(S)) by scanning all of [0, t]^n.
inline BigInt lattice_points(const std::vector<int>& s, int n, long t) {
  const auto bs = bases(s, n);
  std::vector<long> cap(1U << n);
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1U) subset.push_back(i + 1);
    cap[mask] = t * rank(bs, subset);
  }
  std::vector<long> x(static_cast<std::size_t>(n), 0);
  BigInt count = 0;
  while (true) {
    bool ok = std::accumulate(x.begin(), x.end(), 0L) == t * static_cast<long>(s.size());
    for (unsigned mask = 1; ok && mask < (1U << n); ++mask) {
      long sum = 0;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1U) sum += x[i];
      ok = sum <= cap[mask];
    }
    if (ok) ++count;
    int i = 0;
    while (i < n && x[i] == t) x[i++] = 0;
    if (i == n) break;
    ++x[i];
  }
  return count;
}

inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int cycles(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) seen[j] = true;
  }
  return count;
}

inline int descents(const std::vector<int>& p) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) count += p[i] > p[i + 1];
  return count;
}

// Stirling numbers of the first kind by counting cycles of all permutations.
inline BigInt stirling_by_cycles(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  long count = 0;
  for (const auto& p : permutations(n)) count += cycles(p) == k;
  return count;
}

inline BigInt eulerian_by_descents(int m, int k) {
  if (m == 0) return k == 0 ? 1 : 0;
  long count = 0;
  for (const auto& p : permutations(m)) count += descents(p) == k;
  return count;
}

}  // namespace naive
