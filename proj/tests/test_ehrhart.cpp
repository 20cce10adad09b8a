#include <gtest/gtest.h>

#include <thread>

#include "naive.hpp"
#include "schubert/combinatorics.hpp"
#include "schubert/ehrhart.hpp"
#include "schubert/errors.hpp"

using namespace schubert;

namespace {

RationalPolynomial poly(std::vector<Rational> c) { return RationalPolynomial(std::move(c)); }

std::vector<std::vector<int>> sets_with_maximum(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n - 1; ++i)
      if (mask >> i & 1U) s.push_back(i + 1);
    s.push_back(n);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(F, ThreeWayAgreement) {
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= 4; ++b) {
      if (a + b == 0) continue;
      for (long c = -8; c <= 8; ++c)
        for (long t = 0; t <= 5; ++t) {
          const BigInt expected = naive::f(a, b, c, t);
          EXPECT_EQ(f_closed(a, b, c, t), expected) << a << b << c << t;
          EXPECT_EQ(f_generating_function(a, b, c, t), expected) << a << b << c << t;
        }
    }
}

TEST(F, Values) {
  EXPECT_EQ(f_closed(2, 2, 0, 2), 19);
  EXPECT_EQ(f_closed(1, 1, 0, 3), 4);
  EXPECT_EQ(f_closed(1, 1, 2, 0), 0);
  EXPECT_EQ(f_closed(2, 1, 5, 2), 0);
  for (long c = -5; c <= 5; ++c)
    for (long t = std::labs(c); t <= 9; ++t) EXPECT_EQ(f_closed(1, 1, c, t), t + 1 - std::labs(c));
}

TEST(F, InitialValues) {
  for (long a = 1; a <= 5; ++a)
    for (long t = 0; t <= 6; ++t) {
      EXPECT_EQ(f_closed(a, 1, 0, t), binomial(a + t, a));
      for (long c = 0; c < t; ++c) EXPECT_EQ(f_closed(a, 0, c, t), binomial(a + c - 1, c));
      for (long c = -t - 2; c < 0; ++c) EXPECT_EQ(f_closed(a, 1, c, t), binomial(t + a + c, a));
      // The c >= 0 branch holds for c <= t, the range used by the rank-2 formula.
      for (long c = 0; c <= t && t >= 1; ++c) {
        BigInt value = -BigInt(a + 1) * binomial(a + c - 1, a);
        for (long i = 1; i <= a + 1; ++i) value += binomial(c + i - 1, c) * binomial(t + a - i, t - 1);
        EXPECT_EQ(f_closed(a, 1, c, t), value) << a << "," << c << "," << t;
      }
      for (long b = 0; b <= 4; ++b)
        for (long c = -b - 1; c <= a + 1; ++c) EXPECT_EQ(f_closed(a, b, c, 1), binomial(a + b, b + c));
    }
}

TEST(F, RejectsInvalidArguments) {
  EXPECT_THROW(f_closed(0, 0, 0, 1), InvalidArgument);
  EXPECT_THROW(f_closed(1, 1, 0, -1), InvalidArgument);
  EXPECT_THROW(f_generating_function(-1, 2, 0, 1), InvalidArgument);
}

TEST(Paths, ThreeSixEightHasFivePathsAtUnitDilation) {
  const RSequence r({2, 1, 2, 1, 1, 1});
  const auto paths = enumerate_paths(r, 1);
  const std::vector<std::vector<long>> expected{{0, 0, 0}, {0, 1, -1}, {1, -1, 0}, {1, 0, -1}, {2, -1, -1}};
  ASSERT_EQ(paths.size(), expected.size());
  BigInt total = 0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    EXPECT_EQ(paths[i].offsets, expected[i]);
    BigInt weight = 1;
    for (int j = 0; j < 3; ++j) weight *= naive::f(r.zero_run(j + 1), r.one_run(j + 1), expected[i][j], 1);
    EXPECT_EQ(paths[i].weight, weight);
    total += weight;
  }
  EXPECT_EQ(count_dilation(r, 1).count, total);
}

TEST(Paths, PrefixSumsNonnegativeAndBounded) {
  const RSequence r({1, 2, 2, 1, 1, 2});
  const UVBounds uv = uv_bounds(r);
  for (long t = 0; t <= 3; ++t)
    for (const auto& path : enumerate_paths(r, t)) {
      long prefix = 0;
      for (std::size_t j = 0; j < path.offsets.size(); ++j) {
        EXPECT_GE(path.offsets[j], -t * uv.v[j]);
        EXPECT_LE(path.offsets[j], t * uv.u[j]);
        prefix += path.offsets[j];
        EXPECT_GE(prefix, 0);
      }
      EXPECT_EQ(prefix, 0);
    }
}

TEST(CountDilation, MatchesDirectLatticeScan) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& s : sets_with_maximum(n))
      for (long t = 0; t <= 2; ++t)
        EXPECT_EQ(count_dilation(set_to_rsequence(SchubertSet(s)), t).count, naive::lattice_points(s, n, t));
}

TEST(CountDilation, UnitDilationCountsBases) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& s : sets_with_maximum(n)) {
      const RSequence r = set_to_rsequence(SchubertSet(s));
      EXPECT_EQ(count_dilation(r, 0).count, 1);
      EXPECT_EQ(count_dilation(r, 1).count, static_cast<long>(naive::bases(s, n).size()));
    }
}

TEST(CountDilation, SetTwoFour) {
  const RSequence r = set_to_rsequence(SchubertSet({2, 4}));
  const std::vector<long> expected{1, 5, 14, 30};
  for (long t = 0; t < 4; ++t) EXPECT_EQ(count_dilation(r, t).count, expected[t]);
}

TEST(CountDilation, SafeForConcurrentCallers) {
  const RSequence r({1, 2, 1, 2, 1, 2});
  const BigInt expected = count_dilation(r, 4).count;
  std::vector<BigInt> results(4);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i)
    threads.emplace_back([&, i] { results[i] = count_dilation(r, 4).count; });
  for (auto& th : threads) th.join();
  for (const auto& value : results) EXPECT_EQ(value, expected);
}

TEST(EhrhartPolynomial, UniformTwoFour) {
  const auto p = ehrhart_polynomial(RSequence({2, 2}));
  EXPECT_EQ(p, poly({1, Rational(7, 3), 2, Rational(2, 3)}));
  const std::vector<long> values{1, 6, 19, 44};
  for (long t = 0; t < 4; ++t) EXPECT_EQ(p(t), values[t]);
  EXPECT_EQ(uniform_polynomial(2, 4), p);
}

TEST(EhrhartPolynomial, DegreeAndConstantTerm) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& s : sets_with_maximum(n)) {
      const auto p = ehrhart_polynomial(set_to_rsequence(SchubertSet(s)));
      EXPECT_LE(p.degree(), n - 1);
      EXPECT_EQ(p.coefficient(0), 1);
      for (long t = 0; t <= n + 2; ++t)
        EXPECT_EQ(p(t), Rational(count_dilation(set_to_rsequence(SchubertSet(s)), t).count));
    }
}

TEST(Uniform, CountsAndCoefficients) {
  for (long n = 2; n <= 8; ++n)
    for (long k = 1; k < n; ++k) {
      const auto p = uniform_polynomial(k, n);
      EXPECT_EQ(p, ehrhart_polynomial(uniform_rsequence(k, n)));
      for (long m = 0; m <= n - 1; ++m) EXPECT_EQ(uniform_coefficient(k, n, m), p.coefficient(m)) << k << n << m;
      EXPECT_EQ(uniform_coefficient(k, n, n), 0);
      EXPECT_EQ(uniform_coefficient(k, n, -1), 0);
      for (long t = 0; t <= 4; ++t) EXPECT_EQ(uniform_count(k, n, t), naive::f(n - k, k, 0, t));
    }
  EXPECT_THROW(uniform_count(3, 3, 1), InvalidArgument);
}

TEST(Uniform, PositiveUpToTen) {
  for (long n = 2; n <= 10; ++n)
    for (long k = 1; k < n; ++k)
      for (const auto& c : uniform_polynomial(k, n).coefficients()) EXPECT_GT(c, 0) << k << "," << n;
}

TEST(Minimal, BothFormsAgreeWithPaths) {
  EXPECT_EQ(minimal_count(2, 4, 1), 5);
  EXPECT_EQ(minimal_count_sum(3, 6, -1), 0);
  for (long n = 3; n <= 9; ++n)
    for (long k = 2; k < n; ++k) {
      for (long t = 0; t <= 5; ++t) {
        EXPECT_EQ(minimal_count_sum(k, n, t), minimal_count_closed(k, n, t));
        EXPECT_EQ(minimal_count(k, n, t), count_dilation(minimal_rsequence(k, n), t).count);
      }
      for (const auto& c : minimal_polynomial(k, n).coefficients()) EXPECT_GT(c, 0);
    }
}

TEST(SparsePaving, DifferenceFormulaAndSymmetry) {
  for (long n = 4; n <= 9; ++n)
    for (long k = 2; k <= n - 2; ++k)
      for (long t = 0; t <= 4; ++t) {
        const BigInt sp = sparse_paving_count(k, n, t);
        EXPECT_EQ(sp, sparse_paving_count(n - k, n, t));
        EXPECT_EQ(sp, uniform_count(k, n, t) - minimal_count_sum(k, n, t - 1));
      }
  EXPECT_EQ(sparse_paving_count(2, 5, 3), uniform_count(2, 5, 3) - minimal_count_sum(2, 5, 2));
}

TEST(FourBlock, FormulaAndSymmetry) {
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b)
      for (long c = 1; c <= 3; ++c)
        for (long d = 1; d <= 3; ++d)
          for (long t = 0; t <= 4; ++t) {
            const BigInt value = four_block_count(a, b, c, d, t);
            EXPECT_EQ(value, count_dilation(RSequence({a, b, c, d}), t).count);
            EXPECT_EQ(value, four_block_count(d, c, b, a, t));
          }
}

TEST(RankFormulas, MatchPathSum) {
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b)
      for (long t = 0; t <= 5; ++t) {
        EXPECT_EQ(rank2_count(a, b, t), count_dilation(RSequence({a, 1, b, 1}), t).count);
        for (long c = 1; c <= 3; ++c)
          EXPECT_EQ(rank3_count(a, b, c, t), count_dilation(RSequence({a, 1, b, 1, c, 1}), t).count);
      }
}

TEST(WorkedExample, OneOneThreeSeven) {
  for (long t = 0; t <= 8; ++t) {
    auto f = [t](long a, long b) { return Rational(naive::f(a, b, 0, t)); };
    const Rational rhs = Rational(t + 2) * (f(4, 7) + f(5, 6)) - f(7, 5) - Rational(t + 1) * f(4, 6) -
                         Rational(1, 2) * (f(6, 6) + Rational(t + 1) * f(5, 5));
    EXPECT_EQ(Rational(count_dilation(RSequence({1, 1, 3, 7}), t).count), rhs) << t;
  }
}

TEST(StableInterpolant, ExamplesAndStability) {
  const auto s = f_stable_interpolant(1, 1, 2);
  EXPECT_TRUE(s.stable);
  EXPECT_EQ(s.polynomial, poly({-1, 1}));
  EXPECT_EQ(s.first_sample, 2);
  const auto p = f_stable_interpolant(2, 2, 1);
  EXPECT_TRUE(p.stable);
  for (long t = 1; t <= 12; ++t) EXPECT_EQ(p.polynomial(t), Rational(naive::f(2, 2, 1, t)));
  for (const auto& c : p.polynomial.coefficients()) EXPECT_GE(c, 0);
}

TEST(Catalan, BaseAndSecondTerm) {
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b) {
      CatalanRecursion recursion(a, b);
      EXPECT_EQ(recursion.polynomial(1), f_zero_polynomial(a, b));
      const auto f = f_zero_polynomial(a, b);
      EXPECT_EQ(recursion.polynomial(2), Rational(1, 2) * f_zero_polynomial(2 * a, 2 * b) + Rational(1, 2) * f * f);
      EXPECT_EQ(recursion.bar_polynomial(1), recursion.polynomial(1));
    }
}

TEST(Catalan, MatchesPathSumForUnitBlocks) {
  for (long n = 1; n <= 4; ++n)
    EXPECT_EQ(catalan_polynomial(n, 1, 1), ehrhart_polynomial(catalan_rsequence(n, 1, 1))) << n;
}
