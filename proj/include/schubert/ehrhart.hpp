#pragma once

#include <map>
#include <vector>

#include "schubert/matroid.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

/// F(a, b, c, t): number of integer vectors in [0, t]^{a+b} with coordinate
/// sum b*t + c, evaluated through the alternating binomial sum. Requires
/// a, b, t >= 0 and a + b >= 1.
BigInt f_closed(long a, long b, long c, long t);

/// Same quantity read off as the coefficient of x^{bt+c} in (1 + x + ... + x^t)^{a+b}.
BigInt f_generating_function(long a, long b, long c, long t);

/// Offsets (c_1, ..., c_m) of one admissible path together with its weight
/// prod_j F(r_{2j-1}, r_{2j}, c_j, t).
struct PathVector {
  std::vector<long> offsets;
  BigInt weight;
};

/// Every admissible path for (r, t) in lexicographic order of offsets:
/// sum c_j = 0, prefix sums >= 0, -t v_j <= c_j <= t u_j.
std::vector<PathVector> enumerate_paths(const RSequence& r, long t);

struct DilationCount {
  RSequence r;
  long t;
  BigInt count;
};

/// Lattice points of t * P(SM_n(S)) by the weighted path sum.
DilationCount count_dilation(const RSequence& r, long t);

/// Ehrhart polynomial interpolated from count_dilation at t = 0..n. Throws
/// ConsistencyError if the interpolant has degree >= n or constant term != 1.
RationalPolynomial ehrhart_polynomial(const RSequence& r);

/// F(a, b, 0, t) as a polynomial in t, i.e. the Ehrhart polynomial of U_{b,a+b}.
RationalPolynomial f_zero_polynomial(long a, long b);

/// Interpolant of F(a, b, c, .) on the region t >= |c|, where the closed form
/// is polynomial: a+b samples from t = |c|, re-checked at a+b further points.
struct StableInterpolant {
  RationalPolynomial polynomial;
  long first_sample = 0;
  long sample_count = 0;
  long recheck_count = 0;
  bool stable = false;
};

StableInterpolant f_stable_interpolant(long a, long b, long c);

// Uniform matroids U_{k,n}, n > k >= 1.
BigInt uniform_count(long k, long n, long t);
RationalPolynomial uniform_polynomial(long k, long n);
/// [t^m] i(U_{k,n}, t) through weighted Lah and Eulerian numbers; 0 for m outside [0, n-1].
Rational uniform_coefficient(long k, long n, long m);

// Minimal matroids T_{k,n}, n > k >= 2.
/// sum_{j=0}^{t} C(j+n-k-1, n-k-1) C(k+j-1, j); t = -1 gives the empty sum.
BigInt minimal_count_sum(long k, long n, long t);
/// C(t+n-k, n-k) / C(n-1, k-1) * sum_{j<k} C(n-k+j-1, j) C(t+j, j).
BigInt minimal_count_closed(long k, long n, long t);
/// Both forms, which must agree.
BigInt minimal_count(long k, long n, long t);
RationalPolynomial minimal_polynomial(long k, long n);

/// i(Sp_{k,n}, t) for n-2 >= k >= 2, computed by the path sum and by
/// i(U_{k,n}, t) - i(T_{k,n}, t-1); throws ConsistencyError if they differ.
BigInt sparse_paving_count(long k, long n, long t);

/// sum_{j=0}^{t min(a,d)} F(a,b,j,t) F(c,d,-j,t), the count for r = (a,b,c,d).
BigInt four_block_count(long a, long b, long c, long d, long t);

/// Rank 2, r = (a,1,b,1): sum_{j=0}^{t} F(a,1,j,t) C(b+t-j, b).
BigInt rank2_count(long a, long b, long t);

/// Rank 3, r = (a,1,b,1,c,1): sum_{i=0}^{t} C(t+c-i, c) sum_{j=0}^{t+i} F(a,1,j,t) F(b,1,i-j,t).
BigInt rank3_count(long a, long b, long c, long t);

/// Ehrhart polynomials of the (a,b)-Catalan matroids C_n^{a,b} built by the
/// recursion over cyclic composition classes, memoized per instance.
class CatalanRecursion {
 public:
  CatalanRecursion(long a, long b);

  /// i(C_n^{a,b}, t), n >= 1.
  const RationalPolynomial& polynomial(long n);
  /// i(C_n^{a,b}, t) - F(a,b,0,t) i(C_{n-1}^{a,b}, t) for n >= 2; equals C_1 for n = 1.
  RationalPolynomial bar_polynomial(long n);
  /// F(na, nb, 0, t) as a polynomial.
  const RationalPolynomial& scaled_uniform(long n);
  const RationalPolynomial& base() const { return base_; }

 private:
  long a_;
  long b_;
  RationalPolynomial base_;
  std::map<long, RationalPolynomial> memo_;
  std::map<long, RationalPolynomial> scaled_;
};

RationalPolynomial catalan_polynomial(long n, long a, long b);

}  // namespace schubert
