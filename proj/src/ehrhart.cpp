#include "schubert/ehrhart.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "schubert/combinatorics.hpp"
#include "schubert/errors.hpp"

namespace schubert {

namespace {

void require_f_arguments(long a, long b, long t, const char* where) {
  if (a < 0 || b < 0 || t < 0)
    throw InvalidArgument(std::string(where) + ": a, b, t must be nonnegative");
  if (a + b < 1) throw InvalidArgument(std::string(where) + ": a + b must be at least 1");
}

void require_dilation(long t, const char* where) {
  if (t < 0) throw InvalidArgument(std::string(where) + ": dilation t must be nonnegative");
}

void require_uniform(long k, long n) {
  if (!(n > k && k >= 1)) throw InvalidArgument("uniform matroid requires n > k >= 1");
}

void require_minimal(long k, long n) {
  if (!(n > k && k >= 2)) throw InvalidArgument("minimal matroid requires n > k >= 2");
}

RationalPolynomial interpolate_checked(std::vector<Sample> samples, int max_degree, const char* what) {
  RationalPolynomial p = interpolate(samples);
  if (p.degree() > max_degree)
    throw ConsistencyError(std::string(what) + ": interpolant degree " + std::to_string(p.degree()) +
                           " exceeds " + std::to_string(max_degree));
  return p;
}

void require_integer_values(const RationalPolynomial& p, long upto, const char* what) {
  for (long t = 0; t <= upto; ++t) {
    if (p(t).get_den() != 1)
      throw ConsistencyError(std::string(what) + ": non-integer value at t=" + std::to_string(t));
  }
}

// Depth-first walk over offsets with weight tables precomputed per pair.
class PathWalker {
 public:
  PathWalker(const RSequence& r, long t) : m_(r.pairs()) {
    const UVBounds bounds = uv_bounds(r);
    low_.resize(static_cast<std::size_t>(m_));
    high_.resize(static_cast<std::size_t>(m_));
    weights_.resize(static_cast<std::size_t>(m_));
    max_descent_after_.assign(static_cast<std::size_t>(m_) + 1, 0);
    for (int j = 0; j < m_; ++j) {
      low_[j] = -t * bounds.v[j];
      high_[j] = t * bounds.u[j];
      for (long c = low_[j]; c <= high_[j]; ++c)
        weights_[j].push_back(f_closed(r.zero_run(j + 1), r.one_run(j + 1), c, t));
    }
    for (int j = m_ - 1; j >= 0; --j) max_descent_after_[j] = max_descent_after_[j + 1] - low_[j];
  }

  template <typename Visit>
  void walk(Visit&& visit) {
    offsets_.assign(static_cast<std::size_t>(m_), 0);
    partial_.assign(static_cast<std::size_t>(m_) + 1, BigInt(1));
    descend(0, 0, visit);
  }

  const std::vector<long>& offsets() const { return offsets_; }

 private:
  template <typename Visit>
  void descend(int j, long prefix, Visit& visit) {
    if (j == m_) {
      if (prefix == 0) visit(partial_[m_]);
      return;
    }
    // After choosing c_j the prefix must stay >= 0 and still be able to return to 0.
    const long lo = std::max(low_[j], -prefix);
    const long hi = std::min(high_[j], max_descent_after_[j + 1] - prefix);
    for (long c = lo; c <= hi; ++c) {
      offsets_[j] = c;
      partial_[j + 1] = partial_[j] * weights_[j][static_cast<std::size_t>(c - low_[j])];
      descend(j + 1, prefix + c, visit);
    }
  }

  int m_;
  std::vector<long> low_;
  std::vector<long> high_;
  std::vector<std::vector<BigInt>> weights_;
  std::vector<long> max_descent_after_;
  std::vector<long> offsets_;
  std::vector<BigInt> partial_;
};

}  // namespace

BigInt f_closed(long a, long b, long c, long t) {
  require_f_arguments(a, b, t, "f_closed");
  const long parts = a + b;
  BigInt total = 0;
  for (long j = 0; j <= parts; ++j) {
    const BigInt term = binomial(parts, j) * binomial((t + 1) * (b - j) + a + c - 1, parts - 1);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigInt f_generating_function(long a, long b, long c, long t) {
  require_f_arguments(a, b, t, "f_generating_function");
  const long parts = a + b;
  const long target = b * t + c;
  if (target < 0 || target > parts * t) return 0;
  // Coefficients of (1 + x + ... + x^t)^k up to x^target, one factor at a time.
  std::vector<BigInt> coeffs(static_cast<std::size_t>(target) + 1, BigInt(0));
  coeffs[0] = 1;
  for (long factor = 0; factor < parts; ++factor) {
    std::vector<BigInt> next(coeffs.size(), BigInt(0));
    BigInt window = 0;
    for (long s = 0; s <= target; ++s) {
      window += coeffs[s];
      if (s - t - 1 >= 0) window -= coeffs[s - t - 1];
      next[s] = window;
    }
    coeffs = std::move(next);
  }
  return coeffs[static_cast<std::size_t>(target)];
}

std::vector<PathVector> enumerate_paths(const RSequence& r, long t) {
  require_dilation(t, "enumerate_paths");
  PathWalker walker(r, t);
  std::vector<PathVector> paths;
  walker.walk([&](const BigInt& weight) { paths.push_back({walker.offsets(), weight}); });
  return paths;
}

DilationCount count_dilation(const RSequence& r, long t) {
  require_dilation(t, "count_dilation");
  PathWalker walker(r, t);
  BigInt total = 0;
  walker.walk([&](const BigInt& weight) { total += weight; });
  return {r, t, total};
}

RationalPolynomial ehrhart_polynomial(const RSequence& r) {
  const long n = r.ground_size();
  std::vector<Sample> samples;
  for (long t = 0; t <= n; ++t) samples.push_back({t, count_dilation(r, t).count});
  RationalPolynomial p = interpolate_checked(std::move(samples), static_cast<int>(n - 1), "ehrhart_polynomial");
  if (p.coefficient(0) != 1) throw ConsistencyError("ehrhart_polynomial: constant term is not 1");
  return p;
}

RationalPolynomial f_zero_polynomial(long a, long b) {
  require_f_arguments(a, b, 0, "f_zero_polynomial");
  std::vector<Sample> samples;
  for (long t = 0; t <= a + b; ++t) samples.push_back({t, f_closed(a, b, 0, t)});
  return interpolate_checked(std::move(samples), static_cast<int>(a + b - 1), "f_zero_polynomial");
}

StableInterpolant f_stable_interpolant(long a, long b, long c) {
  require_f_arguments(a, b, 0, "f_stable_interpolant");
  StableInterpolant out;
  out.first_sample = std::labs(c);
  out.sample_count = a + b;
  out.recheck_count = a + b;
  std::vector<Sample> samples;
  for (long i = 0; i < out.sample_count; ++i) {
    const long t = out.first_sample + i;
    samples.push_back({t, f_closed(a, b, c, t)});
  }
  out.polynomial = interpolate(samples);
  out.stable = true;
  for (long i = 0; i < out.recheck_count && out.stable; ++i) {
    const long t = out.first_sample + out.sample_count + i;
    out.stable = out.polynomial(t) == Rational(f_closed(a, b, c, t));
  }
  return out;
}

BigInt uniform_count(long k, long n, long t) {
  require_uniform(k, n);
  require_dilation(t, "uniform_count");
  return f_closed(n - k, k, 0, t);
}

RationalPolynomial uniform_polynomial(long k, long n) {
  require_uniform(k, n);
  return f_zero_polynomial(n - k, k);
}

Rational uniform_coefficient(long k, long n, long m) {
  require_uniform(k, n);
  if (m < 0 || m > n - 1) return 0;
  BigInt total = 0;
  for (long j = 0; j <= k - 1; ++j) total += weighted_lah(j, n, m + 1) * eulerian(m, k - j - 1);
  Rational result(total, factorial(n - 1));
  result.canonicalize();
  return result;
}

BigInt minimal_count_sum(long k, long n, long t) {
  require_minimal(k, n);
  if (t < -1) throw InvalidArgument("minimal_count_sum: t must be >= -1");
  BigInt total = 0;
  for (long j = 0; j <= t; ++j) total += binomial(j + n - k - 1, n - k - 1) * binomial(k + j - 1, j);
  return total;
}

BigInt minimal_count_closed(long k, long n, long t) {
  require_minimal(k, n);
  require_dilation(t, "minimal_count_closed");
  BigInt inner = 0;
  for (long j = 0; j <= k - 1; ++j) inner += binomial(n - k + j - 1, j) * binomial(t + j, j);
  Rational value(binomial(t + n - k, n - k) * inner, binomial(n - 1, k - 1));
  value.canonicalize();
  if (value.get_den() != 1) throw ConsistencyError("minimal_count_closed: non-integral value");
  return value.get_num();
}

BigInt minimal_count(long k, long n, long t) {
  BigInt by_sum = minimal_count_sum(k, n, t);
  const BigInt by_closed = minimal_count_closed(k, n, t);
  if (by_sum != by_closed)
    throw ConsistencyError("minimal_count: closed form and sum disagree at k=" + std::to_string(k) +
                           " n=" + std::to_string(n) + " t=" + std::to_string(t));
  return by_sum;
}

RationalPolynomial minimal_polynomial(long k, long n) {
  require_minimal(k, n);
  std::vector<Sample> samples;
  for (long t = 0; t <= n; ++t) samples.push_back({t, minimal_count_sum(k, n, t)});
  return interpolate_checked(std::move(samples), static_cast<int>(n - 1), "minimal_polynomial");
}

BigInt sparse_paving_count(long k, long n, long t) {
  if (!(n - 2 >= k && k >= 2)) throw InvalidArgument("sparse paving matroid requires n-2 >= k >= 2");
  require_dilation(t, "sparse_paving_count");
  BigInt by_paths = count_dilation(sparse_paving_rsequence(k, n), t).count;
  const Rational by_difference = Rational(uniform_count(k, n, t)) - minimal_polynomial(k, n)(t - 1);
  if (by_difference != Rational(by_paths))
    throw ConsistencyError("sparse_paving_count: path sum and uniform-minus-minimal disagree at k=" +
                           std::to_string(k) + " n=" + std::to_string(n) + " t=" + std::to_string(t));
  return by_paths;
}

BigInt four_block_count(long a, long b, long c, long d, long t) {
  if (a < 0 || b < 0 || c < 0 || d < 0) throw InvalidArgument("four_block_count: blocks must be nonnegative");
  require_dilation(t, "four_block_count");
  BigInt total = 0;
  for (long j = 0; j <= t * std::min(a, d); ++j) total += f_closed(a, b, j, t) * f_closed(c, d, -j, t);
  return total;
}

BigInt rank2_count(long a, long b, long t) {
  if (a < 1 || b < 1) throw InvalidArgument("rank2_count: a, b must be positive");
  require_dilation(t, "rank2_count");
  BigInt total = 0;
  for (long j = 0; j <= t; ++j) total += f_closed(a, 1, j, t) * binomial(b + t - j, b);
  return total;
}

BigInt rank3_count(long a, long b, long c, long t) {
  if (a < 1 || b < 1 || c < 1) throw InvalidArgument("rank3_count: a, b, c must be positive");
  require_dilation(t, "rank3_count");
  BigInt total = 0;
  for (long i = 0; i <= t; ++i) {
    BigInt inner = 0;
    for (long j = 0; j <= t + i; ++j) inner += f_closed(a, 1, j, t) * f_closed(b, 1, i - j, t);
    total += binomial(t + c - i, c) * inner;
  }
  return total;
}

CatalanRecursion::CatalanRecursion(long a, long b) : a_(a), b_(b) {
  if (a < 1 || b < 1) throw InvalidArgument("CatalanRecursion: a, b must be positive");
  base_ = f_zero_polynomial(a, b);
  memo_.emplace(1, base_);
}

const RationalPolynomial& CatalanRecursion::scaled_uniform(long n) {
  auto it = scaled_.find(n);
  if (it == scaled_.end()) it = scaled_.emplace(n, f_zero_polynomial(n * a_, n * b_)).first;
  return it->second;
}

RationalPolynomial CatalanRecursion::bar_polynomial(long n) {
  if (n < 1) throw InvalidArgument("CatalanRecursion: n must be positive");
  if (n == 1) return polynomial(1);
  return polynomial(n) - base_ * polynomial(n - 1);
}

const RationalPolynomial& CatalanRecursion::polynomial(long n) {
  if (n < 1) throw InvalidArgument("CatalanRecursion: n must be positive");
  if (auto it = memo_.find(n); it != memo_.end()) return it->second;

  const Rational inv_n(1, n);
  RationalPolynomial result = scaled_uniform(n) * inv_n;
  result -= base_.pow(static_cast<unsigned>(n)) * inv_n;
  result += base_ * polynomial(n - 1);
  for (const Composition& sigma : enumerate_gamma(static_cast<int>(n))) {
    RationalPolynomial product = RationalPolynomial::constant(1);
    for (int part : sigma.parts()) product *= bar_polynomial(part);
    Rational coefficient(sigma.class_size(), sigma.length());
    coefficient.canonicalize();
    if (sigma.length() % 2 != 0) coefficient = -coefficient;
    result += product * coefficient;
  }
  require_integer_values(result, result.degree() + 1, "CatalanRecursion");
  return memo_.emplace(n, std::move(result)).first->second;
}

RationalPolynomial catalan_polynomial(long n, long a, long b) {
  CatalanRecursion recursion(a, b);
  return recursion.polynomial(n);
}

}  // namespace schubert
