#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Univariate polynomial in t over the rationals, coefficients stored in
/// ascending degree. The zero polynomial has no coefficients; otherwise the
/// leading coefficient is nonzero.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  static RationalPolynomial constant(const Rational& value);
  /// The polynomial t.
  static RationalPolynomial variable();

  bool is_zero() const { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  /// Coefficient of t^power; zero past the degree.
  Rational coefficient(std::size_t power) const;

  Rational evaluate(const Rational& t) const;
  Rational operator()(long t) const { return evaluate(Rational(t)); }

  /// p(t + delta).
  RationalPolynomial shifted(long delta) const;
  RationalPolynomial pow(unsigned exponent) const;

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator-=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const Rational& scalar);

  friend RationalPolynomial operator+(RationalPolynomial lhs, const RationalPolynomial& rhs) {
    return lhs += rhs;
  }
  friend RationalPolynomial operator-(RationalPolynomial lhs, const RationalPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend RationalPolynomial operator*(RationalPolynomial lhs, const RationalPolynomial& rhs) {
    return lhs *= rhs;
  }
  friend RationalPolynomial operator*(RationalPolynomial lhs, const Rational& scalar) {
    return lhs *= scalar;
  }
  friend RationalPolynomial operator*(const Rational& scalar, RationalPolynomial rhs) {
    return rhs *= scalar;
  }
  friend bool operator==(const RationalPolynomial& lhs, const RationalPolynomial& rhs) {
    return lhs.coefficients_ == rhs.coefficients_;
  }

  /// Human-readable form, highest degree first, e.g. "4/3*t^3 + 2*t^2 + 8/3*t + 1".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Rational> coefficients_;
};

/// One interpolation sample: abscissa t and exact value.
struct Sample {
  long t;
  BigInt value;
};

/// Unique polynomial of degree < points.size() through every sample (exact
/// Lagrange). Throws DuplicateSample on a repeated abscissa and
/// InvalidArgument on an empty sample set.
RationalPolynomial interpolate(std::span<const Sample> points);

/// Coefficientwise lhs <= rhs, i.e. every coefficient of rhs - lhs is >= 0.
bool coefficientwise_leq(const RationalPolynomial& lhs, const RationalPolynomial& rhs);

}  // namespace schubert
