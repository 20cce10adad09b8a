#include "schubert/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "schubert/errors.hpp"

namespace schubert {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  for (auto& c : coefficients_) c.canonicalize();
  normalize();
}

RationalPolynomial RationalPolynomial::constant(const Rational& value) {
  return RationalPolynomial(std::vector<Rational>{value});
}

RationalPolynomial RationalPolynomial::variable() {
  return RationalPolynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

void RationalPolynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : Rational(0);
}

Rational RationalPolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::shifted(long delta) const {
  // Horner in the ring: p(t + delta) = (...(c_d (t+delta) + c_{d-1})(t+delta) ...)
  const RationalPolynomial step(std::vector<Rational>{Rational(delta), Rational(1)});
  RationalPolynomial acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= step;
    acc += constant(*it);
  }
  return acc;
}

RationalPolynomial RationalPolynomial::pow(unsigned exponent) const {
  RationalPolynomial result = constant(1);
  RationalPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<Rational> product(coefficients_.size() + other.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
      product[i + j] += coefficients_[i] * other.coefficients_[j];
  }
  coefficients_ = std::move(product);
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  normalize();
  return *this;
}

std::string RationalPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int power = degree(); power >= 0; --power) {
    const Rational& c = coefficients_[static_cast<std::size_t>(power)];
    if (c == 0) continue;
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude == 1;
    if (!unit || power == 0) out << magnitude.get_str();
    if (power > 0) {
      if (!unit) out << '*';
      out << 't';
      if (power > 1) out << '^' << power;
    }
  }
  return out.str();
}

RationalPolynomial interpolate(std::span<const Sample> points) {
  if (points.empty()) throw InvalidArgument("interpolate: at least one sample required");
  std::set<long> seen;
  for (const auto& p : points) {
    if (!seen.insert(p.t).second)
      throw DuplicateSample("interpolate: duplicate abscissa t=" + std::to_string(p.t));
  }

  RationalPolynomial result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    // Lagrange basis polynomial for node i, scaled by the sample value.
    RationalPolynomial basis = RationalPolynomial::constant(1);
    Rational denominator = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      basis *= RationalPolynomial(std::vector<Rational>{Rational(-points[j].t), Rational(1)});
      denominator *= Rational(points[i].t - points[j].t);
    }
    basis *= Rational(points[i].value) / denominator;
    result += basis;
  }
  return result;
}

bool coefficientwise_leq(const RationalPolynomial& lhs, const RationalPolynomial& rhs) {
  const RationalPolynomial diff = rhs - lhs;
  return std::all_of(diff.coefficients().begin(), diff.coefficients().end(),
                     [](const Rational& c) { return c >= 0; });
}

}  // namespace schubert
