#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symconn {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Raised when an argument lies outside the documented domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a caller violates an operation precondition (infeasible or
/// unsorted query point, point outside the bounding box, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// num/den in lowest terms; mpq_class(num, den) alone does not reduce.
Rational ratio(long num, long den);

/// Parses "7", "-3/5", "0.125", "1e-3" or "2.5E+2" exactly.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string to_string(const Rational& q);

/// Decimal rendering rounded to `digits` fractional digits.
std::string to_decimal(const Rational& q, int digits = 12);

int sign(const Rational& q);
Rational abs(const Rational& q);
Rational power(const Rational& base, unsigned exponent);

/// 10^-k as an exact rational.
Rational ten_to_minus(unsigned k);

std::vector<double> to_doubles(std::span<const Rational> values);
std::string to_string(std::span<const Rational> values);

}  // namespace symconn
