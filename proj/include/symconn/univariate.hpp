#pragma once

#include <string>
#include <utility>
#include <optional>
#include <vector>

#include "symconn/interval.hpp"
#include "symconn/rational.hpp"

namespace symconn {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has degree -1 and no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<Rational> coefficients) : UniPoly(std::vector<Rational>(coefficients)) {}

  static UniPoly constant(const Rational& c);
  /// The monomial c * T^k.
  static UniPoly monomial(const Rational& c, int k);
  static UniPoly variable() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int k) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational eval(const Rational& t) const;
  /// Exact sign of p(t); a double interval pass settles most cases.
  int sign_at(const Rational& t) const;
  /// Sign of the leading coefficient times (-1)^deg, i.e. the sign near -infinity.
  int sign_at_minus_infinity() const;

  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly scaled(const Rational& c) const;
  /// p(T) -> p(c*T + s)
  UniPoly compose_affine(const Rational& c, const Rational& s) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator-(const UniPoly& a) { return a.scaled(Rational(-1)); }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string(const std::string& var = "T") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division: a = quotient * b + remainder, deg remainder < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& p, unsigned k);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Returns (g, s) with s*a = g mod b, g = gcd(a, b) monic.
std::pair<UniPoly, UniPoly> half_extended_gcd(const UniPoly& a, const UniPoly& b);
/// Inverse of a modulo m; throws DomainError if gcd(a, m) != 1.
UniPoly inverse_mod(const UniPoly& a, const UniPoly& m);

/// Monic square-free part p / gcd(p, p').
UniPoly squarefree_part(const UniPoly& p);

/// Range enclosure of p over the closed interval [lo, hi], exact rationals.
std::pair<Rational, Rational> eval_range(const UniPoly& p, const Rational& lo, const Rational& hi);

/// Outward-rounded double enclosure of p over [x.lo, x.hi]; nullopt if a
/// coefficient or intermediate value leaves the double range.
std::optional<Interval> horner_enclosure(const UniPoly& p, const Interval& x);
/// Double enclosure of the rational interval [lo, hi].
std::optional<Interval> enclose_range(const Rational& lo, const Rational& hi);

/// Canonical Sturm sequence p, p', -rem(..), ...
std::vector<UniPoly> sturm_sequence(const UniPoly& p);
int sign_variations(const std::vector<UniPoly>& sequence, const Rational& t);
/// Number of distinct real roots in (a, b] (requires a < b).
int count_roots(const std::vector<UniPoly>& sequence, const Rational& a, const Rational& b);
/// Power of two strictly above the absolute value of every complex root.
Rational root_bound(const UniPoly& p);

}  // namespace symconn
