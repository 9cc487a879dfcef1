#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "symconn/rational.hpp"

namespace symconn {

/// Exponent vector of a monomial.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
/// Graded reverse lexicographic order, a < b.
bool grevlex_less(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial quotient(const Monomial& a, const Monomial& b);
Monomial product(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

/// Sparse multivariate polynomial over Q; terms sorted with the grevlex-leading
/// monomial first.
class MPoly {
 public:
  using Terms = std::map<Monomial, Rational, GrevlexGreater>;

  MPoly() = default;
  explicit MPoly(int nvars) : nvars_(nvars) {}

  static MPoly constant(int nvars, const Rational& c);
  /// The variable X_k, 0-based.
  static MPoly variable(int nvars, int k);
  static MPoly term(const Monomial& m, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;
  int total_degree() const;
  Rational coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Rational eval(std::span<const Rational> x) const;
  MPoly scaled(const Rational& c) const;
  MPoly monic() const;
  MPoly times_term(const Monomial& m, const Rational& c) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a) { return a.scaled(Rational(-1)); }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  /// Renders with variables X1..Xn (or the given prefix).
  std::string to_string(const std::string& prefix = "X") const;

 private:
  void require_same(const MPoly& o) const;
  int nvars_ = 0;
  Terms terms_;
};

MPoly pow(const MPoly& p, unsigned k);

}  // namespace symconn
