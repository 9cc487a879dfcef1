#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "symconn/composition.hpp"
#include "symconn/polynomial.hpp"
#include "symconn/rational.hpp"

namespace symconn {

/// g >= 0, g = 0 or g > 0.
enum class Relation { GE, EQ, GT };

std::string to_string(Relation rel);
Relation parse_relation(const std::string& text);
/// Whether a value with this sign satisfies the relation.
bool satisfies(int sign, Relation rel);

/// Polynomial g(Z_1, .., Z_d) in the power sums, Z_j of weight j.
class PowerSumPoly {
 public:
  using Terms = std::map<std::vector<int>, Rational>;

  PowerSumPoly() = default;
  explicit PowerSumPoly(int d);

  static PowerSumPoly constant(int d, const Rational& c);
  /// The generator Z_j (1-based j).
  static PowerSumPoly generator(int d, int j);

  int d() const { return d_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int weighted_degree() const;

  /// Adds c * Z^e; throws if the weighted degree would exceed d.
  void add_term(const std::vector<int>& exponents, const Rational& c);

  /// g evaluated at the given power-sum values (p_1, .., p_d).
  Rational eval(std::span<const Rational> power_sums) const;
  /// g(p_1^(m), .., p_d^(m)) as a polynomial in m.size() variables.
  MPoly expand(std::span<const int> weights) const;

  PowerSumPoly& operator+=(const PowerSumPoly& o);
  friend PowerSumPoly operator+(PowerSumPoly a, const PowerSumPoly& b) { return a += b; }
  PowerSumPoly scaled(const Rational& c) const;
  friend bool operator==(const PowerSumPoly&, const PowerSumPoly&) = default;

  std::string to_string() const;

 private:
  int d_ = 0;
  Terms terms_;
};

struct SymConstraint {
  PowerSumPoly g;
  Relation rel = Relation::GE;

  std::string to_string() const;
  friend bool operator==(const SymConstraint&, const SymConstraint&) = default;
};

/// Basic semi-algebraic set {g_k(p_1, .., p_d) rel_k 0} inside a bounding box.
/// The box is a cube [lo, hi]^n so the set stays symmetric.
class SymmetricSystem {
 public:
  SymmetricSystem(int n, int d, std::vector<SymConstraint> constraints, Rational box_lo, Rational box_hi);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<SymConstraint>& constraints() const { return constraints_; }
  const Rational& box_lo() const { return lo_; }
  const Rational& box_hi() const { return hi_; }
  bool in_box(std::span<const Rational> x) const;

  friend bool operator==(const SymmetricSystem&, const SymmetricSystem&) = default;

 private:
  int n_;
  int d_;
  std::vector<SymConstraint> constraints_;
  Rational lo_;
  Rational hi_;
};

/// sum_i m_i X_i^j in m.size() variables.
MPoly weighted_power_sum(int j, std::span<const int> m);

/// (p_1^(m)(x), .., p_d^(m)(x)).
RationalVector vandermonde_map(std::span<const Rational> x, int d, std::span<const int> m);
/// Unit weights: nu_{n,d}(x).
RationalVector vandermonde_map(std::span<const Rational> x, int d);

struct Membership {
  bool member = false;
  std::vector<int> signs;  ///< sign of every g_k at x
  int first_violation = -1;
};

Membership eval_membership(const SymmetricSystem& sys, std::span<const Rational> x);

struct FaceConstraint {
  MPoly poly;
  Relation rel;
};

/// The system restricted to the face W_c^lambda, in length(lambda) variables.
/// The chamber ordering z_1 <= .. <= z_l is implicit.
struct FaceSystem {
  Composition lambda;
  int n;
  std::vector<FaceConstraint> constraints;
  std::vector<SymConstraint> source;  ///< parent constraints, same order
  Rational box_lo;
  Rational box_hi;

  int dimension() const { return lambda.length(); }
  /// Exact membership of face coordinates z (ordering not checked).
  Membership eval(std::span<const Rational> z) const;
};

FaceSystem restrict(const SymmetricSystem& sys, const Composition& lambda);

}  // namespace symconn
