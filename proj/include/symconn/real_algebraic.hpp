#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "symconn/rational.hpp"
#include "symconn/univariate.hpp"

namespace symconn {

/// Signs of (q', q'', ..., q^(deg q)) at one real root of q.
using ThomCode = std::vector<int>;

std::string to_string(const ThomCode& code);

class InvalidThomCode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One real root of a square-free polynomial, isolated in (lo, hi]; lo == hi
/// means the root is the rational lo itself.
struct RootInterval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
};

/// Real roots of a polynomial with their Thom encodings, ordered by value.
/// Works on the monic square-free part; multiplicities are dropped.
class RealRoots {
 public:
  explicit RealRoots(const UniPoly& q);

  const UniPoly& squarefree() const { return q_; }
  size_t size() const { return roots_.size(); }
  const RootInterval& interval(size_t i) const { return roots_[i]; }
  /// Signs of q', q'', .. at root i, computed on first request.
  const ThomCode& code(size_t i);
  std::vector<ThomCode> codes();
  /// Index of the root with this code; throws InvalidThomCode if none.
  size_t index_of(const ThomCode& code);

  /// Exact sign of p at root i.
  int sign_at(size_t i, const UniPoly& p);
  /// Shrinks root i's interval to width <= width.
  const RootInterval& refine(size_t i, const Rational& width);
  /// Bisects root i's interval once.
  void bisect(size_t i);

 private:
  UniPoly q_;
  std::vector<RootInterval> roots_;
  std::vector<UniPoly> derivatives_;
  std::vector<std::optional<ThomCode>> codes_;
};

/// Ordered Thom encodings of the distinct real roots of q (q != 0).
std::vector<ThomCode> thom_encoding(const UniPoly& q);

/// Sign of p at the root of q selected by `code`.
int sign_at_root(const UniPoly& q, const ThomCode& code, const UniPoly& p);

/// Real univariate representation: coordinates q_i(t)/q_0(t) at the root t of
/// q selected by `code`. The isolating interval is kept alongside the code.
struct AlgebraicPoint {
  UniPoly q;
  UniPoly q0;
  std::vector<UniPoly> coords;
  ThomCode code;
  RootInterval root;

  size_t dimension() const { return coords.size(); }
};

/// Builds a point from (q, q0, coords, code) and locates the root interval.
AlgebraicPoint make_algebraic_point(UniPoly q, UniPoly q0, std::vector<UniPoly> coords, const ThomCode& code);

/// Exact rational point as the parametrization (T, 1, x_1, .., x_m).
AlgebraicPoint lift_rational(std::span<const Rational> x);

struct RefinedPoint {
  RationalVector approx;  ///< midpoints
  RationalVector lower;
  RationalVector upper;   ///< certified enclosures, upper - lower <= eps
};

/// Certified rational enclosures of every coordinate, each of width <= eps.
RefinedPoint refine(AlgebraicPoint& pt, const Rational& eps);
RefinedPoint refine(const AlgebraicPoint& pt, const Rational& eps);

/// Sign of p(t)/q0(t)^0 style queries: exact sign of p at the point's root.
int sign_at_point(const AlgebraicPoint& pt, const UniPoly& p);

/// Certified enclosure of num(t)/den(t) at the point's root, width <= eps.
std::pair<Rational, Rational> enclose_ratio(AlgebraicPoint& pt, const UniPoly& num, const UniPoly& den,
                                            const Rational& eps);

}  // namespace symconn
