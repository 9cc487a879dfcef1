#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "symconn/interval.hpp"
#include "symconn/polynomial.hpp"
#include "symconn/power_sum.hpp"

namespace symconn {

/// Three-valued answer of a predicate on a grid cell.
enum class Tri : std::uint8_t { No = 0, Maybe = 1, Yes = 2 };

/// How relations are loosened on the grid: g = 0 becomes |g| <= eq_delta and
/// g > 0 becomes g >= gt_threshold.
struct Thickening {
  Rational eq_delta;
  Rational gt_threshold;
};

/// The same thresholds as enclosing double intervals.
struct CellThickening {
  Interval eq_delta;
  Interval gt_threshold;

  explicit CellThickening(const Thickening& t)
      : eq_delta(Interval::enclose(t.eq_delta)), gt_threshold(Interval::enclose(t.gt_threshold)) {}
};

/// g(p_1^(m), .., p_d^(m)) rel 0, evaluated through interval power sums.
struct SymAtom {
  PowerSumPoly g;
  std::vector<int> weights;
  Relation rel;
  std::string label;
};

/// Expanded polynomial g(z) rel 0.
struct PolyAtom {
  MPoly g;
  Relation rel;
  std::string label;
};

/// z_a <= z_b, or z_a = z_b exactly when `equality` is set (never thickened).
struct OrderAtom {
  int a;
  int b;
  bool equality;
  std::string label;
};

using Atom = std::variant<SymAtom, PolyAtom, OrderAtom>;

/// Boolean combination of atoms; cheap to copy.
class Predicate {
 public:
  Predicate();  ///< always true

  static Predicate atom(Atom a);
  static Predicate all(std::vector<Predicate> parts);
  static Predicate any(std::vector<Predicate> parts);
  /// Points of `a` outside `b`; on cells, a's answer where b is No.
  static Predicate difference(Predicate a, Predicate b);

  Tri classify(std::span<const Interval> cell, const CellThickening& t) const;
  /// Exact test at a rational point; on failure names the first violated atom.
  bool holds(std::span<const Rational> z, const Thickening& t, std::string* violated = nullptr) const;

  std::string to_string() const;

 private:
  struct Node;
  explicit Predicate(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// A semi-algebraic region of R^dim clipped to the cube [lo, hi]^dim.
struct Region {
  int dim = 0;
  Rational lo;
  Rational hi;
  Predicate pred;
  std::string name;
};

/// Chamber ordering z_1 <= .. <= z_l.
Predicate chamber_predicate(int l);
/// The system's constraints with power sums weighted by `weights`.
Predicate constraint_predicate(const std::vector<SymConstraint>& constraints, std::span<const int> weights);

/// S restricted to a face, ordering constraints included.
Region face_region(const FaceSystem& face);
/// S itself in R^n, no ordering.
Region system_region(const SymmetricSystem& sys);

}  // namespace symconn
