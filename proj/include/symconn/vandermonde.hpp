#pragma once

#include <optional>
#include <span>
#include <vector>

#include "symconn/composition.hpp"
#include "symconn/groebner.hpp"
#include "symconn/polynomial.hpp"
#include "symconn/real_algebraic.hpp"

namespace symconn {

/// Every complex solution is (q_1(t)/q_0(t), .., q_m(t)/q_0(t)) for a root t of q.
struct ZeroDimParametrization {
  UniPoly q;
  UniPoly q0;
  std::vector<UniPoly> coords;
  RationalVector separating;  ///< t = sum separating[k] * X_k

  size_t degree() const { return q.degree() < 0 ? 0 : static_cast<size_t>(q.degree()); }
};

/// Rational univariate representation of a zero-dimensional system.
/// Throws SolverError if the system has positive dimension.
ZeroDimParametrization rational_univariate_representation(const std::vector<MPoly>& system);

/// Parametrizes the solutions of p_j^(lambda)(z) = a_j, j = 1..d, d = length(lambda).
ZeroDimParametrization solve_face_system(const Composition& lambda, std::span<const Rational> a);

/// Real solutions with z_1 <= .. <= z_d, decided by exact sign tests.
std::vector<AlgebraicPoint> ordered_real_solutions(const ZeroDimParametrization& param);

/// The minimizer of p_{d+1} on V(a) within the canonical chamber.
struct CanonicalPoint {
  AlgebraicPoint point;    ///< n coordinates
  Composition face;        ///< CompMax face it was found on
  Composition multiplicity;
  std::pair<Rational, Rational> next_power_sum;  ///< enclosure of p_{d+1}
};

/// Nullopt iff V(a) does not meet the canonical chamber.
std::optional<CanonicalPoint> min_canonical(std::span<const Rational> a, int n, int d,
                                            CompMaxPattern pattern = CompMaxPattern::Minimizer);

/// Exact multiplicity composition of an algebraic point.
Composition multiplicity_composition(const AlgebraicPoint& pt);

/// Exact test that sum_i x_i^j = a_j for j = 1..|a|.
bool on_fiber(const AlgebraicPoint& pt, std::span<const Rational> a);

/// p_j of an algebraic point as a ratio num(t)/den(t).
std::pair<UniPoly, UniPoly> power_sum_ratio(const AlgebraicPoint& pt, int j);

}  // namespace symconn
