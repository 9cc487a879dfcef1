#pragma once

#include <stdexcept>
#include <vector>

#include "symconn/polynomial.hpp"
#include "symconn/rational.hpp"

namespace symconn {

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Matrix = std::vector<RationalVector>;

/// Reduced grevlex Groebner basis (monic, sorted by leading monomial).
std::vector<MPoly> groebner_basis(const std::vector<MPoly>& generators);

/// Full reduction of f modulo a Groebner basis.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis);

/// Q[X]/I for a zero-dimensional ideal I given by its reduced Groebner basis.
class QuotientAlgebra {
 public:
  /// Throws SolverError when the ideal is not zero-dimensional.
  explicit QuotientAlgebra(std::vector<MPoly> basis);

  int nvars() const { return nvars_; }
  size_t dimension() const { return monomials_.size(); }
  const std::vector<Monomial>& standard_monomials() const { return monomials_; }
  const std::vector<MPoly>& basis() const { return basis_; }

  /// Coordinates of the normal form of f on the standard monomials.
  RationalVector coordinates(const MPoly& f) const;
  /// Matrix of multiplication by v; column j holds v * b_j.
  Matrix multiplication_matrix(const MPoly& v) const;

 private:
  int nvars_ = 0;
  std::vector<MPoly> basis_;
  std::vector<Monomial> monomials_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Rational trace(const Matrix& a);
/// Tr(a * b) without forming the product.
Rational trace_of_product(const Matrix& a, const Matrix& b);
size_t rank(Matrix a);

}  // namespace symconn
