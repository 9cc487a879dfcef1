#include "symconn/groebner.hpp"

#include <algorithm>
#include <set>

namespace symconn {

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis) {
  MPoly p = f;
  MPoly r(f.nvars());
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const Rational lc = p.leading_coeff();
    bool reduced = false;
    for (const auto& g : basis) {
      if (divides(g.leading_monomial(), lm)) {
        p -= g.times_term(quotient(lm, g.leading_monomial()), lc / g.leading_coeff());
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      r.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return r;
}

namespace {

MPoly s_polynomial(const MPoly& f, const MPoly& g) {
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.times_term(quotient(l, f.leading_monomial()), 1 / f.leading_coeff()) -
         g.times_term(quotient(l, g.leading_monomial()), 1 / g.leading_coeff());
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] && b[k]) return false;
  return true;
}

}  // namespace

std::vector<MPoly> groebner_basis(const std::vector<MPoly>& generators) {
  std::vector<MPoly> g;
  for (const auto& f : generators)
    if (!f.is_zero()) g.push_back(f.monic());
  if (g.empty()) return g;

  using Pair = std::pair<size_t, size_t>;
  std::vector<Pair> pairs;
  for (size_t j = 1; j < g.size(); ++j)
    for (size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    // normal selection strategy: smallest lcm first
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      return grevlex_less(lcm(g[a.first].leading_monomial(), g[a.second].leading_monomial()),
                          lcm(g[b.first].leading_monomial(), g[b.second].leading_monomial()));
    });
    Pair pr = *best;
    pairs.erase(best);
    if (coprime(g[pr.first].leading_monomial(), g[pr.second].leading_monomial())) continue;
    MPoly r = normal_form(s_polynomial(g[pr.first], g[pr.second]), g);
    if (r.is_zero()) continue;
    if (r.total_degree() == 0) return {MPoly::constant(r.nvars(), Rational(1))};
    g.push_back(r.monic());
    for (size_t i = 0; i + 1 < g.size(); ++i) pairs.emplace_back(i, g.size() - 1);
  }

  // minimal basis: drop elements whose leading monomial is divisible by another's
  std::vector<MPoly> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = g[i].leading_monomial();
      const auto& lj = g[j].leading_monomial();
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // inter-reduce
  std::vector<MPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MPoly lead = MPoly::term(minimal[i].leading_monomial(), Rational(1));
    MPoly tail = minimal[i] - lead;
    reduced.push_back((lead + normal_form(tail, others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const MPoly& a, const MPoly& b) {
    return grevlex_less(a.leading_monomial(), b.leading_monomial());
  });
  return reduced;
}

QuotientAlgebra::QuotientAlgebra(std::vector<MPoly> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) throw SolverError("quotient algebra: the zero ideal is not zero-dimensional");
  nvars_ = basis_.front().nvars();
  if (basis_.size() == 1 && basis_.front().total_degree() == 0) return;  // unit ideal, empty basis
  std::vector<int> bound(static_cast<size_t>(nvars_), -1);
  for (const auto& g : basis_) {
    const auto& lm = g.leading_monomial();
    int nonzero = 0, var = -1;
    for (int k = 0; k < nvars_; ++k)
      if (lm[static_cast<size_t>(k)]) ++nonzero, var = k;
    if (nonzero == 1) {
      int e = lm[static_cast<size_t>(var)];
      auto& b = bound[static_cast<size_t>(var)];
      b = b < 0 ? e : std::min(b, e);
    }
  }
  for (int b : bound)
    if (b < 0) throw SolverError("polynomial system is not zero-dimensional");
  // enumerate the box of exponents below the pure-power bounds
  Monomial m(static_cast<size_t>(nvars_), 0);
  while (true) {
    bool standard = true;
    for (const auto& g : basis_)
      if (divides(g.leading_monomial(), m)) {
        standard = false;
        break;
      }
    if (standard) monomials_.push_back(m);
    size_t k = 0;
    while (k < m.size()) {
      if (++m[k] < bound[k]) break;
      m[k] = 0;
      ++k;
    }
    if (k == m.size()) break;
  }
  std::sort(monomials_.begin(), monomials_.end(), grevlex_less);
}

RationalVector QuotientAlgebra::coordinates(const MPoly& f) const {
  MPoly r = normal_form(f, basis_);
  RationalVector out(monomials_.size(), Rational(0));
  for (const auto& [m, c] : r.terms()) {
    auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m, grevlex_less);
    if (it == monomials_.end() || *it != m) throw SolverError("normal form left a non-standard monomial");
    out[static_cast<size_t>(it - monomials_.begin())] = c;
  }
  return out;
}

Matrix QuotientAlgebra::multiplication_matrix(const MPoly& v) const {
  const size_t n = monomials_.size();
  Matrix m(n, RationalVector(n, Rational(0)));
  for (size_t j = 0; j < n; ++j) {
    RationalVector col = coordinates(v * MPoly::term(monomials_[j], Rational(1)));
    for (size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix out(n, RationalVector(m, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

Rational trace(const Matrix& a) {
  Rational t(0);
  for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

Rational trace_of_product(const Matrix& a, const Matrix& b) {
  Rational t(0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t l = 0; l < b.size(); ++l)
      if (a[i][l] != 0) t += a[i][l] * b[l][i];
  return t;
}

size_t rank(Matrix a) {
  size_t r = 0;
  const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace symconn
