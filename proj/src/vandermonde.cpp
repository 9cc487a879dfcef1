#include "symconn/vandermonde.hpp"

#include "symconn/power_sum.hpp"

#include <algorithm>

namespace symconn {

namespace {

Matrix combine(const std::vector<Matrix>& ms, const RationalVector& coeffs) {
  const size_t n = ms.front().size();
  Matrix out(n, RationalVector(n, Rational(0)));
  for (size_t k = 0; k < ms.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) out[i][j] += coeffs[k] * ms[k][i][j];
  }
  return out;
}

RationalVector mat_vec(const Matrix& m, const RationalVector& v) {
  RationalVector out(m.size(), Rational(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0 && m[i][j] != 0) out[i] += m[i][j] * v[j];
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational acc(0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
  return acc;
}

// Characteristic polynomial from the power sums s_1..s_D of its roots.
UniPoly newton_polynomial(const RationalVector& s, size_t degree) {
  RationalVector e(degree + 1, Rational(0));
  e[0] = 1;
  for (size_t k = 1; k <= degree; ++k) {
    Rational acc(0);
    for (size_t i = 1; i <= k; ++i) {
      Rational term = e[k - i] * s[i];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    e[k] = acc / static_cast<long>(k);
  }
  std::vector<Rational> coeffs(degree + 1);
  for (size_t k = 0; k <= degree; ++k) coeffs[degree - k] = k % 2 ? -e[k] : e[k];
  return UniPoly(std::move(coeffs));
}

// Trace form: tau_j = Tr(M_{b_j}) and the rank of the Hermite matrix
// H_ij = Tr(M_{b_i b_j}), which counts the distinct complex solutions.
struct TraceForm {
  RationalVector tau;
  size_t distinct = 0;
};

TraceForm trace_form(const QuotientAlgebra& qa, const std::vector<Matrix>& mult) {
  const auto& b = qa.standard_monomials();
  const size_t n = b.size();
  // table[i][j] = coordinates of b_i * b_j, built from b_i = X_k * b_i' with b_i' standard
  std::vector<std::vector<RationalVector>> table(n, std::vector<RationalVector>(n));
  for (size_t j = 0; j < n; ++j) {
    table[0][j].assign(n, Rational(0));
    table[0][j][j] = 1;
  }
  for (size_t i = 1; i < n; ++i) {
    size_t k = 0;
    while (b[i][k] == 0) ++k;
    Monomial prev = b[i];
    --prev[k];
    auto it = std::lower_bound(b.begin(), b.end(), prev, grevlex_less);
    const size_t ip = static_cast<size_t>(it - b.begin());
    for (size_t j = 0; j < n; ++j) table[i][j] = j < i ? table[j][i] : mat_vec(mult[k], table[ip][j]);
  }
  TraceForm out;
  out.tau.assign(n, Rational(0));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) out.tau[j] += table[j][i][i];
  Matrix h(n, RationalVector(n, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) h[i][j] = h[j][i] = dot(table[i][j], out.tau);
  out.distinct = rank(std::move(h));
  return out;
}

}  // namespace

ZeroDimParametrization rational_univariate_representation(const std::vector<MPoly>& system) {
  if (system.empty()) throw SolverError("empty polynomial system");
  const int nv = system.front().nvars();
  std::vector<MPoly> basis = groebner_basis(system);
  ZeroDimParametrization out;
  if (basis.empty()) throw SolverError("polynomial system is not zero-dimensional");
  if (basis.size() == 1 && basis.front().total_degree() == 0) {
    // inconsistent: no solutions at all
    out.q = UniPoly::constant(Rational(1));
    out.q0 = UniPoly::constant(Rational(1));
    out.coords.assign(static_cast<size_t>(nv), UniPoly());
    out.separating.assign(static_cast<size_t>(nv), Rational(0));
    return out;
  }
  QuotientAlgebra qa(basis);
  const size_t dim = qa.dimension();
  std::vector<Matrix> mult;
  for (int k = 0; k < nv; ++k) mult.push_back(qa.multiplication_matrix(MPoly::variable(nv, k)));
  const TraceForm tf = trace_form(qa, mult);
  // coordinates of 1: the constant monomial is the first standard monomial
  RationalVector one(dim, Rational(0));
  one[0] = 1;

  for (int c = 2; c < 2 + 64; ++c) {
    RationalVector sep(static_cast<size_t>(nv));
    Rational ck(1);
    for (int k = 0; k < nv; ++k, ck *= c) sep[static_cast<size_t>(k)] = ck;
    Matrix mt = combine(mult, sep);
    // t^i in the standard basis; Tr(M_v M_t^i) = tau . (M_v t^i)
    std::vector<RationalVector> tpow{one};
    RationalVector s(dim + 1);
    s[0] = static_cast<long>(dim);
    for (size_t i = 1; i <= dim; ++i) {
      tpow.push_back(mat_vec(mt, tpow.back()));
      s[i] = dot(tf.tau, tpow.back());
    }
    UniPoly chi = newton_polynomial(s, dim);
    UniPoly fbar = squarefree_part(chi);
    if (static_cast<size_t>(fbar.degree()) != tf.distinct) continue;

    const int db = fbar.degree();
    // P_i(T) = sum_{k=i+1}^{db} a_k T^{k-1-i}
    std::vector<UniPoly> horner;
    for (int i = 0; i < db; ++i) {
      std::vector<Rational> coeffs(static_cast<size_t>(db - i));
      for (int k = i + 1; k <= db; ++k) coeffs[static_cast<size_t>(k - 1 - i)] = fbar.coeff(k);
      horner.emplace_back(std::move(coeffs));
    }
    auto g_of = [&](const Matrix* mv) {
      UniPoly g;
      for (int i = 0; i < db; ++i) {
        const auto& ti = tpow[static_cast<size_t>(i)];
        Rational tr = mv ? dot(tf.tau, mat_vec(*mv, ti)) : s[static_cast<size_t>(i)];
        g += horner[static_cast<size_t>(i)].scaled(tr);
      }
      return g;
    };
    out.q = fbar;
    out.q0 = g_of(nullptr);
    for (int k = 0; k < nv; ++k) out.coords.push_back(g_of(&mult[static_cast<size_t>(k)]));
    out.separating = sep;
    return out;
  }
  throw SolverError("no separating linear form found");
}

ZeroDimParametrization solve_face_system(const Composition& lambda, std::span<const Rational> a) {
  const int d = lambda.length();
  if (static_cast<int>(a.size()) != d)
    throw DomainError("solve_face_system: need " + std::to_string(d) + " target values, got " +
                      std::to_string(a.size()));
  std::vector<MPoly> system;
  for (int j = 1; j <= d; ++j)
    system.push_back(weighted_power_sum(j, lambda.parts()) - MPoly::constant(d, a[static_cast<size_t>(j) - 1]));
  return rational_univariate_representation(system);
}

std::vector<AlgebraicPoint> ordered_real_solutions(const ZeroDimParametrization& param) {
  std::vector<AlgebraicPoint> out;
  if (param.q.degree() < 1) return out;
  RealRoots roots(param.q);
  for (size_t r = 0; r < roots.size(); ++r) {
    int s0 = roots.sign_at(r, param.q0);
    if (s0 == 0) throw SolverError("parametrization denominator vanishes at a root");
    bool ordered = true;
    for (size_t k = 0; k + 1 < param.coords.size() && ordered; ++k)
      if (roots.sign_at(r, param.coords[k] - param.coords[k + 1]) * s0 > 0) ordered = false;
    if (ordered)
      out.push_back(AlgebraicPoint{param.q, param.q0, param.coords, roots.code(r), roots.interval(r)});
  }
  return out;
}

std::pair<UniPoly, UniPoly> power_sum_ratio(const AlgebraicPoint& pt, int j) {
  UniPoly num;
  for (const auto& qi : pt.coords) num += pow(qi, static_cast<unsigned>(j)) % pt.q;
  UniPoly den = pow(pt.q0, static_cast<unsigned>(j)) % pt.q;
  return {num, den};
}

bool on_fiber(const AlgebraicPoint& pt, std::span<const Rational> a) {
  for (size_t j = 0; j < a.size(); ++j) {
    auto [num, den] = power_sum_ratio(pt, static_cast<int>(j) + 1);
    if (sign_at_point(pt, num - den.scaled(a[j])) != 0) return false;
  }
  return true;
}

Composition multiplicity_composition(const AlgebraicPoint& pt) {
  if (pt.coords.empty()) throw DomainError("multiplicity_composition: empty point");
  std::vector<int> parts{1};
  for (size_t i = 1; i < pt.coords.size(); ++i) {
    bool equal = pt.coords[i] == pt.coords[i - 1] || sign_at_point(pt, pt.coords[i] - pt.coords[i - 1]) == 0;
    if (equal)
      ++parts.back();
    else
      parts.push_back(1);
  }
  return Composition(std::move(parts));
}

std::optional<CanonicalPoint> min_canonical(std::span<const Rational> a, int n, int d, CompMaxPattern pattern) {
  if (static_cast<int>(a.size()) != d) throw DomainError("min_canonical: |a| must equal d");
  if (d < 1 || d > n) throw DomainError("min_canonical: need 1 <= d <= n");

  struct Candidate {
    AlgebraicPoint point;
    Composition face;
    UniPoly num, den;
    std::pair<Rational, Rational> value;
  };
  std::vector<Candidate> cands;
  for (const auto& lambda : enumerate_compmax(n, d, pattern)) {
    auto param = solve_face_system(lambda, a);
    for (auto& pt : ordered_real_solutions(param)) {
      AlgebraicPoint full{pt.q, pt.q0, embed(lambda, pt.coords), pt.code, pt.root};
      auto [num, den] = power_sum_ratio(full, d + 1);
      cands.push_back(Candidate{std::move(full), lambda, num, den, {}});
    }
  }
  if (cands.empty()) return std::nullopt;

  const Rational floor_eps = ten_to_minus(30);
  Rational eps = ten_to_minus(8);
  size_t best = 0;
  while (true) {
    for (auto& c : cands) c.value = enclose_ratio(c.point, c.num, c.den, eps);
    best = 0;
    for (size_t i = 1; i < cands.size(); ++i)
      if (cands[i].value.second < cands[best].value.second) best = i;
    bool separated = true;
    size_t first_tied = best;
    for (size_t i = 0; i < cands.size(); ++i) {
      if (i == best) continue;
      if (cands[i].value.first <= cands[best].value.second) {
        separated = false;
        first_tied = std::min(first_tied, i);
      }
    }
    if (separated) break;
    if (eps <= floor_eps) {
      // indistinguishable at 1e-30: the same point reached from two faces
      best = first_tied;
      break;
    }
    eps /= 100000;
  }
  Candidate& c = cands[best];
  Composition mult = multiplicity_composition(c.point);
  return CanonicalPoint{c.point, c.face, mult, c.value};
}

}  // namespace symconn
