// Independent numeric oracles and helpers shared by the unit tests and the
// acceptance gate. Nothing here calls into the library's exact machinery.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "symconn/composition.hpp"
#include "symconn/polynomial.hpp"
#include "symconn/power_sum.hpp"
#include "symconn/rational.hpp"
#include "symconn/univariate.hpp"

namespace testsupport {

using symconn::Rational;
using symconn::RationalVector;
using symconn::UniPoly;

using ld = long double;
using cld = std::complex<ld>;

inline std::vector<ld> to_ld(const UniPoly& p) {
  std::vector<ld> c;
  for (const auto& v : p.coefficients()) c.push_back(static_cast<ld>(v.get_d()));
  return c;
}

inline ld horner(const std::vector<ld>& c, ld x) {
  ld r = 0;
  for (size_t k = c.size(); k-- > 0;) r = r * x + c[k];
  return r;
}

inline cld horner(const std::vector<ld>& c, cld x) {
  cld r = 0;
  for (size_t k = c.size(); k-- > 0;) r = r * x + c[k];
  return r;
}

inline std::vector<ld> derivative(const std::vector<ld>& c) {
  std::vector<ld> d;
  for (size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<ld>(k));
  return d;
}

/// All complex roots by Aberth iteration.
inline std::vector<cld> complex_roots(const std::vector<ld>& coeffs) {
  std::vector<ld> c = coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};
  for (auto& v : c) v /= coeffs[static_cast<size_t>(n)];
  std::vector<ld> dc = derivative(c);
  ld radius = 0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::pow(std::fabs(c[static_cast<size_t>(k)]), 1.0L / (n - k)));
  radius = 2 * radius + 1;
  std::vector<cld> z(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) z[static_cast<size_t>(k)] = std::polar(radius, 0.4L + 2 * 3.14159265358979323846L * k / n);
  for (int it = 0; it < 2000; ++it) {
    ld move = 0;
    for (int k = 0; k < n; ++k) {
      cld zk = z[static_cast<size_t>(k)];
      cld f = horner(c, zk), df = horner(dc, zk);
      if (std::abs(f) == 0) continue;
      cld ratio = f / df;
      cld s = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) s += 1.0L / (zk - z[static_cast<size_t>(j)]);
      cld w = ratio / (1.0L - ratio * s);
      z[static_cast<size_t>(k)] -= w;
      move = std::max(move, std::abs(w) / (1 + std::abs(zk)));
    }
    if (move < 1e-17L) break;
  }
  return z;
}

/// Distinct real roots, ascending. Roots closer than `merge` are one root.
inline std::vector<ld> real_roots(const UniPoly& p, ld imag_tol = 1e-6L, ld merge = 1e-6L) {
  std::vector<ld> out;
  for (const auto& z : complex_roots(to_ld(p)))
    if (std::fabs(z.imag()) <= imag_tol * (1 + std::fabs(z.real()))) out.push_back(z.real());
  std::sort(out.begin(), out.end());
  std::vector<ld> distinct;
  for (ld r : out)
    if (distinct.empty() || r - distinct.back() > merge * (1 + std::fabs(r))) distinct.push_back(r);
  // polish each cluster centre with Newton on the square-free part is not needed at this tolerance
  return distinct;
}

/// Random polynomial with small integer coefficients; some carry repeated or
/// rational factors so square-free reduction is exercised.
inline UniPoly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree), coef(-6, 6), kind(0, 5);
  const int k = kind(rng);
  auto plain = [&](int d) {
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng));
    if (c.back() == 0) c.back() = 1;
    return UniPoly(c);
  };
  if (k == 0 && max_degree >= 4) {  // repeated factor
    UniPoly f = plain(std::uniform_int_distribution<int>(1, max_degree / 2)(rng));
    return f * f;
  }
  if (k == 1) {  // product of rational linear factors
    UniPoly out{Rational(1)};
    int d = deg(rng);
    for (int i = 0; i < d; ++i) out *= UniPoly{symconn::ratio(-coef(rng), 1 + std::abs(coef(rng)) % 3), Rational(1)};
    return out;
  }
  return plain(deg(rng));
}

inline ld power_sum(const std::vector<ld>& x, int j) {
  ld s = 0;
  for (ld v : x) s += std::pow(v, j);
  return s;
}

/// Solves the d x d (or smaller) linear system by Gaussian elimination with
/// partial pivoting; returns false if singular.
inline bool solve_dense(std::vector<std::vector<ld>> a, std::vector<ld> b, std::vector<ld>& x) {
  const size_t n = b.size();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    for (size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    if (std::fabs(a[piv][c]) < 1e-300L) return false;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (size_t r = c + 1; r < n; ++r) {
      ld f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  x.assign(n, 0);
  for (size_t r = n; r-- > 0;) {
    ld s = b[r];
    for (size_t k = r + 1; k < n; ++k) s -= a[r][k] * x[k];
    x[r] = s / a[r][r];
  }
  return true;
}

/// Gauss-Newton projection onto {p_j(z) = a_j, j = 1..d} with minimum-norm
/// steps. Returns false when it does not converge.
inline bool project_to_fiber(std::vector<ld>& z, const std::vector<ld>& a) {
  const size_t d = a.size(), n = z.size();
  for (int it = 0; it < 60; ++it) {
    std::vector<ld> r(d);
    ld res = 0;
    for (size_t j = 0; j < d; ++j) {
      r[j] = power_sum(z, static_cast<int>(j) + 1) - a[j];
      res = std::max(res, std::fabs(r[j]));
    }
    if (res < 1e-13L) return true;
    // J is d x n with J[j][i] = (j+1) z_i^j; step = J^T (J J^T)^-1 r
    std::vector<std::vector<ld>> jac(d, std::vector<ld>(n));
    for (size_t j = 0; j < d; ++j)
      for (size_t i = 0; i < n; ++i) jac[j][i] = static_cast<ld>(j + 1) * std::pow(z[i], static_cast<int>(j));
    std::vector<std::vector<ld>> g(d, std::vector<ld>(d));
    for (size_t p = 0; p < d; ++p)
      for (size_t q = 0; q < d; ++q)
        for (size_t i = 0; i < n; ++i) g[p][q] += jac[p][i] * jac[q][i];
    std::vector<ld> y;
    if (!solve_dense(g, r, y)) return false;
    for (size_t i = 0; i < n; ++i) {
      ld step = 0;
      for (size_t j = 0; j < d; ++j) step += jac[j][i] * y[j];
      z[i] -= step;
    }
  }
  return false;
}

/// Sorted points of V(a) near x, from random perturbations projected back
/// onto the fiber; x itself is included.
inline std::vector<std::vector<ld>> sample_fiber(const std::vector<ld>& x, int d, int count, std::mt19937& rng) {
  std::vector<ld> a;
  for (int j = 1; j <= d; ++j) a.push_back(power_sum(x, j));
  ld scale = 0;
  for (ld v : x) scale = std::max(scale, std::fabs(v));
  scale = std::max(scale, 0.5L);
  std::vector<std::vector<ld>> out{x};
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> pick(0.01, 1.0);
  for (int s = 0; s < count * 4 && static_cast<int>(out.size()) < count; ++s) {
    // walk from a previous sample so the whole fiber gets explored
    std::vector<ld> z = out[std::uniform_int_distribution<size_t>(0, out.size() - 1)(rng)];
    ld r = static_cast<ld>(pick(rng)) * scale;
    for (auto& v : z) v += r * static_cast<ld>(gauss(rng));
    if (!project_to_fiber(z, a)) continue;
    std::sort(z.begin(), z.end());
    out.push_back(z);
  }
  return out;
}

/// Generic block substitution: x_i -> z_{block of i}. Works on any
/// polynomial, symmetric or not.
inline symconn::MPoly block_substitute(const symconn::MPoly& f, const symconn::Composition& lambda) {
  symconn::MPoly out(lambda.length());
  for (const auto& [mono, c] : f.terms()) {
    symconn::Monomial m(static_cast<size_t>(lambda.length()), 0);
    for (size_t i = 0; i < mono.size(); ++i) m[static_cast<size_t>(lambda.block_of(static_cast<int>(i)))] += mono[i];
    out.add_term(m, c);
  }
  return out;
}

inline Rational random_rational(std::mt19937& rng, int lo, int hi, int den) {
  return symconn::ratio(std::uniform_int_distribution<long>(lo * den, hi * den)(rng), den);
}

inline RationalVector random_point(std::mt19937& rng, int n, int lo, int hi, int den) {
  RationalVector x;
  for (int i = 0; i < n; ++i) x.push_back(random_rational(rng, lo, hi, den));
  return x;
}

/// Random power-sum polynomial of weighted degree <= d.
inline symconn::PowerSumPoly random_power_sum_poly(std::mt19937& rng, int d, int terms) {
  symconn::PowerSumPoly g(d);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<size_t>(d), 0);
    int budget = std::uniform_int_distribution<int>(0, d)(rng);
    while (budget > 0) {
      int j = std::uniform_int_distribution<int>(1, budget)(rng);
      ++e[static_cast<size_t>(j) - 1];
      budget -= j;
    }
    int c = coef(rng);
    if (c != 0) g.add_term(e, symconn::ratio(c, 1 + std::abs(coef(rng)) % 3));
  }
  return g;
}

inline std::vector<int> identity_permutation(int n) {
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

template <class T>
std::vector<T> permute(const std::vector<T>& x, const std::vector<int>& perm) {
  std::vector<T> out;
  for (int i : perm) out.push_back(x[static_cast<size_t>(i)]);
  return out;
}

}  // namespace testsupport
