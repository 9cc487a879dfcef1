#include "symconn/polynomial.hpp"

#include <sstream>

namespace symconn {

int total_degree(const Monomial& m) {
  int s = 0;
  for (int e : m) s += e;
  return s;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // smaller in grevlex: the last differing exponent is larger
  for (size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] > b[k];
  }
  return false;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (size_t k = 0; k < a.size(); ++k) m[k] = std::max(a[k], b[k]);
  return m;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (size_t k = 0; k < a.size(); ++k) m[k] = a[k] - b[k];
  return m;
}

Monomial product(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (size_t k = 0; k < a.size(); ++k) m[k] = a[k] + b[k];
  return m;
}

MPoly MPoly::constant(int nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Monomial(static_cast<size_t>(nvars), 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int k) {
  if (k < 0 || k >= nvars) throw DomainError("MPoly::variable: index out of range");
  Monomial m(static_cast<size_t>(nvars), 0);
  m[static_cast<size_t>(k)] = 1;
  return term(m, Rational(1));
}

MPoly MPoly::term(const Monomial& m, const Rational& c) {
  MPoly p(static_cast<int>(m.size()));
  p.add_term(m, c);
  return p;
}

const Monomial& MPoly::leading_monomial() const {
  if (is_zero()) throw DomainError("leading monomial of the zero polynomial");
  return terms_.begin()->first;
}

const Rational& MPoly::leading_coeff() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, symconn::total_degree(m));
  return d;
}

Rational MPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.size()) != nvars_) throw DomainError("MPoly: monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MPoly::eval(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != nvars_) throw DomainError("MPoly::eval: wrong number of coordinates");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (size_t k = 0; k < m.size(); ++k)
      if (m[k]) t *= power(x[k], static_cast<unsigned>(m[k]));
    acc += t;
  }
  return acc;
}

MPoly MPoly::scaled(const Rational& c) const {
  MPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading_coeff());
}

MPoly MPoly::times_term(const Monomial& mono, const Rational& c) const {
  MPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(product(m, mono), v * c);
  return out;
}

void MPoly::require_same(const MPoly& o) const {
  if (nvars_ != o.nvars_) throw DomainError("MPoly: mismatched variable counts");
}

MPoly& MPoly::operator+=(const MPoly& o) {
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.require_same(b);
  MPoly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(product(ma, mb), ca * cb);
  return out;
}

MPoly pow(const MPoly& p, unsigned k) {
  MPoly result = MPoly::constant(p.nvars(), Rational(1));
  MPoly base = p;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

std::string MPoly::to_string(const std::string& prefix) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool is_const = symconn::total_degree(m) == 0;
    bool wrote = false;
    if (mag != 1 || is_const) {
      os << mag.get_str();
      wrote = true;
    }
    for (size_t k = 0; k < m.size(); ++k) {
      if (!m[k]) continue;
      os << (wrote ? "*" : "") << prefix << k + 1;
      if (m[k] > 1) os << '^' << m[k];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace symconn
