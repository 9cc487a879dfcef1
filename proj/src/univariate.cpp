#include "symconn/univariate.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace symconn {

UniPoly::UniPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int k) {
  if (k < 0) throw DomainError("monomial: negative exponent");
  std::vector<Rational> coeffs(static_cast<size_t>(k) + 1, Rational(0));
  coeffs.back() = c;
  return UniPoly(std::move(coeffs));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return c_[static_cast<size_t>(k)];
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

int UniPoly::sign_at(const Rational& t) const {
  if (auto x = enclose_range(t, t)) {
    if (auto v = horner_enclosure(*this, *x)) {
      if (v->lo > 0) return 1;
      if (v->hi < 0) return -1;
    }
  }
  return sign(eval(t));
}

Rational UniPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

int UniPoly::sign_at_minus_infinity() const {
  if (is_zero()) return 0;
  int s = sign(leading());
  return degree() % 2 == 0 ? s : -s;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading());
}

UniPoly UniPoly::scaled(const Rational& c) const {
  if (c == 0) return UniPoly();
  std::vector<Rational> out(c_);
  for (auto& v : out) v *= c;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::compose_affine(const Rational& c, const Rational& s) const {
  UniPoly inner({s, c});
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& a = c_[static_cast<size_t>(k)];
    if (a == 0) continue;
    Rational mag = abs(a);
    if (first)
      os << (a < 0 ? "-" : "");
    else
      os << (a < 0 ? " - " : " + ");
    first = false;
    bool unit = mag == 1;
    if (!unit || k == 0) os << mag.get_str();
    if (k >= 1) os << (unit ? "" : "*") << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  const Rational inv_lead = 1 / b.leading();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rational> quot(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    Rational factor = rem[static_cast<size_t>(k)] * inv_lead;
    if (factor == 0) continue;
    quot[static_cast<size_t>(k - db)] = factor;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k - db + j)] -= factor * b.coeff(j);
  }
  rem.resize(static_cast<size_t>(db));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }
UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

UniPoly pow(const UniPoly& p, unsigned k) {
  UniPoly result = UniPoly::constant(Rational(1));
  UniPoly base = p;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::pair<UniPoly, UniPoly> half_extended_gcd(const UniPoly& a, const UniPoly& b) {
  // invariant: s0*a = r0 (mod b), s1*a = r1 (mod b)
  UniPoly r0 = a % b, r1 = b;
  UniPoly s0 = UniPoly::constant(Rational(1)), s1;
  if (b.is_zero()) {
    r0 = a;
  }
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UniPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) return {UniPoly(), UniPoly()};
  Rational inv = 1 / r0.leading();
  UniPoly s = s0.scaled(inv);
  if (!b.is_zero()) s = s % b;
  return {r0.scaled(inv), s};
}

UniPoly inverse_mod(const UniPoly& a, const UniPoly& m) {
  auto [g, s] = half_extended_gcd(a, m);
  if (g.degree() != 0) throw DomainError("inverse_mod: polynomial is not invertible modulo m");
  return s;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UniPoly g = gcd(p, p.derivative());
  return (p / g).monic();
}

std::pair<Rational, Rational> eval_range(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) return {Rational(0), Rational(0)};
  Rational mid = (lo + hi) / 2;
  Rational radius = (hi - lo) / 2;
  // centred form: p(mid + t) = b0 + sum b_k t^k with |t| <= radius
  UniPoly shifted = p.compose_affine(Rational(1), mid);
  Rational spread(0);
  Rational r_pow(1);
  for (int k = 1; k <= shifted.degree(); ++k) {
    r_pow *= radius;
    spread += abs(shifted.coeff(k)) * r_pow;
  }
  Rational centre = shifted.coeff(0);
  return {centre - spread, centre + spread};
}

std::optional<Interval> enclose_range(const Rational& lo, const Rational& hi) {
  Interval a = Interval::enclose(lo), b = Interval::enclose(hi);
  if (!std::isfinite(a.lo) || !std::isfinite(b.hi)) return std::nullopt;
  return Interval{a.lo, b.hi};
}

std::optional<Interval> horner_enclosure(const UniPoly& p, const Interval& x) {
  if (p.is_zero()) return Interval{0, 0};
  const auto& c = p.coefficients();
  Interval acc{0, 0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    double v = it->get_d();
    if (!std::isfinite(v) || std::fabs(v) > 1e300) return std::nullopt;
    acc = acc * x + Interval::enclose(*it);
  }
  if (!std::isfinite(acc.lo) || !std::isfinite(acc.hi)) return std::nullopt;
  return acc;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  UniPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    UniPoly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    // positive rescaling keeps signs and tames coefficient growth
    seq.push_back((-r).scaled(1 / abs(r.leading())));
  }
  return seq;
}

int sign_variations(const std::vector<UniPoly>& sequence, const Rational& t) {
  int variations = 0;
  int last = 0;
  for (const auto& p : sequence) {
    int s = p.sign_at(t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int count_roots(const std::vector<UniPoly>& sequence, const Rational& a, const Rational& b) {
  if (sequence.empty()) return 0;
  return sign_variations(sequence, a) - sign_variations(sequence, b);
}

Rational root_bound(const UniPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  // Fujiwara: |root| <= 2 max_k |a_{n-k} / a_n|^(1/k); rounded up to a power of two with slack
  auto log2_abs = [](const Rational& q) {
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
    double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
    return static_cast<double>(en - ed) + std::log2(std::fabs(mn)) - std::log2(std::fabs(md));
  };
  const int n = p.degree();
  const double lead = log2_abs(p.leading());
  double best = -std::numeric_limits<double>::infinity();
  for (int k = 1; k <= n; ++k) {
    const Rational& c = p.coefficients()[static_cast<size_t>(n - k)];
    if (c == 0) continue;
    best = std::max(best, (log2_abs(c) - lead) / k);
  }
  if (!std::isfinite(best)) return Rational(1);
  long e = static_cast<long>(std::ceil(best)) + 2;
  Rational b(1);
  if (e >= 0)
    mpz_mul_2exp(b.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpz_mul_2exp(b.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return b;
}

}  // namespace symconn
