#include "symconn/power_sum.hpp"

#include <sstream>

namespace symconn {

std::string to_string(Relation rel) {
  switch (rel) {
    case Relation::GE: return "ge";
    case Relation::EQ: return "eq";
    case Relation::GT: return "gt";
  }
  return "?";
}

Relation parse_relation(const std::string& text) {
  if (text == "ge" || text == ">=") return Relation::GE;
  if (text == "eq" || text == "=" || text == "==") return Relation::EQ;
  if (text == "gt" || text == ">") return Relation::GT;
  throw DomainError("unknown relation '" + text + "' (expected ge|eq|gt)");
}

bool satisfies(int s, Relation rel) {
  switch (rel) {
    case Relation::GE: return s >= 0;
    case Relation::EQ: return s == 0;
    case Relation::GT: return s > 0;
  }
  return false;
}

PowerSumPoly::PowerSumPoly(int d) : d_(d) {
  if (d < 1) throw DomainError("PowerSumPoly needs at least one generator");
}

PowerSumPoly PowerSumPoly::constant(int d, const Rational& c) {
  PowerSumPoly g(d);
  g.add_term(std::vector<int>(static_cast<size_t>(d), 0), c);
  return g;
}

PowerSumPoly PowerSumPoly::generator(int d, int j) {
  if (j < 1 || j > d) throw DomainError("PowerSumPoly::generator: index out of range");
  std::vector<int> e(static_cast<size_t>(d), 0);
  e[static_cast<size_t>(j) - 1] = 1;
  PowerSumPoly g(d);
  g.add_term(e, Rational(1));
  return g;
}

namespace {

int weight_of(const std::vector<int>& e) {
  int w = 0;
  for (size_t j = 0; j < e.size(); ++j) w += static_cast<int>(j + 1) * e[j];
  return w;
}

}  // namespace

int PowerSumPoly::weighted_degree() const {
  int w = -1;
  for (const auto& [e, c] : terms_) w = std::max(w, weight_of(e));
  return w;
}

void PowerSumPoly::add_term(const std::vector<int>& exponents, const Rational& c) {
  if (static_cast<int>(exponents.size()) != d_)
    throw DomainError("PowerSumPoly: exponent vector must have " + std::to_string(d_) + " entries");
  for (int e : exponents)
    if (e < 0) throw DomainError("PowerSumPoly: negative exponent");
  if (weight_of(exponents) > d_)
    throw DomainError("PowerSumPoly: term of weighted degree " + std::to_string(weight_of(exponents)) +
                      " exceeds d = " + std::to_string(d_));
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational PowerSumPoly::eval(std::span<const Rational> p) const {
  if (static_cast<int>(p.size()) < d_) throw DomainError("PowerSumPoly::eval: too few power sums");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t j = 0; j < e.size(); ++j)
      if (e[j]) t *= power(p[j], static_cast<unsigned>(e[j]));
    acc += t;
  }
  return acc;
}

MPoly PowerSumPoly::expand(std::span<const int> weights) const {
  const int l = static_cast<int>(weights.size());
  std::vector<MPoly> sums;
  for (int j = 1; j <= d_; ++j) sums.push_back(weighted_power_sum(j, weights));
  MPoly out(l);
  for (const auto& [e, c] : terms_) {
    MPoly t = MPoly::constant(l, c);
    for (size_t j = 0; j < e.size(); ++j)
      if (e[j]) t = t * pow(sums[j], static_cast<unsigned>(e[j]));
    out += t;
  }
  return out;
}

PowerSumPoly& PowerSumPoly::operator+=(const PowerSumPoly& o) {
  if (o.d_ != d_) throw DomainError("PowerSumPoly: mismatched generator counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PowerSumPoly PowerSumPoly::scaled(const Rational& c) const {
  PowerSumPoly out(d_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

std::string PowerSumPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest weight first reads naturally
  std::vector<std::pair<std::vector<int>, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return weight_of(a.first) > weight_of(b.first); });
  for (const auto& [e, c] : ordered) {
    Rational mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (mag != 1 || weight_of(e) == 0) {
      os << mag.get_str();
      wrote = true;
    }
    for (size_t j = 0; j < e.size(); ++j) {
      if (!e[j]) continue;
      os << (wrote ? "*" : "") << 'Z' << j + 1;
      if (e[j] > 1) os << '^' << e[j];
      wrote = true;
    }
  }
  return os.str();
}

std::string SymConstraint::to_string() const {
  const char* op = rel == Relation::GE ? " >= 0" : rel == Relation::EQ ? " = 0" : " > 0";
  return g.to_string() + op;
}

SymmetricSystem::SymmetricSystem(int n, int d, std::vector<SymConstraint> constraints, Rational box_lo,
                                 Rational box_hi)
    : n_(n), d_(d), constraints_(std::move(constraints)), lo_(std::move(box_lo)), hi_(std::move(box_hi)) {
  if (n < 1) throw DomainError("system needs n >= 1");
  if (d < 1 || d > n) throw DomainError("system needs 1 <= d <= n (got d = " + std::to_string(d) + ", n = " +
                                        std::to_string(n) + ")");
  if (!(lo_ < hi_)) throw DomainError("bounding box must satisfy lo < hi");
  for (size_t k = 0; k < constraints_.size(); ++k)
    if (constraints_[k].g.d() > d)
      throw DomainError("constraint " + std::to_string(k) + " uses more than d power sums");
}

bool SymmetricSystem::in_box(std::span<const Rational> x) const {
  for (const auto& v : x)
    if (v < lo_ || v > hi_) return false;
  return true;
}

MPoly weighted_power_sum(int j, std::span<const int> m) {
  if (j < 1) throw DomainError("weighted_power_sum: j must be positive");
  const int l = static_cast<int>(m.size());
  MPoly out(l);
  for (int i = 0; i < l; ++i) {
    if (m[static_cast<size_t>(i)] < 1) throw DomainError("weighted_power_sum: weights must be positive");
    Monomial mono(static_cast<size_t>(l), 0);
    mono[static_cast<size_t>(i)] = j;
    out.add_term(mono, Rational(m[static_cast<size_t>(i)]));
  }
  return out;
}

RationalVector vandermonde_map(std::span<const Rational> x, int d, std::span<const int> m) {
  if (x.size() != m.size()) throw DomainError("vandermonde_map: weight vector length mismatch");
  RationalVector out(static_cast<size_t>(d), Rational(0));
  for (size_t i = 0; i < x.size(); ++i) {
    Rational pw(1);
    for (int j = 0; j < d; ++j) {
      pw *= x[i];
      out[static_cast<size_t>(j)] += m[i] * pw;
    }
  }
  return out;
}

RationalVector vandermonde_map(std::span<const Rational> x, int d) {
  std::vector<int> ones(x.size(), 1);
  return vandermonde_map(x, d, ones);
}

Membership eval_membership(const SymmetricSystem& sys, std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != sys.n())
    throw DomainError("eval_membership: expected " + std::to_string(sys.n()) + " coordinates");
  RationalVector p = vandermonde_map(x, sys.d());
  Membership out;
  out.member = true;
  for (size_t k = 0; k < sys.constraints().size(); ++k) {
    const auto& c = sys.constraints()[k];
    int s = sign(c.g.eval(std::span<const Rational>(p).first(static_cast<size_t>(c.g.d()))));
    out.signs.push_back(s);
    if (!satisfies(s, c.rel) && out.member) {
      out.member = false;
      out.first_violation = static_cast<int>(k);
    }
  }
  return out;
}

Membership FaceSystem::eval(std::span<const Rational> z) const {
  if (static_cast<int>(z.size()) != dimension()) throw DomainError("FaceSystem::eval: wrong coordinate count");
  Membership out;
  out.member = true;
  for (size_t k = 0; k < constraints.size(); ++k) {
    int s = sign(constraints[k].poly.eval(z));
    out.signs.push_back(s);
    if (!satisfies(s, constraints[k].rel) && out.member) {
      out.member = false;
      out.first_violation = static_cast<int>(k);
    }
  }
  return out;
}

FaceSystem restrict(const SymmetricSystem& sys, const Composition& lambda) {
  if (lambda.n() != sys.n())
    throw DomainError("restrict: composition of " + std::to_string(lambda.n()) + " does not match n = " +
                      std::to_string(sys.n()));
  FaceSystem face{lambda, sys.n(), {}, sys.constraints(), sys.box_lo(), sys.box_hi()};
  for (const auto& c : sys.constraints()) face.constraints.push_back({c.g.expand(lambda.parts()), c.rel});
  return face;
}

}  // namespace symconn
