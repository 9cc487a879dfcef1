#include "symconn/real_algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace symconn {

std::string to_string(const ThomCode& code) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < code.size(); ++i) os << (i ? "," : "") << (code[i] > 0 ? '+' : code[i] < 0 ? '-' : '0');
  os << ')';
  return os.str();
}

namespace {

// One bisection step on an isolating interval of a square-free polynomial.
void bisect_interval(const UniPoly& sqfree, RootInterval& iv) {
  if (iv.exact()) return;
  Rational mid = (iv.lo + iv.hi) / 2;
  int s_mid = sqfree.sign_at(mid);
  if (s_mid == 0) {
    iv.lo = iv.hi = mid;
    return;
  }
  if (s_mid != sqfree.sign_at(iv.hi))
    iv.lo = mid;
  else
    iv.hi = mid;
}

std::optional<Interval> fast_range(const UniPoly& p, const RootInterval& iv) {
  auto x = enclose_range(iv.lo, iv.hi);
  return x ? horner_enclosure(p, *x) : std::nullopt;
}

int sign_at_isolated(const UniPoly& sqfree, RootInterval& iv, const UniPoly& p) {
  if (p.is_zero()) return 0;
  // cheap interval refinement first; the gcd test is only needed when p may vanish
  constexpr int kExact = 12;
  constexpr int kTries = 24;
  for (int step = 0;; ++step) {
    if (iv.exact()) return p.sign_at(iv.lo);
    if (auto v = fast_range(p, iv)) {
      if (v->lo > 0) return 1;
      if (v->hi < 0) return -1;
    }
    if (step >= kExact) {
      auto [lo, hi] = eval_range(p, iv.lo, iv.hi);
      if (lo > 0) return 1;
      if (hi < 0) return -1;
    }
    if (step == kTries) {
      UniPoly g = gcd(sqfree, p);
      if (g.degree() >= 1 && count_roots(sturm_sequence(g), iv.lo, iv.hi) > 0) return 0;
    }
    bisect_interval(sqfree, iv);
  }
}

void isolate(const std::vector<UniPoly>& sturm, const UniPoly& q, const Rational& a, const Rational& b,
             std::vector<RootInterval>& out) {
  int c = count_roots(sturm, a, b);
  if (c == 0) return;
  if (c == 1) {
    RootInterval iv{a, b};
    if (q.sign_at(b) == 0) iv.lo = b;
    out.push_back(iv);
    return;
  }
  Rational mid = (a + b) / 2;
  isolate(sturm, q, a, mid, out);
  isolate(sturm, q, mid, b, out);
}

}  // namespace

RealRoots::RealRoots(const UniPoly& q) {
  if (q.is_zero()) throw DomainError("thom encoding of the zero polynomial");
  q_ = squarefree_part(q);
  if (q_.degree() < 1) return;
  Rational bound = root_bound(q_);
  isolate(sturm_sequence(q_), q_, -bound, bound, roots_);
  UniPoly d = q_;
  for (int k = 1; k <= q_.degree(); ++k) {
    d = d.derivative();
    derivatives_.push_back(d);
  }
  codes_.resize(roots_.size());
}

const ThomCode& RealRoots::code(size_t i) {
  auto& slot = codes_.at(i);
  if (!slot) {
    ThomCode code;
    for (const auto& der : derivatives_) code.push_back(sign_at_isolated(q_, roots_[i], der));
    slot = std::move(code);
  }
  return *slot;
}

std::vector<ThomCode> RealRoots::codes() {
  std::vector<ThomCode> out;
  for (size_t i = 0; i < roots_.size(); ++i) out.push_back(code(i));
  return out;
}

size_t RealRoots::index_of(const ThomCode& code) {
  for (size_t i = 0; i < roots_.size(); ++i)
    if (this->code(i) == code) return i;
  throw InvalidThomCode("Thom code " + to_string(code) + " is not realised by " + q_.to_string());
}

int RealRoots::sign_at(size_t i, const UniPoly& p) { return sign_at_isolated(q_, roots_.at(i), p); }

void RealRoots::bisect(size_t i) { bisect_interval(q_, roots_.at(i)); }

const RootInterval& RealRoots::refine(size_t i, const Rational& width) {
  auto& iv = roots_.at(i);
  while (!iv.exact() && iv.width() > width) bisect_interval(q_, iv);
  return iv;
}

std::vector<ThomCode> thom_encoding(const UniPoly& q) { return RealRoots(q).codes(); }

int sign_at_root(const UniPoly& q, const ThomCode& code, const UniPoly& p) {
  RealRoots roots(q);
  return roots.sign_at(roots.index_of(code), p);
}

AlgebraicPoint make_algebraic_point(UniPoly q, UniPoly q0, std::vector<UniPoly> coords, const ThomCode& code) {
  RealRoots roots(q);
  size_t idx = roots.index_of(code);
  if (roots.sign_at(idx, q0) == 0) throw DomainError("algebraic point: q0 vanishes at the selected root");
  AlgebraicPoint pt{std::move(q), std::move(q0), std::move(coords), code, roots.interval(idx)};
  return pt;
}

AlgebraicPoint lift_rational(std::span<const Rational> x) {
  std::vector<UniPoly> coords;
  for (const auto& v : x) coords.push_back(UniPoly::constant(v));
  UniPoly t = UniPoly::variable();
  return AlgebraicPoint{t, UniPoly::constant(Rational(1)), std::move(coords), ThomCode{1},
                        RootInterval{Rational(0), Rational(0)}};
}

int sign_at_point(const AlgebraicPoint& pt, const UniPoly& p) {
  RootInterval iv = pt.root;
  return sign_at_isolated(squarefree_part(pt.q), iv, p);
}

namespace {

std::pair<Rational, Rational> enclose_with(const UniPoly& sqfree, RootInterval& iv, const UniPoly& num,
                                           const UniPoly& den, const Rational& eps) {
  // doubles cannot certify widths much below their own resolution
  const bool doubles_useful = eps >= ten_to_minus(12);
  for (int step = 0;; ++step) {
    if (iv.exact()) {
      Rational v = num.eval(iv.lo) / den.eval(iv.lo);
      return {v, v};
    }
    if (doubles_useful) {
      auto n = fast_range(num, iv);
      auto d = fast_range(den, iv);
      if (n && d && (d->lo > 0 || d->hi < 0)) {
        double c[4] = {n->lo / d->lo, n->lo / d->hi, n->hi / d->lo, n->hi / d->hi};
        double lo = Interval::down(*std::min_element(c, c + 4));
        double hi = Interval::up(*std::max_element(c, c + 4));
        if (std::isfinite(lo) && std::isfinite(hi) && Rational(hi) - Rational(lo) <= eps) return {Rational(lo), Rational(hi)};
      }
      if (step < 40) {
        bisect_interval(sqfree, iv);
        continue;
      }
    }
    auto [nl, nh] = eval_range(num, iv.lo, iv.hi);
    auto [dl, dh] = eval_range(den, iv.lo, iv.hi);
    if (dl > 0 || dh < 0) {
      Rational c[4] = {nl / dl, nl / dh, nh / dl, nh / dh};
      Rational lo = *std::min_element(c, c + 4);
      Rational hi = *std::max_element(c, c + 4);
      if (hi - lo <= eps) return {lo, hi};
    }
    bisect_interval(sqfree, iv);
  }
}

}  // namespace

std::pair<Rational, Rational> enclose_ratio(AlgebraicPoint& pt, const UniPoly& num, const UniPoly& den,
                                            const Rational& eps) {
  if (eps <= 0) throw DomainError("enclosure width must be positive");
  return enclose_with(squarefree_part(pt.q), pt.root, num, den, eps);
}

RefinedPoint refine(AlgebraicPoint& pt, const Rational& eps) {
  if (eps <= 0) throw DomainError("refine: eps must be positive");
  UniPoly sqfree = squarefree_part(pt.q);
  RefinedPoint out;
  for (const auto& qi : pt.coords) {
    auto [lo, hi] = enclose_with(sqfree, pt.root, qi, pt.q0, eps);
    out.lower.push_back(lo);
    out.upper.push_back(hi);
    out.approx.push_back((lo + hi) / 2);
  }
  return out;
}

RefinedPoint refine(const AlgebraicPoint& pt, const Rational& eps) {
  AlgebraicPoint copy = pt;
  return refine(copy, eps);
}

}  // namespace symconn
