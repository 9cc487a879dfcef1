#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "symconn/rational.hpp"

namespace symconn {

/// Closed double interval with outward rounding by one ulp per operation.
struct Interval {
  double lo = 0;
  double hi = 0;

  static double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
  static double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

  static Interval point(double x) { return {x, x}; }
  static Interval enclose(const Rational& q) {
    double v = q.get_d();
    if (Rational(v) == q) return {v, v};
    return {down(v), up(v)};
  }

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

inline Interval operator+(Interval a, Interval b) { return {Interval::down(a.lo + b.lo), Interval::up(a.hi + b.hi)}; }
inline Interval operator-(Interval a, Interval b) { return {Interval::down(a.lo - b.hi), Interval::up(a.hi - b.lo)}; }
inline Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

inline Interval operator*(Interval a, Interval b) {
  double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {Interval::down(*std::min_element(p, p + 4)), Interval::up(*std::max_element(p, p + 4))};
}

/// Tight integer power: even powers of an interval straddling 0 start at 0.
inline Interval pow(Interval a, int k) {
  if (k == 0) return {1, 1};
  if (k % 2 == 0) {
    double mig = a.contains_zero() ? 0.0 : std::min(std::fabs(a.lo), std::fabs(a.hi));
    double mag = std::max(std::fabs(a.lo), std::fabs(a.hi));
    Interval m{mig, mag};
    Interval r = m;
    for (int i = 1; i < k; ++i) r = r * m;
    r.lo = std::max(r.lo, 0.0);
    return r;
  }
  // odd powers are monotone
  Interval l = Interval::point(a.lo), h = Interval::point(a.hi);
  Interval lk = l, hk = h;
  for (int i = 1; i < k; ++i) {
    lk = lk * l;
    hk = hk * h;
  }
  return {lk.lo, hk.hi};
}

}  // namespace symconn
