#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "symconn/power_sum.hpp"
#include "symconn/vandermonde.hpp"

using namespace symconn;
using testsupport::ld;

namespace {

std::vector<ld> decimals(const AlgebraicPoint& pt) {
  std::vector<ld> out;
  for (const auto& v : refine(pt, ten_to_minus(15)).approx) out.push_back(static_cast<ld>(v.get_d()));
  return out;
}

// Exact z_1 <= .. <= z_m at the point's root.
bool ordered(const AlgebraicPoint& pt) {
  int s0 = sign_at_point(pt, pt.q0);
  for (size_t i = 0; i + 1 < pt.coords.size(); ++i)
    if (s0 * sign_at_point(pt, pt.coords[i + 1] - pt.coords[i]) < 0) return false;
  return true;
}

// p_{d+1} at the point, certified to 1e-12.
ld next_power_sum(const CanonicalPoint& cp, int d) {
  AlgebraicPoint pt = cp.point;
  auto [num, den] = power_sum_ratio(pt, d + 1);
  auto [lo, hi] = enclose_ratio(pt, num, den, ten_to_minus(12));
  return static_cast<ld>(Rational((lo + hi) / 2).get_d());
}

}  // namespace

TEST_CASE("linear face system") {
  for (int n = 1; n <= 5; ++n) {
    RationalVector a{ratio(7, 3)};
    auto sols = ordered_real_solutions(solve_face_system(Composition({n}), a));
    REQUIRE(sols.size() == 1);
    CHECK(refine(sols[0], ten_to_minus(20)).approx == RationalVector{Rational(a[0] / n)});
  }
}

TEST_CASE("the (1,2) and (2,1) systems at a = (0, 2)") {
  RationalVector a{0, 2};
  ZeroDimParametrization p = solve_face_system(Composition({1, 2}), a);
  CHECK(p.degree() == 2);
  auto sols = ordered_real_solutions(p);
  REQUIRE(sols.size() == 1);
  auto z = decimals(sols[0]);
  CHECK(z[0] == doctest::Approx(-2 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(z[1] == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-12));

  auto mirror = ordered_real_solutions(solve_face_system(Composition({2, 1}), a));
  REQUIRE(mirror.size() == 1);
  auto w = decimals(mirror[0]);
  CHECK(w[0] == doctest::Approx(-1 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(w[1] == doctest::Approx(2 / std::sqrt(3.0)).epsilon(1e-12));

  CHECK(ordered_real_solutions(solve_face_system(Composition({1, 2}), RationalVector{0, -1})).empty());
  CHECK_THROWS_AS(solve_face_system(Composition({1, 2}), RationalVector{0}), DomainError);
}

TEST_CASE("every real solution of a random face system satisfies it") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    int d = std::uniform_int_distribution<int>(1, 3)(rng);
    int n = std::uniform_int_distribution<int>(d, d + 3)(rng);
    auto faces = enumerate_compositions(n, d);
    const Composition& lambda = faces[std::uniform_int_distribution<size_t>(0, faces.size() - 1)(rng)];
    RationalVector z = testsupport::random_point(rng, d, -2, 2, 3);
    RationalVector a = vandermonde_map(z, d, lambda.parts());
    ZeroDimParametrization p = solve_face_system(lambda, a);
    CHECK(p.degree() <= static_cast<size_t>(std::pow(d, d)) * 1);
    bool found = false;
    for (const auto& code : thom_encoding(p.q)) {
      AlgebraicPoint pt = make_algebraic_point(p.q, p.q0, p.coords, code);
      auto x = decimals(pt);
      for (int j = 1; j <= d; ++j) {
        ld s = 0;
        for (int k = 0; k < d; ++k) s += lambda[static_cast<size_t>(k)] * std::pow(x[static_cast<size_t>(k)], j);
        CHECK(std::fabs(s - static_cast<ld>(a[static_cast<size_t>(j) - 1].get_d())) < 1e-9L);
      }
      bool same = true;
      for (int k = 0; k < d; ++k) same = same && std::fabs(x[static_cast<size_t>(k)] - z[static_cast<size_t>(k)].get_d()) < 1e-9;
      found = found || same;
    }
    CHECK(found);  // the generating point is among the solutions
  }
}

TEST_CASE("positive-dimensional systems are rejected") {
  MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  CHECK_THROWS_AS(rational_univariate_representation({x * y}), SolverError);
  auto p = rational_univariate_representation({x * x - MPoly::constant(2, Rational(2)), y - x});
  CHECK(p.degree() == 2);
}

TEST_CASE("min_canonical on small fibers") {
  auto cp = min_canonical(RationalVector{0, 2}, 3, 2);
  REQUIRE(cp);
  CHECK(cp->face == Composition({1, 2}));
  CHECK(cp->multiplicity == Composition({1, 2}));
  auto x = decimals(cp->point);
  CHECK(x[0] == doctest::Approx(-1.1547005383792515).epsilon(1e-12));
  CHECK(x[1] == doctest::Approx(0.5773502691896258).epsilon(1e-12));
  CHECK(x[2] == doctest::Approx(0.5773502691896258).epsilon(1e-12));
  CHECK(std::fabs(next_power_sum(*cp, 2) + 2 / std::sqrt(3.0L)) < 1e-9L);
  CHECK(on_fiber(cp->point, RationalVector{0, 2}));

  auto diag = min_canonical(RationalVector{3}, 3, 1);
  REQUIRE(diag);
  CHECK(refine(diag->point, ten_to_minus(20)).approx == RationalVector{1, 1, 1});

  CHECK_FALSE(min_canonical(RationalVector{0, -1}, 3, 2));
  CHECK_THROWS_AS(min_canonical(RationalVector{0, 1, 2}, 2, 3), DomainError);
}

TEST_CASE("the mirrored pattern lands on the maximizer for d = 2") {
  auto def = min_canonical(RationalVector{0, 2}, 3, 2, CompMaxPattern::Definition);
  auto mir = min_canonical(RationalVector{0, 2}, 3, 2, CompMaxPattern::Mirrored);
  REQUIRE(def);
  REQUIRE(mir);
  CHECK(mir->face == Composition({2, 1}));
  CHECK(std::fabs(next_power_sum(*mir, 2) - 2 / std::sqrt(3.0L)) < 1e-9L);
  CHECK(next_power_sum(*def, 2) < next_power_sum(*mir, 2));
}

TEST_CASE("for odd d the left-pinned faces hold the maximizer") {
  // x = (-3/2, -3/4, -1/4, 1/4, 3/2): p4(x) = 10.45
  RationalVector x{ratio(-3, 2), ratio(-3, 4), ratio(-1, 4), ratio(1, 4), ratio(3, 2)};
  RationalVector a = vandermonde_map(x, 3);
  auto lo = min_canonical(a, 5, 3);
  auto def = min_canonical(a, 5, 3, CompMaxPattern::Definition);
  REQUIRE(lo);
  REQUIRE(def);
  CHECK(lo->face == Composition({2, 1, 2}));
  CHECK(def->face == Composition({1, 3, 1}));
  ld p4 = 0;
  for (const auto& v : x) p4 += std::pow(static_cast<ld>(v.get_d()), 4);
  CHECK(next_power_sum(*lo, 3) < p4);
  CHECK(next_power_sum(*def, 3) > p4);
}

TEST_CASE("minimizers of 50 random chamber points") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 7)(rng);
    int d = std::uniform_int_distribution<int>(1, std::min(n, 3))(rng);
    RationalVector x = testsupport::random_point(rng, n, -2, 2, 4);
    std::sort(x.begin(), x.end());
    CAPTURE(to_string(x));
    CAPTURE(d);
    RationalVector a = vandermonde_map(x, d);
    auto cp = min_canonical(a, n, d);
    REQUIRE(cp);
    CHECK(on_fiber(cp->point, a));
    CHECK(ordered(cp->point));
    Composition mult = multiplicity_composition(cp->point);
    CHECK(mult == cp->multiplicity);
    bool on_pattern = false;
    for (const auto& lambda : enumerate_compmax(n, d, CompMaxPattern::Minimizer)) on_pattern = on_pattern || precedes(lambda, mult);
    CHECK(on_pattern);

    std::vector<ld> xs;
    for (const auto& v : x) xs.push_back(static_cast<ld>(v.get_d()));
    ld best = next_power_sum(*cp, d);
    int violations = 0;
    for (const auto& z : testsupport::sample_fiber(xs, d, 400, rng)) {
      ld pz = testsupport::power_sum(z, d + 1);
      if (best > pz + 1e-6L * (1 + std::fabs(pz))) ++violations;
    }
    CHECK(violations == 0);
  }
}
