#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"
#include "symconn/engine.hpp"
#include "symconn/problem_io.hpp"

using namespace symconn;

namespace {

ProblemFile fixture(const std::string& name) { return load_problem("tests/fixtures/corpus/" + name + ".json"); }

EngineConfig config_for(const ProblemFile& p) {
  EngineConfig cfg;
  cfg.oracle = p.oracle.apply(cfg.oracle);
  return cfg;
}

// Sorts x and applies the same permutation to y.
std::pair<RationalVector, RationalVector> canonicalize(const RationalVector& x, const RationalVector& y) {
  std::vector<size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return x[a] < x[b]; });
  RationalVector xs, ys;
  for (size_t k : order) {
    xs.push_back(x[k]);
    ys.push_back(y[k]);
  }
  return {xs, ys};
}

RationalVector sorted(RationalVector v) {
  std::sort(v.begin(), v.end());
  return v;
}

PowerSumPoly poly(int d, std::initializer_list<std::pair<std::vector<int>, Rational>> terms) {
  PowerSumPoly g(d);
  for (const auto& [e, c] : terms) g.add_term(e, c);
  return g;
}

const RationalVector arc_x{ratio(-4, 5), ratio(3, 5)};
const RationalVector arc_y{ratio(3, 5), ratio(-4, 5)};

const std::vector<std::string> corpus{"arcs2", "arcs3", "ball2",  "ball3", "ball4",  "cap4",
                                      "circle2", "shell2", "shell3", "split3", "split4"};

}  // namespace

TEST_CASE("canonical connectivity on the ball and the split half-spaces") {
  ProblemFile ball = fixture("ball3");
  Engine e(ball.system);
  CHECK(e.canonical(RationalVector{0, 0, 0}, RationalVector{ratio(-1, 2), 0, ratio(1, 2)}).connected);
  CHECK(e.canonical(RationalVector{0, 0, 0}, RationalVector{0, 0, 0}).connected);

  ProblemFile split = fixture("split3");
  Verdict v = connectivity_symmetric_canonical(split.system, RationalVector{1, 1, 1}, RationalVector{-1, -1, -1});
  CHECK_FALSE(v.connected);
  CHECK(v.certificate["pattern"] == "minimizer");
  CHECK(v.certificate["resolution"].contains("h_final"));
  CHECK(v.certificate["x_located"]["component"] != v.certificate["y_located"]["component"]);
}

TEST_CASE("walls of the circle and of the two arcs") {
  ProblemFile circle = fixture("circle2"), arcs = fixture("arcs2");
  Verdict reach = connected_wall(circle.system, arc_x, 1);
  CHECK(reach.connected);
  CHECK(reach.certificate["reached"] == true);
  Verdict blocked = connected_wall(arcs.system, arc_x, 1);
  CHECK_FALSE(blocked.connected);
  CHECK(blocked.certificate["reached"] == false);

  // (x2 - x1)^2 = 2 p2 - p1^2 >= 1 keeps every point off the wall
  SymmetricSystem apart(2, 2, {SymConstraint{poly(2, {{{0, 1}, 2}, {{2, 0}, -1}, {{0, 0}, -1}}), Relation::GE}},
                        Rational(-2), Rational(2));
  CHECK_FALSE(connected_wall(apart, RationalVector{-1, 1}, 1).connected);
  CHECK_THROWS_AS(connected_wall(apart, RationalVector{-1, 1}, 2), DomainError);
}

TEST_CASE("full connectivity separates orbit and genuine connectivity") {
  ProblemFile circle = fixture("circle2"), arcs = fixture("arcs2");
  Verdict split = connectivity_symmetric(arcs.system, arc_x, arc_y);
  CHECK_FALSE(split.connected);
  CHECK(split.certificate["orbit"]["connected"] == true);
  CHECK(split.certificate["word"] == std::vector<int>{1});
  CHECK(connectivity_symmetric_canonical(arcs.system, arc_x, sorted(arc_y)).connected);
  CHECK(connectivity_symmetric(circle.system, arc_x, arc_y).connected);

  Verdict same = connectivity_symmetric(arcs.system, arc_x, arc_x);
  CHECK(same.connected);
  CHECK(same.certificate["word"].empty());
  CHECK(same.certificate["walls"].empty());
}

TEST_CASE("precondition errors") {
  ProblemFile ball = fixture("ball3");
  Engine e(ball.system);
  CHECK_THROWS_AS(e.canonical(RationalVector{ratio(1, 2), 0, 0}, RationalVector{0, 0, 0}), PreconditionError);
  CHECK_THROWS_AS(e.canonical(RationalVector{1, 1, 1}, RationalVector{0, 0, 0}), PreconditionError);
  CHECK_THROWS_AS(e.canonical(RationalVector{0, 0}, RationalVector{0, 0, 0}), PreconditionError);
  CHECK_THROWS_AS(e.symmetric(RationalVector{0, 0, 0}, RationalVector{0, 3, 0}), PreconditionError);
  try {
    e.canonical(RationalVector{0, 0, 0}, RationalVector{0, 1, 1});
    FAIL("an infeasible point was accepted");
  } catch (const PreconditionError& err) {
    CHECK(std::string(err.what()).find("constraint 0") != std::string::npos);
  }
  // y may be unsorted for the full decider
  CHECK(e.symmetric(RationalVector{0, 0, 0}, RationalVector{ratio(1, 2), 0, ratio(-1, 2)}).connected);
}

TEST_CASE("certificates replay") {
  ProblemFile arcs = fixture("arcs2");
  Verdict a = connectivity_symmetric(arcs.system, arc_x, arc_y);
  Verdict b = connectivity_symmetric(arcs.system, arc_x, arc_y);
  CHECK(a.connected == b.connected);
  CHECK(a.certificate.dump() == b.certificate.dump());
}

TEST_CASE("orbit verdicts are invariant under permutations and match the brute-force orbit test") {
  for (const auto& name : corpus) {
    CAPTURE(name);
    ProblemFile p = fixture(name);
    EngineConfig cfg = config_for(p);
    Engine e(p.system, cfg);
    BruteForceOracle brute(p.system, cfg.oracle);
    int n = p.system.n();
    for (const auto& q : p.pairs) {
      RationalVector xs = sorted(q.x), ys = sorted(q.y);
      bool base = e.canonical(xs, ys).connected;
      bool orbit = false;
      std::vector<int> s = testsupport::identity_permutation(n);
      do {
        RationalVector px = testsupport::permute(q.x, s), py = testsupport::permute(q.y, s);
        CHECK(e.canonical(sorted(px), ys).connected == base);
        CHECK(e.canonical(xs, sorted(py)).connected == base);
        orbit = orbit || brute.connected(xs, py);
      } while (std::next_permutation(s.begin(), s.end()));
      CHECK(base == orbit);
    }
  }
}

TEST_CASE("full verdicts never claim more than the brute-force oracle") {
  for (const auto& name : corpus) {
    CAPTURE(name);
    ProblemFile p = fixture(name);
    EngineConfig cfg = config_for(p);
    Engine e(p.system, cfg);
    BruteForceOracle brute(p.system, cfg.oracle);
    for (const auto& q : p.pairs) {
      auto [x, y] = canonicalize(q.x, q.y);
      bool v = e.symmetric(x, y).connected;
      if (v) CHECK(brute.connected(x, y));
      if (q.expected) CHECK(v == *q.expected);
    }
  }
}

TEST_CASE("a chamber point and its orbit: walls decide") {
  for (const auto& name : {"arcs2", "circle2", "shell3", "split3", "arcs3"}) {
    CAPTURE(name);
    ProblemFile p = fixture(name);
    Engine e(p.system, config_for(p));
    int n = p.system.n();
    for (const auto& q : p.pairs) {
      RationalVector x = sorted(q.x);
      std::vector<int> s = testsupport::identity_permutation(n);
      do {
        RationalVector y = testsupport::permute(x, s);
        auto word = minimal_adjacent_transpositions(y).word.transpositions;
        bool all_walls = true;
        for (int i : word) all_walls = all_walls && e.wall(x, i).connected;
        Verdict v = e.symmetric(x, y);
        CHECK(v.connected == all_walls);
        if (word.empty()) CHECK(v.connected);
      } while (std::next_permutation(s.begin(), s.end()));
    }
  }
}

TEST_CASE("d = n reduces to the oracle on the chamber") {
  for (const auto& name : {"arcs2", "circle2", "ball2", "shell2", "arcs3"}) {
    CAPTURE(name);
    ProblemFile p = fixture(name);
    REQUIRE(p.system.d() == p.system.n());
    EngineConfig cfg = config_for(p);
    Engine e(p.system, cfg);
    REQUIRE(e.family().faces() == std::vector<Composition>{Composition::ones(p.system.n())});
    Region chamber = face_region(restrict(p.system, Composition::ones(p.system.n())));
    RegionAnalysis direct = analyze_at(chamber, e.pitch(), cfg.oracle);
    for (const auto& q : p.pairs) {
      RationalVector x = sorted(q.x), y = sorted(q.y);
      CHECK(e.canonical(x, y).connected == (direct.component_of(x) == direct.component_of(y)));
    }
  }
}

TEST_CASE("each point connects to its fiber minimizer") {
  for (const auto& name : {"ball3", "shell3", "split3", "ball4", "cap4", "split4"}) {
    CAPTURE(name);
    ProblemFile p = fixture(name);
    EngineConfig cfg = config_for(p);
    BruteForceOracle brute(p.system, cfg.oracle);
    int tested = 0;
    for (const auto& q : p.pairs) {
      RationalVector x = sorted(q.x);
      auto cp = min_canonical(vandermonde_map(x, p.system.d()), p.system.n(), p.system.d());
      REQUIRE(cp);
      RationalVector m = refine(cp->point, ten_to_minus(20)).approx;
      if (!p.system.in_box(m)) continue;
      CHECK(brute.connected(x, m));
      ++tested;
    }
    CHECK(tested > 0);
  }
}

TEST_CASE("two CompMax faces: n = 5, d = 4") {
  auto ball = poly(4, {{{0, 0, 0, 0}, 1}, {{0, 1, 0, 0}, -1}});
  auto split = poly(4, {{{2, 0, 0, 0}, 1}, {{0, 0, 0, 0}, -1}});
  EngineConfig cfg;
  cfg.oracle.max_depth = 1;
  SymmetricSystem b(5, 4, {SymConstraint{ball, Relation::GE}}, Rational(-1), Rational(1));
  SymmetricSystem s(5, 4, {SymConstraint{split, Relation::GE}}, Rational(-1), Rational(1));
  Engine eb(b, cfg), es(s, cfg);
  CHECK(eb.family().size() == 2);

  RationalVector zero(5, Rational(0)), spread{ratio(-1, 2), 0, 0, 0, ratio(1, 2)};
  RationalVector up(5, ratio(1, 5)), down(5, ratio(-1, 5));
  CHECK(eb.canonical(zero, spread).connected);
  CHECK(eb.symmetric(zero, spread).connected);
  CHECK_FALSE(es.canonical(down, up).connected);
  CHECK(brute_force_connected(b, zero, spread, cfg.oracle));
  CHECK_FALSE(brute_force_connected(s, down, up, cfg.oracle));
  CHECK(eb.graph_json()["components"] == 1);
}
