#include "symconn/engine.hpp"

#include <algorithm>
#include <set>

namespace symconn {

using nlohmann::json;

namespace {

json poly_json(const UniPoly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

json decimals(std::span<const Rational> x, int digits = 12) {
  json out = json::array();
  for (const auto& v : x) out.push_back(to_decimal(v, digits));
  return out;
}

const Rational& locate_eps() {
  static const Rational eps = ten_to_minus(15);
  return eps;
}

}  // namespace

json to_json(std::span<const Rational> x) {
  json out = json::array();
  for (const auto& v : x) out.push_back(to_string(v));
  return out;
}

json to_json(const AlgebraicPoint& pt) {
  json coords = json::array();
  for (const auto& c : pt.coords) coords.push_back(poly_json(c));
  return json{{"q", poly_json(pt.q)},
              {"q0", poly_json(pt.q0)},
              {"coords", coords},
              {"thom_code", pt.code},
              {"root_interval", {to_string(pt.root.lo), to_string(pt.root.hi)}}};
}

Engine::Engine(SymmetricSystem sys, EngineConfig cfg)
    : sys_(std::move(sys)),
      cfg_(std::move(cfg)),
      oracle_(cfg_.oracle),
      family_(sys_, enumerate_compmax(sys_.n(), sys_.d(), cfg_.pattern)) {}

const UnionGraph& Engine::graph() {
  if (!graph_) graph_ = build_union_graph(family_, oracle_);
  return *graph_;
}

void Engine::validate(std::span<const Rational> x, const char* name, bool sorted) {
  if (static_cast<int>(x.size()) != sys_.n())
    throw PreconditionError(std::string("point ") + name + " has " + std::to_string(x.size()) +
                            " coordinates, expected " + std::to_string(sys_.n()));
  if (sorted && !std::is_sorted(x.begin(), x.end()))
    throw PreconditionError(std::string("point ") + name +
                            " is not in the canonical chamber (coordinates must be weakly increasing)");
  if (!sys_.in_box(x)) throw PreconditionError(std::string("point ") + name + " lies outside the bounding box");
  Membership m = eval_membership(sys_, x);
  if (!m.member)
    throw PreconditionError(std::string("point ") + name + " is infeasible: violates constraint " +
                            std::to_string(m.first_violation) + " (" +
                            sys_.constraints()[static_cast<size_t>(m.first_violation)].to_string() + ")");
}

const Engine::Located& Engine::locate(std::span<const Rational> x) {
  RationalVector a = vandermonde_map(x, sys_.d());
  std::string key = to_string(std::span<const Rational>(a));
  if (auto it = located_.find(key); it != located_.end()) return it->second;

  auto cp = min_canonical(a, sys_.n(), sys_.d(), cfg_.pattern);
  if (!cp) throw SolverError("Vandermonde fiber of a chamber point has no minimizer; the exact solver failed");
  RefinedPoint refined = refine(cp->point, locate_eps());
  for (size_t k = 0; k < refined.lower.size(); ++k)
    if (refined.upper[k] < sys_.box_lo() || refined.lower[k] > sys_.box_hi())
      throw PreconditionError("the p_" + std::to_string(sys_.d() + 1) + " minimizer of the fiber through " +
                              to_string(x) + " leaves the bounding box; enlarge the box");
  const UnionGraph& g = graph();
  int home = family_.index_of(cp->face);
  int v = locate_vertex(g, family_, refined.lower, refined.upper, home);
  Located loc{std::move(*cp), std::move(refined), v, g.component[static_cast<size_t>(v)]};
  return located_.emplace(key, std::move(loc)).first->second;
}

json Engine::located_json(const Located& loc) {
  const auto& vert = graph().vertices[static_cast<size_t>(loc.vertex)];
  return json{{"minimizer", decimals(loc.refined.approx)},
              {"face", loc.point.face.parts()},
              {"multiplicity", loc.point.multiplicity.parts()},
              {"next_power_sum", to_decimal(loc.point.next_power_sum.first)},
              {"vertex", loc.vertex},
              {"vertex_side", vert.side == Side::A ? "A" : "B"},
              {"vertex_pair", {vert.i, vert.j}},
              {"component", loc.component}};
}

bool Engine::canonical_core(std::span<const Rational> x, std::span<const Rational> y, json& cert) {
  const Located& lx = locate(x);
  const Located& ly = locate(y);
  bool same = lx.component == ly.component;
  cert["x_located"] = located_json(lx);
  cert["y_located"] = located_json(ly);
  cert["connected"] = same;
  return same;
}

json Engine::resolution_json() {
  const UnionGraph& g = graph();
  json faces = json::array();
  for (int i = 0; i < family_.size(); ++i) {
    const auto& a = g.set_analyses[static_cast<size_t>(i)];
    faces.push_back(json{{"face", family_.faces()[static_cast<size_t>(i)].parts()},
                         {"cells", a.cells()},
                         {"feasible_cells", a.feasible_cells()},
                         {"classes", a.classes()}});
  }
  return json{{"h_final", to_string(g.h)},
              {"eq_delta", to_string(cfg_.oracle.thickening(g.h).eq_delta)},
              {"gt_threshold", to_string(cfg_.oracle.thickening(g.h).gt_threshold)},
              {"faces", faces},
              {"graph_vertices", g.vertices.size()},
              {"graph_edges", g.edges.size()},
              {"graph_components", g.component_count},
              {"box", {to_string(sys_.box_lo()), to_string(sys_.box_hi())}},
              {"box_note", "the set is clipped to the bounding box; components are those of S inside the box"}};
}

Verdict Engine::canonical(std::span<const Rational> x, std::span<const Rational> y) {
  validate(x, "x", true);
  validate(y, "y", true);
  Verdict v;
  v.certificate["algorithm"] = "connectivity_symmetric_canonical";
  v.certificate["pattern"] = to_string(cfg_.pattern);
  v.certificate["x"] = to_json(x);
  v.certificate["y"] = to_json(y);
  v.connected = canonical_core(x, y, v.certificate);
  v.certificate["resolution"] = resolution_json();
  return v;
}

const std::vector<RationalVector>& Engine::wall_points(const Composition& mu) {
  if (auto it = wall_points_.find(mu); it != wall_points_.end()) return it->second;
  Region r = face_region(restrict(sys_, mu));
  std::vector<RationalVector> pts;
  RegionAnalysis a = oracle_.analyze_at(r, pitch());
  for (size_t k = 0; k < a.classes(); ++k)
    if (a.certified(k)) pts.push_back(embed(mu, a.representatives()[k]));
  return wall_points_.emplace(mu, std::move(pts)).first->second;
}

bool Engine::wall_core(std::span<const Rational> x, int i, json& cert) {
  cert["wall"] = i;
  json skipped = json::array();
  std::set<Composition> seen;
  for (const auto& lambda : family_.faces()) {
    Composition mu = res(lambda, i);
    if (!seen.insert(mu).second) continue;
    for (const auto& p : wall_points(mu)) {
      try {
        json sub;
        if (canonical_core(x, p, sub)) {
          cert["reached"] = true;
          cert["wall_face"] = mu.parts();
          cert["wall_point"] = decimals(p);
          cert["wall_point_exact"] = to_json(p);
          return true;
        }
      } catch (const LocateFailure& e) {
        skipped.push_back(json{{"wall_point", decimals(p)}, {"reason", e.what()}});
      } catch (const PreconditionError& e) {
        skipped.push_back(json{{"wall_point", decimals(p)}, {"reason", e.what()}});
      }
    }
  }
  cert["reached"] = false;
  cert["wall_faces_checked"] = json::array();
  for (const auto& mu : seen) cert["wall_faces_checked"].push_back(mu.parts());
  if (!skipped.empty()) cert["skipped_wall_points"] = skipped;
  return false;
}

Verdict Engine::wall(std::span<const Rational> x, int i) {
  validate(x, "x", true);
  if (i < 1 || i > sys_.n() - 1) throw DomainError("wall index must satisfy 1 <= i <= n-1");
  Verdict v;
  v.certificate["algorithm"] = "connected_wall";
  v.certificate["x"] = to_json(x);
  v.connected = wall_core(x, i, v.certificate);
  v.certificate["resolution"] = resolution_json();
  return v;
}

Verdict Engine::symmetric(std::span<const Rational> x, std::span<const Rational> y) {
  validate(x, "x", true);
  validate(y, "y", false);
  Verdict v;
  json& cert = v.certificate;
  cert["algorithm"] = "connectivity_symmetric";
  cert["pattern"] = to_string(cfg_.pattern);
  cert["x"] = to_json(x);
  cert["y"] = to_json(y);
  auto sorted = minimal_adjacent_transpositions(RationalVector(y.begin(), y.end()));
  cert["word"] = sorted.word.transpositions;
  cert["y_sorted"] = to_json(sorted.sorted);
  json orbit;
  bool ok = canonical_core(x, sorted.sorted, orbit);
  cert["orbit"] = orbit;
  cert["walls"] = json::array();
  if (ok) {
    std::vector<int> walls;
    for (int i : sorted.word.transpositions)
      if (std::find(walls.begin(), walls.end(), i) == walls.end()) walls.push_back(i);
    for (int i : walls) {
      json w;
      bool reached = wall_core(x, i, w);
      cert["walls"].push_back(w);
      if (!reached) {
        ok = false;
        break;
      }
    }
  }
  v.connected = ok;
  cert["connected"] = ok;
  cert["resolution"] = resolution_json();
  return v;
}

json Engine::graph_json() {
  const UnionGraph& g = graph();
  json vertices = json::array();
  for (size_t k = 0; k < g.vertices.size(); ++k) {
    const auto& v = g.vertices[k];
    vertices.push_back(json{{"id", k},
                            {"side", v.side == Side::A ? "A" : "B"},
                            {"pair", {v.i, v.j}},
                            {"point", decimals(v.point, 6)},
                            {"homes", v.homes},
                            {"component", g.component[k]}});
  }
  json faces = json::array();
  for (const auto& f : family_.faces()) faces.push_back(f.parts());
  return json{{"faces", faces},
              {"vertices", vertices},
              {"edges", g.edges},
              {"identified", g.identified},
              {"components", g.component_count},
              {"h", to_string(g.h)}};
}

Verdict connectivity_symmetric_canonical(const SymmetricSystem& sys, std::span<const Rational> x,
                                         std::span<const Rational> y, const EngineConfig& cfg) {
  return Engine(sys, cfg).canonical(x, y);
}

Verdict connected_wall(const SymmetricSystem& sys, std::span<const Rational> x, int i, const EngineConfig& cfg) {
  return Engine(sys, cfg).wall(x, i);
}

Verdict connectivity_symmetric(const SymmetricSystem& sys, std::span<const Rational> x, std::span<const Rational> y,
                               const EngineConfig& cfg) {
  return Engine(sys, cfg).symmetric(x, y);
}

}  // namespace symconn
