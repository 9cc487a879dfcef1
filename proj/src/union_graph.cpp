#include "symconn/union_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace symconn {

WeylFaceFamily::WeylFaceFamily(SymmetricSystem sys, std::vector<Composition> faces)
    : sys_(std::move(sys)), faces_(std::move(faces)) {
  if (faces_.empty()) throw DomainError("face family needs at least one face");
  for (const auto& f : faces_)
    if (f.n() != sys_.n()) throw DomainError("face " + f.to_string() + " does not match n");
}

int WeylFaceFamily::index_of(const Composition& lambda) const {
  auto it = std::find(faces_.begin(), faces_.end(), lambda);
  return it == faces_.end() ? -1 : static_cast<int>(it - faces_.begin());
}

Region WeylFaceFamily::set_region(int i) const { return face_region(restrict(sys_, faces_[static_cast<size_t>(i)])); }

Region WeylFaceFamily::difference_region(int i, int j) const {
  const Composition& li = faces_[static_cast<size_t>(i)];
  Composition mu = join(li, faces_[static_cast<size_t>(j)]);
  auto kept = mu.breaks();
  auto own = li.breaks();
  std::vector<Predicate> inside_j{constraint_predicate(sys_.constraints(), li.parts())};
  for (size_t b = 0; b < own.size(); ++b) {
    if (std::binary_search(kept.begin(), kept.end(), own[b])) continue;
    int a = static_cast<int>(b);
    inside_j.push_back(Predicate::atom(
        OrderAtom{a, a + 1, true, "z" + std::to_string(a + 1) + " = z" + std::to_string(a + 2)}));
  }
  Region r = set_region(i);
  r.pred = Predicate::difference(r.pred, Predicate::all(std::move(inside_j)));
  r.name = "face " + li.to_string() + " minus face " + faces_[static_cast<size_t>(j)].to_string();
  return r;
}

Region WeylFaceFamily::intersection_region(int i, int j) const {
  Composition mu = join(faces_[static_cast<size_t>(i)], faces_[static_cast<size_t>(j)]);
  Region r = face_region(restrict(sys_, mu));
  r.name = "join face " + mu.to_string();
  return r;
}

RationalVector WeylFaceFamily::set_to_ambient(int i, std::span<const Rational> z) const {
  return embed(faces_[static_cast<size_t>(i)], z);
}

RationalVector WeylFaceFamily::intersection_to_ambient(int i, int j, std::span<const Rational> w) const {
  return embed(join(faces_[static_cast<size_t>(i)], faces_[static_cast<size_t>(j)]), w);
}

RationalVector WeylFaceFamily::ambient_to_set(int i, std::span<const Rational> x) const {
  return face_coordinates(faces_[static_cast<size_t>(i)], x);
}

FlatFamily::FlatFamily(std::vector<Region> sets) : sets_(std::move(sets)) {
  if (sets_.empty()) throw DomainError("flat family needs at least one set");
  for (const auto& s : sets_)
    if (s.dim != sets_[0].dim || s.lo != sets_[0].lo || s.hi != sets_[0].hi)
      throw DomainError("flat family sets must share dimension and box");
}

Region FlatFamily::difference_region(int i, int j) const {
  Region r = sets_[static_cast<size_t>(i)];
  r.pred = Predicate::difference(r.pred, sets_[static_cast<size_t>(j)].pred);
  r.name = sets_[static_cast<size_t>(i)].name + " minus " + sets_[static_cast<size_t>(j)].name;
  return r;
}

Region FlatFamily::intersection_region(int i, int j) const {
  Region r = sets_[static_cast<size_t>(i)];
  r.pred = Predicate::all({r.pred, sets_[static_cast<size_t>(j)].pred});
  r.name = sets_[static_cast<size_t>(i)].name + " and " + sets_[static_cast<size_t>(j)].name;
  return r;
}

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[static_cast<size_t>(x)] != x) {
    parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    x = parent[static_cast<size_t>(x)];
  }
  return x;
}

UnionGraph assemble(const FaceFamily& family, const ConnectivityOracle& oracle, std::vector<RegionAnalysis> sets,
                    const Rational& h) {
  const int k = family.size();
  UnionGraph g;
  g.h = h;
  g.set_analyses = std::move(sets);
  auto add = [&](Side side, int i, int j, RationalVector point, std::vector<int> homes) {
    g.vertices.push_back(ComponentVertex{side, i, j, std::move(point), std::move(homes), {}});
  };
  if (k == 1) {
    for (const auto& rep : g.set_analyses[0].representatives()) add(Side::A, 0, 0, family.set_to_ambient(0, rep), {0});
  } else {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (i == j) continue;
        RegionAnalysis diff = oracle.analyze_at(family.difference_region(i, j), h);
        if (diff.classes() == 0) continue;
        const auto& reps = diff.representatives();
        for (size_t c = 0; c < reps.size(); ++c) {
          add(Side::A, i, j, family.set_to_ambient(i, reps[c]), {i});
          g.vertices.back().piece = static_cast<int>(g.differences.size());
          g.vertices.back().piece_class = static_cast<int>(c);
        }
        g.differences.push_back(std::move(diff));
      }
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        RegionAnalysis meet = oracle.analyze_at(family.intersection_region(i, j), h);
        // an unconfirmed intersection would glue two sets that may not meet
        const auto& reps = meet.representatives();
        for (size_t c = 0; c < reps.size(); ++c)
          if (meet.certified(c)) add(Side::B, i, j, family.intersection_to_ambient(i, j, reps[c]), {i, j});
      }
  }
  for (auto& v : g.vertices)
    for (int home : v.homes) {
      auto z = family.ambient_to_set(home, v.point);
      v.classes.push_back(g.set_analyses[static_cast<size_t>(home)].component_of(z).value_or(-1));
    }

  auto class_in = [](const ComponentVertex& v, int home) {
    for (size_t p = 0; p < v.homes.size(); ++p)
      if (v.homes[p] == home) return v.classes[p];
    return -1;
  };
  const int nv = static_cast<int>(g.vertices.size());
  for (int u = 0; u < nv; ++u) {
    const auto& a = g.vertices[static_cast<size_t>(u)];
    if (a.side != Side::A) continue;
    for (int w = 0; w < nv; ++w) {
      const auto& b = g.vertices[static_cast<size_t>(w)];
      if (b.side != Side::B) continue;
      int home = a.homes[0];
      int cb = class_in(b, home);
      if (cb >= 0 && cb == a.classes[0]) g.edges.emplace_back(u, w);
    }
  }
  // same-side vertices lying in one component of a shared set stand for the
  // same piece of the union
  std::map<std::tuple<int, int, int>, int> first_seen;
  for (int u = 0; u < nv; ++u) {
    const auto& v = g.vertices[static_cast<size_t>(u)];
    for (size_t p = 0; p < v.homes.size(); ++p) {
      if (v.classes[p] < 0) continue;
      auto key = std::make_tuple(static_cast<int>(v.side), v.homes[p], v.classes[p]);
      auto [it, inserted] = first_seen.emplace(key, u);
      if (!inserted) g.identified.emplace_back(it->second, u);
    }
  }
  std::tie(g.component, g.component_count) = graph_components(g);
  return g;
}

}  // namespace

Rational stabilized_pitch(const FaceFamily& family, const ConnectivityOracle& oracle) {
  std::optional<Rational> h;
  for (int i = 0; i < family.size(); ++i) {
    Rational hi = oracle.analyze(family.set_region(i)).h();
    if (!h || hi < *h) h = hi;
  }
  return *h;
}

UnionGraph build_union_graph(const FaceFamily& family, const ConnectivityOracle& oracle, const Rational& h) {
  std::vector<RegionAnalysis> sets;
  for (int i = 0; i < family.size(); ++i) sets.push_back(oracle.analyze_at(family.set_region(i), h));
  return assemble(family, oracle, std::move(sets), h);
}

UnionGraph build_union_graph(const FaceFamily& family, const ConnectivityOracle& oracle) {
  std::vector<RegionAnalysis> sets;
  for (int i = 0; i < family.size(); ++i) sets.push_back(oracle.analyze(family.set_region(i)));
  Rational h = sets.front().h();
  for (const auto& a : sets) h = std::min(h, a.h());
  for (int i = 0; i < family.size(); ++i)
    if (sets[static_cast<size_t>(i)].h() != h) sets[static_cast<size_t>(i)] = oracle.analyze_at(family.set_region(i), h);
  return assemble(family, oracle, std::move(sets), h);
}

std::pair<std::vector<int>, int> graph_components(const UnionGraph& g) {
  const size_t nv = g.vertices.size();
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int a, int b) {
    a = find(parent, a);
    b = find(parent, b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  };
  for (auto [u, w] : g.edges) unite(u, w);
  for (auto [u, w] : g.identified) unite(u, w);
  std::vector<int> label(nv, -1), root_label(nv, -1);
  int count = 0;
  for (size_t v = 0; v < nv; ++v) {
    int r = find(parent, static_cast<int>(v));
    if (root_label[static_cast<size_t>(r)] < 0) root_label[static_cast<size_t>(r)] = count++;
    label[v] = root_label[static_cast<size_t>(r)];
  }
  return {label, count};
}

int locate_vertex(const UnionGraph& g, const FaceFamily& family, std::span<const Rational> lower,
                  std::span<const Rational> upper, int home) {
  if (home < 0 || home >= family.size()) throw DomainError("locate_vertex: unknown home set");
  auto zl = family.ambient_to_set(home, lower);
  auto zu = family.ambient_to_set(home, upper);
  auto cls = g.set_analyses[static_cast<size_t>(home)].component_of(zl, zu);
  if (!cls)
    throw LocateFailure("point has no feasible cell in set " + family.set_name(home) + " at pitch " + to_string(g.h) +
                        "; refine the grid");
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& vert = g.vertices[v];
    if (vert.side != Side::A || vert.piece < 0 || vert.homes[0] != home) continue;
    if (g.differences[static_cast<size_t>(vert.piece)].component_of(zl, zu) == vert.piece_class)
      return static_cast<int>(v);
  }
  for (Side side : {Side::B, Side::A})
    for (size_t v = 0; v < g.vertices.size(); ++v) {
      const auto& vert = g.vertices[v];
      if (vert.side != side) continue;
      for (size_t p = 0; p < vert.homes.size(); ++p)
        if (vert.homes[p] == home && vert.classes[p] == *cls) return static_cast<int>(v);
    }
  throw LocateFailure("no graph vertex shares the point's component of set " + family.set_name(home) + " at pitch " +
                      to_string(g.h) + "; refine the grid");
}

}  // namespace symconn
