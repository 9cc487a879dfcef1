#include "symconn/region.hpp"

namespace symconn {

struct Predicate::Node {
  enum class Kind { True, Leaf, And, Or, Diff };
  Kind kind = Kind::True;
  Atom atom;
  std::vector<Predicate> children;
  // interval copies of the atom's coefficients
  std::vector<std::pair<std::vector<int>, Interval>> iterms;
  std::vector<Interval> iweights;
};

namespace {

Tri tri_and(Tri a, Tri b) { return std::min(a, b); }
Tri tri_or(Tri a, Tri b) { return std::max(a, b); }

Tri compare(Interval g, Relation rel, const CellThickening& t) {
  switch (rel) {
    case Relation::GE:
      if (g.lo >= 0) return Tri::Yes;
      if (g.hi < 0) return Tri::No;
      return Tri::Maybe;
    case Relation::GT:
      if (g.lo >= t.gt_threshold.hi) return Tri::Yes;
      if (g.hi < t.gt_threshold.lo) return Tri::No;
      return Tri::Maybe;
    case Relation::EQ:
      if (g.lo >= -t.eq_delta.lo && g.hi <= t.eq_delta.lo) return Tri::Yes;
      if (g.hi < -t.eq_delta.hi || g.lo > t.eq_delta.hi) return Tri::No;
      return Tri::Maybe;
  }
  return Tri::Maybe;
}

bool compare_exact(const Rational& g, Relation rel, const Thickening& t) {
  switch (rel) {
    case Relation::GE: return g >= 0;
    case Relation::GT: return g > 0;
    case Relation::EQ: return abs(g) <= t.eq_delta;
  }
  return false;
}

Interval eval_terms(const std::vector<std::pair<std::vector<int>, Interval>>& terms,
                    std::span<const Interval> values) {
  Interval acc{0, 0};
  for (const auto& [e, c] : terms) {
    Interval t = c;
    for (size_t j = 0; j < e.size(); ++j)
      if (e[j]) t = t * pow(values[j], e[j]);
    acc = acc + t;
  }
  return acc;
}

}  // namespace

Predicate::Predicate() : node_(std::make_shared<Node>()) {}

Predicate Predicate::atom(Atom a) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Leaf;
  if (auto* s = std::get_if<SymAtom>(&a)) {
    for (const auto& [e, c] : s->g.terms()) node->iterms.emplace_back(e, Interval::enclose(c));
    for (int w : s->weights) node->iweights.push_back(Interval::point(w));
  } else if (auto* p = std::get_if<PolyAtom>(&a)) {
    for (const auto& [m, c] : p->g.terms()) node->iterms.emplace_back(m, Interval::enclose(c));
  }
  node->atom = std::move(a);
  return Predicate(std::move(node));
}

Predicate Predicate::all(std::vector<Predicate> parts) {
  if (parts.size() == 1) return parts.front();
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::And;
  node->children = std::move(parts);
  return Predicate(std::move(node));
}

Predicate Predicate::any(std::vector<Predicate> parts) {
  if (parts.size() == 1) return parts.front();
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Or;
  node->children = std::move(parts);
  return Predicate(std::move(node));
}

Predicate Predicate::difference(Predicate a, Predicate b) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Diff;
  node->children = {std::move(a), std::move(b)};
  return Predicate(std::move(node));
}

Tri Predicate::classify(std::span<const Interval> cell, const CellThickening& t) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Node::Kind::True: return Tri::Yes;
    case Node::Kind::And: {
      Tri r = Tri::Yes;
      for (const auto& c : n.children) {
        r = tri_and(r, c.classify(cell, t));
        if (r == Tri::No) break;
      }
      return r;
    }
    case Node::Kind::Or: {
      Tri r = Tri::No;
      if (n.children.empty()) return r;
      for (const auto& c : n.children) {
        r = tri_or(r, c.classify(cell, t));
        if (r == Tri::Yes) break;
      }
      return r;
    }
    case Node::Kind::Diff: {
      Tri a = n.children[0].classify(cell, t);
      if (a == Tri::No) return a;
      return n.children[1].classify(cell, t) == Tri::No ? a : Tri::No;
    }
    case Node::Kind::Leaf: break;
  }
  if (const auto* s = std::get_if<SymAtom>(&n.atom)) {
    const int d = s->g.d();
    std::vector<Interval> sums(static_cast<size_t>(d), Interval{0, 0});
    for (size_t i = 0; i < cell.size(); ++i) {
      Interval w = n.iweights[i];
      for (int j = 1; j <= d; ++j) sums[static_cast<size_t>(j) - 1] = sums[static_cast<size_t>(j) - 1] + w * pow(cell[i], j);
    }
    return compare(eval_terms(n.iterms, sums), s->rel, t);
  }
  if (const auto* p = std::get_if<PolyAtom>(&n.atom)) return compare(eval_terms(n.iterms, cell), p->rel, t);
  const auto& o = std::get<OrderAtom>(n.atom);
  Interval a = cell[static_cast<size_t>(o.a)], b = cell[static_cast<size_t>(o.b)];
  if (o.equality) {
    if (a.lo == a.hi && b.lo == b.hi && a.lo == b.lo) return Tri::Yes;
    // cells that only touch the diagonal along their boundary count as off it
    if (a.hi <= b.lo || b.hi <= a.lo) return Tri::No;
    return Tri::Maybe;
  }
  if (a.hi <= b.lo) return Tri::Yes;
  if (a.lo > b.hi) return Tri::No;
  return Tri::Maybe;
}

bool Predicate::holds(std::span<const Rational> z, const Thickening& t, std::string* violated) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Node::Kind::True: return true;
    case Node::Kind::And:
      for (const auto& c : n.children)
        if (!c.holds(z, t, violated)) return false;
      return true;
    case Node::Kind::Or:
      for (const auto& c : n.children)
        if (c.holds(z, t, nullptr)) return true;
      if (violated) *violated = "none of: " + to_string();
      return false;
    case Node::Kind::Diff:
      if (!n.children[0].holds(z, t, violated)) return false;
      if (n.children[1].holds(z, t, nullptr)) {
        if (violated) *violated = "inside the excluded set " + n.children[1].to_string();
        return false;
      }
      return true;
    case Node::Kind::Leaf: break;
  }
  bool ok = false;
  std::string label;
  if (const auto* s = std::get_if<SymAtom>(&n.atom)) {
    RationalVector sums = vandermonde_map(z, s->g.d(), s->weights);
    ok = compare_exact(s->g.eval(sums), s->rel, t);
    label = s->label;
  } else if (const auto* p = std::get_if<PolyAtom>(&n.atom)) {
    ok = compare_exact(p->g.eval(z), p->rel, t);
    label = p->label;
  } else {
    const auto& o = std::get<OrderAtom>(n.atom);
    const auto& a = z[static_cast<size_t>(o.a)];
    const auto& b = z[static_cast<size_t>(o.b)];
    ok = o.equality ? a == b : a <= b;
    label = o.label;
  }
  if (!ok && violated) *violated = label;
  return ok;
}

std::string Predicate::to_string() const {
  const Node& n = *node_;
  auto join = [&](const char* sep) {
    std::string s = "(";
    for (size_t i = 0; i < n.children.size(); ++i) s += (i ? sep : "") + n.children[i].to_string();
    return s + ")";
  };
  switch (n.kind) {
    case Node::Kind::True: return "true";
    case Node::Kind::And: return join(" and ");
    case Node::Kind::Or: return join(" or ");
    case Node::Kind::Diff: return "(" + n.children[0].to_string() + " minus " + n.children[1].to_string() + ")";
    case Node::Kind::Leaf: break;
  }
  if (const auto* s = std::get_if<SymAtom>(&n.atom)) return s->label;
  if (const auto* p = std::get_if<PolyAtom>(&n.atom)) return p->label;
  return std::get<OrderAtom>(n.atom).label;
}

Predicate chamber_predicate(int l) {
  std::vector<Predicate> parts;
  for (int k = 0; k + 1 < l; ++k)
    parts.push_back(Predicate::atom(OrderAtom{k, k + 1, false,
                                              "z" + std::to_string(k + 1) + " <= z" + std::to_string(k + 2)}));
  if (parts.empty()) return Predicate();
  return Predicate::all(std::move(parts));
}

Predicate constraint_predicate(const std::vector<SymConstraint>& constraints, std::span<const int> weights) {
  std::vector<Predicate> parts;
  for (size_t k = 0; k < constraints.size(); ++k) {
    const auto& c = constraints[k];
    parts.push_back(Predicate::atom(SymAtom{c.g, std::vector<int>(weights.begin(), weights.end()), c.rel,
                                            "constraint " + std::to_string(k) + " (" + c.to_string() + ")"}));
  }
  if (parts.empty()) return Predicate();
  return Predicate::all(std::move(parts));
}

Region face_region(const FaceSystem& face) {
  const auto& weights = face.lambda.parts();
  Predicate pred = Predicate::all({constraint_predicate(face.source, weights), chamber_predicate(face.dimension())});
  return Region{face.dimension(), face.box_lo, face.box_hi, pred, "face " + face.lambda.to_string()};
}

Region system_region(const SymmetricSystem& sys) {
  std::vector<int> ones(static_cast<size_t>(sys.n()), 1);
  return Region{sys.n(), sys.box_lo(), sys.box_hi(), constraint_predicate(sys.constraints(), ones), "system"};
}

}  // namespace symconn
