#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symconn/composition.hpp"
#include "symconn/grid_oracle.hpp"
#include "symconn/power_sum.hpp"

namespace symconn {

/// A family of sets S_1..S_k, each with its own parameter space, that all map
/// into one ambient space.
class FaceFamily {
 public:
  virtual ~FaceFamily() = default;
  virtual int size() const = 0;
  virtual Region set_region(int i) const = 0;
  /// S_i minus S_j, in S_i's parameters.
  virtual Region difference_region(int i, int j) const = 0;
  /// S_i intersect S_j (i < j) in its own parameters.
  virtual Region intersection_region(int i, int j) const = 0;
  virtual RationalVector set_to_ambient(int i, std::span<const Rational> z) const = 0;
  virtual RationalVector intersection_to_ambient(int i, int j, std::span<const Rational> w) const = 0;
  virtual RationalVector ambient_to_set(int i, std::span<const Rational> x) const = 0;
  virtual std::string set_name(int i) const = 0;
};

/// S restricted to a list of chamber faces; intersections live on the join face.
class WeylFaceFamily : public FaceFamily {
 public:
  WeylFaceFamily(SymmetricSystem sys, std::vector<Composition> faces);

  const std::vector<Composition>& faces() const { return faces_; }
  int index_of(const Composition& lambda) const;

  int size() const override { return static_cast<int>(faces_.size()); }
  Region set_region(int i) const override;
  Region difference_region(int i, int j) const override;
  Region intersection_region(int i, int j) const override;
  RationalVector set_to_ambient(int i, std::span<const Rational> z) const override;
  RationalVector intersection_to_ambient(int i, int j, std::span<const Rational> w) const override;
  RationalVector ambient_to_set(int i, std::span<const Rational> x) const override;
  std::string set_name(int i) const override { return faces_[static_cast<size_t>(i)].to_string(); }

 private:
  SymmetricSystem sys_;
  std::vector<Composition> faces_;
};

/// Sets that already share one parameter space.
class FlatFamily : public FaceFamily {
 public:
  explicit FlatFamily(std::vector<Region> sets);

  int size() const override { return static_cast<int>(sets_.size()); }
  Region set_region(int i) const override { return sets_[static_cast<size_t>(i)]; }
  Region difference_region(int i, int j) const override;
  Region intersection_region(int i, int j) const override;
  RationalVector set_to_ambient(int, std::span<const Rational> z) const override { return {z.begin(), z.end()}; }
  RationalVector intersection_to_ambient(int, int, std::span<const Rational> w) const override {
    return {w.begin(), w.end()};
  }
  RationalVector ambient_to_set(int, std::span<const Rational> x) const override { return {x.begin(), x.end()}; }
  std::string set_name(int i) const override { return sets_[static_cast<size_t>(i)].name; }

 private:
  std::vector<Region> sets_;
};

enum class Side { A, B };

struct ComponentVertex {
  Side side;
  int i;                       ///< difference S_i \ S_j, or intersection S_i n S_j
  int j;
  RationalVector point;        ///< ambient coordinates
  std::vector<int> homes;      ///< sets containing the point
  std::vector<int> classes;    ///< grid class inside each home set (-1 if unlocated)
  int piece = -1;              ///< A only: index into UnionGraph::differences
  int piece_class = -1;        ///< A only: class of the representative there
};

struct UnionGraph {
  std::vector<ComponentVertex> vertices;
  std::vector<std::pair<int, int>> edges;       ///< (A vertex, B vertex)
  std::vector<std::pair<int, int>> identified;  ///< same-side vertices of one component of a set
  std::vector<RegionAnalysis> set_analyses;
  std::vector<RegionAnalysis> differences;       ///< S_i minus S_j, one per ordered pair with vertices
  Rational h;
  std::vector<int> component;                   ///< filled by build_union_graph
  int component_count = 0;
};

class LocateFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Smallest stabilized pitch over the sets of the family.
Rational stabilized_pitch(const FaceFamily& family, const ConnectivityOracle& oracle);

/// Bipartite component graph of the family at a fixed pitch.
UnionGraph build_union_graph(const FaceFamily& family, const ConnectivityOracle& oracle, const Rational& h);
/// Same, at the family's stabilized pitch.
UnionGraph build_union_graph(const FaceFamily& family, const ConnectivityOracle& oracle);

/// Component label of every vertex, plus the number of components.
std::pair<std::vector<int>, int> graph_components(const UnionGraph& g);

/// Vertex with home set `home` connected to x inside that set. An A vertex
/// whose own difference component holds x wins; otherwise B vertices in x's
/// class of the home set come before the remaining A vertices. The point is
/// given by an enclosure [lower, upper] in ambient coordinates. Throws
/// LocateFailure if none matches.
int locate_vertex(const UnionGraph& g, const FaceFamily& family, std::span<const Rational> lower,
                  std::span<const Rational> upper, int home);
inline int locate_vertex(const UnionGraph& g, const FaceFamily& family, std::span<const Rational> x, int home) {
  return locate_vertex(g, family, x, x, home);
}

}  // namespace symconn
