#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "symconn/composition.hpp"
#include "symconn/grid_oracle.hpp"
#include "symconn/power_sum.hpp"
#include "symconn/union_graph.hpp"
#include "symconn/vandermonde.hpp"

namespace symconn {

struct EngineConfig {
  OracleConfig oracle;
  CompMaxPattern pattern = CompMaxPattern::Minimizer;
};

struct Verdict {
  bool connected = false;
  nlohmann::json certificate;
};

/// The deciders for one system. Face graph, minimizers and wall samples are
/// computed on first use and reused by later queries.
class Engine {
 public:
  explicit Engine(SymmetricSystem sys, EngineConfig cfg = {});

  const SymmetricSystem& system() const { return sys_; }
  const EngineConfig& config() const { return cfg_; }
  const WeylFaceFamily& family() const { return family_; }
  const UnionGraph& graph();
  const Rational& pitch() { return graph().h; }

  /// x and y sorted and feasible: same component of S inside the chamber?
  Verdict canonical(std::span<const Rational> x, std::span<const Rational> y);
  /// x sorted and feasible: can x reach the wall x_i = x_{i+1} inside the chamber?
  Verdict wall(std::span<const Rational> x, int i);
  /// x sorted and feasible, y feasible: same component of S?
  Verdict symmetric(std::span<const Rational> x, std::span<const Rational> y);

  nlohmann::json graph_json();
  nlohmann::json resolution_json();

 private:
  struct Located {
    CanonicalPoint point;
    RefinedPoint refined;
    int vertex = -1;
    int component = -1;
  };

  void validate(std::span<const Rational> x, const char* name, bool sorted);
  const Located& locate(std::span<const Rational> x);
  bool canonical_core(std::span<const Rational> x, std::span<const Rational> y, nlohmann::json& cert);
  bool wall_core(std::span<const Rational> x, int i, nlohmann::json& cert);
  const std::vector<RationalVector>& wall_points(const Composition& mu);
  nlohmann::json located_json(const Located& loc);

  SymmetricSystem sys_;
  EngineConfig cfg_;
  GridOracle oracle_;
  WeylFaceFamily family_;
  std::optional<UnionGraph> graph_;
  std::map<std::string, Located> located_;
  std::map<Composition, std::vector<RationalVector>> wall_points_;
};

Verdict connectivity_symmetric_canonical(const SymmetricSystem& sys, std::span<const Rational> x,
                                         std::span<const Rational> y, const EngineConfig& cfg = {});
Verdict connected_wall(const SymmetricSystem& sys, std::span<const Rational> x, int i, const EngineConfig& cfg = {});
Verdict connectivity_symmetric(const SymmetricSystem& sys, std::span<const Rational> x, std::span<const Rational> y,
                               const EngineConfig& cfg = {});

nlohmann::json to_json(const AlgebraicPoint& pt);
nlohmann::json to_json(std::span<const Rational> x);

}  // namespace symconn
