#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "symconn/region.hpp"

namespace symconn {

struct OracleConfig {
  Rational h{1, 4};               ///< starting grid pitch
  std::optional<Rational> eq_delta;  ///< EQ slab half-width; the current pitch when unset
  Rational gt_margin{1};          ///< g > 0 becomes g >= gt_margin * h
  int max_depth = 3;              ///< number of pitch halvings allowed
  std::size_t max_cells = std::size_t{1} << 22;

  Thickening thickening(const Rational& pitch) const;
};

/// Raised when even the coarsest grid exceeds the cell budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Feasible grid cells of one region at one pitch, grouped into face-adjacent classes.
class RegionAnalysis {
 public:
  RegionAnalysis(Region region, Rational h, Thickening thickening);

  const Region& region() const { return region_; }
  const Rational& h() const { return h_; }
  const Thickening& thickening() const { return thickening_; }
  std::size_t cells() const { return states_.size(); }
  std::size_t feasible_cells() const { return feasible_; }
  std::size_t classes() const { return reps_.size(); }
  /// One cell centre per class, preferring cells the predicate certainly holds on.
  const std::vector<RationalVector>& representatives() const { return reps_; }
  /// Whether representative k satisfies the thickened predicate exactly. A
  /// class made only of uncertain cells whose centres all fail may be an
  /// artefact of interval overestimation.
  bool certified(std::size_t k) const { return certified_[k]; }
  const std::vector<int>& counts_history() const { return history_counts_; }
  const std::vector<Rational>& h_history() const { return history_h_; }
  bool stabilized() const { return stabilized_; }

  /// Class of the first feasible cell meeting the box [lower, upper]; failing
  /// that, the nearest feasible cell within one cell of it.
  std::optional<int> component_of(std::span<const Rational> lower, std::span<const Rational> upper) const;
  std::optional<int> component_of(std::span<const Rational> x) const { return component_of(x, x); }
  Tri state_at(std::span<const Rational> x) const;

 private:
  friend RegionAnalysis analyze(const Region&, const OracleConfig&);
  friend RegionAnalysis analyze_at(const Region&, const Rational&, const OracleConfig&);
  std::size_t linear(const std::vector<long>& idx) const;
  Rational edge(long k) const { return region_.lo + h_ * k; }

  Region region_;
  Rational h_;
  Thickening thickening_;
  std::vector<long> shape_;
  std::vector<std::uint8_t> states_;
  std::vector<int> label_;
  std::vector<RationalVector> reps_;
  std::vector<bool> certified_;
  std::size_t feasible_ = 0;
  std::vector<int> history_counts_;
  std::vector<Rational> history_h_;
  bool stabilized_ = false;
};

/// Number of cells a region needs at pitch h.
std::size_t grid_cells(const Region& region, const Rational& h);

/// Halves the pitch until the class count repeats on two consecutive levels,
/// the depth cap is hit, or the next level would exceed the cell budget.
RegionAnalysis analyze(const Region& region, const OracleConfig& cfg);
/// Single level at a fixed pitch.
RegionAnalysis analyze_at(const Region& region, const Rational& h, const OracleConfig& cfg);

/// Backend contract used by the union graph and the engine.
class ConnectivityOracle {
 public:
  virtual ~ConnectivityOracle() = default;
  virtual RegionAnalysis analyze(const Region& region) const = 0;
  virtual RegionAnalysis analyze_at(const Region& region, const Rational& h) const = 0;
};

class GridOracle : public ConnectivityOracle {
 public:
  explicit GridOracle(OracleConfig cfg = {}) : cfg_(std::move(cfg)) {}
  const OracleConfig& config() const { return cfg_; }
  RegionAnalysis analyze(const Region& region) const override { return symconn::analyze(region, cfg_); }
  RegionAnalysis analyze_at(const Region& region, const Rational& h) const override {
    return symconn::analyze_at(region, h, cfg_);
  }

 private:
  OracleConfig cfg_;
};

/// One point per detected component.
std::vector<RationalVector> sample_components(const Region& region, const OracleConfig& cfg);

/// Whether x and y fall in one class at the stabilized pitch. Throws
/// PreconditionError naming the violated constraint for an infeasible point.
bool connected(const Region& region, std::span<const Rational> x, std::span<const Rational> y,
               const OracleConfig& cfg);

/// Full-dimensional reference oracle on S in R^n; analyzes once and answers
/// many queries.
class BruteForceOracle {
 public:
  BruteForceOracle(const SymmetricSystem& sys, const OracleConfig& cfg);
  bool connected(std::span<const Rational> x, std::span<const Rational> y) const;
  const RegionAnalysis& analysis() const { return analysis_; }

 private:
  RegionAnalysis analysis_;
};

bool brute_force_connected(const SymmetricSystem& sys, std::span<const Rational> x, std::span<const Rational> y,
                           const OracleConfig& cfg);

}  // namespace symconn
