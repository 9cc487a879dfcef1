#include "symconn/grid_oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace symconn {

Thickening OracleConfig::thickening(const Rational& pitch) const {
  return Thickening{eq_delta.value_or(pitch), gt_margin * pitch};
}

namespace {

long cells_per_axis(const Region& r, const Rational& h) {
  if (h <= 0) throw DomainError("grid pitch must be positive");
  Rational q = (r.hi - r.lo) / h;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (c > 1L << 40) return 1L << 40;
  return std::max(1L, c.get_si());
}

long floor_div(const Rational& q) {
  mpz_class c;
  mpz_fdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c.get_si();
}

long ceil_div(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c.get_si();
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[static_cast<size_t>(a)] = b;
  }
};

}  // namespace

std::size_t grid_cells(const Region& region, const Rational& h) {
  long per_axis = cells_per_axis(region, h);
  double total = 1;
  for (int k = 0; k < region.dim; ++k) total *= static_cast<double>(per_axis);
  if (total > static_cast<double>(std::numeric_limits<std::size_t>::max() / 2))
    return std::numeric_limits<std::size_t>::max() / 2;
  return static_cast<std::size_t>(total);
}

RegionAnalysis::RegionAnalysis(Region region, Rational h, Thickening thickening)
    : region_(std::move(region)), h_(std::move(h)), thickening_(std::move(thickening)) {
  const int dim = region_.dim;
  const long n = cells_per_axis(region_, h_);
  shape_.assign(static_cast<size_t>(dim), n);
  const size_t total = grid_cells(region_, h_);
  std::vector<Interval> axis(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k)
    axis[static_cast<size_t>(k)] = Interval{Interval::enclose(edge(k)).lo, Interval::enclose(edge(k + 1)).hi};

  CellThickening ct(thickening_);
  states_.assign(total, 0);
  std::vector<long> idx(static_cast<size_t>(dim), 0);
  std::vector<Interval> cell(static_cast<size_t>(dim));
  for (size_t c = 0; c < total; ++c) {
    for (int k = 0; k < dim; ++k) cell[static_cast<size_t>(k)] = axis[static_cast<size_t>(idx[static_cast<size_t>(k)])];
    Tri t = region_.pred.classify(cell, ct);
    states_[c] = static_cast<std::uint8_t>(t);
    if (t != Tri::No) ++feasible_;
    for (int k = 0; k < dim; ++k) {
      if (++idx[static_cast<size_t>(k)] < n) break;
      idx[static_cast<size_t>(k)] = 0;
    }
  }

  UnionFind uf(total);
  std::vector<size_t> stride(static_cast<size_t>(dim), 1);
  for (int k = 1; k < dim; ++k) stride[static_cast<size_t>(k)] = stride[static_cast<size_t>(k) - 1] * static_cast<size_t>(n);
  std::fill(idx.begin(), idx.end(), 0);
  for (size_t c = 0; c < total; ++c) {
    if (states_[c]) {
      for (int k = 0; k < dim; ++k) {
        if (idx[static_cast<size_t>(k)] + 1 < n && states_[c + stride[static_cast<size_t>(k)]])
          uf.unite(static_cast<int>(c), static_cast<int>(c + stride[static_cast<size_t>(k)]));
      }
    }
    for (int k = 0; k < dim; ++k) {
      if (++idx[static_cast<size_t>(k)] < n) break;
      idx[static_cast<size_t>(k)] = 0;
    }
  }

  label_.assign(total, -1);
  std::vector<int> root_label(total, -1);
  std::vector<size_t> best_cell;
  std::vector<bool> best_yes;
  for (size_t c = 0; c < total; ++c) {
    if (!states_[c]) continue;
    size_t root = static_cast<size_t>(uf.find(static_cast<int>(c)));
    if (root_label[root] < 0) {
      root_label[root] = static_cast<int>(best_cell.size());
      best_cell.push_back(c);
      best_yes.push_back(states_[c] == static_cast<std::uint8_t>(Tri::Yes));
    }
    int l = root_label[root];
    label_[c] = l;
    if (!best_yes[static_cast<size_t>(l)] && states_[c] == static_cast<std::uint8_t>(Tri::Yes)) {
      best_cell[static_cast<size_t>(l)] = c;
      best_yes[static_cast<size_t>(l)] = true;
    }
  }
  auto centre_of = [&](size_t c) {
    RationalVector centre;
    for (int k = 0; k < dim; ++k) {
      long i = static_cast<long>(c % static_cast<size_t>(n));
      c /= static_cast<size_t>(n);
      centre.push_back(region_.lo + h_ * (Rational(2 * i + 1, 2)));
    }
    return centre;
  };
  // classes without a certain cell: look for an uncertain cell whose centre
  // passes the exact test, a bounded number of tries per class
  constexpr int max_tries = 4096;
  std::vector<int> tries(best_cell.size(), 0);
  certified_.assign(best_cell.size(), false);
  for (size_t l = 0; l < best_cell.size(); ++l) certified_[l] = best_yes[l];
  for (size_t c = 0; c < total; ++c) {
    if (!states_[c]) continue;
    size_t l = static_cast<size_t>(label_[c]);
    if (certified_[l] || tries[l] >= max_tries) continue;
    ++tries[l];
    if (region_.pred.holds(centre_of(c), thickening_)) {
      best_cell[l] = c;
      certified_[l] = true;
    }
  }
  for (size_t c : best_cell) reps_.push_back(centre_of(c));
}

std::size_t RegionAnalysis::linear(const std::vector<long>& idx) const {
  size_t c = 0;
  for (size_t k = idx.size(); k-- > 0;) c = c * static_cast<size_t>(shape_[k]) + static_cast<size_t>(idx[k]);
  return c;
}

std::optional<int> RegionAnalysis::component_of(std::span<const Rational> lower, std::span<const Rational> upper) const {
  const int dim = region_.dim;
  if (static_cast<int>(lower.size()) != dim || static_cast<int>(upper.size()) != dim)
    throw DomainError("component_of: point has the wrong dimension");
  if (dim == 0) return label_.empty() || label_[0] < 0 ? std::nullopt : std::optional<int>(label_[0]);
  std::vector<long> kmin(static_cast<size_t>(dim)), kmax(static_cast<size_t>(dim));
  for (int k = 0; k < dim; ++k) {
    kmin[static_cast<size_t>(k)] = ceil_div((lower[static_cast<size_t>(k)] - region_.lo) / h_) - 1;
    kmax[static_cast<size_t>(k)] = floor_div((upper[static_cast<size_t>(k)] - region_.lo) / h_);
  }
  auto scan = [&](long grow, bool nearest) -> std::optional<int> {
    std::vector<long> lo(static_cast<size_t>(dim)), hi(static_cast<size_t>(dim));
    for (int k = 0; k < dim; ++k) {
      lo[static_cast<size_t>(k)] = std::max(0L, kmin[static_cast<size_t>(k)] - grow);
      hi[static_cast<size_t>(k)] = std::min(shape_[static_cast<size_t>(k)] - 1, kmax[static_cast<size_t>(k)] + grow);
      if (lo[static_cast<size_t>(k)] > hi[static_cast<size_t>(k)]) return std::nullopt;
    }
    std::vector<long> idx = lo;
    std::optional<int> found;
    Rational best_dist;
    while (true) {
      size_t c = linear(idx);
      if (label_[c] >= 0) {
        if (!nearest) return label_[c];
        Rational dist(0);
        for (int k = 0; k < dim; ++k) {
          Rational centre = region_.lo + h_ * Rational(2 * idx[static_cast<size_t>(k)] + 1, 2);
          Rational mid = (lower[static_cast<size_t>(k)] + upper[static_cast<size_t>(k)]) / 2;
          dist = std::max(dist, Rational(abs(centre - mid)));
        }
        if (!found || dist < best_dist) {
          found = label_[c];
          best_dist = dist;
        }
      }
      int k = 0;
      for (; k < dim; ++k) {
        if (++idx[static_cast<size_t>(k)] <= hi[static_cast<size_t>(k)]) break;
        idx[static_cast<size_t>(k)] = lo[static_cast<size_t>(k)];
      }
      if (k == dim) break;
    }
    return found;
  };
  if (auto c = scan(0, false)) return c;
  return scan(1, true);
}

Tri RegionAnalysis::state_at(std::span<const Rational> x) const {
  const int dim = region_.dim;
  std::vector<long> idx(static_cast<size_t>(dim));
  for (int k = 0; k < dim; ++k) {
    long i = floor_div((x[static_cast<size_t>(k)] - region_.lo) / h_);
    if (i < 0 || i >= shape_[static_cast<size_t>(k)]) return Tri::No;
    idx[static_cast<size_t>(k)] = i;
  }
  return static_cast<Tri>(states_[linear(idx)]);
}

RegionAnalysis analyze_at(const Region& region, const Rational& h, const OracleConfig& cfg) {
  if (grid_cells(region, h) > cfg.max_cells)
    throw BudgetExceeded("grid for " + region.name + " at pitch " + to_string(h) + " needs " +
                         std::to_string(grid_cells(region, h)) + " cells, budget " + std::to_string(cfg.max_cells));
  RegionAnalysis a(region, h, cfg.thickening(h));
  a.history_counts_.push_back(static_cast<int>(a.classes()));
  a.history_h_.push_back(h);
  a.stabilized_ = false;
  return a;
}

RegionAnalysis analyze(const Region& region, const OracleConfig& cfg) {
  Rational h = cfg.h;
  std::optional<RegionAnalysis> last;
  std::vector<int> counts;
  std::vector<Rational> hs;
  bool stable = false;
  for (int depth = 0; depth <= cfg.max_depth; ++depth) {
    if (grid_cells(region, h) > cfg.max_cells) {
      if (!last) analyze_at(region, h, cfg);  // throws with the diagnostic
      break;
    }
    RegionAnalysis a(region, h, cfg.thickening(h));
    counts.push_back(static_cast<int>(a.classes()));
    hs.push_back(h);
    stable = last && last->classes() == a.classes();
    last.emplace(std::move(a));
    if (stable) break;
    h /= 2;
  }
  last->history_counts_ = counts;
  last->history_h_ = hs;
  last->stabilized_ = stable;
  return std::move(*last);
}

std::vector<RationalVector> sample_components(const Region& region, const OracleConfig& cfg) {
  return analyze(region, cfg).representatives();
}

namespace {

void require_feasible(const RegionAnalysis& a, std::span<const Rational> x, const char* name) {
  const Region& r = a.region();
  if (static_cast<int>(x.size()) != r.dim)
    throw PreconditionError(std::string("point ") + name + " has " + std::to_string(x.size()) +
                            " coordinates, region has dimension " + std::to_string(r.dim));
  for (const auto& v : x)
    if (v < r.lo || v > r.hi) throw PreconditionError(std::string("point ") + name + " lies outside the bounding box");
  std::string violated;
  if (!r.pred.holds(x, a.thickening(), &violated))
    throw PreconditionError(std::string("point ") + name + " is infeasible: violates " + violated);
}

int locate_or_throw(const RegionAnalysis& a, std::span<const Rational> x, const char* name) {
  auto c = a.component_of(x);
  if (!c)
    throw PreconditionError(std::string("point ") + name + " has no feasible grid cell at pitch " + to_string(a.h()) +
                            " (it may sit inside a strict-inequality margin); use a finer grid");
  return *c;
}

}  // namespace

bool connected(const Region& region, std::span<const Rational> x, std::span<const Rational> y,
               const OracleConfig& cfg) {
  RegionAnalysis a = analyze(region, cfg);
  require_feasible(a, x, "x");
  require_feasible(a, y, "y");
  return locate_or_throw(a, x, "x") == locate_or_throw(a, y, "y");
}

BruteForceOracle::BruteForceOracle(const SymmetricSystem& sys, const OracleConfig& cfg)
    : analysis_(analyze(system_region(sys), cfg)) {}

bool BruteForceOracle::connected(std::span<const Rational> x, std::span<const Rational> y) const {
  require_feasible(analysis_, x, "x");
  require_feasible(analysis_, y, "y");
  return locate_or_throw(analysis_, x, "x") == locate_or_throw(analysis_, y, "y");
}

bool brute_force_connected(const SymmetricSystem& sys, std::span<const Rational> x, std::span<const Rational> y,
                           const OracleConfig& cfg) {
  return BruteForceOracle(sys, cfg).connected(x, y);
}

}  // namespace symconn
