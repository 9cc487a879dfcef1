#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symconn/engine.hpp"
#include "symconn/problem_io.hpp"

namespace symconn {

struct PairOutcome {
  size_t index = 0;
  std::optional<bool> engine;  ///< empty when the engine raised
  bool brute = false;
  std::optional<bool> expected;
  std::string error;
  nlohmann::json certificate;  ///< kept only for flagged pairs
  double engine_seconds = 0;

  bool agrees() const { return engine && *engine == brute; }
  /// Disagrees with the engine, the grid oracle, or the fixture's recorded answer.
  bool flagged() const;
};

struct FixtureReport {
  std::string name;
  std::string path;
  int n = 0;
  int d = 0;
  std::vector<PairOutcome> pairs;
  double engine_seconds = 0;
  double brute_seconds = 0;
  std::string brute_h;

  size_t agreements() const;
  size_t flagged() const;
};

struct VerifyReport {
  std::vector<FixtureReport> fixtures;
  double seconds = 0;

  size_t pairs() const;
  size_t agreements() const;
  size_t flagged() const;
  /// counts[engine][brute] over pairs where the engine answered
  std::array<std::array<size_t, 2>, 2> matrix() const;
  nlohmann::json to_json() const;
};

FixtureReport verify_problem(const ProblemFile& problem, const EngineConfig& cfg);
/// Every *.json fixture in `dir`, in file-name order. Throws if `dir` is missing.
VerifyReport run_verify(const std::string& dir, const EngineConfig& cfg);

}  // namespace symconn
