#include "symconn/verify.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>

namespace symconn {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

bool PairOutcome::flagged() const {
  if (!agrees()) return true;
  return expected && *expected != brute;
}

size_t FixtureReport::agreements() const {
  return static_cast<size_t>(std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return p.agrees(); }));
}

size_t FixtureReport::flagged() const {
  return static_cast<size_t>(std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return p.flagged(); }));
}

size_t VerifyReport::pairs() const {
  size_t s = 0;
  for (const auto& f : fixtures) s += f.pairs.size();
  return s;
}

size_t VerifyReport::agreements() const {
  size_t s = 0;
  for (const auto& f : fixtures) s += f.agreements();
  return s;
}

size_t VerifyReport::flagged() const {
  size_t s = 0;
  for (const auto& f : fixtures) s += f.flagged();
  return s;
}

std::array<std::array<size_t, 2>, 2> VerifyReport::matrix() const {
  std::array<std::array<size_t, 2>, 2> m{};
  for (const auto& f : fixtures)
    for (const auto& p : f.pairs)
      if (p.engine) ++m[*p.engine][p.brute];
  return m;
}

json VerifyReport::to_json() const {
  json fx = json::array();
  for (const auto& f : fixtures) {
    json flagged = json::array();
    for (const auto& p : f.pairs) {
      if (!p.flagged()) continue;
      json e{{"pair", p.index}, {"brute_force", p.brute}};
      e["engine"] = p.engine ? json(*p.engine) : json(nullptr);
      if (p.expected) e["expected"] = *p.expected;
      if (!p.error.empty()) e["error"] = p.error;
      if (!p.certificate.is_null()) e["certificate"] = p.certificate;
      flagged.push_back(e);
    }
    fx.push_back(json{{"name", f.name},
                      {"path", f.path},
                      {"n", f.n},
                      {"d", f.d},
                      {"pairs", f.pairs.size()},
                      {"agreements", f.agreements()},
                      {"flagged", flagged},
                      {"brute_force_h", f.brute_h},
                      {"engine_seconds", f.engine_seconds},
                      {"brute_force_seconds", f.brute_seconds}});
  }
  auto m = matrix();
  return json{{"fixtures", fx},
              {"pairs", pairs()},
              {"agreements", agreements()},
              {"flagged", flagged()},
              {"matrix", {{"engine_true_brute_true", m[1][1]},
                          {"engine_true_brute_false", m[1][0]},
                          {"engine_false_brute_true", m[0][1]},
                          {"engine_false_brute_false", m[0][0]}}},
              {"seconds", seconds}};
}

FixtureReport verify_problem(const ProblemFile& problem, const EngineConfig& base) {
  EngineConfig cfg = base;
  cfg.oracle = problem.oracle.apply(base.oracle);
  FixtureReport rep;
  rep.name = problem.name;
  rep.n = problem.system.n();
  rep.d = problem.system.d();

  auto t0 = std::chrono::steady_clock::now();
  BruteForceOracle brute(problem.system, cfg.oracle);
  rep.brute_h = to_string(brute.analysis().h());
  std::vector<bool> truth;
  for (const auto& q : problem.pairs) truth.push_back(brute.connected(q.x, q.y));
  rep.brute_seconds = since(t0);

  Engine engine(problem.system, cfg);
  for (size_t i = 0; i < problem.pairs.size(); ++i) {
    const auto& q = problem.pairs[i];
    PairOutcome out;
    out.index = i;
    out.brute = truth[i];
    out.expected = q.expected;
    auto t1 = std::chrono::steady_clock::now();
    // the engine wants x in the chamber: sort x and apply the same permutation to y
    auto sorted = minimal_adjacent_transpositions(q.x);
    RationalVector y = apply_word(sorted.word, q.y);
    try {
      Verdict v = engine.symmetric(sorted.sorted, y);
      out.engine = v.connected;
      if (out.flagged()) out.certificate = v.certificate;
    } catch (const std::exception& e) {
      out.error = e.what();
    }
    out.engine_seconds = since(t1);
    rep.engine_seconds += out.engine_seconds;
    rep.pairs.push_back(std::move(out));
  }
  return rep;
}

VerifyReport run_verify(const std::string& dir, const EngineConfig& cfg) {
  if (!fs::is_directory(dir)) throw ParseError(dir, "corpus directory not found");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  VerifyReport report;
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& f : files) {
    ProblemFile p = load_problem(f.string());
    if (p.name.empty()) p.name = f.stem().string();
    FixtureReport r = verify_problem(p, cfg);
    r.path = f.string();
    report.fixtures.push_back(std::move(r));
  }
  report.seconds = since(t0);
  return report;
}

}  // namespace symconn
