// symconn: connectivity queries on symmetric semi-algebraic sets.
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "symconn/engine.hpp"
#include "symconn/problem_io.hpp"
#include "symconn/verify.hpp"

using namespace symconn;
using nlohmann::json;

namespace {

struct Options {
  std::string grid_h;
  std::string eq_delta;
  int max_depth = -1;
  std::string pattern = "minimizer";
  bool auto_canonicalize = false;
  bool compact = false;
};

EngineConfig make_config(const Options& o) {
  EngineConfig cfg;
  if (!o.grid_h.empty()) {
    cfg.oracle.h = parse_rational(o.grid_h);
    if (cfg.oracle.h <= 0) throw DomainError("--grid-h must be positive");
  }
  if (!o.eq_delta.empty()) {
    cfg.oracle.eq_delta = parse_rational(o.eq_delta);
    if (*cfg.oracle.eq_delta < 0) throw DomainError("--eq-delta must be non-negative");
  }
  if (o.max_depth >= 0) cfg.oracle.max_depth = o.max_depth;
  cfg.pattern = parse_pattern(o.pattern);
  return cfg;
}

// A point is a file path, or inline JSON such as '["1/2", 0, 1]'.
RationalVector read_point(const std::string& arg, int n) {
  if (std::filesystem::exists(arg)) return load_point(arg, n);
  json doc;
  try {
    doc = json::parse(arg);
  } catch (const json::parse_error&) {
    throw ParseError(arg, "neither a readable file nor an inline JSON point");
  }
  return parse_point_json(doc.is_object() && doc.contains("point") ? doc["point"] : doc, "(argument)", n);
}

int emit(const json& doc, const Options& o, int code) {
  std::cout << doc.dump(o.compact ? -1 : 2) << "\n";
  return code;
}

int emit_verdict(const Verdict& v, const Options& o) {
  return emit(json{{"connected", v.connected}, {"certificate", v.certificate}}, o, v.connected ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connectivity of symmetric semi-algebraic sets given in the power-sum basis"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--grid-h", o.grid_h, "starting grid pitch of the connectivity oracle (default 1/4)");
  app.add_option("--eq-delta", o.eq_delta, "half-width of the slab replacing each equation (default: the pitch)");
  app.add_option("--max-depth", o.max_depth, "number of pitch halvings allowed (default 3)");
  app.add_option("--pattern", o.pattern, "faces searched for fiber minimizers: minimizer (default), definition or mirrored")
      ->check(CLI::IsMember({"minimizer", "definition", "mirrored"}));
  app.add_flag("--compact", o.compact, "single-line JSON output");

  std::string sys_path, x_arg, y_arg, corpus = "tests/fixtures/corpus";
  int wall_index = 0, n = 0, d = 0;
  std::vector<std::string> a_args;

  auto* check = app.add_subcommand("check", "are x and y in one connected component of S?");
  check->add_option("system", sys_path, "problem file")->required();
  check->add_option("x", x_arg, "point file or inline JSON; must be sorted unless --auto-canonicalize")->required();
  check->add_option("y", y_arg, "point file or inline JSON")->required();
  check->add_flag("--auto-canonicalize", o.auto_canonicalize, "sort x and permute y the same way");

  auto* orbit = app.add_subcommand("check-orbit", "are the orbits of x and y in one component of S / S_n?");
  orbit->add_option("system", sys_path)->required();
  orbit->add_option("x", x_arg)->required();
  orbit->add_option("y", y_arg)->required();

  auto* wall = app.add_subcommand("wall", "can sorted x reach the wall x_i = x_{i+1} inside the chamber?");
  wall->add_option("system", sys_path)->required();
  wall->add_option("x", x_arg)->required();
  wall->add_option("i", wall_index, "1-based wall index")->required();

  auto* minc = app.add_subcommand("min-canonical", "minimizer of p_{d+1} on the Vandermonde fiber p_j = a_j");
  minc->add_option("-n", n, "number of variables")->required();
  minc->add_option("-d", d, "number of power sums")->required();
  minc->add_option("a", a_args, "target values a_1 .. a_d")->required();

  auto* graph = app.add_subcommand("graph", "dump the union graph over the CompMax faces");
  graph->add_option("system", sys_path)->required();

  auto* verify = app.add_subcommand("verify", "compare the engine with the full-dimensional grid oracle on a corpus");
  verify->add_option("corpus", corpus, "directory of fixture files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every usage error maps onto the error code
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    EngineConfig cfg = make_config(o);
    if (*minc) {
      RationalVector a;
      for (const auto& s : a_args) a.push_back(parse_rational(s));
      if (static_cast<int>(a.size()) != d) throw DomainError("expected " + std::to_string(d) + " target values");
      auto cp = min_canonical(a, n, d, cfg.pattern);
      if (!cp) return emit(json{{"found", false}, {"reason", "the fiber does not meet the canonical chamber"}}, o, 1);
      RefinedPoint r = refine(cp->point, ten_to_minus(12));
      json preview = json::array();
      for (const auto& v : r.approx) preview.push_back(to_decimal(v, 12));
      return emit(json{{"found", true},
                       {"point", to_json(cp->point)},
                       {"decimal", preview},
                       {"error_bound", "1e-12"},
                       {"face", cp->face.parts()},
                       {"multiplicity", cp->multiplicity.parts()},
                       {"next_power_sum", {to_decimal(cp->next_power_sum.first), to_decimal(cp->next_power_sum.second)}}},
                  o, 0);
    }
    if (*verify) {
      VerifyReport rep = run_verify(corpus, cfg);
      return emit(rep.to_json(), o, rep.flagged() == 0 ? 0 : 1);
    }

    ProblemFile problem = load_problem(sys_path);
    Engine engine(problem.system, cfg);
    const int dim = problem.system.n();
    if (*graph) return emit(json{{"graph", engine.graph_json()}, {"resolution", engine.resolution_json()}}, o, 0);
    if (*wall) return emit_verdict(engine.wall(read_point(x_arg, dim), wall_index), o);

    RationalVector x = read_point(x_arg, dim);
    RationalVector y = read_point(y_arg, dim);
    if (*orbit) {
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      return emit_verdict(engine.canonical(x, y), o);
    }
    if (o.auto_canonicalize) {
      auto sorted = minimal_adjacent_transpositions(x);
      y = apply_word(sorted.word, y);
      x = sorted.sorted;
    }
    return emit_verdict(engine.symmetric(x, y), o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
