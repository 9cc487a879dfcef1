#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "symconn/grid_oracle.hpp"
#include "symconn/power_sum.hpp"

namespace symconn {

/// Schema or value error; `where` is a JSON pointer into the offending document.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct QueryPair {
  RationalVector x;
  RationalVector y;
  std::optional<bool> expected;  ///< known answer, when the fixture records one
  std::string note;
};

/// Grid settings a fixture needs to be resolved; laid over the caller's configuration.
struct OracleHints {
  std::optional<Rational> h;
  std::optional<Rational> eq_delta;
  std::optional<int> max_depth;

  OracleConfig apply(OracleConfig cfg) const;
  bool empty() const { return !h && !eq_delta && !max_depth; }
};

struct ProblemFile {
  SymmetricSystem system;
  std::map<std::string, RationalVector> points;
  std::vector<QueryPair> pairs;
  std::string name;
  OracleHints oracle;
};

/// Rational from 3, "3", "-3/5", "0.125" or [num, den].
Rational parse_rational_json(const nlohmann::json& v, const std::string& where);
RationalVector parse_point_json(const nlohmann::json& v, const std::string& where, std::optional<int> n = {});

ProblemFile parse_problem(const nlohmann::json& doc);
ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::string& path);

nlohmann::json rational_json(const Rational& q);
nlohmann::json point_json(std::span<const Rational> x);
nlohmann::json system_json(const SymmetricSystem& sys);
nlohmann::json problem_json(const ProblemFile& problem);

/// A bare point file: either an array of rationals or {"point": [...]}.
RationalVector load_point(const std::string& path, int n);

}  // namespace symconn
