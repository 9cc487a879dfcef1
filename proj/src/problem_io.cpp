#include "symconn/problem_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace symconn {

using nlohmann::json;

namespace {

mpz_class parse_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return mpz_class(std::to_string(v.get<long long>()), 10);
  if (v.is_number_unsigned()) return mpz_class(std::to_string(v.get<unsigned long long>()), 10);
  if (v.is_string()) {
    Rational q;
    try {
      q = parse_rational(v.get<std::string>());
    } catch (const DomainError& e) {
      throw ParseError(where, e.what());
    }
    if (q.get_den() != 1) throw ParseError(where, "expected an integer, got " + v.get<std::string>());
    return q.get_num();
  }
  throw ParseError(where, "expected an integer");
}

int parse_small_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where, "expected an integer");
  long long x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    throw ParseError(where, "integer out of range");
  return static_cast<int>(x);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string at(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string at(const std::string& base, size_t i) { return base + "/" + std::to_string(i); }

Rational uniform_bound(const json& row, const std::string& where, int n) {
  RationalVector v = parse_point_json(row, where, n);
  for (size_t k = 1; k < v.size(); ++k)
    if (v[k] != v[0]) throw ParseError(at(where, k), "the bounding box must be a cube (equal entries)");
  return v[0];
}

}  // namespace

OracleConfig OracleHints::apply(OracleConfig cfg) const {
  if (h) cfg.h = *h;
  if (eq_delta) cfg.eq_delta = *eq_delta;
  if (max_depth) cfg.max_depth = *max_depth;
  return cfg;
}

Rational parse_rational_json(const json& v, const std::string& where) {
  if (v.is_number_integer() || v.is_number_unsigned()) return Rational(parse_integer(v, where));
  if (v.is_number_float())
    throw ParseError(where, "floating-point literal; write decimals as strings (\"0.5\") for exact parsing");
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const DomainError& e) {
      throw ParseError(where, e.what());
    }
  }
  if (v.is_array() && v.size() == 2) {
    mpz_class num = parse_integer(v[0], at(where, 0));
    mpz_class den = parse_integer(v[1], at(where, 1));
    if (den == 0) throw ParseError(at(where, 1), "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  throw ParseError(where, "expected a rational (integer, string or [num, den])");
}

RationalVector parse_point_json(const json& v, const std::string& where, std::optional<int> n) {
  if (!v.is_array()) throw ParseError(where, "expected an array of rationals");
  if (n && static_cast<int>(v.size()) != *n)
    throw ParseError(where, "expected " + std::to_string(*n) + " coordinates, got " + std::to_string(v.size()));
  RationalVector out;
  for (size_t i = 0; i < v.size(); ++i) out.push_back(parse_rational_json(v[i], at(where, i)));
  return out;
}

ProblemFile parse_problem(const json& doc) {
  const std::string root = "(root)";
  const int n = parse_small_int(require(doc, "n", root), "/n");
  const int d = parse_small_int(require(doc, "d", root), "/d");
  if (n < 1) throw ParseError("/n", "n must be positive");
  if (d < 1) throw ParseError("/d", "d must be positive");
  if (d > n) throw ParseError("/d", "d = " + std::to_string(d) + " exceeds n = " + std::to_string(n));

  std::vector<SymConstraint> constraints;
  const json& cs = require(doc, "constraints", root);
  if (!cs.is_array()) throw ParseError("/constraints", "expected an array");
  for (size_t c = 0; c < cs.size(); ++c) {
    const std::string where = at("/constraints", c);
    const json& coeffs = require(cs[c], "coeffs", where);
    if (!coeffs.is_array()) throw ParseError(at(where, "coeffs"), "expected an array of terms");
    PowerSumPoly g(d);
    for (size_t t = 0; t < coeffs.size(); ++t) {
      const std::string tw = at(at(where, "coeffs"), t);
      const json& row = coeffs[t];
      if (!row.is_array() || static_cast<int>(row.size()) != d + 2)
        throw ParseError(tw, "a term is [e_1, .., e_d, num, den] with " + std::to_string(d + 2) + " entries");
      std::vector<int> e;
      for (int j = 0; j < d; ++j) {
        int ej = parse_small_int(row[static_cast<size_t>(j)], at(tw, static_cast<size_t>(j)));
        if (ej < 0) throw ParseError(at(tw, static_cast<size_t>(j)), "negative exponent");
        e.push_back(ej);
      }
      mpz_class num = parse_integer(row[static_cast<size_t>(d)], at(tw, static_cast<size_t>(d)));
      mpz_class den = parse_integer(row[static_cast<size_t>(d) + 1], at(tw, static_cast<size_t>(d) + 1));
      if (den == 0) throw ParseError(at(tw, static_cast<size_t>(d) + 1), "zero denominator");
      Rational q(num, den);
      q.canonicalize();
      try {
        g.add_term(e, q);
      } catch (const DomainError& ex) {
        throw ParseError(tw, ex.what());
      }
    }
    Relation rel = Relation::GE;
    if (auto it = cs[c].find("rel"); it != cs[c].end()) {
      if (!it->is_string()) throw ParseError(at(where, "rel"), "expected \"ge\", \"eq\" or \"gt\"");
      try {
        rel = parse_relation(it->get<std::string>());
      } catch (const DomainError& ex) {
        throw ParseError(at(where, "rel"), ex.what());
      }
    }
    constraints.push_back(SymConstraint{std::move(g), rel});
  }

  const json& box = require(doc, "box", root);
  if (!box.is_array() || box.size() != 2) throw ParseError("/box", "expected [[lo..], [hi..]]");
  Rational lo = uniform_bound(box[0], "/box/0", n);
  Rational hi = uniform_bound(box[1], "/box/1", n);
  if (!(lo < hi)) throw ParseError("/box", "empty box: lo must be below hi");

  ProblemFile out{SymmetricSystem(n, d, std::move(constraints), lo, hi), {}, {}, {}, {}};
  if (auto it = doc.find("name"); it != doc.end() && it->is_string()) out.name = it->get<std::string>();
  if (auto it = doc.find("oracle"); it != doc.end()) {
    if (!it->is_object()) throw ParseError("/oracle", "expected an object");
    if (auto h = it->find("h"); h != it->end()) {
      out.oracle.h = parse_rational_json(*h, "/oracle/h");
      if (*out.oracle.h <= 0) throw ParseError("/oracle/h", "pitch must be positive");
    }
    if (auto e = it->find("eq_delta"); e != it->end()) {
      out.oracle.eq_delta = parse_rational_json(*e, "/oracle/eq_delta");
      if (*out.oracle.eq_delta < 0) throw ParseError("/oracle/eq_delta", "must be non-negative");
    }
    if (auto m = it->find("max_depth"); m != it->end()) {
      out.oracle.max_depth = parse_small_int(*m, "/oracle/max_depth");
      if (*out.oracle.max_depth < 0) throw ParseError("/oracle/max_depth", "must be non-negative");
    }
  }
  if (auto it = doc.find("points"); it != doc.end()) {
    if (!it->is_object()) throw ParseError("/points", "expected an object of named points");
    for (auto& [key, val] : it->items()) out.points[key] = parse_point_json(val, at("/points", key), n);
  }
  if (auto it = doc.find("pairs"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("/pairs", "expected an array");
    for (size_t p = 0; p < it->size(); ++p) {
      const std::string where = at("/pairs", p);
      const json& pr = (*it)[p];
      auto point = [&](const char* key) {
        const json& v = require(pr, key, where);
        if (v.is_string()) {
          auto found = out.points.find(v.get<std::string>());
          if (found == out.points.end()) throw ParseError(at(where, key), "unknown point '" + v.get<std::string>() + "'");
          return found->second;
        }
        return parse_point_json(v, at(where, key), n);
      };
      QueryPair q{point("x"), point("y"), std::nullopt, {}};
      if (auto e = pr.find("expected"); e != pr.end()) {
        if (!e->is_boolean()) throw ParseError(at(where, "expected"), "expected a boolean");
        q.expected = e->get<bool>();
      }
      if (auto nt = pr.find("note"); nt != pr.end() && nt->is_string()) q.note = nt->get<std::string>();
      out.pairs.push_back(std::move(q));
    }
  }
  return out;
}

ProblemFile parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  return parse_problem(doc);
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    ProblemFile p = parse_problem(buf.str());
    return p;
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

json point_json(std::span<const Rational> x) {
  json out = json::array();
  for (const auto& v : x) out.push_back(rational_json(v));
  return out;
}

json system_json(const SymmetricSystem& sys) {
  auto integer = [](const mpz_class& z) -> json {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
  };
  json constraints = json::array();
  for (const auto& c : sys.constraints()) {
    json coeffs = json::array();
    for (const auto& [e, q] : c.g.terms()) {
      json row = json::array();
      for (int ej : e) row.push_back(ej);
      row.push_back(integer(q.get_num()));
      row.push_back(integer(q.get_den()));
      coeffs.push_back(row);
    }
    constraints.push_back(json{{"coeffs", coeffs}, {"rel", to_string(c.rel)}});
  }
  RationalVector lo(static_cast<size_t>(sys.n()), sys.box_lo()), hi(static_cast<size_t>(sys.n()), sys.box_hi());
  return json{{"n", sys.n()}, {"d", sys.d()}, {"constraints", constraints}, {"box", {point_json(lo), point_json(hi)}}};
}

json problem_json(const ProblemFile& problem) {
  json out = system_json(problem.system);
  if (!problem.name.empty()) out["name"] = problem.name;
  if (!problem.oracle.empty()) {
    json o = json::object();
    if (problem.oracle.h) o["h"] = rational_json(*problem.oracle.h);
    if (problem.oracle.eq_delta) o["eq_delta"] = rational_json(*problem.oracle.eq_delta);
    if (problem.oracle.max_depth) o["max_depth"] = *problem.oracle.max_depth;
    out["oracle"] = o;
  }
  if (!problem.points.empty()) {
    out["points"] = json::object();
    for (const auto& [k, v] : problem.points) out["points"][k] = point_json(v);
  }
  if (!problem.pairs.empty()) {
    out["pairs"] = json::array();
    for (const auto& q : problem.pairs) {
      json pr{{"x", point_json(q.x)}, {"y", point_json(q.y)}};
      if (q.expected) pr["expected"] = *q.expected;
      if (!q.note.empty()) pr["note"] = q.note;
      out["pairs"].push_back(pr);
    }
  }
  return out;
}

RationalVector load_point(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ":byte " + std::to_string(e.byte), "malformed JSON");
  }
  if (doc.is_object()) return parse_point_json(require(doc, "point", path), path + ":/point", n);
  return parse_point_json(doc, path + ":", n);
}

}  // namespace symconn
