#pragma once

// Problem files: one JSON document.
//
//   {
//     "degree": 2,
//     "nodes": [ {"x": "0", "y": "-3/2", "multiplicity": 2}, ... ],
//     "data":  [ {"node": 0, "i": 1, "j": 0, "value": "5/7"}, ... ]   optional
//   }
//
// Rationals are strings "p" or "p/q" (integers are also accepted on input).
// The canonical form has sorted keys, two-space indentation, reduced
// rationals, data entries ordered like the collocation rows, and a final
// newline; write(parse(canonical)) reproduces it byte for byte.

#include <hermite/hermite.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hermite {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DataEntry {
  std::size_t node;
  int i;
  int j;
  Rational value;

  friend bool operator==(const DataEntry&, const DataEntry&) = default;
};

struct ProblemFile {
  Problem problem;
  std::vector<DataEntry> data;  // in collocation-row order, no duplicates

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

namespace detail {

inline Rational json_rational(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(Integer(v.dump()));
  if (!v.is_string()) throw InputError(where + ": expected a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw InputError(where + ": malformed rational \"" + v.get<std::string>() + "\"");
  }
}

inline long json_int(const nlohmann::json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) throw InputError(where + ": \"" + key + "\" must be an integer");
  return v.get<long>();
}

inline void only_keys(const nlohmann::json& obj, std::initializer_list<const char*> keys,
                      const std::string& where) {
  for (const auto& [k, _] : obj.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
      throw InputError(where + ": unknown key \"" + k + "\"");
    }
  }
}

inline void sort_data(const Scheme& s, std::vector<DataEntry>& data) {
  std::sort(data.begin(), data.end(), [&](const DataEntry& a, const DataEntry& b) {
    return condition_row(s, {a.node, a.i, a.j}) < condition_row(s, {b.node, b.i, b.j});
  });
}

}  // namespace detail

inline ProblemFile parse_problem(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("top level must be an object");
  detail::only_keys(doc, {"degree", "nodes", "data"}, "problem");
  const long degree = detail::json_int(doc, "degree", "problem");
  if (degree < 0 || degree > 1000) throw InputError("problem: degree out of range");
  if (!doc.contains("nodes") || !doc.at("nodes").is_array()) {
    throw InputError("problem: \"nodes\" must be an array");
  }

  std::vector<int> mult;
  std::vector<Point> pts;
  for (std::size_t k = 0; k < doc.at("nodes").size(); ++k) {
    const auto& rec = doc.at("nodes")[k];
    const std::string where = "node " + std::to_string(k);
    if (!rec.is_object()) throw InputError(where + ": must be an object");
    detail::only_keys(rec, {"x", "y", "multiplicity"}, where);
    if (!rec.contains("x") || !rec.contains("y")) throw InputError(where + ": missing coordinate");
    const long m = detail::json_int(rec, "multiplicity", where);
    if (m < 0 || m > 1000) throw InputError(where + ": multiplicity out of range");
    mult.push_back(static_cast<int>(m));
    pts.push_back({detail::json_rational(rec.at("x"), where + " x"),
                   detail::json_rational(rec.at("y"), where + " y")});
  }

  std::optional<Problem> problem;
  try {
    problem.emplace(Scheme(std::move(mult), static_cast<int>(degree)), std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  std::vector<DataEntry> data;
  if (doc.contains("data")) {
    const auto& block = doc.at("data");
    if (!block.is_array()) throw InputError("problem: \"data\" must be an array");
    std::map<std::tuple<std::size_t, int, int>, bool> seen;
    for (std::size_t t = 0; t < block.size(); ++t) {
      const auto& rec = block[t];
      const std::string where = "data entry " + std::to_string(t);
      if (!rec.is_object()) throw InputError(where + ": must be an object");
      detail::only_keys(rec, {"node", "i", "j", "value"}, where);
      const long node = detail::json_int(rec, "node", where);
      const long i = detail::json_int(rec, "i", where);
      const long j = detail::json_int(rec, "j", where);
      if (!rec.contains("value")) throw InputError(where + ": missing \"value\"");
      if (node < 0 || static_cast<std::size_t>(node) >= problem->size() || i < 0 || j < 0 ||
          i + j >= problem->scheme()[static_cast<std::size_t>(node)]) {
        throw InputError(where + ": (node, i, j) outside the scheme");
      }
      const auto key = std::make_tuple(static_cast<std::size_t>(node), static_cast<int>(i),
                                       static_cast<int>(j));
      if (seen[key]) throw InputError(where + ": duplicate condition");
      seen[key] = true;
      data.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key),
                      detail::json_rational(rec.at("value"), where + " value")});
    }
    detail::sort_data(problem->scheme(), data);
  }
  return {std::move(*problem), std::move(data)};
}

inline std::string write_problem(const ProblemFile& file) {
  nlohmann::json doc;
  doc["degree"] = file.problem.degree();
  doc["nodes"] = nlohmann::json::array();
  for (std::size_t k = 0; k < file.problem.size(); ++k) {
    const auto& p = file.problem.nodes()[k];
    doc["nodes"].push_back(
        {{"x", to_string(p.x)}, {"y", to_string(p.y)}, {"multiplicity", file.problem.scheme()[k]}});
  }
  if (!file.data.empty()) {
    auto data = file.data;
    detail::sort_data(file.problem.scheme(), data);
    doc["data"] = nlohmann::json::array();
    for (const auto& e : data) {
      doc["data"].push_back({{"node", e.node}, {"i", e.i}, {"j", e.j}, {"value", to_string(e.value)}});
    }
  }
  return doc.dump(2) + "\n";
}

inline std::string write_problem(const Problem& problem) { return write_problem({problem, {}}); }

inline ProblemFile read_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

inline void write_problem_file(const std::string& path, const ProblemFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << write_problem(file);
}

// The data block as HermiteData; every condition must be present.
inline HermiteData hermite_data(const ProblemFile& file) {
  const Scheme& s = file.problem.scheme();
  HermiteData out;
  std::vector<std::vector<bool>> have;
  for (std::size_t k = 0; k < s.size(); ++k) {
    out.values.emplace_back(static_cast<std::size_t>(bar(s[k])));
    have.emplace_back(static_cast<std::size_t>(bar(s[k])), false);
  }
  for (const auto& e : file.data) {
    const auto idx = monomial_index(e.i, e.j);
    out.values[e.node][idx] = e.value;
    have[e.node][idx] = true;
  }
  for (const auto& c : conditions(s)) {
    if (!have[c.node][monomial_index(c.i, c.j)]) {
      throw InputError("data block is missing (node " + std::to_string(c.node) + ", i " +
                       std::to_string(c.i) + ", j " + std::to_string(c.j) + ")");
    }
  }
  return out;
}

}  // namespace hermite
