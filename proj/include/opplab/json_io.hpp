#pragma once

// JSON forms of the library types. Rationals are "p/q" strings so that no
// value ever passes through a double.

#include <string>
#include <vector>

#include "json.hpp"
#include "opplab/census.hpp"
#include "opplab/coxeter.hpp"
#include "opplab/flags.hpp"
#include "opplab/grassmann.hpp"
#include "opplab/matrix.hpp"
#include "opplab/polytope.hpp"
#include "opplab/rational.hpp"

namespace opplab::io {

using nlohmann::json;

inline json to_json(const Permutation& p) { return p.image(); }

inline Permutation permutation_from_json(const json& j, const std::string& field) {
  if (j.is_string()) return parse_permutation(j.get<std::string>());
  if (!j.is_array()) throw InputError(field + ": expected an array of integers");
  std::vector<int> image;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InputError(field + ": expected an array of integers");
    image.push_back(e.get<int>());
  }
  try {
    return Permutation(std::move(image));
  } catch (const InputError& e) {
    throw InputError(field + ": " + e.what());
  }
}

inline json to_json(const BruhatInterval& i) { return {{"v", to_json(i.v())}, {"w", to_json(i.w())}}; }

inline BruhatInterval interval_from_json(const json& j, const std::string& field) {
  if (!j.is_object()) throw InputError(field + ": expected an object with keys v and w");
  if (!j.contains("v")) throw InputError(field + ".v: missing");
  if (!j.contains("w")) throw InputError(field + ".w: missing");
  auto v = permutation_from_json(j.at("v"), field + ".v");
  auto w = permutation_from_json(j.at("w"), field + ".w");
  try {
    return BruhatInterval(std::move(v), std::move(w));
  } catch (const InputError& e) {
    throw InputError(field + ": " + e.what());
  }
}

/// "132,231" or a JSON object {"v": [...], "w": [...]}.
inline BruhatInterval parse_interval(const std::string& text, const std::string& field) {
  if (!text.empty() && text.front() == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error&) {
      throw InputError(field + ": malformed JSON");
    }
    return interval_from_json(j, field);
  }
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw InputError(field + ": expected v,w (for example 132,231)");
  try {
    return BruhatInterval(parse_permutation(text.substr(0, comma)), parse_permutation(text.substr(comma + 1)));
  } catch (const InputError& e) {
    throw InputError(field + ": " + e.what());
  }
}

inline json to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const json& j, const std::string& field) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const InputError& e) {
    throw InputError(field + ": " + e.what());
  }
  throw InputError(field + ": expected a rational string or an integer");
}

inline json to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ExactMatrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw InputError(field + ": expected a nonempty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string row_field = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) throw InputError(row_field + ": expected an array");
    std::vector<Rational> row;
    for (std::size_t c = 0; c < j[i].size(); ++c)
      row.push_back(rational_from_json(j[i][c], row_field + "[" + std::to_string(c) + "]"));
    if (!rows.empty() && row.size() != rows.front().size()) throw InputError(row_field + ": ragged row");
    rows.push_back(std::move(row));
  }
  return ExactMatrix::from_rows(rows);
}

inline json to_json(const CellLabel& c) {
  return {{"interval", to_json(c.interval)}, {"side", to_string(c.side)}};
}

inline json to_json(const Flag& f) { return {{"rep", to_json(f.rep())}}; }

inline json to_json(const Flag& f, const CellLabel& c) { return {{"rep", to_json(f.rep())}, {"cell", to_json(c)}}; }

inline Flag flag_from_json(const json& j, const std::string& field) {
  if (j.is_object()) {
    if (!j.contains("rep")) throw InputError(field + ".rep: missing");
    return flag_from_json(j.at("rep"), field + ".rep");
  }
  try {
    return Flag(matrix_from_json(j, field));
  } catch (const InputError& e) {
    const std::string what = e.what();
    if (what.rfind(field, 0) == 0) throw;
    throw InputError(field + ": " + what);
  }
}

inline json to_json(const Positroid& p) {
  json members = json::array();
  for (const auto& m : p.members) members.push_back(m);
  return {{"n", p.n}, {"k", p.k}, {"members", members}};
}

inline json to_json(const PluckerVector& v) {
  json out = json::array();
  for (const auto& [subset, value] : v) out.push_back({{"subset", subset}, {"value", to_json(value)}});
  return out;
}

inline json to_json(const PointSet& p) {
  json out = json::array();
  for (const auto& point : p.points) {
    json row = json::array();
    for (const auto& c : point) {
      if (c.get_den() == 1 && c.get_num().fits_slong_p()) row.push_back(c.get_num().get_si());
      else row.push_back(to_json(c));
    }
    out.push_back(std::move(row));
  }
  return out;
}

inline json to_json(const Point& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(to_json(c));
  return out;
}

inline json to_json(const CensusEntry& e) {
  return {{"I", to_json(e.first)},
          {"J", to_json(e.second)},
          {"opposed", e.opposed},
          {"intersect", e.intersect},
          {"bip_intersect", e.bip_intersect}};
}

}  // namespace opplab::io
