#pragma once

// Text and JSON encodings: shape/pattern/class literals, the JSON forms of
// the domain types, and an English-notation text grid for tableaux.

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewpat/core.hpp"
#include "skewpat/good.hpp"
#include "skewpat/rsk.hpp"

namespace skewpat {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Literals
// ---------------------------------------------------------------------------

namespace detail {

inline std::string trim(std::string s) {
  auto ws = [](unsigned char ch) { return std::isspace(ch) != 0; };
  while (!s.empty() && ws(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && ws(s[i])) ++i;
  return s.substr(i);
}

inline std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string t = trim(text);
  if (t.empty()) return out;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty() || !std::all_of(item.begin(), item.end(),
                                     [](unsigned char ch) { return std::isdigit(ch); })) {
      throw DomainError(std::string("malformed ") + what + " literal '" + text + "'");
    }
    out.push_back(std::stoi(item));
  }
  return out;
}

}  // namespace detail

inline Partition parse_partition(const std::string& text) {
  return Partition(detail::parse_int_list(text, "partition"));
}

// "3,2/2", "4,2,1" or "4,2,1/2,1".
inline SkewShape parse_shape(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return SkewShape(parse_partition(text));
  return SkewShape(parse_partition(text.substr(0, slash)),
                   parse_partition(text.substr(slash + 1)));
}

// "2413" (one digit per letter) or "10,2,1,...".
inline Permutation parse_permutation(const std::string& text) {
  std::string t = detail::trim(text);
  if (t.find(',') != std::string::npos) return Permutation(detail::parse_int_list(t, "pattern"));
  std::vector<int> e;
  for (char ch : t) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw DomainError("malformed pattern literal '" + text + "'");
    }
    e.push_back(ch - '0');
  }
  return Permutation(std::move(e));
}

// "n=2,k=2,r=0"; r defaults to 0.
inline ClassSpec parse_class(const std::string& text) {
  int n = -1, k = -1, r = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = detail::trim(item);
    auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("malformed class literal '" + text + "'");
    std::string key = detail::trim(item.substr(0, eq));
    auto vals = detail::parse_int_list(item.substr(eq + 1), "class");
    if (vals.size() != 1) throw DomainError("malformed class literal '" + text + "'");
    if (key == "n") {
      n = vals[0];
    } else if (key == "k") {
      k = vals[0];
    } else if (key == "r") {
      r = vals[0];
    } else {
      throw DomainError("unknown class parameter '" + key + "'");
    }
  }
  if (n < 0 || k < 0) throw DomainError("class literal needs n and k: '" + text + "'");
  return ClassSpec(n, k, r);
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline void to_json(Json& j, const Permutation& w) {
  j = std::vector<int>(w.begin(), w.end());
}
inline void from_json(const Json& j, Permutation& w) {
  w = Permutation(j.get<std::vector<int>>());
}

inline void to_json(Json& j, const Partition& p) {
  j = std::vector<int>(p.parts().begin(), p.parts().end());
}
inline void from_json(const Json& j, Partition& p) {
  p = Partition(j.get<std::vector<int>>());
}

inline void to_json(Json& j, const SkewShape& s) {
  j = Json{{"outer", s.outer()}, {"inner", s.inner()}};
}
inline void from_json(const Json& j, SkewShape& s) {
  Partition inner = j.contains("inner") ? j.at("inner").get<Partition>() : Partition{};
  s = SkewShape(j.at("outer").get<Partition>(), inner);
}

inline void to_json(Json& j, const SkewTableau& t) {
  j = Json{{"shape", t.shape()}, {"rows", t.rows()}};
}

// The shape may be omitted for straight tableaux.
inline void from_json(const Json& j, SkewTableau& t) {
  Rows rows = j.at("rows").get<Rows>();
  if (!j.contains("shape")) {
    t = SkewTableau::straight(std::move(rows));
    return;
  }
  SkewShape s = j.at("shape").get<SkewShape>();
  rows.resize(std::max<std::size_t>(rows.size(), s.rows()));
  while (static_cast<int>(rows.size()) > s.rows() && rows.back().empty()) rows.pop_back();
  t = SkewTableau(s, std::move(rows));
}

inline void to_json(Json& j, const PairedTableau& r) { j = r.tableau(); }
inline void from_json(const Json& j, PairedTableau& r) {
  SkewTableau t = j.get<SkewTableau>();
  r = PairedTableau{t.shape().inner(), t.rows()};
}

inline void to_json(Json& j, const TableauPair& p) { j = Json{{"P", p.P}, {"R", p.R}}; }
inline void from_json(const Json& j, TableauPair& p) {
  p = TableauPair{j.at("P").get<SkewTableau>(), j.at("R").get<PairedTableau>()};
}

inline void to_json(Json& j, const GoodTableau& g) { j = Json{{"rows", g.rows}}; }
inline void from_json(const Json& j, GoodTableau& g) {
  g.rows = (j.is_array() ? j : j.at("rows")).get<Rows>();
}

inline void to_json(Json& j, const ClassSpec& c) {
  j = Json{{"n", c.n}, {"k", c.k}, {"r", c.r}};
}

// ---------------------------------------------------------------------------
// Text grid
// ---------------------------------------------------------------------------

// English notation: first row on top, boxes of the inner shape blank.
inline std::string render(const SkewTableau& t) {
  int width = 1;
  for (const auto& r : t.rows()) {
    for (int v : r) width = std::max(width, static_cast<int>(std::to_string(v).size()));
  }
  std::string out;
  for (int i = 0; i < t.shape().rows(); ++i) {
    std::string line;
    for (int c = 0; c < t.shape().row_end(i); ++c) {
      if (c > 0) line += ' ';
      std::string cell = c < t.shape().row_start(i) ? "" : std::to_string(t.at({i, c}));
      if (cell.empty()) cell = ".";
      line += std::string(width - cell.size(), ' ') + cell;
    }
    out += line + '\n';
  }
  return out;
}

// Plain rows of numbers (good tableaux), left-justified.
inline std::string render(const Rows& rows) {
  int width = 1;
  for (const auto& r : rows) {
    for (int v : r) width = std::max(width, static_cast<int>(std::to_string(v).size()));
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      std::string cell = std::to_string(r[c]);
      line += (c ? " " : "") + std::string(width - cell.size(), ' ') + cell;
    }
    out += line + '\n';
  }
  return out;
}

// Boxes drawn as '#', inner boxes as '.'.
inline std::string render(const SkewShape& s) {
  std::string out;
  for (int i = 0; i < s.rows(); ++i) {
    std::string line;
    for (int c = 0; c < s.row_end(i); ++c) {
      if (c > 0) line += ' ';
      line += c < s.row_start(i) ? '.' : '#';
    }
    out += line + '\n';
  }
  return out;
}

}  // namespace skewpat
