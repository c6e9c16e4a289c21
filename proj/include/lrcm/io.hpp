// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON, CSV and DOT formats. Element indices are 0-based everywhere.
//
//   lattice     {"n", "members": [{"elements", "rank"}]}
//   set system  {"n", "k", "flats": [{"elements", "rank"}]}
//   graph       {"m", "edges": [[i, j, gamma]]}
//   matrix      {"p", "k", "n", "rows": [[...]]}
//   uniform     {"n", "k"}
//
// A matroid document is any of lattice, matrix, set system or uniform,
// optionally tagged with "kind".

#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lrcm/construct.hpp"
#include "lrcm/error.hpp"
#include "lrcm/field.hpp"
#include "lrcm/lattice.hpp"
#include "lrcm/matroid.hpp"
#include "lrcm/set_system.hpp"

namespace lrcm::io {

using nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw FormatError(std::string("field \"") + key + "\" is not an integer");
  return v.get<int>();
}

inline GroundSubset subset_from(int n, const json& arr) {
  if (!arr.is_array()) throw FormatError("elements must be an array");
  if (n < 0 || n > GroundSubset::kMaxUniverse) throw FormatError("ground size out of range");
  GroundSubset s(n);
  for (const auto& e : arr) {
    if (!e.is_number_integer()) throw FormatError("element is not an integer");
    const int x = e.get<int>();
    if (x < 0 || x >= n) throw FormatError("element " + std::to_string(x) + " outside [0, n)");
    if (s.contains(x)) throw FormatError("element " + std::to_string(x) + " repeated");
    s.insert(x);
  }
  return s;
}

}  // namespace detail

inline json to_json(const GroundSubset& s) { return s.elements(); }

inline json to_json(const CyclicFlatLattice& z) {
  json members = json::array();
  for (const auto& m : z.members()) members.push_back({{"elements", m.flat.elements()}, {"rank", m.rank}});
  return {{"kind", "lattice"}, {"n", z.ground_size()}, {"members", members}};
}

inline CyclicFlatLattice lattice_from_json(const json& j) {
  const int n = detail::int_field(j, "n");
  std::vector<LatticeMember> members;
  for (const auto& m : detail::field(j, "members")) {
    members.push_back({detail::subset_from(n, detail::field(m, "elements")), detail::int_field(m, "rank")});
  }
  return CyclicFlatLattice(n, std::move(members));
}

inline json to_json(const SetSystem& sys) {
  json flats = json::array();
  for (const auto& f : sys.flats) flats.push_back({{"elements", f.elements.elements()}, {"rank", f.rank}});
  return {{"kind", "setsystem"}, {"n", sys.n}, {"k", sys.k}, {"flats", flats}};
}

inline SetSystem set_system_from_json(const json& j) {
  SetSystem sys{detail::int_field(j, "n"), detail::int_field(j, "k"), {}};
  for (const auto& f : detail::field(j, "flats")) {
    sys.flats.push_back({detail::subset_from(sys.n, detail::field(f, "elements")), detail::int_field(f, "rank")});
  }
  return sys;
}

inline json to_json(const WeightedGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.gamma});
  return {{"m", g.m()}, {"edges", edges}};
}

inline WeightedGraph graph_from_json(const json& j) {
  std::vector<WeightedEdge> edges;
  for (const auto& e : detail::field(j, "edges")) {
    if (!e.is_array() || e.size() != 3 ||
        !std::all_of(e.begin(), e.end(), [](const json& v) { return v.is_number_integer(); })) {
      throw FormatError("edge must be [i, j, gamma] with integer entries");
    }
    edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
  }
  return WeightedGraph(detail::int_field(j, "m"), std::move(edges));
}

inline json to_json(const FieldMatrix& a) {
  json rows = json::array();
  for (int i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(a.at(i, c));
    rows.push_back(row);
  }
  return {{"kind", "matrix"}, {"p", a.field().modulus()}, {"k", a.rows()}, {"n", a.cols()}, {"rows", rows}};
}

inline FieldMatrix matrix_from_json(const json& j) {
  const int p = detail::int_field(j, "p");
  if (p < 2) throw FormatError("modulus below 2");
  std::vector<std::vector<int64_t>> rows;
  for (const auto& r : detail::field(j, "rows")) {
    if (!r.is_array() || !std::all_of(r.begin(), r.end(), [](const json& v) { return v.is_number_integer(); })) {
      throw FormatError("matrix row is not an array of integers");
    }
    rows.push_back(r.get<std::vector<int64_t>>());
  }
  auto a = FieldMatrix::from_rows(PrimeField(static_cast<uint32_t>(p)), rows);
  if (j.contains("k") && j.at("k").get<int>() != a.rows()) throw FormatError("\"k\" disagrees with row count");
  if (j.contains("n") && !rows.empty() && j.at("n").get<int>() != a.cols()) {
    throw FormatError("\"n\" disagrees with column count");
  }
  return a;
}

/// Lattice input is checked against the axioms; set systems go through the
/// construction and its conditions.
inline Matroid matroid_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("matroid document must be an object");
  if (j.contains("kind") && !j.at("kind").is_string()) throw FormatError("\"kind\" must be a string");
  std::string kind = j.contains("kind") ? j.at("kind").get<std::string>() : "";
  if (kind.empty()) {
    if (j.contains("members")) kind = "lattice";
    else if (j.contains("rows")) kind = "matrix";
    else if (j.contains("flats")) kind = "setsystem";
    else kind = "uniform";
  }
  if (kind == "lattice") return matroid_from_lattice(lattice_from_json(j));
  if (kind == "matrix") return matroid_from_matrix(matrix_from_json(j));
  if (kind == "setsystem") return general_construction(set_system_from_json(j));
  if (kind == "uniform") return uniform_matroid(detail::int_field(j, "n"), detail::int_field(j, "k"));
  throw FormatError("unknown matroid kind \"" + kind + "\"");
}

inline std::string matrix_to_csv(const FieldMatrix& a) {
  std::ostringstream out;
  for (int i = 0; i < a.rows(); ++i) {
    for (int c = 0; c < a.cols(); ++c) out << (c ? "," : "") << a.at(i, c);
    out << "\n";
  }
  return out.str();
}

/// Undirected DOT with gamma as edge labels.
inline std::string to_dot(const WeightedGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.m(); ++v) out << "  " << v << ";\n";
  for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << " [label=\"" << e.gamma << "\"];\n";
  out << "}\n";
  return out.str();
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace lrcm::io
