#pragma once

// JSON and DOT serialization.
//
// Graph format: {"n": 2, "m": 3, "edges": [[[1,1],[2,1]], ...]} with 1-based
// (cluster, position) labels. Edges are written in canonical order, so equal
// graphs serialize to identical bytes.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gtpt/constructions.hpp"
#include "gtpt/graph.hpp"
#include "gtpt/matrix.hpp"
#include "gtpt/spectral.hpp"

namespace gtpt {

using Json = nlohmann::ordered_json;

namespace detail {

inline VertexLabel label_from_json(const Json& j) {
  require(j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer(),
          "vertex label must be [cluster, position]");
  return {j[0].get<int>(), j[1].get<int>()};
}

inline std::vector<LabelPair> edges_from_json(const Json& j) {
  require(j.is_array(), "\"edges\" must be an array");
  std::vector<LabelPair> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    require(e.is_array() && e.size() == 2, "edge must be [[i,k],[j,l]]");
    out.emplace_back(label_from_json(e[0]), label_from_json(e[1]));
  }
  return out;
}

inline int int_field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key) && j[key].is_number_integer(),
          std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

}  // namespace detail

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  detail::require(static_cast<bool>(in), "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  detail::require(static_cast<bool>(out), "cannot write " + path);
  out << text;
}

/// Pretty-printed JSON with a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json to_json(const VertexLabel& v) { return Json::array({v.cluster, v.position}); }

inline Json to_json(const ClusteredGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({to_json(e.u), to_json(e.v)}));
  Json j;
  j["n"] = g.clusters();
  j["m"] = g.cluster_size();
  j["edges"] = std::move(edges);
  return j;
}

inline ClusteredGraph graph_from_json(const Json& j) {
  const int n = detail::int_field(j, "n");
  const int m = detail::int_field(j, "m");
  const auto edges = j.contains("edges") ? detail::edges_from_json(j["edges"]) : std::vector<LabelPair>{};
  return ClusteredGraph(n, m, edges);
}

inline ClusteredGraph parse_graph(std::string_view text) { return graph_from_json(parse_json(text)); }
inline ClusteredGraph read_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

/// Integers that fit in int64 are written as numbers, larger ones as strings.
inline Json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline Json to_json(const Rational& x) {
  if (boost::multiprecision::denominator(x) == 1) return to_json(BigInt(boost::multiprecision::numerator(x)));
  return x.str();
}

inline Json to_json(const CharPoly& p) {
  Json j = Json::array();
  for (const auto& c : p.coefficients) j.push_back(to_json(c));
  return j;
}

template <class T>
Json matrix_to_json(const Matrix<T>& a) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if constexpr (std::is_same_v<T, std::uint8_t>)
        row.push_back(static_cast<int>(a(r, c)));
      else
        row.push_back(to_json(a(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline BinaryMatrix binary_matrix_from_json(const Json& j) {
  detail::require(j.is_array() && !j.empty() && j[0].is_array(), "matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  BinaryMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    detail::require(j[r].is_array() && j[r].size() == cols, "matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      detail::require(j[r][c].is_number_integer(), "matrix entries must be 0 or 1");
      const int v = j[r][c].get<int>();
      detail::require(v == 0 || v == 1, "matrix entries must be 0 or 1");
      a(r, c) = static_cast<std::uint8_t>(v);
    }
  }
  return a;
}

/// DOT with one `rank=same` row per cluster; vertex v_i_j is (i, j).
inline std::string to_dot(const ClusteredGraph& g, std::string_view name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int i = 1; i <= g.clusters(); ++i) {
    os << "  { rank=same;";
    for (int k = 1; k <= g.cluster_size(); ++k) os << " v_" << i << '_' << k << ';';
    os << " }\n";
  }
  for (const auto& e : g.edges())
    os << "  v_" << e.u.cluster << '_' << e.u.position << " -- v_" << e.v.cluster << '_' << e.v.position << ";\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Construction inputs

/// {"sizes": [left, right], "edges": [...]} with cluster 1 = left side.
inline UnbalancedBipartite bipartite_from_json(const Json& j) {
  detail::require(j.is_object() && j.contains("sizes") && j["sizes"].is_array() && j["sizes"].size() == 2,
                  "bipartite input needs \"sizes\": [left, right]");
  UnbalancedBipartite b;
  b.left_size = j["sizes"][0].get<int>();
  b.right_size = j["sizes"][1].get<int>();
  if (j.contains("edges")) b.edges = detail::edges_from_json(j["edges"]);
  return b;
}

struct Procedure1Config {
  std::vector<int> clusters;
  BlockAssignments blocks;
  bool waive_conditions{false};
};

/// {"clusters": [1,2,3], "blocks": [{"p":1,"q":2,"kind":"copy","of":[1,2]},
///  {"p":2,"q":3,"kind":"identity"}], "waive_conditions": false}
inline Procedure1Config procedure1_config_from_json(const Json& j) {
  detail::require(j.is_object() && j.contains("clusters") && j["clusters"].is_array(),
                  "procedure 1 config needs \"clusters\"");
  Procedure1Config cfg;
  for (const auto& c : j["clusters"]) {
    detail::require(c.is_number_integer(), "cluster choices must be integers");
    cfg.clusters.push_back(c.get<int>());
  }
  if (j.contains("blocks")) {
    detail::require(j["blocks"].is_array(), "\"blocks\" must be an array");
    for (const auto& b : j["blocks"]) {
      const int p = detail::int_field(b, "p");
      const int q = detail::int_field(b, "q");
      detail::require(b.contains("kind") && b["kind"].is_string(), "block needs a \"kind\"");
      const auto kind = b["kind"].get<std::string>();
      BlockAssignment a;
      if (kind == "zero") {
        a = BlockAssignment::zero();
      } else if (kind == "identity") {
        a = BlockAssignment::identity();
      } else if (kind == "copy") {
        const auto of = detail::label_from_json(b.value("of", Json()));
        a = BlockAssignment::copy_of(of.cluster, of.position);
      } else {
        detail::fail("unknown block kind \"" + kind + "\"");
      }
      detail::require(cfg.blocks.emplace(std::pair{p, q}, a).second, "block assigned twice");
    }
  }
  cfg.waive_conditions = j.value("waive_conditions", false);
  return cfg;
}

struct TemplateConfig {
  BinaryMatrix matrix;
  int n{2};
  TemplateAssignments blocks;
};

/// {"matrix": [[0,1],[0,0]], "n": 3, "blocks": [{"i":1,"j":2,"kind":"matrix"}, ...]}
inline TemplateConfig template_config_from_json(const Json& j) {
  detail::require(j.is_object() && j.contains("matrix"), "template config needs \"matrix\"");
  TemplateConfig cfg;
  cfg.matrix = binary_matrix_from_json(j["matrix"]);
  cfg.n = detail::int_field(j, "n");
  detail::require(j.contains("blocks") && j["blocks"].is_array(), "template config needs \"blocks\"");
  for (const auto& b : j["blocks"]) {
    const int i = detail::int_field(b, "i");
    const int k = detail::int_field(b, "j");
    const auto kind = b.value("kind", std::string());
    TemplateBlock t{};
    if (kind == "matrix") t = TemplateBlock::matrix;
    else if (kind == "identity") t = TemplateBlock::identity;
    else if (kind == "zero") t = TemplateBlock::zero;
    else detail::fail("unknown template block kind \"" + kind + "\"");
    detail::require(cfg.blocks.emplace(std::pair{i, k}, t).second, "block assigned twice");
  }
  return cfg;
}

}  // namespace gtpt
