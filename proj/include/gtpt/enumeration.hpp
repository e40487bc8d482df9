#pragma once

// Counting GTPT-cospectral non-isomorphic graphs over the model families.
//
// Every model has one free m×m block between the two base clusters; all
// 2^(m²) assignments are scanned. Models 3a-4c post-process the base graph
// by alternate clustering and Procedure 2 (one new vertex per cluster), and
// 4a-4c then join the new vertices by a path or cycle.
//
// Parameters: for 1a/1b (n = 2) and 2 (n = 3), m is the cluster size. For
// 3a-4c, (m, n) describe the final graph: m = 3 is the final cluster size
// and n is the number of final clusters, i.e. the base cluster size.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gtpt/constructions.hpp"
#include "gtpt/graph.hpp"
#include "gtpt/iso.hpp"
#include "gtpt/spectral.hpp"
#include "gtpt/transpose.hpp"

namespace gtpt {

enum class ModelId { m1a, m1b, m2, m3a, m3b, m3c, m4a, m4b, m4c };
enum class CountingMode { labeled, dedup_graph, dedup_pair };

inline constexpr std::array<ModelId, 9> all_models = {ModelId::m1a, ModelId::m1b, ModelId::m2,
                                                      ModelId::m3a, ModelId::m3b, ModelId::m3c,
                                                      ModelId::m4a, ModelId::m4b, ModelId::m4c};
inline constexpr std::array<CountingMode, 3> all_modes = {CountingMode::labeled, CountingMode::dedup_graph,
                                                          CountingMode::dedup_pair};

inline std::string to_string(ModelId id) {
  static constexpr const char* names[] = {"1a", "1b", "2", "3a", "3b", "3c", "4a", "4b", "4c"};
  return names[static_cast<int>(id)];
}

inline std::optional<ModelId> parse_model(const std::string& s) {
  for (auto id : all_models)
    if (to_string(id) == s) return id;
  return std::nullopt;
}

inline std::string to_string(CountingMode mode) {
  switch (mode) {
    case CountingMode::labeled: return "labeled";
    case CountingMode::dedup_graph: return "dedup-graph";
    case CountingMode::dedup_pair: return "dedup-pair";
  }
  return "?";
}

inline std::optional<CountingMode> parse_mode(const std::string& s) {
  for (auto mode : all_modes)
    if (to_string(mode) == s) return mode;
  return std::nullopt;
}

struct ModelSpec {
  ModelId model{ModelId::m1a};
  int m{2};
  int n{2};
  CountingMode mode{CountingMode::dedup_graph};
  /// Models 3a-4c: let Procedure 2 mirror intra-cluster edges of G_a as well.
  bool mirror_intra_cluster{false};
};

inline bool uses_procedure_2(ModelId id) { return id >= ModelId::m3a; }

/// Base-graph skeleton and pipeline for one model.
struct ModelBase {
  enum class Link { none, path, cycle };

  ModelSpec spec;
  ClusteredGraph skeleton;  // fixed edges of the base graph
  std::vector<std::pair<int, int>> free_slots;
  bool alternate_then_extend{false};
  Link link{Link::none};
};

namespace detail {

inline void add_path(std::vector<LabelPair>& edges, int cluster, int m) {
  for (int k = 1; k < m; ++k) edges.push_back({{cluster, k}, {cluster, k + 1}});
}

inline void add_cycle(std::vector<LabelPair>& edges, int cluster, int m) {
  add_path(edges, cluster, m);
  if (m >= 3) edges.push_back({{cluster, m}, {cluster, 1}});
}

}  // namespace detail

/// Fixed edges and free block slots. Throws on unsupported (model, m, n).
inline ModelBase model_base(const ModelSpec& spec) {
  ModelBase base{spec, {}, {{1, 2}}, false, ModelBase::Link::none};
  std::vector<LabelPair> edges;
  const auto id = spec.model;
  int base_m = spec.m;
  int base_n = 2;

  if (id == ModelId::m1a || id == ModelId::m1b) {
    detail::require(spec.n == 2, "models 1a/1b have n = 2");
  } else if (id == ModelId::m2) {
    detail::require(spec.n == 3, "model 2 has n = 3");
    base_n = 3;
  } else {
    detail::require(spec.m == 3, "models 3a-4c produce clusters of size 3 (m = 3)");
    base_m = spec.n;
    base.alternate_then_extend = true;
  }
  detail::require(base_m >= 1 && base_m <= 8, "unsupported cluster size for the base graph");

  switch (id) {
    case ModelId::m1a:
    case ModelId::m3b:
    case ModelId::m4a:
      detail::add_path(edges, 2, base_m);
      break;
    case ModelId::m1b:
    case ModelId::m3c:
    case ModelId::m4c:
      detail::add_cycle(edges, 2, base_m);
      break;
    case ModelId::m4b:
      detail::add_path(edges, 1, base_m);
      detail::add_path(edges, 2, base_m);
      break;
    case ModelId::m2:
      for (int k = 1; k <= base_m; ++k) edges.push_back({{2, k}, {3, k}});
      break;
    case ModelId::m3a:
      break;
  }
  if (id == ModelId::m4a || id == ModelId::m4b) base.link = ModelBase::Link::path;
  if (id == ModelId::m4c) base.link = ModelBase::Link::cycle;
  base.skeleton = ClusteredGraph(base_n, base_m, edges);
  return base;
}

inline std::uint64_t candidate_count(const ModelBase& base) {
  const auto m = static_cast<unsigned>(base.skeleton.cluster_size());
  const unsigned bits = m * m * static_cast<unsigned>(base.free_slots.size());
  return bits >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << bits;
}

/// Base graph for candidate `index`: bit (s·m² + k·m + l) sets entry (k, l)
/// of free slot s.
inline ClusteredGraph base_candidate(const ModelBase& base, std::uint64_t index) {
  const int m = base.skeleton.cluster_size();
  std::vector<Edge> edges = base.skeleton.edges();
  unsigned bit = 0;
  for (const auto& [p, q] : base.free_slots)
    for (int k = 1; k <= m; ++k)
      for (int l = 1; l <= m; ++l, ++bit)
        if ((index >> bit) & 1U) edges.emplace_back(VertexLabel{p, k}, VertexLabel{q, l});
  return ClusteredGraph(base.skeleton.clusters(), m, edges);
}

/// Final graph H for candidate `index` after the model's pipeline.
inline ClusteredGraph build_candidate(const ModelBase& base, std::uint64_t index) {
  const auto g = base_candidate(base, index);
  if (base.spec.model == ModelId::m2) {
    // Same edges as the skeleton route; built through Procedure 1 with the
    // commuting/normality check waived (arbitrary A is rarely normal).
    ClusteredGraph bipartite(3, g.cluster_size(), [&] {
      std::vector<Edge> e;
      for (const auto& x : g.edges())
        if (x.u.cluster == 1) e.push_back(x);
      return e;
    }());
    BlockAssignments assign{{{1, 2}, BlockAssignment::copy_of(1, 2)}, {{2, 3}, BlockAssignment::identity()}};
    return procedure_1(bipartite, {1, 2, 3}, assign, {.waive_conditions = true});
  }
  if (!base.alternate_then_extend) return g;

  const auto h = procedure_2(alternate_clustering(g),
                             {.waive_conditions = true, .mirror_intra_cluster = base.spec.mirror_intra_cluster});
  if (base.link == ModelBase::Link::none) return h;
  std::vector<Edge> edges = h.edges();
  const int clusters = h.clusters();
  const int added = h.cluster_size();  // the single new position per cluster
  for (int j = 1; j < clusters; ++j) edges.emplace_back(VertexLabel{j, added}, VertexLabel{j + 1, added});
  if (base.link == ModelBase::Link::cycle && clusters >= 3)
    edges.emplace_back(VertexLabel{clusters, added}, VertexLabel{1, added});
  return ClusteredGraph(clusters, h.cluster_size(), edges);
}

/// Everything the CLI and the filter need to know about (G, G^tau).
struct PairVerdict {
  bool cospectral{false};
  bool isomorphic{false};
  bool partially_symmetric{false};
  CharPoly charpoly;
  CharPoly charpoly_transpose;
  std::vector<int> degree_sequence;
  std::vector<int> degree_sequence_transpose;
};

inline PairVerdict verify_pair(const ClusteredGraph& g) {
  const auto t = partial_transpose(g);
  PairVerdict v;
  v.partially_symmetric = (t == g);
  v.charpoly = char_poly(g);
  v.charpoly_transpose = char_poly(t);
  v.cospectral = v.charpoly == v.charpoly_transpose;
  v.degree_sequence = degree_sequence(g);
  v.degree_sequence_transpose = degree_sequence(t);
  v.isomorphic = v.partially_symmetric ||
                 (v.cospectral && v.degree_sequence == v.degree_sequence_transpose &&
                  find_isomorphism(to_simple(g), to_simple(t)).has_value());
  return v;
}

struct EnumerationOptions {
  unsigned jobs{1};
  std::uint64_t max_candidates{std::uint64_t{1} << 24};
};

struct EnumerationReport {
  ModelSpec spec;
  std::uint64_t kappa{0};  // under spec.mode
  std::uint64_t kappa_labeled{0};
  std::uint64_t kappa_dedup_graph{0};
  std::uint64_t kappa_dedup_pair{0};
  std::uint64_t candidates_scanned{0};
  /// Representative (G, G^tau) pairs for spec.mode, in candidate order.
  std::vector<std::pair<ClusteredGraph, ClusteredGraph>> pairs;
  double elapsed_seconds{0.0};

  std::uint64_t kappa_for(CountingMode mode) const {
    switch (mode) {
      case CountingMode::labeled: return kappa_labeled;
      case CountingMode::dedup_graph: return kappa_dedup_graph;
      case CountingMode::dedup_pair: return kappa_dedup_pair;
    }
    return 0;
  }
};

namespace detail {

struct KeptCandidate {
  std::uint64_t index;
  std::string form;       // canonical form of G
  std::string pair_form;  // canonical form of the unordered pair {G, G^tau}
};

// Cheap-to-expensive: partial symmetry, exact char-poly, degree sequences,
// isomorphism search.
inline std::optional<KeptCandidate> screen(const ModelBase& base, std::uint64_t index) {
  const auto g = build_candidate(base, index);
  const auto t = partial_transpose(g);
  if (t == g) return std::nullopt;
  const auto sg = to_simple(g);
  const auto st = to_simple(t);
  if (char_poly(sg.nbrs) != char_poly(st.nbrs)) return std::nullopt;
  if (sg.degree_sequence() == st.degree_sequence() && find_isomorphism(sg, st)) return std::nullopt;
  auto fg = canonical_form(sg);
  auto ft = canonical_form(st);
  std::string pair = fg < ft ? fg + ft : ft + fg;
  return KeptCandidate{index, std::move(fg), std::move(pair)};
}

}  // namespace detail

/// Scans every free-block assignment. Work is split into contiguous index
/// ranges, one per job, and merged in index order, so the report does not
/// depend on `jobs`.
inline EnumerationReport enumerate_kappa(const ModelSpec& spec, const EnumerationOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  const auto base = model_base(spec);
  const auto total = candidate_count(base);
  detail::require(total <= options.max_candidates,
                  "search space of " + std::to_string(total) + " candidates exceeds the guard of " +
                      std::to_string(options.max_candidates));

  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::uint64_t>(1, total))));
  std::vector<std::vector<detail::KeptCandidate>> kept(jobs);
  auto work = [&](unsigned job) {
    const std::uint64_t lo = total * job / jobs;
    const std::uint64_t hi = total * (job + 1) / jobs;
    for (std::uint64_t i = lo; i < hi; ++i)
      if (auto k = detail::screen(base, i)) kept[job].push_back(std::move(*k));
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }

  EnumerationReport report;
  report.spec = spec;
  report.candidates_scanned = total;
  std::set<std::string> graphs, pairs;
  for (const auto& chunk : kept)
    for (const auto& k : chunk) {
      ++report.kappa_labeled;
      const bool new_graph = graphs.insert(k.form).second;
      const bool new_pair = pairs.insert(k.pair_form).second;
      const bool listed = spec.mode == CountingMode::labeled || (spec.mode == CountingMode::dedup_graph && new_graph) ||
                          (spec.mode == CountingMode::dedup_pair && new_pair);
      if (listed) {
        auto g = build_candidate(base, k.index);
        auto t = partial_transpose(g);
        report.pairs.emplace_back(std::move(g), std::move(t));
      }
    }
  report.kappa_dedup_graph = graphs.size();
  report.kappa_dedup_pair = pairs.size();
  report.kappa = report.kappa_for(spec.mode);
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace gtpt
