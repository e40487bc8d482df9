#pragma once

// Isomorphism of the underlying unlabeled graphs (cluster structure ignored).
//
// Both entry points use colour refinement with "colour = first position of
// the cell in the ordered partition", so a discrete colouring is directly a
// canonical relabeling.
//   * canonical_form: individualization-refinement search keeping the
//     lexicographically smallest permuted adjacency, with orbit pruning by
//     automorphisms discovered at equal leaves.
//   * are_isomorphic: joint refinement of G ⊔ H, individualizing one vertex
//     of G against every same-coloured vertex of H.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gtpt/graph.hpp"
#include "gtpt/spectral.hpp"

namespace gtpt {

/// Unlabeled simple graph by neighbor lists.
struct SimpleGraph {
  std::vector<std::vector<int>> nbrs;

  int order() const noexcept { return static_cast<int>(nbrs.size()); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : nbrs) twice += row.size();
    return twice / 2;
  }

  std::vector<int> degree_sequence() const {
    std::vector<int> d;
    d.reserve(nbrs.size());
    for (const auto& row : nbrs) d.push_back(static_cast<int>(row.size()));
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
  }
};

inline SimpleGraph to_simple(const ClusteredGraph& g) { return {g.neighbor_lists()}; }

/// Builds a graph on `order` vertices from 0-based edge pairs.
inline SimpleGraph simple_from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
  SimpleGraph g{std::vector<std::vector<int>>(static_cast<std::size_t>(order))};
  for (auto [a, b] : edges) {
    g.nbrs[static_cast<std::size_t>(a)].push_back(b);
    g.nbrs[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& row : g.nbrs) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return g;
}

/// Graph with vertices relabeled by `perm` (old vertex v becomes perm[v]).
inline SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm) {
  SimpleGraph out{std::vector<std::vector<int>>(g.nbrs.size())};
  for (std::size_t v = 0; v < g.nbrs.size(); ++v)
    for (int u : g.nbrs[v]) out.nbrs[static_cast<std::size_t>(perm[v])].push_back(perm[static_cast<std::size_t>(u)]);
  for (auto& row : out.nbrs) std::sort(row.begin(), row.end());
  return out;
}

namespace detail {

// Equitable refinement. Cells are ordered; the colour of a vertex is the
// index of the first slot of its cell. Splits order vertices within a cell
// by the sorted multiset of neighbour colours, which depends only on
// colours, so the result is invariant under relabeling.
inline void refine(const std::vector<std::vector<int>>& nbrs, std::vector<int>& colour) {
  const std::size_t n = nbrs.size();
  std::vector<std::vector<int>> sig(n);
  std::vector<int> order(n);
  std::size_t cells = 0;
  {
    auto sorted = colour;
    std::sort(sorted.begin(), sorted.end());
    cells = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }
  while (true) {
    for (std::size_t v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(colour[v]);
      for (int u : nbrs[v]) s.push_back(colour[static_cast<std::size_t>(u)]);
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)]; });
    std::size_t new_cells = 0;
    for (std::size_t p = 0; p < n; ++p) {
      const auto v = static_cast<std::size_t>(order[p]);
      if (p == 0 || sig[v] != sig[static_cast<std::size_t>(order[p - 1])]) {
        ++new_cells;
        colour[v] = static_cast<int>(p);
      } else {
        colour[v] = colour[static_cast<std::size_t>(order[p - 1])];
      }
    }
    if (new_cells == cells) return;
    cells = new_cells;
  }
}

// Vertex `v` keeps colour c, the rest of its cell moves to c + 1.
inline void individualize(std::vector<int>& colour, int v) {
  const int c = colour[static_cast<std::size_t>(v)];
  for (std::size_t u = 0; u < colour.size(); ++u)
    if (colour[u] == c && static_cast<int>(u) != v) colour[u] = c + 1;
}

class Canonizer {
 public:
  explicit Canonizer(const SimpleGraph& g) : g_(g), n_(g.nbrs.size()) {}

  std::string run() {
    std::vector<int> colour(n_, 0);
    search(colour);
    std::string out;
    out.push_back(static_cast<char>(n_ & 0xff));
    out.push_back(static_cast<char>((n_ >> 8) & 0xff));
    for (auto word : best_) out.append(reinterpret_cast<const char*>(&word), sizeof word);
    return out;
  }

 private:
  // Upper-triangle adjacency of the relabeled graph, packed 64 bits per word.
  std::vector<std::uint64_t> certificate(const std::vector<int>& pos) const {
    std::vector<std::uint64_t> bits((n_ * n_ + 63) / 64, 0);
    for (std::size_t v = 0; v < n_; ++v)
      for (int u : g_.nbrs[v]) {
        const auto a = static_cast<std::size_t>(pos[v]);
        const auto b = static_cast<std::size_t>(pos[static_cast<std::size_t>(u)]);
        if (a < b) {
          const std::size_t bit = a * n_ + b;
          bits[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
        }
      }
    return bits;
  }

  std::vector<int> target_cell(const std::vector<int>& colour) const {
    std::vector<int> count(n_, 0);
    for (int c : colour) ++count[static_cast<std::size_t>(c)];
    int best = -1;
    for (std::size_t c = 0; c < n_; ++c)
      if (count[c] > 1 && (best < 0 || count[c] < count[static_cast<std::size_t>(best)])) best = static_cast<int>(c);
    std::vector<int> cell;
    if (best < 0) return cell;
    for (std::size_t v = 0; v < n_; ++v)
      if (colour[v] == best) cell.push_back(static_cast<int>(v));
    return cell;
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }

  // Orbits of the group generated by the known automorphisms that fix the
  // current prefix pointwise.
  std::vector<int> orbits() const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix_.begin(), prefix_.end(), [&](int v) { return gamma[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      for (std::size_t v = 0; v < n_; ++v) {
        int a = find(parent, static_cast<int>(v));
        int b = find(parent, gamma[v]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (std::size_t v = 0; v < n_; ++v) parent[v] = find(parent, static_cast<int>(v));
    return parent;
  }

  void search(std::vector<int> colour) {
    refine(g_.nbrs, colour);
    const auto cell = target_cell(colour);
    if (cell.empty()) {
      leaf(colour);
      return;
    }
    std::vector<int> explored;
    for (int v : cell) {
      if (!explored.empty()) {
        const auto orbit = orbits();
        const int rep = orbit[static_cast<std::size_t>(v)];
        if (std::any_of(explored.begin(), explored.end(), [&](int w) { return orbit[static_cast<std::size_t>(w)] == rep; })) continue;
      }
      explored.push_back(v);
      auto child = colour;
      individualize(child, v);
      prefix_.push_back(v);
      search(std::move(child));
      prefix_.pop_back();
    }
  }

  void leaf(const std::vector<int>& pos) {
    auto cert = certificate(pos);
    if (!have_best_ || cert < best_) {
      best_ = std::move(cert);
      best_pos_ = pos;
      have_best_ = true;
      return;
    }
    if (cert == best_) {
      // gamma = best^{-1} o leaf maps this leaf's labeling onto the best one.
      std::vector<int> inverse_best(n_);
      for (std::size_t v = 0; v < n_; ++v) inverse_best[static_cast<std::size_t>(best_pos_[v])] = static_cast<int>(v);
      std::vector<int> gamma(n_);
      for (std::size_t v = 0; v < n_; ++v) gamma[v] = inverse_best[static_cast<std::size_t>(pos[v])];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  const SimpleGraph& g_;
  std::size_t n_;
  bool have_best_{false};
  std::vector<std::uint64_t> best_;
  std::vector<int> best_pos_;
  std::vector<std::vector<int>> automorphisms_;
  std::vector<int> prefix_;
};

class JointMatcher {
 public:
  JointMatcher(const SimpleGraph& g, const SimpleGraph& h) : n_(g.nbrs.size()), joint_(2 * n_) {
    for (std::size_t v = 0; v < n_; ++v) {
      joint_[v] = g.nbrs[v];
      for (int u : h.nbrs[v]) joint_[n_ + v].push_back(u + static_cast<int>(n_));
    }
  }

  std::optional<std::vector<int>> run() {
    std::vector<int> colour(2 * n_, 0);
    return search(std::move(colour));
  }

 private:
  std::optional<std::vector<int>> search(std::vector<int> colour) {
    refine(joint_, colour);
    std::vector<int> g_count(2 * n_, 0), h_count(2 * n_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      ++g_count[static_cast<std::size_t>(colour[v])];
      ++h_count[static_cast<std::size_t>(colour[n_ + v])];
    }
    if (g_count != h_count) return std::nullopt;

    int target = -1;
    for (std::size_t c = 0; c < 2 * n_; ++c)
      if (g_count[c] > 1 && (target < 0 || g_count[c] < g_count[static_cast<std::size_t>(target)])) target = static_cast<int>(c);

    if (target < 0) {
      std::vector<int> map(n_, -1);
      std::vector<int> h_of_colour(2 * n_, -1);
      for (std::size_t v = 0; v < n_; ++v) h_of_colour[static_cast<std::size_t>(colour[n_ + v])] = static_cast<int>(v);
      for (std::size_t v = 0; v < n_; ++v) map[v] = h_of_colour[static_cast<std::size_t>(colour[v])];
      if (preserves_edges(map)) return map;
      return std::nullopt;
    }

    int u = -1;
    for (std::size_t v = 0; v < n_ && u < 0; ++v)
      if (colour[v] == target) u = static_cast<int>(v);
    for (std::size_t w = n_; w < 2 * n_; ++w) {
      if (colour[w] != target) continue;
      auto child = colour;
      const int c = target;
      for (auto& x : child)
        if (x == c) x = c + 1;
      child[static_cast<std::size_t>(u)] = c;
      child[w] = c;
      if (auto found = search(std::move(child))) return found;
    }
    return std::nullopt;
  }

  bool preserves_edges(const std::vector<int>& map) const {
    for (std::size_t v = 0; v < n_; ++v) {
      std::vector<int> image;
      for (int u : joint_[v]) image.push_back(map[static_cast<std::size_t>(u)] + static_cast<int>(n_));
      std::sort(image.begin(), image.end());
      if (image != joint_[n_ + static_cast<std::size_t>(map[v])]) return false;
    }
    return true;
  }

  std::size_t n_;
  std::vector<std::vector<int>> joint_;
};

}  // namespace detail

/// Byte string equal for two graphs iff they are isomorphic.
inline std::string canonical_form(const SimpleGraph& g) { return detail::Canonizer(g).run(); }
inline std::string canonical_form(const ClusteredGraph& g) { return canonical_form(to_simple(g)); }

/// Isomorphism search without invariant pre-filters. Returns the vertex map
/// G -> H when one exists.
inline std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() != h.order()) return std::nullopt;
  return detail::JointMatcher(g, h).run();
}

/// Pre-filters on vertex count, edge count, degree sequence and exact
/// characteristic polynomial before searching.
inline bool are_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() != h.order()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  if (char_poly(g.nbrs) != char_poly(h.nbrs)) return false;
  return find_isomorphism(g, h).has_value();
}

inline bool are_isomorphic(const ClusteredGraph& g, const ClusteredGraph& h) {
  return are_isomorphic(to_simple(g), to_simple(h));
}

}  // namespace gtpt
