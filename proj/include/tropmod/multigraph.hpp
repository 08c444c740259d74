#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tropmod/errors.hpp"

namespace tropmod {

/// Sorted list of edge ids of some specific graph.
using EdgeSet = std::vector<int>;

/// Connected finite multigraph with loops and parallel edges, in half-edge
/// form.  Edge i owns half-edges 2i and 2i+1, so the pairing involution is
/// h ^ 1 (fixed-point free by construction).  Loops attach both halves to
/// the same vertex.  Immutable after construction.
class MultiGraph {
 public:
  MultiGraph(int num_vertices, std::vector<std::pair<int, int>> edges)
      : num_vertices_(num_vertices) {
    if (num_vertices <= 0) throw InvalidArgument("graph needs at least one vertex");
    if (edges.empty())
      throw InvalidArgument("edgeless graph rejected (would have genus 0)");
    vertex_of_.reserve(2 * edges.size());
    for (auto [u, w] : edges) {
      if (u < 0 || u >= num_vertices || w < 0 || w >= num_vertices)
        throw InvalidArgument("edge endpoint out of range");
      vertex_of_.push_back(u);
      vertex_of_.push_back(w);
    }
    if (!connected()) throw InvalidArgument("graph must be connected");
  }

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(vertex_of_.size()) / 2; }
  int num_half_edges() const { return static_cast<int>(vertex_of_.size()); }

  int vertex_of(int half) const { return vertex_of_[half]; }
  static int mate(int half) { return half ^ 1; }
  static int edge_of(int half) { return half >> 1; }
  std::pair<int, int> endpoints(int edge) const {
    return {vertex_of_[2 * edge], vertex_of_[2 * edge + 1]};
  }
  bool is_loop(int edge) const {
    return vertex_of_[2 * edge] == vertex_of_[2 * edge + 1];
  }

  /// Number of half-edges at v; a loop contributes 2.
  int valency(int v) const {
    int d = 0;
    for (int x : vertex_of_)
      if (x == v) ++d;
    return d;
  }

  int loops_at(int v) const {
    int c = 0;
    for (int e = 0; e < num_edges(); ++e)
      if (is_loop(e) && vertex_of_[2 * e] == v) ++c;
    return c;
  }

  bool has_loop_at(int v) const { return loops_at(v) > 0; }

  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(num_edges());
    for (int e = 0; e < num_edges(); ++e) out.push_back(endpoints(e));
    return out;
  }

  /// Text interchange format: `v=<k>` then one `e<i>: <u> <w>` line per edge.
  std::string to_text() const {
    std::ostringstream os;
    os << "v=" << num_vertices_ << "\n";
    for (int e = 0; e < num_edges(); ++e)
      os << "e" << e << ": " << vertex_of_[2 * e] << " " << vertex_of_[2 * e + 1] << "\n";
    return os.str();
  }

  static MultiGraph from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int v = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      if (line.rfind("v=", 0) == 0) {
        v = std::stoi(line.substr(2));
      } else if (line[0] == 'e') {
        auto colon = line.find(':');
        if (colon == std::string::npos) throw InvalidArgument("bad edge line: " + line);
        std::istringstream ls(line.substr(colon + 1));
        int a, b;
        if (!(ls >> a >> b)) throw InvalidArgument("bad edge line: " + line);
        edges.emplace_back(a, b);
      } else {
        throw InvalidArgument("unrecognized line: " + line);
      }
    }
    if (v < 0) throw InvalidArgument("missing v= header");
    return MultiGraph(v, std::move(edges));
  }

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.vertex_of_ == b.vertex_of_;
  }

 private:
  bool connected() const {
    std::vector<char> seen(num_vertices_, 0);
    std::vector<int> stack{vertex_of_.empty() ? 0 : vertex_of_[0]};
    seen[stack[0]] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int h = 0; h < num_half_edges(); ++h) {
        if (vertex_of_[h] != v) continue;
        int w = vertex_of_[mate(h)];
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  }

  int num_vertices_;
  std::vector<int> vertex_of_;
};

/// First Betti number e - v + 1 of a connected graph.
inline int genus(const MultiGraph& g) { return g.num_edges() - g.num_vertices() + 1; }

namespace detail {

/// Union-find over vertex ids.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  /// Returns false if x and y were already joined.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[x] = y;
    return true;
  }

 private:
  std::vector<int> parent_;
};

inline void check_edge_set(const MultiGraph& g, const EdgeSet& s) {
  for (int e : s)
    if (e < 0 || e >= g.num_edges()) throw InvalidArgument("edge id outside parent graph");
}

}  // namespace detail

/// True iff the subgraph induced by s is acyclic.  Any loop or parallel pair
/// in s forces false; the empty set is a forest.
inline bool is_forest(const MultiGraph& g, const EdgeSet& s) {
  detail::check_edge_set(g, s);
  detail::DisjointSets ds(g.num_vertices());
  for (int e : s) {
    auto [u, w] = g.endpoints(e);
    if (u == w) return false;
    if (!ds.unite(u, w)) return false;
  }
  return true;
}

/// Exactly the edges whose removal disconnects the graph; loops never qualify.
inline EdgeSet bridges(const MultiGraph& g) {
  EdgeSet out;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (g.is_loop(e)) continue;
    detail::DisjointSets ds(g.num_vertices());
    int parts = g.num_vertices();
    for (int f = 0; f < g.num_edges(); ++f) {
      if (f == e) continue;
      auto [u, w] = g.endpoints(f);
      if (ds.unite(u, w)) --parts;
    }
    if (parts > 1) out.push_back(e);
  }
  return out;
}

/// Stable: no bridges, and no valency-2 vertex except next to a loop.
/// (A valency-1 vertex makes its edge a bridge, so it is covered too.)
inline bool is_stable(const MultiGraph& g) {
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.valency(v) == 2 && !g.has_loop_at(v)) return false;
  return bridges(g).empty();
}

/// Result of contracting a forest: the quotient graph plus the vertex and
/// edge correspondences.  Surviving edges keep their relative order, so
/// filtrations project deterministically.
struct Contraction {
  MultiGraph graph;
  std::vector<int> vertex_map;  // old vertex -> new vertex
  std::vector<int> edge_map;    // old edge -> new edge, -1 if contracted
};

/// Contract the edges in s.  Rejects non-forest s: collapsing a cycle would
/// change the genus.
inline Contraction contract(const MultiGraph& g, const EdgeSet& s) {
  if (!is_forest(g, s)) throw InvalidArgument("contraction requires a forest");
  detail::DisjointSets ds(g.num_vertices());
  for (int e : s) {
    auto [u, w] = g.endpoints(e);
    ds.unite(u, w);
  }
  std::vector<int> vertex_map(g.num_vertices(), -1);
  int next = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int r = ds.find(v);
    if (vertex_map[r] == -1) vertex_map[r] = next++;
    vertex_map[v] = vertex_map[r];
  }
  std::vector<int> edge_map(g.num_edges(), -1);
  std::vector<std::pair<int, int>> edges;
  std::vector<char> contracted(g.num_edges(), 0);
  for (int e : s) contracted[e] = 1;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (contracted[e]) continue;
    edge_map[e] = static_cast<int>(edges.size());
    auto [u, w] = g.endpoints(e);
    edges.emplace_back(vertex_map[u], vertex_map[w]);
  }
  return Contraction{MultiGraph(next, std::move(edges)), std::move(vertex_map),
                     std::move(edge_map)};
}

}  // namespace tropmod
