#pragma once

#include <functional>
#include <map>
#include <vector>

#include "tropmod/isomorphism.hpp"

namespace tropmod {

/// Isomorphism class of a stable graph, carried by a canonically labeled
/// representative.
struct StableClass {
  MultiGraph representative;
  CanonicalForm form;
  int genus = 0;
};

/// Isomorphism class of a filtered-by-forests stable graph.
struct FilteredClass {
  FilteredGraph representative;  // canonically labeled
  CanonicalForm form;
  int depth = 1;
};

namespace detail {

/// All multisets d_1 >= ... >= d_v >= min_degree with given sum.
inline void degree_multisets(int v, int sum, int min_degree, int max_first, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
  if (v == 0) {
    if (sum == 0) out.push_back(cur);
    return;
  }
  for (int d = std::min(sum - min_degree * (v - 1), max_first); d >= min_degree; --d) {
    cur.push_back(d);
    degree_multisets(v - 1, sum - d, min_degree, d, cur, out);
    cur.pop_back();
  }
}

/// Enumerate labeled multigraphs with the given degree vector; for each,
/// invoke the sink.  Loops count twice toward their vertex's degree.
class LabeledGraphEnumerator {
 public:
  LabeledGraphEnumerator(std::vector<int> degrees, std::function<void(const MultiGraph&)> sink)
      : deg_(std::move(degrees)), remaining_(deg_), sink_(std::move(sink)) {}

  void run() { place_vertex(0); }

 private:
  void place_vertex(int i) {
    int v = static_cast<int>(deg_.size());
    if (i == v) {
      emit();
      return;
    }
    choose_loops(i);
  }

  void choose_loops(int i) {
    for (int l = remaining_[i] / 2; l >= 0; --l) {
      remaining_[i] -= 2 * l;
      for (int t = 0; t < l; ++t) edges_.emplace_back(i, i);
      choose_pair(i, i + 1);
      for (int t = 0; t < l; ++t) edges_.pop_back();
      remaining_[i] += 2 * l;
    }
  }

  void choose_pair(int i, int j) {
    int v = static_cast<int>(deg_.size());
    if (j == v) {
      if (remaining_[i] == 0) place_vertex(i + 1);
      return;
    }
    int cap = std::min(remaining_[i], remaining_[j]);
    for (int m = cap; m >= 0; --m) {
      remaining_[i] -= m;
      remaining_[j] -= m;
      for (int t = 0; t < m; ++t) edges_.emplace_back(i, j);
      choose_pair(i, j + 1);
      for (int t = 0; t < m; ++t) edges_.pop_back();
      remaining_[i] += m;
      remaining_[j] += m;
    }
  }

  void emit() {
    if (edges_.empty()) return;
    // Connectivity, cheaply, before constructing.
    int v = static_cast<int>(deg_.size());
    DisjointSets ds(v);
    int parts = v;
    for (auto [a, b] : edges_)
      if (a != b && ds.unite(a, b)) --parts;
    if (parts != 1) return;
    sink_(MultiGraph(v, edges_));
  }

  std::vector<int> deg_;
  std::vector<int> remaining_;
  std::vector<std::pair<int, int>> edges_;
  std::function<void(const MultiGraph&)> sink_;
};

}  // namespace detail

/// All isomorphism classes of stable graphs of genus g, sorted by canonical
/// form.  Uses |V| <= 2g-2 for g >= 2 (every vertex has valency >= 3 there)
/// and |V| = 1 for g = 1.
inline std::vector<StableClass> stable_graphs(int g) {
  if (g < 1) throw InvalidArgument("genus must be >= 1");
  std::map<CanonicalForm, MultiGraph> classes;
  auto consider = [&](const MultiGraph& graph) {
    if (!is_stable(graph)) return;
    CanonicalResult c = canonicalize(FilteredGraph::trivial(graph));
    classes.emplace(c.form, c.canon.graph());
  };
  int max_v = (g == 1) ? 1 : 2 * g - 2;
  int min_degree = (g == 1) ? 2 : 3;
  for (int v = 1; v <= max_v; ++v) {
    int e = v + g - 1;
    std::vector<std::vector<int>> sequences;
    std::vector<int> cur;
    detail::degree_multisets(v, 2 * e, min_degree, 2 * e, cur, sequences);
    for (const auto& seq : sequences) detail::LabeledGraphEnumerator(seq, consider).run();
  }
  std::vector<StableClass> out;
  for (auto& [form, graph] : classes) out.push_back(StableClass{graph, form, g});
  return out;
}

namespace detail {

/// Ordered set partitions of `items` into non-empty blocks.
inline void ordered_partitions(const std::vector<int>& items, std::vector<EdgeSet>& cur,
                               const std::function<void(const std::vector<EdgeSet>&)>& sink) {
  if (items.empty()) {
    sink(cur);
    return;
  }
  int n = static_cast<int>(items.size());
  // First block = any non-empty subset containing items[0]?  No: ordered set
  // partitions distinguish all blocks, so the first block ranges over all
  // non-empty subsets.
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    EdgeSet first, rest;
    for (int i = 0; i < n; ++i)
      ((mask >> i) & 1 ? first : rest).push_back(items[i]);
    cur.push_back(first);
    ordered_partitions(rest, cur, sink);
    cur.pop_back();
  }
}

}  // namespace detail

/// All isomorphism classes of filtered-by-forests structures on a stable
/// class (every depth), deduplicated by filtered canonical form and sorted
/// by (depth, form).  The depth-1 structure is always present.
inline std::vector<FilteredClass> filtered_structures(const StableClass& cls) {
  const MultiGraph& g = cls.representative;
  int e = g.num_edges();
  std::map<std::pair<int, CanonicalForm>, FilteredGraph> found;

  auto consider = [&](std::vector<EdgeSet> blocks) {
    FilteredGraph fg(g, std::move(blocks));
    CanonicalResult c = canonicalize(fg);
    found.emplace(std::make_pair(fg.depth(), c.form), c.canon);
  };

  for (unsigned mask = 0; mask < (1u << e); ++mask) {
    EdgeSet forest;
    for (int i = 0; i < e; ++i)
      if ((mask >> i) & 1) forest.push_back(i);
    if (static_cast<int>(forest.size()) >= g.num_vertices()) continue;  // too big for a forest
    if (static_cast<int>(forest.size()) == e) continue;                 // last block non-empty
    if (!is_forest(g, forest)) continue;
    EdgeSet rest;
    for (int i = 0; i < e; ++i)
      if (!((mask >> i) & 1)) rest.push_back(i);
    if (forest.empty()) {
      consider({rest});
      continue;
    }
    std::vector<EdgeSet> cur;
    detail::ordered_partitions(forest, cur, [&](const std::vector<EdgeSet>& parts) {
      std::vector<EdgeSet> blocks = parts;
      blocks.push_back(rest);
      consider(std::move(blocks));
    });
  }

  std::vector<FilteredClass> out;
  for (auto& [key, fg] : found) out.push_back(FilteredClass{fg, key.second, key.first});
  return out;
}

/// Number of Aut-orbits of spanning trees of the representative (two trees
/// identified iff an automorphism carries one to the other).  A one-vertex
/// graph has the empty tree only, giving 1.
inline int spanning_forest_classes(const StableClass& cls) {
  const MultiGraph& g = cls.representative;
  if (g.num_vertices() == 1) return 1;
  int e = g.num_edges();
  int want = g.num_vertices() - 1;
  std::map<CanonicalForm, int> orbits;
  for (unsigned mask = 0; mask < (1u << e); ++mask) {
    EdgeSet tree;
    for (int i = 0; i < e; ++i)
      if ((mask >> i) & 1) tree.push_back(i);
    if (static_cast<int>(tree.size()) != want) continue;
    if (!is_forest(g, tree)) continue;
    EdgeSet rest;
    for (int i = 0; i < e; ++i)
      if (!((mask >> i) & 1)) rest.push_back(i);
    FilteredGraph fg(g, {tree, rest});
    orbits[canonical_form(fg)]++;
  }
  return static_cast<int>(orbits.size());
}

}  // namespace tropmod
