#pragma once

// Small named graphs used throughout the tests.

#include "tropmod/filtered_graph.hpp"
#include "tropmod/multigraph.hpp"

namespace fixtures {

using tropmod::EdgeSet;
using tropmod::FilteredGraph;
using tropmod::MultiGraph;

/// One vertex, one loop (the genus-1 stable graph).
inline MultiGraph loop() { return MultiGraph(1, {{0, 0}}); }

/// One vertex with k loops.
inline MultiGraph rose(int k) {
  std::vector<std::pair<int, int>> edges(k, {0, 0});
  return MultiGraph(1, edges);
}

/// Two vertices joined by k parallel edges (k = 3 is the theta graph).
inline MultiGraph banana(int k) {
  std::vector<std::pair<int, int>> edges(k, {0, 1});
  return MultiGraph(2, edges);
}

inline MultiGraph theta() { return banana(3); }

/// Two loop-vertices joined by a single edge (has a bridge).
inline MultiGraph dumbbell() { return MultiGraph(2, {{0, 0}, {0, 1}, {1, 1}}); }

/// Complete graph on four vertices (genus-3, trivalent).
inline MultiGraph k4() {
  return MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

/// Chain of two parallel pairs 0=1=2 plus a chord 0-2; genus 3 with exactly
/// two automorphism classes of spanning trees.
inline MultiGraph fish() {
  return MultiGraph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}});
}

/// k-gon with i loops attached at vertex i (i = 1..k).
inline MultiGraph kgon_with_loops(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  for (int i = 0; i < k; ++i)
    for (int l = 0; l <= i; ++l) edges.emplace_back(i, i);
  return MultiGraph(k, edges);
}

/// Theta graph filtered as ({middle}, {top, bottom}).
inline FilteredGraph theta_split() { return FilteredGraph(theta(), {{0}, {1, 2}}); }

}  // namespace fixtures
