#pragma once

#include <utility>
#include <vector>

#include "tropmod/multigraph.hpp"

namespace tropmod {

/// A multigraph together with an ordered set partition of its edges (the
/// depth-m filtration).  Blocks are non-empty and jointly cover every edge.
class FilteredGraph {
 public:
  FilteredGraph(MultiGraph g, std::vector<EdgeSet> blocks)
      : graph_(std::move(g)), blocks_(std::move(blocks)) {
    block_of_.assign(graph_.num_edges(), -1);
    for (size_t b = 0; b < blocks_.size(); ++b) {
      if (blocks_[b].empty()) throw InvalidArgument("filtration block may not be empty");
      for (int e : blocks_[b]) {
        if (e < 0 || e >= graph_.num_edges() || block_of_[e] != -1)
          throw InvalidArgument("filtration is not a partition of the edge set");
        block_of_[e] = static_cast<int>(b);
      }
      std::sort(blocks_[b].begin(), blocks_[b].end());
    }
    for (int e = 0; e < graph_.num_edges(); ++e)
      if (block_of_[e] == -1) throw InvalidArgument("filtration misses an edge");
  }

  /// Depth-1 filtration (single block holding every edge).
  static FilteredGraph trivial(MultiGraph g) {
    EdgeSet all(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) all[e] = e;
    return FilteredGraph(std::move(g), {std::move(all)});
  }

  const MultiGraph& graph() const { return graph_; }
  const std::vector<EdgeSet>& blocks() const { return blocks_; }
  int depth() const { return static_cast<int>(blocks_.size()); }
  int block_of(int edge) const { return block_of_[edge]; }

  /// Filtered by forests: the union of all blocks but the last is acyclic.
  /// (Equivalently every proper prefix union is; depth 1 counts as true.)
  bool filtered_by_forests() const {
    EdgeSet prefix;
    for (int b = 0; b + 1 < depth(); ++b)
      prefix.insert(prefix.end(), blocks_[b].begin(), blocks_[b].end());
    return is_forest(graph_, prefix);
  }

 private:
  MultiGraph graph_;
  std::vector<EdgeSet> blocks_;
  std::vector<int> block_of_;
};

/// Merge blocks i and i+1 (0-based).  The graph is untouched.
inline FilteredGraph merge_blocks(const FilteredGraph& fg, int i) {
  if (i < 0 || i + 1 >= fg.depth()) throw InvalidArgument("merge index out of range");
  std::vector<EdgeSet> blocks;
  blocks.reserve(fg.depth() - 1);
  for (int b = 0; b < fg.depth(); ++b) {
    if (b == i + 1) {
      blocks.back().insert(blocks.back().end(), fg.blocks()[b].begin(), fg.blocks()[b].end());
    } else {
      blocks.push_back(fg.blocks()[b]);
    }
  }
  return FilteredGraph(fg.graph(), std::move(blocks));
}

struct ShrinkResult {
  FilteredGraph fg;             // (G/E1, (E2,...,Em)) with edges renumbered
  std::vector<int> vertex_map;  // old vertex -> new vertex
  std::vector<int> edge_map;    // old edge -> new edge, -1 on the first block
};

/// Shrink the first block: contract its edges and drop it from the
/// filtration.  Requires depth >= 2 and a forest first block.
inline ShrinkResult shrink_first_block(const FilteredGraph& fg) {
  if (fg.depth() < 2) throw InvalidArgument("cannot shrink a depth-1 filtration");
  Contraction c = contract(fg.graph(), fg.blocks()[0]);
  std::vector<EdgeSet> blocks;
  blocks.reserve(fg.depth() - 1);
  for (int b = 1; b < fg.depth(); ++b) {
    EdgeSet mapped;
    mapped.reserve(fg.blocks()[b].size());
    for (int e : fg.blocks()[b]) mapped.push_back(c.edge_map[e]);
    blocks.push_back(std::move(mapped));
  }
  return ShrinkResult{FilteredGraph(std::move(c.graph), std::move(blocks)),
                      std::move(c.vertex_map), std::move(c.edge_map)};
}

}  // namespace tropmod
