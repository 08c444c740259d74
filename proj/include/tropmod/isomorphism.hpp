#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "tropmod/filtered_graph.hpp"

namespace tropmod {

/// Total-order key with: equal keys iff the filtered graphs are isomorphic
/// (blockwise, preserving block indices).  Relabeling-invariant.
struct CanonicalForm {
  std::vector<int> key;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) = default;
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) { return a.key < b.key; }

  /// Short stable rendering (FNV-1a over the key), used for cache file names
  /// and CLI identifiers.  Equality decisions always use the full key.
  std::string hex() const {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : key) {
      std::uint64_t x = static_cast<std::uint64_t>(static_cast<std::int64_t>(v));
      for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xff;
        h *= 1099511628211ull;
      }
    }
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
      s[i] = digits[h & 0xf];
      h >>= 4;
    }
    return s;
  }
};

/// Automorphism of a (filtered) graph: a permutation of half-edges commuting
/// with the pairing involution, together with the vertex permutation it
/// induces.  Block membership is preserved by construction.
struct Automorphism {
  std::vector<int> half;
  std::vector<int> vertex;

  int apply_half(int h) const { return half[h]; }
  int apply_vertex(int v) const { return vertex[v]; }
  int apply_edge(int e) const { return half[2 * e] / 2; }
  bool is_identity() const {
    for (size_t i = 0; i < half.size(); ++i)
      if (half[i] != static_cast<int>(i)) return false;
    return true;
  }
  /// True iff the edge maps to itself with its two halves exchanged.
  bool flips_edge(int e) const { return half[2 * e] == 2 * e + 1; }

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.half == b.half;
  }
  friend bool operator<(const Automorphism& a, const Automorphism& b) {
    return a.half < b.half;
  }
};

inline Automorphism compose(const Automorphism& a, const Automorphism& b) {
  // (a then b), i.e. (b ∘ a)
  Automorphism r;
  r.half.resize(a.half.size());
  r.vertex.resize(a.vertex.size());
  for (size_t h = 0; h < a.half.size(); ++h) r.half[h] = b.half[a.half[h]];
  for (size_t v = 0; v < a.vertex.size(); ++v) r.vertex[v] = b.vertex[a.vertex[v]];
  return r;
}

struct AutGroup {
  std::vector<Automorphism> elements;  // identity first
  std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }
};

namespace detail {

/// Search state for the canonical vertex ordering.  The key is built one
/// position at a time; every variable-length section is length-prefixed, so
/// two candidate blocks for the same position compare the same way the full
/// keys would.  The search keeps exactly the prefix-minimal branches, hence
/// every surviving leaf carries the same (minimal) key and the set of leaves
/// is the set of canonical labelings.
class CanonSearch {
 public:
  explicit CanonSearch(const FilteredGraph& fg) : fg_(fg), k_(fg.graph().num_vertices()) {
    const MultiGraph& g = fg.graph();
    between_.assign(k_, std::vector<std::vector<int>>(k_));
    loops_.assign(k_, {});
    for (int e = 0; e < g.num_edges(); ++e) {
      auto [u, w] = g.endpoints(e);
      if (u == w)
        loops_[u].push_back(fg.block_of(e));
      else {
        between_[u][w].push_back(fg.block_of(e));
        between_[w][u].push_back(fg.block_of(e));
      }
    }
    for (auto& l : loops_) std::sort(l.begin(), l.end());
    for (auto& row : between_)
      for (auto& cell : row) std::sort(cell.begin(), cell.end());
    inv_.resize(k_);
    for (int v = 0; v < k_; ++v) {
      std::vector<int>& iv = inv_[v];
      iv.push_back(g.valency(v));
      iv.push_back(static_cast<int>(loops_[v].size()));
      iv.insert(iv.end(), loops_[v].begin(), loops_[v].end());
      std::vector<int> nb;
      for (int u = 0; u < k_; ++u)
        nb.insert(nb.end(), between_[v][u].begin(), between_[v][u].end());
      std::sort(nb.begin(), nb.end());
      iv.push_back(static_cast<int>(nb.size()));
      iv.insert(iv.end(), nb.begin(), nb.end());
    }
  }

  void run() {
    placed_.clear();
    used_.assign(k_, 0);
    current_.clear();
    best_.clear();
    have_best_ = false;
    best_gen_ = 0;
    orderings_.clear();
    recurse(true);
    key_ = {k_, fg_.graph().num_edges(), fg_.depth()};
    key_.insert(key_.end(), best_.begin(), best_.end());
  }

  const std::vector<int>& key() const { return key_; }
  const std::vector<std::vector<int>>& orderings() const { return orderings_; }

 private:
  std::vector<int> position_block(int v) const {
    std::vector<int> blk = inv_[v];
    for (int q : placed_) {
      const auto& cell = between_[q][v];
      blk.push_back(static_cast<int>(cell.size()));
      blk.insert(blk.end(), cell.begin(), cell.end());
    }
    return blk;
  }

  // -1 / 0 / 1: the segment against best_ at the given offset.  Complete
  // keys of one graph all have the same length, so a partial key never runs
  // past a complete one while comparing equal.
  int compare_segment(const std::vector<int>& blk, size_t offset) const {
    for (size_t i = 0; i < blk.size(); ++i) {
      if (offset + i >= best_.size())
        throw InternalCheckFailure("canonical key length anomaly");
      if (blk[i] != best_[offset + i]) return blk[i] < best_[offset + i] ? -1 : 1;
    }
    return 0;
  }

  /// `tight`: the current prefix equals the best key's prefix.  Otherwise it
  /// is strictly smaller (or no best exists yet) and the subtree will
  /// replace the best at its first leaf.
  void recurse(bool tight) {
    if (static_cast<int>(placed_.size()) == k_) {
      if (!have_best_) {
        best_ = current_;
        have_best_ = true;
        orderings_.assign(1, placed_);
      } else if (tight) {
        orderings_.push_back(placed_);
      } else {
        best_ = current_;
        ++best_gen_;
        orderings_.assign(1, placed_);
      }
      return;
    }
    // Only candidates with the minimal position block can start a minimal
    // completion from this node; ties may still diverge below and are
    // resolved by comparison against the best key.
    std::vector<std::pair<std::vector<int>, int>> cands;
    for (int v = 0; v < k_; ++v)
      if (!used_[v]) cands.emplace_back(position_block(v), v);
    const std::vector<int>* min_blk = &cands[0].first;
    for (const auto& c : cands)
      if (c.first < *min_blk) min_blk = &c.first;

    std::uint64_t my_gen = best_gen_;
    for (const auto& [blk, v] : cands) {
      if (blk != *min_blk) continue;
      if (best_gen_ != my_gen) {
        // A descendant replaced the best key; the new best extends our
        // current prefix, so we are tight again.
        tight = true;
        my_gen = best_gen_;
      }
      bool child_tight = tight;
      if (have_best_ && tight) {
        int c = compare_segment(blk, current_.size());
        if (c > 0) continue;
        child_tight = (c == 0);
      }
      size_t keep = current_.size();
      current_.insert(current_.end(), blk.begin(), blk.end());
      placed_.push_back(v);
      used_[v] = 1;
      recurse(have_best_ ? child_tight : true);
      used_[v] = 0;
      placed_.pop_back();
      current_.resize(keep);
    }
  }

  const FilteredGraph& fg_;
  int k_;
  std::vector<std::vector<std::vector<int>>> between_;  // [u][v] sorted blocks
  std::vector<std::vector<int>> loops_;                 // [v] sorted blocks
  std::vector<std::vector<int>> inv_;

  std::vector<int> placed_;
  std::vector<char> used_;
  std::vector<int> current_;
  std::vector<int> best_;
  bool have_best_ = false;
  std::uint64_t best_gen_ = 0;
  std::vector<int> key_;
  std::vector<std::vector<int>> orderings_;  // position -> vertex, all canonical
};

}  // namespace detail

/// Canonical form plus a canonically labeled representative and the witness
/// maps into it.
struct CanonicalResult {
  CanonicalForm form;
  FilteredGraph canon;
  std::vector<int> vertex_to_canon;  // original vertex -> canon vertex
  std::vector<int> half_to_canon;    // original half-edge -> canon half-edge
};

inline CanonicalResult canonicalize(const FilteredGraph& fg) {
  detail::CanonSearch search(fg);
  search.run();
  const std::vector<int>& order = search.orderings().front();  // position -> vertex
  const MultiGraph& g = fg.graph();
  std::vector<int> pos_of(g.num_vertices());
  for (int p = 0; p < g.num_vertices(); ++p) pos_of[order[p]] = p;

  // Edge slots sorted by (min position, max position, block); parallel edges
  // within a slot group are interchangeable, so the rebuilt graph depends
  // only on the key, not on which canonical ordering was picked.
  struct Slot {
    int i, j, block, orig;
  };
  std::vector<Slot> slots;
  slots.reserve(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, w] = g.endpoints(e);
    int i = std::min(pos_of[u], pos_of[w]);
    int j = std::max(pos_of[u], pos_of[w]);
    slots.push_back({i, j, fg.block_of(e), e});
  }
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
    return std::tie(a.i, a.j, a.block, a.orig) < std::tie(b.i, b.j, b.block, b.orig);
  });

  std::vector<std::pair<int, int>> edges;
  std::vector<EdgeSet> blocks(fg.depth());
  std::vector<int> half_to_canon(g.num_half_edges());
  for (int t = 0; t < static_cast<int>(slots.size()); ++t) {
    const Slot& s = slots[t];
    edges.emplace_back(s.i, s.j);
    blocks[s.block].push_back(t);
    int e = s.orig;
    if (g.is_loop(e)) {
      half_to_canon[2 * e] = 2 * t;
      half_to_canon[2 * e + 1] = 2 * t + 1;
    } else {
      int first_half = (pos_of[g.vertex_of(2 * e)] == s.i) ? 2 * e : 2 * e + 1;
      half_to_canon[first_half] = 2 * t;
      half_to_canon[MultiGraph::mate(first_half)] = 2 * t + 1;
    }
  }
  FilteredGraph canon(MultiGraph(g.num_vertices(), std::move(edges)), std::move(blocks));
  return CanonicalResult{CanonicalForm{search.key()}, std::move(canon), std::move(pos_of),
                         std::move(half_to_canon)};
}

inline CanonicalForm canonical_form(const FilteredGraph& fg) {
  detail::CanonSearch search(fg);
  search.run();
  return CanonicalForm{search.key()};
}

inline CanonicalForm canonical_form(const MultiGraph& g) {
  return canonical_form(FilteredGraph::trivial(g));
}

inline bool isomorphic(const FilteredGraph& a, const FilteredGraph& b) {
  return canonical_form(a) == canonical_form(b);
}

namespace detail {

/// Expand a block-multiset-preserving vertex bijection into every half-edge
/// automorphism inducing it: bijections of parallel bundles (per vertex pair
/// and block) and of loop bundles (per vertex and block), plus a flip choice
/// for each loop.
inline void expand_vertex_map(const FilteredGraph& fg, const std::vector<int>& f,
                              std::vector<Automorphism>& out) {
  const MultiGraph& g = fg.graph();
  std::map<std::tuple<int, int, int>, std::vector<int>> bundles;  // (u<=w, block) -> edges
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, w] = g.endpoints(e);
    bundles[{std::min(u, w), std::max(u, w), fg.block_of(e)}].push_back(e);
  }

  struct Bundle {
    std::vector<int> src, dst;
    bool loop;
  };
  std::vector<Bundle> bs;
  for (const auto& [key, src] : bundles) {
    auto [u, w, b] = key;
    auto it = bundles.find({std::min(f[u], f[w]), std::max(f[u], f[w]), b});
    if (it == bundles.end() || it->second.size() != src.size()) return;  // not liftable
    bs.push_back({src, it->second, u == w});
  }

  // Odometer over per-bundle permutations and loop flip masks.
  std::vector<std::vector<int>> perm(bs.size());
  for (size_t i = 0; i < bs.size(); ++i) {
    perm[i].resize(bs[i].src.size());
    for (size_t j = 0; j < perm[i].size(); ++j) perm[i][j] = static_cast<int>(j);
  }
  std::vector<std::uint32_t> flip(bs.size(), 0);

  auto emit = [&]() {
    Automorphism a;
    a.vertex = f;
    a.half.assign(g.num_half_edges(), -1);
    for (size_t i = 0; i < bs.size(); ++i) {
      for (size_t j = 0; j < bs[i].src.size(); ++j) {
        int e = bs[i].src[j];
        int e2 = bs[i].dst[perm[i][j]];
        if (bs[i].loop) {
          bool fl = (flip[i] >> j) & 1;
          a.half[2 * e] = fl ? 2 * e2 + 1 : 2 * e2;
          a.half[2 * e + 1] = fl ? 2 * e2 : 2 * e2 + 1;
        } else {
          int u = g.vertex_of(2 * e);
          int at_fu = (g.vertex_of(2 * e2) == f[u]) ? 2 * e2 : 2 * e2 + 1;
          a.half[2 * e] = at_fu;
          a.half[2 * e + 1] = MultiGraph::mate(at_fu);
        }
      }
    }
    out.push_back(std::move(a));
  };

  // Iterate: позиция-wise product of permutations, then flips for loops.
  std::vector<size_t> idx;  // bundles that are loops, for flip odometer
  for (size_t i = 0; i < bs.size(); ++i)
    if (bs[i].loop) idx.push_back(i);

  std::function<void(size_t)> iter_perms = [&](size_t i) {
    if (i == bs.size()) {
      // flips
      std::function<void(size_t)> iter_flips = [&](size_t j) {
        if (j == idx.size()) {
          emit();
          return;
        }
        std::uint32_t count = 1u << bs[idx[j]].src.size();
        for (std::uint32_t m = 0; m < count; ++m) {
          flip[idx[j]] = m;
          iter_flips(j + 1);
        }
      };
      iter_flips(0);
      return;
    }
    std::sort(perm[i].begin(), perm[i].end());
    do {
      iter_perms(i + 1);
    } while (std::next_permutation(perm[i].begin(), perm[i].end()));
  };
  iter_perms(0);
}

}  // namespace detail

/// Full automorphism group, enumerated from the canonical search tree: the
/// canonical labelings give every admissible vertex bijection, each of which
/// is expanded to the half-edge level.
inline AutGroup automorphisms(const FilteredGraph& fg) {
  detail::CanonSearch search(fg);
  search.run();
  const auto& orderings = search.orderings();
  const std::vector<int>& base = orderings.front();
  std::vector<int> base_pos(fg.graph().num_vertices());
  for (size_t p = 0; p < base.size(); ++p) base_pos[base[p]] = static_cast<int>(p);

  AutGroup group;
  for (const auto& ord : orderings) {
    std::vector<int> f(fg.graph().num_vertices());
    for (int v = 0; v < fg.graph().num_vertices(); ++v) f[v] = ord[base_pos[v]];
    detail::expand_vertex_map(fg, f, group.elements);
  }
  std::sort(group.elements.begin(), group.elements.end());
  // identity first
  for (size_t i = 0; i < group.elements.size(); ++i) {
    if (group.elements[i].is_identity()) {
      std::swap(group.elements[0], group.elements[i]);
      break;
    }
  }
  return group;
}

inline AutGroup automorphisms(const MultiGraph& g) {
  return automorphisms(FilteredGraph::trivial(g));
}

/// The automorphism of (G/E1, (E2,...)) induced by an automorphism of
/// (G, (E1, E2, ...)).  Group homomorphism; surviving half-edges map the
/// way they did upstairs.
inline Automorphism induced_on_shrink(const FilteredGraph& fg, const ShrinkResult& sh,
                                      const Automorphism& a) {
  const MultiGraph& g = fg.graph();
  const MultiGraph& h = sh.fg.graph();
  Automorphism out;
  out.half.assign(h.num_half_edges(), -1);
  out.vertex.assign(h.num_vertices(), -1);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (sh.edge_map[e] == -1) continue;
    for (int half : {2 * e, 2 * e + 1}) {
      int image = a.half[half];
      int image_edge = image / 2;
      if (sh.edge_map[image_edge] == -1)
        throw InternalCheckFailure("automorphism does not preserve the first block");
      out.half[2 * sh.edge_map[e] + (half & 1)] = 2 * sh.edge_map[image_edge] + (image & 1);
    }
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    int nv = sh.vertex_map[v];
    int target = sh.vertex_map[a.vertex[v]];
    if (out.vertex[nv] != -1 && out.vertex[nv] != target)
      throw InternalCheckFailure("induced vertex map is inconsistent");
    out.vertex[nv] = target;
  }
  return out;
}

}  // namespace tropmod
