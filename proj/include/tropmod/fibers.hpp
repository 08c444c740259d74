#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tropmod/subdivision.hpp"

namespace tropmod {

/// One cube of S(G,pi)^n / Aut(G,pi): an n-tuple of cells of the subdivided
/// graph (the allowed locus of each mark), stored as the minimal tuple of
/// its orbit.  Dimension = number of 1-cell entries.
struct CubeOrbit {
  std::vector<int> cells;
  int dim = 0;
};

/// Quotient cubical complex of one filtered class at a fixed number of
/// marks: all cube orbits plus the group-averaged cell polynomial.  The two
/// cell counts are compared on construction (orbit enumeration vs the
/// orbit-counting lemma); disagreement is an internal failure.
struct FiberComplex {
  SubdividedGraph s;
  int n = 0;
  CellPoly poly;
  std::vector<CubeOrbit> orbits;               // sorted by (dim, tuple)
  std::map<std::vector<int>, int> orbit_index;

  std::vector<int> canonical_tuple(const std::vector<int>& tuple) const {
    std::vector<int> best = tuple, image(tuple.size());
    for (const Automorphism& a : s.aut.elements) {
      for (size_t i = 0; i < tuple.size(); ++i) image[i] = s.apply(a, tuple[i]);
      if (image < best) best = image;
    }
    return best;
  }

  int orbit_of(const std::vector<int>& tuple) const {
    auto it = orbit_index.find(canonical_tuple(tuple));
    if (it == orbit_index.end()) throw InternalCheckFailure("tuple outside the orbit table");
    return it->second;
  }

  /// Raw facet multiplicities of one cube orbit within this fiber: lift the
  /// representative, list the 2*dim cube facets, fold each back into the
  /// quotient.
  std::vector<std::pair<int, int>> cube_boundary(int orbit) const {
    std::map<int, int> mult;
    const std::vector<int>& rep = orbits[orbit].cells;
    for (size_t i = 0; i < rep.size(); ++i) {
      if (s.cells[rep[i]].dim != 1) continue;
      for (int endpoint : s.endpoints_of(rep[i])) {
        std::vector<int> facet = rep;
        facet[i] = endpoint;
        mult[orbit_of(facet)]++;
      }
    }
    return {mult.begin(), mult.end()};
  }
};

/// Build the fiber complex with explicit orbits.  Intended for the small n
/// used in chain-complex work; use fiber_poly alone for large-n sweeps.
inline FiberComplex build_fiber_complex(const FilteredGraph& rep, int n) {
  if (n < 0) throw InvalidArgument("number of marks must be >= 0");
  FiberComplex fc{subdivide(rep), n, {}, {}, {}};
  fc.poly = fiber_poly(fc.s, n);

  int num_cells = static_cast<int>(fc.s.cells.size());
  std::vector<int> tuple(n, 0);
  std::map<std::vector<int>, int> dims;
  // odometer over all n-tuples of cells
  while (true) {
    std::vector<int> canon = fc.canonical_tuple(tuple);
    if (dims.find(canon) == dims.end()) {
      int d = 0;
      for (int c : canon) d += fc.s.cells[c].dim;
      dims[canon] = d;
    }
    int i = n - 1;
    while (i >= 0 && tuple[i] == num_cells - 1) tuple[i--] = 0;
    if (i < 0) break;
    tuple[i]++;
  }
  std::vector<std::vector<std::vector<int>>> by_dim;
  for (auto& [canon, d] : dims) {
    if (static_cast<int>(by_dim.size()) <= d) by_dim.resize(d + 1);
    by_dim[d].push_back(canon);
  }
  for (int d = 0; d < static_cast<int>(by_dim.size()); ++d)
    for (auto& canon : by_dim[d]) {
      fc.orbit_index[canon] = static_cast<int>(fc.orbits.size());
      fc.orbits.push_back(CubeOrbit{canon, d});
    }

  // Orbit enumeration against the averaged polynomial: the module's central
  // cross-check.
  CellPoly counted;
  {
    std::vector<std::int64_t> c(by_dim.size(), 0);
    for (size_t d = 0; d < by_dim.size(); ++d) c[d] = static_cast<std::int64_t>(by_dim[d].size());
    counted = CellPoly(std::move(c));
  }
  if (counted != fc.poly)
    throw InternalCheckFailure("direct orbit count disagrees with the averaged polynomial");
  return fc;
}

/// Images of the cells of a source subdivided graph inside a target one,
/// along a merge (identity on the graph) or a shrink (contraction of the
/// first block).  A 1-cell image is one target 1-cell, or two when the
/// target subdivides an edge the source did not, or a dimension drop onto a
/// vertex cell (shrunk first-block material only).
struct CellTransport {
  std::vector<std::vector<int>> image;  // per source cell: same-dim target cells
  std::vector<int> dropped_to;          // target vertex cell when dropped, else -1
};

namespace detail {

struct GraphMaps {
  std::vector<int> vertex;  // source vertex -> target vertex
  std::vector<int> edge;    // source edge -> target edge (-1 when contracted)
  std::vector<int> half;    // source half -> target half (-1 when contracted)
  std::vector<int> vertex_when_dropped;  // source edge -> target vertex (-1 otherwise)
};

inline CellTransport transport_cells(const SubdividedGraph& src, const SubdividedGraph& dst,
                                     const GraphMaps& m) {
  CellTransport t;
  t.image.resize(src.cells.size());
  t.dropped_to.assign(src.cells.size(), -1);
  for (size_t c = 0; c < src.cells.size(); ++c) {
    const SubdividedGraph::Cell& cell = src.cells[c];
    switch (cell.kind) {
      case SubdividedGraph::CellKind::Vertex:
        t.image[c] = {dst.vertex_cell[m.vertex[cell.ref]]};
        break;
      case SubdividedGraph::CellKind::Midpoint: {
        int e = m.edge[cell.ref];
        if (e == -1) {
          t.image[c] = {dst.vertex_cell[m.vertex_when_dropped[cell.ref]]};
        } else {
          if (!dst.subdivided[e])
            throw InternalCheckFailure("subdivision lost along a structure map");
          t.image[c] = {dst.midpoint_cell[e]};
        }
        break;
      }
      case SubdividedGraph::CellKind::FullEdge: {
        int e = m.edge[cell.ref];
        if (e == -1) {
          t.dropped_to[c] = dst.vertex_cell[m.vertex_when_dropped[cell.ref]];
        } else if (dst.subdivided[e]) {
          t.image[c] = {dst.half_cell[m.half[2 * cell.ref]],
                        dst.half_cell[m.half[2 * cell.ref + 1]]};
        } else {
          t.image[c] = {dst.full_cell[e]};
        }
        break;
      }
      case SubdividedGraph::CellKind::HalfEdge: {
        int h = m.half[cell.ref];
        if (h == -1) {
          t.dropped_to[c] =
              dst.vertex_cell[m.vertex_when_dropped[MultiGraph::edge_of(cell.ref)]];
        } else {
          if (!dst.subdivided[MultiGraph::edge_of(h)])
            throw InternalCheckFailure("subdivision lost along a structure map");
          t.image[c] = {dst.half_cell[h]};
        }
        break;
      }
    }
  }
  return t;
}

}  // namespace detail

/// Transport along the merge of blocks i and i+1 of the source.  The target
/// must be the canonical representative of the merged class.
inline CellTransport merge_transport(const SubdividedGraph& src, int merge_index,
                                     const SubdividedGraph& dst) {
  FilteredGraph merged = merge_blocks(src.base, merge_index);
  CanonicalResult canon = canonicalize(merged);
  if (!(canonical_form(dst.base) == canon.form))
    throw InvalidArgument("target is not the canonical form of the merged class");
  const MultiGraph& g = src.base.graph();
  detail::GraphMaps m;
  m.vertex = canon.vertex_to_canon;
  m.edge.resize(g.num_edges());
  m.half.resize(g.num_half_edges());
  for (int h = 0; h < g.num_half_edges(); ++h) m.half[h] = canon.half_to_canon[h];
  for (int e = 0; e < g.num_edges(); ++e) m.edge[e] = m.half[2 * e] / 2;
  m.vertex_when_dropped.assign(g.num_edges(), -1);
  return detail::transport_cells(src, dst, m);
}

/// Transport along the shrink of the first block of the source.  The target
/// must be the canonical representative of the shrunken class.
inline CellTransport shrink_transport(const SubdividedGraph& src, const SubdividedGraph& dst) {
  ShrinkResult sh = shrink_first_block(src.base);
  CanonicalResult canon = canonicalize(sh.fg);
  if (!(canonical_form(dst.base) == canon.form))
    throw InvalidArgument("target is not the canonical form of the shrunken class");
  const MultiGraph& g = src.base.graph();
  detail::GraphMaps m;
  m.vertex.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    m.vertex[v] = canon.vertex_to_canon[sh.vertex_map[v]];
  m.edge.assign(g.num_edges(), -1);
  m.half.assign(g.num_half_edges(), -1);
  m.vertex_when_dropped.assign(g.num_edges(), -1);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (sh.edge_map[e] == -1) {
      m.vertex_when_dropped[e] = m.vertex[g.vertex_of(2 * e)];
    } else {
      for (int h : {2 * e, 2 * e + 1})
        m.half[h] = canon.half_to_canon[2 * sh.edge_map[e] + (h & 1)];
      m.edge[e] = m.half[2 * e] / 2;
    }
  }
  return detail::transport_cells(src, dst, m);
}

/// Image of one cube orbit under a structure map, as a mod-2-ready list of
/// same-dimension target orbits with multiplicities.  Empty means the cube
/// degenerates (its dimension drops: some mark sits on shrunk material).
inline std::vector<std::pair<int, int>> structure_map_chain(const FiberComplex& src_fiber,
                                                            const CellTransport& t,
                                                            const FiberComplex& dst_fiber,
                                                            int orbit) {
  const std::vector<int>& rep = src_fiber.orbits[orbit].cells;
  for (int c : rep)
    if (src_fiber.s.cells[c].dim == 1 && t.dropped_to[c] != -1) return {};  // degenerate
  std::map<int, int> mult;
  std::vector<int> tuple(rep.size());
  std::function<void(size_t)> expand = [&](size_t i) {
    if (i == rep.size()) {
      mult[dst_fiber.orbit_of(tuple)]++;
      return;
    }
    for (int img : t.image[rep[i]]) {
      tuple[i] = img;
      expand(i + 1);
    }
  };
  expand(0);
  return {mult.begin(), mult.end()};
}

/// Single-valued structure map on cube orbits, when it is single-valued:
/// nullopt for a degenerate image, the unique target orbit otherwise.
/// Throws if a refinement splits the image across several orbits (callers
/// needing chains use structure_map_chain).
inline std::optional<int> structure_map(const FiberComplex& src_fiber, const CellTransport& t,
                                        const FiberComplex& dst_fiber, int orbit) {
  auto chain = structure_map_chain(src_fiber, t, dst_fiber, orbit);
  if (chain.empty()) return std::nullopt;
  if (chain.size() > 1)
    throw InvalidArgument("structure map image is not a single cube orbit");
  return chain.front().first;
}

}  // namespace tropmod
