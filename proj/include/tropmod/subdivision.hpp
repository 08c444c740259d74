#pragma once

#include <array>
#include <vector>

#include "tropmod/isomorphism.hpp"
#include "tropmod/poly.hpp"

namespace tropmod {

/// The 1-complex obtained from a filtered graph by inserting a midpoint into
/// every edge that some automorphism maps to itself reversing its halves.
/// Loop flips are always automorphisms, so loops are always subdivided; this
/// is asserted rather than special-cased.
///
/// Cells are numbered: original vertices, then midpoints (by edge), then the
/// 1-cells (whole unsubdivided edges, then half-edge cells by half id).
struct SubdividedGraph {
  enum class CellKind { Vertex, Midpoint, FullEdge, HalfEdge };
  struct Cell {
    int dim;
    CellKind kind;
    int ref;  // vertex id, edge id, or half-edge id
  };

  FilteredGraph base;
  AutGroup aut;
  std::vector<char> subdivided;  // per edge
  std::vector<Cell> cells;
  std::vector<int> vertex_cell;    // per vertex
  std::vector<int> midpoint_cell;  // per edge, -1 when not subdivided
  std::vector<int> full_cell;      // per edge, -1 when subdivided
  std::vector<int> half_cell;      // per half-edge, -1 when not subdivided
  int num_vertex_cells = 0;
  int num_edge_cells = 0;

  /// 2 + 2x for the subdivided loop, and so on.
  CellPoly poly() const {
    return CellPoly({num_vertex_cells, num_edge_cells});
  }

  int apply(const Automorphism& a, int cell) const {
    const Cell& c = cells[cell];
    switch (c.kind) {
      case CellKind::Vertex:
        return vertex_cell[a.vertex[c.ref]];
      case CellKind::Midpoint:
        return midpoint_cell[a.half[2 * c.ref] / 2];
      case CellKind::FullEdge:
        return full_cell[a.half[2 * c.ref] / 2];
      case CellKind::HalfEdge:
        return half_cell[a.half[c.ref]];
    }
    return -1;
  }

  /// The two (distinct) vertex cells bounding a 1-cell.
  std::array<int, 2> endpoints_of(int cell) const {
    const Cell& c = cells[cell];
    const MultiGraph& g = base.graph();
    if (c.kind == CellKind::FullEdge) {
      auto [u, w] = g.endpoints(c.ref);
      return {vertex_cell[u], vertex_cell[w]};
    }
    return {vertex_cell[g.vertex_of(c.ref)], midpoint_cell[MultiGraph::edge_of(c.ref)]};
  }
};

inline SubdividedGraph subdivide(FilteredGraph fg) {
  AutGroup aut = automorphisms(fg);
  SubdividedGraph s{std::move(fg), std::move(aut), {}, {}, {}, {}, {}, {}};
  const MultiGraph& g = s.base.graph();
  s.subdivided.assign(g.num_edges(), 0);
  for (const Automorphism& a : s.aut.elements)
    for (int e = 0; e < g.num_edges(); ++e)
      if (a.flips_edge(e)) s.subdivided[e] = 1;
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.is_loop(e) && !s.subdivided[e])
      throw InternalCheckFailure("loop not flipped by any automorphism");

  s.vertex_cell.assign(g.num_vertices(), -1);
  s.midpoint_cell.assign(g.num_edges(), -1);
  s.full_cell.assign(g.num_edges(), -1);
  s.half_cell.assign(g.num_half_edges(), -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    s.vertex_cell[v] = static_cast<int>(s.cells.size());
    s.cells.push_back({0, SubdividedGraph::CellKind::Vertex, v});
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!s.subdivided[e]) continue;
    s.midpoint_cell[e] = static_cast<int>(s.cells.size());
    s.cells.push_back({0, SubdividedGraph::CellKind::Midpoint, e});
  }
  s.num_vertex_cells = static_cast<int>(s.cells.size());
  for (int e = 0; e < g.num_edges(); ++e) {
    if (s.subdivided[e]) continue;
    s.full_cell[e] = static_cast<int>(s.cells.size());
    s.cells.push_back({1, SubdividedGraph::CellKind::FullEdge, e});
  }
  for (int h = 0; h < g.num_half_edges(); ++h) {
    if (!s.subdivided[MultiGraph::edge_of(h)]) continue;
    s.half_cell[h] = static_cast<int>(s.cells.size());
    s.cells.push_back({1, SubdividedGraph::CellKind::HalfEdge, h});
  }
  s.num_edge_cells = static_cast<int>(s.cells.size()) - s.num_vertex_cells;
  return s;
}

/// Cell polynomial of the subcomplex fixed pointwise by one automorphism.
/// A 1-cell counts only when preserved with orientation; an unsubdivided
/// edge mapped to itself cannot be reversed (it would have been subdivided),
/// so pointwise fixedness is cell-by-cell equality.
inline CellPoly fixed_subcomplex_poly(const SubdividedGraph& s, const Automorphism& a) {
  std::int64_t v = 0, e = 0;
  for (int c = 0; c < static_cast<int>(s.cells.size()); ++c) {
    if (s.apply(a, c) != c) continue;
    (s.cells[c].dim == 0 ? v : e)++;
  }
  return CellPoly({v, e});
}

/// Group-averaged cell polynomial of S(G,pi)^n / Aut(G,pi): the orbit-count
/// generating function by the weighted orbit-counting lemma.  Division by
/// the group order must be exact; a remainder signals an automorphism bug.
inline CellPoly fiber_poly(const SubdividedGraph& s, int n) {
  if (n < 0) throw InvalidArgument("number of marks must be >= 0");
  CellPoly sum;
  for (const Automorphism& a : s.aut.elements) sum += fixed_subcomplex_poly(s, a).pow(n);
  return sum.exact_div(s.aut.order());
}

}  // namespace tropmod
