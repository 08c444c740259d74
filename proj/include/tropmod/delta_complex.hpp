#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tropmod/collapse.hpp"
#include "tropmod/enumeration.hpp"

namespace tropmod {

/// One facet slot of a cell: shrink the first block, or merge neighboring
/// blocks i and i+1 (0-based).  A cell of dimension d carries d+1 slots.
struct DeltaFacet {
  enum Kind { Shrink, Merge };
  Kind kind;
  int merge_index;  // meaningful for Merge
  int target;       // cell id
};

struct DeltaCell {
  FilteredClass cls;
  int dim;
  std::vector<DeltaFacet> facets;
};

/// Face poset of the generalized simplicial complex of filtered-by-forests
/// stable graphs of one genus.  Cells are stored sorted by (dimension,
/// canonical form); distinct cells may share all their vertices, so the
/// complex is *only* the poset.
struct DeltaComplex {
  int genus = 0;
  std::vector<DeltaCell> cells;
  std::map<std::vector<int>, int> index;  // canonical key -> cell id

  int cell_of(const CanonicalForm& form) const {
    auto it = index.find(form.key);
    if (it == index.end()) throw InvalidArgument("no cell with this canonical form");
    return it->second;
  }

  std::vector<int> f_vector() const {
    std::vector<int> f;
    for (const auto& c : cells) {
      if (static_cast<int>(f.size()) <= c.dim) f.resize(c.dim + 1, 0);
      f[c.dim]++;
    }
    return f;
  }
};

/// Apply facet slot s to a representative: slot 0 shrinks the first block,
/// slot s >= 1 merges blocks s-1 and s.
inline FilteredGraph apply_facet(const FilteredGraph& fg, int slot) {
  if (slot == 0) return shrink_first_block(fg).fg;
  return merge_blocks(fg, slot - 1);
}

/// Sort the cells, index them and wire up the facet slots.
inline DeltaComplex assemble_delta(int g, std::vector<DeltaCell> cells) {
  DeltaComplex dc;
  dc.genus = g;
  dc.cells = std::move(cells);
  std::stable_sort(dc.cells.begin(), dc.cells.end(), [](const DeltaCell& a, const DeltaCell& b) {
    return std::tie(a.dim, a.cls.form.key) < std::tie(b.dim, b.cls.form.key);
  });
  for (size_t i = 0; i < dc.cells.size(); ++i)
    dc.index[dc.cells[i].cls.form.key] = static_cast<int>(i);

  for (DeltaCell& cell : dc.cells) {
    if (cell.dim == 0) continue;
    const FilteredGraph& rep = cell.cls.representative;
    for (int slot = 0; slot <= cell.dim; ++slot) {
      FilteredGraph image = apply_facet(rep, slot);
      // Facets of filtered-by-forests cells must themselves qualify;
      // re-verify instead of trusting the construction.
      if (!image.filtered_by_forests())
        throw InternalCheckFailure("facet lost the forest condition");
      if (!is_stable(image.graph()))
        throw InternalCheckFailure("facet lost stability");
      int target = dc.cell_of(canonical_form(image));
      if (dc.cells[target].dim != cell.dim - 1)
        throw InternalCheckFailure("facet with wrong dimension");
      DeltaFacet f;
      f.kind = (slot == 0) ? DeltaFacet::Shrink : DeltaFacet::Merge;
      f.merge_index = (slot == 0) ? -1 : slot - 1;
      f.target = target;
      cell.facets.push_back(f);
    }
  }
  return dc;
}

inline DeltaComplex build_delta(int g) {
  std::vector<DeltaCell> cells;
  for (const StableClass& sc : stable_graphs(g)) {
    for (FilteredClass& fc : filtered_structures(sc)) {
      int dim = fc.depth - 1;
      cells.push_back(DeltaCell{std::move(fc), dim, {}});
    }
  }
  return assemble_delta(g, std::move(cells));
}

inline std::pair<int, bool> dimension_and_purity(const DeltaComplex& dc) {
  std::vector<char> is_facet(dc.cells.size(), 0);
  int dim = 0;
  for (const auto& c : dc.cells) {
    dim = std::max(dim, c.dim);
    for (const auto& f : c.facets) is_facet[f.target] = 1;
  }
  bool pure = true;
  for (size_t i = 0; i < dc.cells.size(); ++i)
    if (!is_facet[i] && dc.cells[i].dim != dim) pure = false;
  return {dim, pure};
}

/// Connectivity of the 1-skeleton.
inline bool is_connected(const DeltaComplex& dc) {
  detail::DisjointSets ds(static_cast<int>(dc.cells.size()));
  int vertices = 0;
  for (const auto& c : dc.cells)
    if (c.dim == 0) ++vertices;
  int parts = vertices;
  for (size_t i = 0; i < dc.cells.size(); ++i) {
    if (dc.cells[i].dim != 1) continue;
    int a = dc.cells[i].facets[0].target;
    int b = dc.cells[i].facets[1].target;
    if (ds.unite(a, b)) --parts;
  }
  return parts <= 1;
}

inline long long euler_characteristic(const DeltaComplex& dc) {
  long long chi = 0;
  for (const auto& c : dc.cells) chi += (c.dim % 2 == 0) ? 1 : -1;
  return chi;
}

inline FaceComplex face_complex(const DeltaComplex& dc) {
  FaceComplex fc;
  fc.dim.reserve(dc.cells.size());
  fc.facets.resize(dc.cells.size());
  for (size_t i = 0; i < dc.cells.size(); ++i) {
    fc.dim.push_back(dc.cells[i].dim);
    std::map<int, int> mult;
    for (const auto& f : dc.cells[i].facets) mult[f.target]++;
    for (auto [t, m] : mult) fc.facets[i].emplace_back(t, m);
  }
  return fc;
}

/// The depth-1 classes reachable from a cell by iterated facet maps; for a
/// cell (G, (E_1..E_m)) these are exactly the contractions
/// G_i = G / (E_1 ∪ ... ∪ E_{i-1}).
inline std::vector<int> simplex_vertices(const DeltaComplex& dc, int cell) {
  std::vector<char> seen(dc.cells.size(), 0);
  std::vector<int> stack{cell}, out;
  seen[cell] = 1;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    if (dc.cells[c].dim == 0) {
      out.push_back(c);
      continue;
    }
    for (const auto& f : dc.cells[c].facets)
      if (!seen[f.target]) {
        seen[f.target] = 1;
        stack.push_back(f.target);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// DOT rendering of the 1-skeleton; vertices labeled by canonical hex and
/// the (v, e) shape of the indexing stable graph.
inline std::string skeleton_to_dot(const DeltaComplex& dc) {
  std::ostringstream os;
  os << "graph delta_" << dc.genus << " {\n";
  for (size_t i = 0; i < dc.cells.size(); ++i) {
    const auto& c = dc.cells[i];
    if (c.dim != 0) continue;
    os << "  n" << i << " [label=\"" << c.cls.form.hex() << "\\nv=" << c.cls.representative.graph().num_vertices()
       << " e=" << c.cls.representative.graph().num_edges() << "\"];\n";
  }
  for (const auto& c : dc.cells) {
    if (c.dim != 1) continue;
    os << "  n" << c.facets[0].target << " -- n" << c.facets[1].target << ";\n";
  }
  os << "}\n";
  return os.str();
}

/// DOT rendering of one multigraph (reproduction aid for the catalog
/// figures).
inline std::string graph_to_dot(const MultiGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.num_vertices(); ++v) os << "  v" << v << ";\n";
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, w] = g.endpoints(e);
    os << "  v" << u << " -- v" << w << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace tropmod
