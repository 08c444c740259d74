#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tropmod/delta_complex.hpp"
#include "tropmod/fibers.hpp"
#include "tropmod/rational.hpp"
#include "tropmod/z2.hpp"

namespace tropmod {

/// Chain complex of vector spaces over the two-element field.
/// boundaries[d][j] holds the boundary of the j-th d-cell as bits over the
/// (d-1)-cells; boundary-of-boundary is asserted on every build.
struct ChainComplexZ2 {
  std::vector<std::int64_t> cell_counts;           // per dimension
  std::vector<std::vector<BitColumn>> boundaries;  // [d][cell in dim d]

  int dim() const { return static_cast<int>(cell_counts.size()) - 1; }

  std::int64_t euler() const {
    std::int64_t chi = 0;
    for (size_t d = 0; d < cell_counts.size(); ++d)
      chi += (d % 2 == 0) ? cell_counts[d] : -cell_counts[d];
    return chi;
  }

  void verify_dd() const {
    for (size_t d = 2; d < boundaries.size(); ++d) {
      for (size_t j = 0; j < boundaries[d].size(); ++j) {
        BitColumn acc = make_column(d >= 2 ? cell_counts[d - 2] : 0);
        for (std::int64_t i = 0; i < cell_counts[d - 1]; ++i)
          if (get_bit(boundaries[d][j], i)) xor_into(acc, boundaries[d - 1][i]);
        if (!is_zero(acc)) {
          std::ostringstream os;
          os << "boundary of boundary nonzero at dimension " << d << ", cell " << j
             << " (first bad face " << lowest_set(acc) << ")";
          throw InternalCheckFailure(os.str());
        }
      }
    }
  }

  /// Unreduced Betti numbers over the two-element field.
  std::vector<std::int64_t> betti() const {
    std::vector<std::int64_t> ranks(cell_counts.size() + 1, 0);
    for (size_t d = 1; d < boundaries.size(); ++d) ranks[d] = column_rank(boundaries[d]);
    std::vector<std::int64_t> out(cell_counts.size());
    for (size_t d = 0; d < cell_counts.size(); ++d)
      out[d] = cell_counts[d] - ranks[d] - (d + 1 < ranks.size() ? ranks[d + 1] : 0);
    return out;
  }
};

inline bool reduced_trivial(const std::vector<std::int64_t>& betti) {
  if (betti.empty() || betti[0] != 1) return false;
  for (size_t i = 1; i < betti.size(); ++i)
    if (betti[i] != 0) return false;
  return true;
}

/// Chain complex of one quotient cubical fiber (within-fiber boundary only).
inline ChainComplexZ2 fiber_chain_complex(const FiberComplex& fc) {
  ChainComplexZ2 cc;
  std::vector<int> dim_index(fc.orbits.size());
  for (size_t i = 0; i < fc.orbits.size(); ++i) {
    int d = fc.orbits[i].dim;
    if (static_cast<int>(cc.cell_counts.size()) <= d) cc.cell_counts.resize(d + 1, 0);
    dim_index[i] = static_cast<int>(cc.cell_counts[d]++);
  }
  cc.boundaries.resize(cc.cell_counts.size());
  for (size_t d = 0; d < cc.cell_counts.size(); ++d)
    cc.boundaries[d].assign(cc.cell_counts[d], make_column(d == 0 ? 0 : cc.cell_counts[d - 1]));
  for (size_t i = 0; i < fc.orbits.size(); ++i) {
    int d = fc.orbits[i].dim;
    if (d == 0) continue;
    BitColumn& col = cc.boundaries[d][dim_index[i]];
    for (auto [t, m] : fc.cube_boundary(static_cast<int>(i)))
      if (m % 2 == 1) set_bit(col, dim_index[t]);
  }
  cc.verify_dd();
  return cc;
}

/// CW model of the compactified moduli space at one genus and mark count:
/// cells are (base simplex, cube orbit) pairs.
struct CWComplex {
  DeltaComplex delta;
  int n = 0;
  std::vector<FiberComplex> fibers;  // per delta cell

  struct Cell {
    int sigma;  // delta cell
    int tau;    // orbit within the fiber of sigma
    int dim;
  };
  std::vector<Cell> cells;                                // sorted by (dim, sigma, tau)
  std::vector<std::vector<std::pair<int, int>>> boundary;  // raw facet multiplicities
  std::vector<std::string> warnings;

  std::vector<std::int64_t> counts_by_dim() const {
    std::vector<std::int64_t> c;
    for (const Cell& cell : cells) {
      if (static_cast<int>(c.size()) <= cell.dim) c.resize(cell.dim + 1, 0);
      c[cell.dim]++;
    }
    return c;
  }

  ChainComplexZ2 chain() const {
    ChainComplexZ2 cc;
    cc.cell_counts = counts_by_dim();
    std::vector<int> dim_index(cells.size()), offset(cc.cell_counts.size(), 0);
    for (size_t i = 0; i < cells.size(); ++i) dim_index[i] = offset[cells[i].dim]++;
    cc.boundaries.resize(cc.cell_counts.size());
    for (size_t d = 0; d < cc.cell_counts.size(); ++d)
      cc.boundaries[d].assign(cc.cell_counts[d], make_column(d == 0 ? 0 : cc.cell_counts[d - 1]));
    for (size_t i = 0; i < cells.size(); ++i) {
      int d = cells[i].dim;
      if (d == 0) continue;
      BitColumn& col = cc.boundaries[d][dim_index[i]];
      for (auto [t, m] : boundary[i])
        if (m % 2 == 1) set_bit(col, dim_index[t]);
    }
    cc.verify_dd();
    return cc;
  }

  FaceComplex face_complex() const {
    FaceComplex fc;
    fc.dim.reserve(cells.size());
    for (const Cell& c : cells) fc.dim.push_back(c.dim);
    fc.facets = boundary;
    return fc;
  }

  CellPoly cell_poly() const {
    std::vector<std::int64_t> c = counts_by_dim();
    return CellPoly(std::move(c));
  }
};

/// Total cell generating function: fibers weighted by x^(dim of the base
/// simplex).  At x = -1 this is the Euler characteristic of the space.
inline CellPoly total_poly(const DeltaComplex& delta, int n) {
  CellPoly total;
  for (const DeltaCell& cell : delta.cells) {
    CellPoly fiber = fiber_poly(subdivide(cell.cls.representative), n);
    total += fiber.shifted(cell.dim);
  }
  return total;
}

inline CellPoly total_poly(int g, int n) { return total_poly(build_delta(g), n); }

inline std::int64_t euler_x(const DeltaComplex& delta, int n) {
  return total_poly(delta, n).euler();
}

inline std::int64_t euler_x(int g, int n) { return euler_x(build_delta(g), n); }

inline CWComplex build_cw(DeltaComplex delta, int n) {
  CWComplex cw{std::move(delta), n, {}, {}, {}, {}};
  for (const DeltaCell& cell : cw.delta.cells)
    cw.fibers.push_back(build_fiber_complex(cell.cls.representative, n));

  // cells sorted by (dim, sigma, tau)
  std::vector<std::vector<int>> cell_id(cw.delta.cells.size());
  int max_dim = 0;
  for (size_t s = 0; s < cw.delta.cells.size(); ++s) {
    cell_id[s].assign(cw.fibers[s].orbits.size(), -1);
    for (const CubeOrbit& o : cw.fibers[s].orbits)
      max_dim = std::max(max_dim, cw.delta.cells[s].dim + o.dim);
  }
  for (int pass = 0; pass <= max_dim; ++pass) {
    for (size_t s = 0; s < cw.delta.cells.size(); ++s)
      for (size_t t = 0; t < cw.fibers[s].orbits.size(); ++t) {
        int d = cw.delta.cells[s].dim + cw.fibers[s].orbits[t].dim;
        if (d != pass) continue;
        cell_id[s][t] = static_cast<int>(cw.cells.size());
        cw.cells.push_back({static_cast<int>(s), static_cast<int>(t), d});
      }
  }

  // transports once per (sigma, facet slot)
  cw.boundary.resize(cw.cells.size());
  for (size_t s = 0; s < cw.delta.cells.size(); ++s) {
    const DeltaCell& sigma = cw.delta.cells[s];
    std::vector<CellTransport> transports;
    for (const DeltaFacet& f : sigma.facets) {
      if (f.kind == DeltaFacet::Shrink)
        transports.push_back(shrink_transport(cw.fibers[s].s, cw.fibers[f.target].s));
      else
        transports.push_back(merge_transport(cw.fibers[s].s, f.merge_index, cw.fibers[f.target].s));
    }
    for (size_t t = 0; t < cw.fibers[s].orbits.size(); ++t) {
      std::map<int, int> mult;
      // within-fiber cubical boundary
      for (auto [tt, m] : cw.fibers[s].cube_boundary(static_cast<int>(t)))
        mult[cell_id[s][tt]] += m;
      // base facets, one contribution per slot
      for (size_t fi = 0; fi < sigma.facets.size(); ++fi) {
        const DeltaFacet& f = sigma.facets[fi];
        auto chain = structure_map_chain(cw.fibers[s], transports[fi], cw.fibers[f.target],
                                         static_cast<int>(t));
        if (chain.empty() && cw.fibers[s].orbits[t].dim > 0 && f.kind == DeltaFacet::Merge) {
          std::ostringstream os;
          os << "merge facet dropped dimension at simplex " << s << ", cube " << t;
          cw.warnings.push_back(os.str());
        }
        for (auto [tt, m] : chain) mult[cell_id[f.target][tt]] += m;
      }
      std::vector<std::pair<int, int>>& out = cw.boundary[cell_id[s][t]];
      out.assign(mult.begin(), mult.end());
      for (auto [c, m] : out)
        if (cw.cells[c].dim != cw.cells[cell_id[s][t]].dim - 1)
          throw InternalCheckFailure("boundary entry with wrong dimension");
    }
  }

  // cross-check against the averaged generating function
  if (cw.cell_poly() != total_poly(cw.delta, n))
    throw InternalCheckFailure("cell counts disagree with the averaged polynomial");
  return cw;
}

inline CWComplex build_cw(int g, int n) { return build_cw(build_delta(g), n); }

/// Leading coefficient of the Euler characteristic, as a function of the
/// number of marks: the weight of base^n, where base defaults to g+1 (the
/// largest fixed-subcomplex Euler characteristic that occurs).  For genus 1
/// the moduli space with n marks is modeled on n-1 free marks, so the
/// coefficient carries one extra factor of 1/base.
struct AsymptoticReport {
  Rational coefficient;
  std::int64_t base = 0;
  std::vector<std::string> anomalies;  // elements whose fixed complex tops the base
};

inline AsymptoticReport asymptotic_coefficient(const DeltaComplex& delta,
                                               std::optional<std::int64_t> base_opt = {}) {
  AsymptoticReport rep;
  rep.base = base_opt.value_or(delta.genus + 1);
  for (size_t s = 0; s < delta.cells.size(); ++s) {
    const DeltaCell& cell = delta.cells[s];
    SubdividedGraph sub_s = subdivide(cell.cls.representative);
    std::int64_t hits = 0;
    for (const Automorphism& a : sub_s.aut.elements) {
      std::int64_t chi = fixed_subcomplex_poly(sub_s, a).euler();
      if (chi == rep.base) ++hits;
      if (chi > rep.base) {
        std::ostringstream os;
        os << "cell " << s << " (" << cell.cls.form.hex() << "): fixed complex with chi=" << chi
           << " > base " << rep.base;
        rep.anomalies.push_back(os.str());
      }
    }
    Rational term(hits, sub_s.aut.order());
    rep.coefficient += (cell.dim % 2 == 0) ? term : -term;
  }
  if (delta.genus == 1) rep.coefficient = rep.coefficient / Rational(rep.base);
  return rep;
}

inline AsymptoticReport asymptotic_coefficient(int g, std::optional<std::int64_t> base = {}) {
  return asymptotic_coefficient(build_delta(g), base);
}

}  // namespace tropmod
