#include "tropmod/fibers.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <set>

#include "fixtures.hpp"

using namespace tropmod;
using namespace fixtures;

namespace {

SubdividedGraph sub(const FilteredGraph& fg) { return subdivide(canonicalize(fg).canon); }

CellPoly half_poly(std::int64_t a, std::int64_t b) { return CellPoly({a, b}); }

}  // namespace

TEST_CASE("subdivision shapes", "[fibers]") {
  SubdividedGraph loop_s = sub(FilteredGraph::trivial(loop()));
  CHECK(loop_s.poly() == half_poly(2, 2));

  // every theta edge is flipped (the vertex swap reverses all three)
  SubdividedGraph theta_s = sub(FilteredGraph::trivial(theta()));
  CHECK(theta_s.poly() == half_poly(5, 6));

  SubdividedGraph rose_s = sub(FilteredGraph::trivial(rose(2)));
  CHECK(rose_s.poly() == half_poly(3, 4));

  // the split filtration still flips all three edges
  SubdividedGraph split_s = sub(theta_split());
  CHECK(split_s.poly() == half_poly(5, 6));

  // degree-1 polynomial always
  for (const SubdividedGraph* s : {&loop_s, &theta_s, &rose_s, &split_s})
    CHECK(s->poly().degree() == 1);
}

TEST_CASE("subdivision can leave asymmetric edges whole", "[fibers]") {
  // In the k-gon with i loops at vertex i no automorphism moves a vertex, so
  // only the loops subdivide.
  SubdividedGraph s = sub(FilteredGraph::trivial(kgon_with_loops(3)));
  int full = 0, halves = 0;
  for (const auto& c : s.cells) {
    if (c.kind == SubdividedGraph::CellKind::FullEdge) ++full;
    if (c.kind == SubdividedGraph::CellKind::HalfEdge) ++halves;
  }
  CHECK(full == 3);        // the three k-gon edges
  CHECK(halves == 2 * 6);  // six loops
}

TEST_CASE("fixed subcomplex polynomials", "[fibers]") {
  SECTION("identity fixes everything") {
    SubdividedGraph s = sub(FilteredGraph::trivial(theta()));
    CHECK(fixed_subcomplex_poly(s, s.aut.elements[0]) == half_poly(5, 6));
  }
  SECTION("loop flip keeps the two vertices only") {
    SubdividedGraph s = sub(FilteredGraph::trivial(loop()));
    REQUIRE(s.aut.order() == 2);
    CHECK(fixed_subcomplex_poly(s, s.aut.elements[1]) == half_poly(2, 0));
  }
  SECTION("split theta: vertex swap fixes the midpoints, outer swap fixes the middle edge") {
    SubdividedGraph s = sub(theta_split());
    std::multiset<std::vector<std::int64_t>> polys;
    for (const auto& a : s.aut.elements) polys.insert(fixed_subcomplex_poly(s, a).coeffs());
    std::multiset<std::vector<std::int64_t>> expected{
        {5, 6},  // identity
        {3},     // vertex swap (all edges flipped, midpoints survive)
        {3, 2},  // top-bottom swap (middle edge pointwise fixed)
        {1}};    // their product (only the middle midpoint survives)
    CHECK(polys == expected);
  }
}

TEST_CASE("fiber polynomials of the three genus-2 complexes", "[fibers]") {
  // two marks: A = (5,6,3), B = (6,8,4), C = (11,18,10)
  CHECK(fiber_poly(sub(FilteredGraph::trivial(rose(2))), 2) == CellPoly({5, 6, 3}));
  CHECK(fiber_poly(sub(FilteredGraph::trivial(theta())), 2) == CellPoly({6, 8, 4}));
  CHECK(fiber_poly(sub(theta_split()), 2) == CellPoly({11, 18, 10}));
}

TEST_CASE("fiber polynomial of the circle", "[fibers]") {
  // (1/2)((2+2x)^n + 2^n)
  SubdividedGraph s = sub(FilteredGraph::trivial(loop()));
  for (int n = 0; n <= 8; ++n) {
    CellPoly expected = (half_poly(2, 2).pow(n) + CellPoly::constant(1 << n)).exact_div(2);
    CHECK(fiber_poly(s, n) == expected);
  }
}

TEST_CASE("zero marks give the one-point fiber", "[fibers]") {
  for (const FilteredGraph& fg :
       {FilteredGraph::trivial(loop()), theta_split(), FilteredGraph::trivial(k4())})
    CHECK(fiber_poly(sub(fg), 0) == CellPoly::one());
}

TEST_CASE("product cell counts multiply before quotienting", "[fibers]") {
  SubdividedGraph s = sub(theta_split());
  for (int n = 1; n <= 3; ++n) {
    // count all n-tuples by dimension
    std::vector<std::int64_t> counts;
    std::vector<int> tuple(n, 0);
    while (true) {
      int d = 0;
      for (int c : tuple) d += s.cells[c].dim;
      if (static_cast<int>(counts.size()) <= d) counts.resize(d + 1, 0);
      counts[d]++;
      int i = n - 1;
      while (i >= 0 && tuple[i] == static_cast<int>(s.cells.size()) - 1) tuple[i--] = 0;
      if (i < 0) break;
      tuple[i]++;
    }
    CHECK(CellPoly(counts) == s.poly().pow(n));
  }
}

TEST_CASE("cube orbits match the averaged polynomial and the catalog", "[fibers]") {
  FiberComplex a = build_fiber_complex(canonicalize(FilteredGraph::trivial(rose(2))).canon, 2);
  REQUIRE(a.poly == CellPoly({5, 6, 3}));  // construction cross-checks internally

  // the three 2-cubes of A: both marks on one half, the two halves of one
  // loop, and halves of the two different loops
  int same_half = 0, same_loop = 0, different_loops = 0;
  for (const CubeOrbit& o : a.orbits) {
    if (o.dim != 2) continue;
    int h1 = a.s.cells[o.cells[0]].ref, h2 = a.s.cells[o.cells[1]].ref;
    if (o.cells[0] == o.cells[1])
      ++same_half;
    else if (MultiGraph::edge_of(h1) == MultiGraph::edge_of(h2))
      ++same_loop;
    else
      ++different_loops;
  }
  CHECK(same_half == 1);
  CHECK(same_loop == 1);
  CHECK(different_loops == 1);

  FiberComplex c = build_fiber_complex(canonicalize(theta_split()).canon, 2);
  int dim2 = 0;
  for (const CubeOrbit& o : c.orbits)
    if (o.dim == 2) ++dim2;
  CHECK(dim2 == 10);

  // n = 0: exactly the empty-tuple orbit
  FiberComplex e = build_fiber_complex(canonicalize(theta_split()).canon, 0);
  REQUIRE(e.orbits.size() == 1);
  CHECK(e.orbits[0].dim == 0);
}

TEST_CASE("setwise-stabilized cubes are fixed pointwise", "[fibers]") {
  for (const FilteredGraph& fg : {FilteredGraph::trivial(rose(2)), theta_split()}) {
    FiberComplex f = build_fiber_complex(canonicalize(fg).canon, 2);
    for (const CubeOrbit& o : f.orbits) {
      for (const Automorphism& a : f.s.aut.elements) {
        bool setwise = true;
        for (int c : o.cells)
          if (f.s.apply(a, c) != c) setwise = false;
        if (!setwise) continue;
        // pointwise: no fixed 1-cell may be an edge the element flips
        for (int c : o.cells) {
          if (f.s.cells[c].dim != 1) continue;
          if (f.s.cells[c].kind == SubdividedGraph::CellKind::FullEdge)
            CHECK_FALSE(a.flips_edge(f.s.cells[c].ref));
          else
            CHECK(a.half[f.s.cells[c].ref] == f.s.cells[c].ref);
        }
      }
    }
  }
}

TEST_CASE("fiber boundary lands one dimension lower with folds counted", "[fibers]") {
  FiberComplex f = build_fiber_complex(canonicalize(FilteredGraph::trivial(rose(2))).canon, 2);
  for (size_t i = 0; i < f.orbits.size(); ++i) {
    for (auto [t, m] : f.cube_boundary(static_cast<int>(i))) {
      CHECK(f.orbits[t].dim == f.orbits[i].dim - 1);
      CHECK(m >= 1);
    }
  }
  // two of the three 2-cubes share their entire boundary (they close into a
  // sphere)
  std::vector<int> dim2;
  for (size_t i = 0; i < f.orbits.size(); ++i)
    if (f.orbits[i].dim == 2) dim2.push_back(static_cast<int>(i));
  REQUIRE(dim2.size() == 3);
  std::map<std::vector<std::pair<int, int>>, int> boundary_count;
  for (int o : dim2) boundary_count[f.cube_boundary(o)]++;
  bool found_pair = false;
  for (auto& [b, n] : boundary_count)
    if (n == 2) found_pair = true;
  CHECK(found_pair);
}

namespace {

/// Conjugate the induced automorphism of the shrunken graph into the labels
/// of its canonical representative.
Automorphism conjugate_to_canon(const Automorphism& a, const CanonicalResult& w, int num_halves,
                                int num_vertices) {
  Automorphism out;
  out.half.assign(num_halves, -1);
  out.vertex.assign(num_vertices, -1);
  for (size_t h = 0; h < a.half.size(); ++h)
    out.half[w.half_to_canon[h]] = w.half_to_canon[a.half[h]];
  for (size_t v = 0; v < a.vertex.size(); ++v)
    out.vertex[w.vertex_to_canon[v]] = w.vertex_to_canon[a.vertex[v]];
  return out;
}

}  // namespace

TEST_CASE("shrink transport is equivariant (cell level)", "[fibers]") {
  // psi(a(x)) == iota(a)(psi(x)) for every cell and every automorphism
  FilteredGraph src = canonicalize(theta_split()).canon;
  SubdividedGraph src_s = subdivide(src);
  ShrinkResult sh = shrink_first_block(src);
  CanonicalResult canon = canonicalize(sh.fg);
  SubdividedGraph dst_s = subdivide(canon.canon);
  CellTransport t = shrink_transport(src_s, dst_s);

  for (const Automorphism& a : src_s.aut.elements) {
    Automorphism ind = conjugate_to_canon(induced_on_shrink(src, sh, a), canon,
                                          dst_s.base.graph().num_half_edges(),
                                          dst_s.base.graph().num_vertices());
    for (size_t c = 0; c < src_s.cells.size(); ++c) {
      int ac = src_s.apply(a, static_cast<int>(c));
      if (t.dropped_to[c] != -1) {
        REQUIRE(t.dropped_to[ac] != -1);
        CHECK(dst_s.apply(ind, t.dropped_to[c]) == t.dropped_to[ac]);
        continue;
      }
      std::set<int> lhs(t.image[ac].begin(), t.image[ac].end());
      std::set<int> rhs;
      for (int img : t.image[c]) rhs.insert(dst_s.apply(ind, img));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("structure maps on the ten 2-cubes match the table", "[fibers]") {
  // Classify cubes by block pattern, half-sharing and endpoint-sharing; the
  // images under the shrink map (to the two-loop complex) and the merge map
  // (to the plain theta complex) follow the published table, with the shrink
  // map degenerating exactly on cubes that put a mark on the short edge.
  FilteredGraph c_rep = canonicalize(theta_split()).canon;
  FiberComplex C = build_fiber_complex(c_rep, 2);

  FilteredGraph a_rep = canonicalize(shrink_first_block(c_rep).fg).canon;
  FiberComplex A = build_fiber_complex(a_rep, 2);
  CellTransport f_t = shrink_transport(C.s, A.s);

  FilteredGraph b_rep = canonicalize(merge_blocks(c_rep, 0)).canon;
  FiberComplex B = build_fiber_complex(b_rep, 2);
  CellTransport g_t = merge_transport(C.s, 0, B.s);

  auto classify_pair = [](const FiberComplex& F, const CubeOrbit& o,
                          bool with_blocks) -> std::string {
    const MultiGraph& g = F.s.base.graph();
    int h1 = F.s.cells[o.cells[0]].ref, h2 = F.s.cells[o.cells[1]].ref;
    int e1 = MultiGraph::edge_of(h1), e2 = MultiGraph::edge_of(h2);
    std::string tag;
    if (with_blocks) {
      tag += F.s.base.block_of(e1) == 0 ? 'd' : 'e';
      tag += F.s.base.block_of(e2) == 0 ? 'd' : 'e';
      tag += ':';
    }
    if (h1 == h2) return tag + "same-half";
    if (e1 == e2) return tag + "same-edge";
    return tag + (g.vertex_of(h1) == g.vertex_of(h2) ? "adjacent" : "opposite");
  };

  std::map<std::string, std::pair<std::string, std::string>> expected{
      {"ee:same-half", {"same-half", "same-half"}},
      {"ee:same-edge", {"same-edge", "same-edge"}},
      {"ee:adjacent", {"different-loops", "adjacent"}},
      {"ee:opposite", {"different-loops", "opposite"}},
      {"dd:same-half", {"*", "same-half"}},
      {"dd:same-edge", {"*", "same-edge"}},
      {"de:adjacent", {"*", "adjacent"}},
      {"de:opposite", {"*", "opposite"}},
      {"ed:adjacent", {"*", "adjacent"}},
      {"ed:opposite", {"*", "opposite"}},
  };
  auto classify_a = [&](const CubeOrbit& o) -> std::string {
    int h1 = A.s.cells[o.cells[0]].ref, h2 = A.s.cells[o.cells[1]].ref;
    if (h1 == h2) return "same-half";
    if (MultiGraph::edge_of(h1) == MultiGraph::edge_of(h2)) return "same-edge";
    return "different-loops";
  };

  int checked = 0;
  for (size_t i = 0; i < C.orbits.size(); ++i) {
    const CubeOrbit& o = C.orbits[i];
    if (o.dim != 2) continue;
    std::string key = classify_pair(C, o, true);
    REQUIRE(expected.count(key) == 1);
    auto [f_want, g_want] = expected[key];

    std::optional<int> f_img = structure_map(C, f_t, A, static_cast<int>(i));
    if (f_want == "*") {
      CHECK_FALSE(f_img.has_value());
    } else {
      REQUIRE(f_img.has_value());
      CHECK(classify_a(A.orbits[*f_img]) == f_want);
      CHECK(A.orbits[*f_img].dim == 2);
    }

    std::optional<int> g_img = structure_map(C, g_t, B, static_cast<int>(i));
    REQUIRE(g_img.has_value());
    CHECK(classify_pair(B, B.orbits[*g_img], false) == g_want);
    CHECK(B.orbits[*g_img].dim == 2);
    ++checked;
  }
  CHECK(checked == 10);
}

TEST_CASE("merge maps fix vertex tuples", "[fibers]") {
  FilteredGraph c_rep = canonicalize(theta_split()).canon;
  FiberComplex C = build_fiber_complex(c_rep, 2);
  FilteredGraph b_rep = canonicalize(merge_blocks(c_rep, 0)).canon;
  FiberComplex B = build_fiber_complex(b_rep, 2);
  CellTransport t = merge_transport(C.s, 0, B.s);
  for (size_t i = 0; i < C.orbits.size(); ++i) {
    if (C.orbits[i].dim != 0) continue;
    std::optional<int> img = structure_map(C, t, B, static_cast<int>(i));
    REQUIRE(img.has_value());
    CHECK(B.orbits[*img].dim == 0);
  }
}
