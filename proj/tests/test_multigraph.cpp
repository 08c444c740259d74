#include "tropmod/multigraph.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <numeric>

#include "fixtures.hpp"
#include "tropmod/filtered_graph.hpp"

using namespace tropmod;
using namespace fixtures;

TEST_CASE("genus of small graphs", "[multigraph]") {
  CHECK(genus(loop()) == 1);
  CHECK(genus(theta()) == 2);
  CHECK(genus(rose(2)) == 2);
  CHECK(genus(k4()) == 3);
  CHECK(genus(fish()) == 3);
}

TEST_CASE("construction rejects bad input", "[multigraph]") {
  CHECK_THROWS_AS(MultiGraph(1, {}), InvalidArgument);                  // degenerate
  CHECK_THROWS_AS(MultiGraph(2, {{0, 0}, {1, 1}}), InvalidArgument);    // disconnected
  CHECK_THROWS_AS(MultiGraph(2, {{0, 2}}), InvalidArgument);            // out of range
}

TEST_CASE("bridges", "[multigraph]") {
  CHECK(bridges(dumbbell()) == EdgeSet{1});
  CHECK(bridges(theta()).empty());
  CHECK(bridges(loop()).empty());
}

TEST_CASE("stability", "[multigraph]") {
  CHECK(is_stable(loop()));
  CHECK_FALSE(is_stable(dumbbell()));
  CHECK(is_stable(theta()));
  CHECK(is_stable(k4()));
  // Square: every vertex has valency 2, none with a loop.
  MultiGraph square(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK_FALSE(is_stable(square));
}

TEST_CASE("forests", "[multigraph]") {
  CHECK(is_forest(theta(), {0}));
  CHECK_FALSE(is_forest(theta(), {0, 1}));  // parallel pair is a cycle
  CHECK(is_forest(theta(), {}));
  CHECK_FALSE(is_forest(rose(2), {0}));  // loop
  CHECK(is_forest(k4(), {0, 1, 2}));     // star spanning tree
  CHECK_FALSE(is_forest(k4(), {0, 3, 1}));  // triangle 0-1-2
}

TEST_CASE("contraction", "[multigraph]") {
  SECTION("theta / one edge = two loops at one vertex") {
    Contraction c = contract(theta(), {0});
    CHECK(c.graph.num_vertices() == 1);
    CHECK(c.graph.num_edges() == 2);
    CHECK(c.graph.is_loop(0));
    CHECK(c.graph.is_loop(1));
    CHECK(genus(c.graph) == 2);
  }
  SECTION("empty contraction is the identity") {
    Contraction c = contract(k4(), {});
    CHECK(c.graph == k4());
  }
  SECTION("contracting a spanning tree of a trivalent genus-3 graph") {
    Contraction c = contract(k4(), {0, 1, 2});
    CHECK(c.graph.num_vertices() == 1);
    CHECK(genus(c.graph) == 3);
    CHECK(c.graph.num_edges() == 3);
  }
  SECTION("non-forest input is rejected") {
    CHECK_THROWS_AS(contract(theta(), {0, 1}), InvalidArgument);
    CHECK_THROWS_AS(contract(rose(2), {0}), InvalidArgument);
  }
  SECTION("genus preserved, vertex count drops by |s|") {
    const MultiGraph g = fish();
    for (EdgeSet s : {EdgeSet{}, EdgeSet{0}, EdgeSet{2}, EdgeSet{0, 2}, EdgeSet{4, 0}}) {
      if (!is_forest(g, s)) continue;
      Contraction c = contract(g, s);
      CHECK(genus(c.graph) == genus(g));
      CHECK(c.graph.num_vertices() == g.num_vertices() - static_cast<int>(s.size()));
    }
  }
}

TEST_CASE("handshake: sum of valencies is twice the edge count", "[multigraph]") {
  for (const MultiGraph& g : {loop(), theta(), rose(3), k4(), fish(), dumbbell()}) {
    int total = 0;
    for (int v = 0; v < g.num_vertices(); ++v) total += g.valency(v);
    CHECK(total == 2 * g.num_edges());
  }
}

TEST_CASE("bridgeless graphs have every edge on a cycle", "[multigraph]") {
  // Explicit cycle search, independent of the bridge computation: edge e lies
  // on a cycle iff its endpoints stay connected without it (loops trivially).
  auto on_cycle = [](const MultiGraph& g, int e) {
    if (g.is_loop(e)) return true;
    auto [u, w] = g.endpoints(e);
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<int> stack{u};
    seen[u] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int h = 0; h < g.num_half_edges(); ++h) {
        if (g.vertex_of(h) != x || MultiGraph::edge_of(h) == e) continue;
        int y = g.vertex_of(MultiGraph::mate(h));
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    return seen[w] == 1;
  };
  for (const MultiGraph& g : {loop(), theta(), rose(3), k4(), fish(), kgon_with_loops(3)}) {
    REQUIRE(bridges(g).empty());
    for (int e = 0; e < g.num_edges(); ++e) CHECK(on_cycle(g, e));
  }
}

TEST_CASE("text round trip", "[multigraph]") {
  for (const MultiGraph& g : {loop(), theta(), k4(), fish(), kgon_with_loops(4)}) {
    MultiGraph back = MultiGraph::from_text(g.to_text());
    CHECK(back == g);
  }
}

TEST_CASE("filtered graph validation", "[filtered]") {
  CHECK_THROWS_AS(FilteredGraph(theta(), {{0}, {1}}), InvalidArgument);        // misses e2
  CHECK_THROWS_AS(FilteredGraph(theta(), {{0, 1}, {1, 2}}), InvalidArgument);  // overlap
  CHECK_THROWS_AS(FilteredGraph(theta(), {{}, {0, 1, 2}}), InvalidArgument);   // empty block
  FilteredGraph fg = theta_split();
  CHECK(fg.depth() == 2);
  CHECK(fg.block_of(0) == 0);
  CHECK(fg.block_of(2) == 1);
  CHECK(fg.filtered_by_forests());
  CHECK_FALSE(FilteredGraph(theta(), {{0, 1}, {2}}).filtered_by_forests());
  CHECK(FilteredGraph::trivial(rose(2)).filtered_by_forests());
}

TEST_CASE("merge and shrink", "[filtered]") {
  FilteredGraph fg = theta_split();
  SECTION("merge gives the trivial filtration") {
    FilteredGraph merged = merge_blocks(fg, 0);
    CHECK(merged.depth() == 1);
    CHECK(merged.blocks()[0] == EdgeSet{0, 1, 2});
  }
  SECTION("shrink contracts the first block") {
    ShrinkResult sh = shrink_first_block(fg);
    CHECK(sh.fg.depth() == 1);
    CHECK(sh.fg.graph().num_vertices() == 1);
    CHECK(sh.fg.graph().num_edges() == 2);
    CHECK(sh.edge_map[0] == -1);
    CHECK(sh.edge_map[1] == 0);
  }
  CHECK_THROWS_AS(shrink_first_block(FilteredGraph::trivial(theta())), InvalidArgument);
}
