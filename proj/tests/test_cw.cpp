#include "tropmod/cw_complex.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <map>

#include "fixtures.hpp"

using namespace tropmod;
using namespace fixtures;

namespace {

/// Closed form for the genus-2 Euler characteristic:
/// (1/24)(-3^n + (-1)^(n+1) + 2^(n+2) + 18 + 4*[n=0]).
std::int64_t chi2_closed_form(int n) {
  std::int64_t pow3 = 1, pow2 = 4;
  for (int i = 0; i < n; ++i) pow3 *= 3, pow2 *= 2;
  std::int64_t value = -pow3 + ((n % 2 == 0) ? -1 : 1) + pow2 + 18 + (n == 0 ? 4 : 0);
  REQUIRE(value % 24 == 0);
  return value / 24;
}

}  // namespace

TEST_CASE("zero marks reproduce the base complex", "[cw]") {
  for (int g : {1, 2}) {
    DeltaComplex delta = build_delta(g);
    CWComplex cw = build_cw(delta, 0);
    CHECK(cw.cells.size() == delta.cells.size());
    std::vector<int> f = delta.f_vector();
    CHECK(total_poly(delta, 0).coeffs() == std::vector<std::int64_t>(f.begin(), f.end()));
  }
  // genus 2 with no marks is the 1-simplex
  CHECK(total_poly(2, 0) == CellPoly({2, 1}));
  ChainComplexZ2 cc = build_cw(2, 0).chain();
  CHECK(cc.cell_counts == std::vector<std::int64_t>{2, 1});
  CHECK(reduced_trivial(cc.betti()));
}

TEST_CASE("genus 2, one mark: the known 2-complex", "[cw]") {
  CWComplex cw = build_cw(2, 1);
  CHECK(cw.counts_by_dim() == std::vector<std::int64_t>{4, 5, 2});
  ChainComplexZ2 cc = cw.chain();
  CHECK(cc.euler() == 1);
  CHECK(reduced_trivial(cc.betti()));
  // and it collapses
  CollapseCertificate cert = collapse_search(cw.face_complex(), 0);
  CHECK(cert.collapsible);
  CHECK(cw.warnings.empty());
}

TEST_CASE("genus 2, two marks", "[cw]") {
  CWComplex cw = build_cw(2, 2);
  // fiber polynomials inside the total: (5,6,3) + (6,8,4) + x*(11,18,10)
  CHECK(cw.counts_by_dim() == std::vector<std::int64_t>{11, 25, 25, 10});
  ChainComplexZ2 cc = cw.chain();
  CHECK(cc.euler() == 1);
  CHECK(reduced_trivial(cc.betti()));
}

TEST_CASE("fiber-only homology of the three genus-2 complexes", "[cw]") {
  // A and B are 2-spheres, C a wedge of two 2-spheres
  FiberComplex A = build_fiber_complex(canonicalize(FilteredGraph::trivial(rose(2))).canon, 2);
  CHECK(fiber_chain_complex(A).betti() == std::vector<std::int64_t>{1, 0, 1});
  FiberComplex B = build_fiber_complex(canonicalize(FilteredGraph::trivial(theta())).canon, 2);
  CHECK(fiber_chain_complex(B).betti() == std::vector<std::int64_t>{1, 0, 1});
  FiberComplex C = build_fiber_complex(canonicalize(theta_split()).canon, 2);
  CHECK(fiber_chain_complex(C).betti() == std::vector<std::int64_t>{1, 0, 2});
}

TEST_CASE("genus-1 fibers: circle quotients", "[cw]") {
  DeltaComplex delta = build_delta(1);
  // two marks on the circle modulo reflection: a 2-sphere
  CWComplex cw = build_cw(delta, 2);
  CHECK(cw.chain().betti() == std::vector<std::int64_t>{1, 0, 1});
  // the total polynomial is (1/2)((2+2x)^n + 2^n)
  for (int n = 0; n <= 10; ++n) {
    CellPoly expected =
        (CellPoly({2, 2}).pow(n) + CellPoly::constant(1ll << n)).exact_div(2);
    CHECK(total_poly(delta, n) == expected);
  }
}

TEST_CASE("euler characteristic table for genus 2", "[cw]") {
  DeltaComplex delta = build_delta(2);
  std::vector<std::int64_t> expected{1, 1, 1, 1, 0, -4};
  for (int n = 0; n <= 5; ++n) CHECK(euler_x(delta, n) == expected[n]);
  for (int n = 0; n <= 10; ++n) CHECK(euler_x(delta, n) == chi2_closed_form(n));
}

TEST_CASE("signed fiber aggregation matches the published closed form", "[cw]") {
  // Collecting (sign * 24 / |Aut|) copies of each fixed-subcomplex
  // polynomial over the three cells of the genus-2 base gives exactly
  // 3*(3+4x)^n - 4*(5+6x)^n + 6*(3+2x)^n - 3^n + 4*2^n + 12 + 4*0^n,
  // all over 24.
  DeltaComplex delta = build_delta(2);
  std::map<std::vector<std::int64_t>, std::int64_t> weights;
  for (const DeltaCell& cell : delta.cells) {
    SubdividedGraph s = subdivide(cell.cls.representative);
    std::int64_t scale = 24 / s.aut.order();
    if (cell.dim % 2 == 1) scale = -scale;
    for (const Automorphism& a : s.aut.elements)
      weights[fixed_subcomplex_poly(s, a).coeffs()] += scale;
  }
  std::map<std::vector<std::int64_t>, std::int64_t> expected{
      {{3, 4}, 3}, {{5, 6}, -4}, {{3, 2}, 6}, {{3}, -1}, {{2}, 4}, {{1}, 12}, {{}, 4}};
  // ({} is the empty fixed complex, the 0^n term)
  CHECK(weights == expected);
}

TEST_CASE("boundary maps square to zero on every built complex", "[cw][slow]") {
  // verify_dd runs inside chain(); also cover genus 3 at one mark
  for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {3, 1}}) {
    CWComplex cw = build_cw(g, n);
    ChainComplexZ2 cc = cw.chain();  // throws if dd != 0
    CHECK(cc.euler() == euler_x(cw.delta, n));
    // alternating Betti sum equals the Euler characteristic
    std::int64_t alt = 0;
    std::vector<std::int64_t> b = cc.betti();
    for (size_t d = 0; d < b.size(); ++d) alt += (d % 2 == 0) ? b[d] : -b[d];
    CHECK(alt == cc.euler());
    CHECK(cw.warnings.empty());
  }
}

TEST_CASE("genus 2 with four marks has nontrivial reduced homology", "[cw][slow]") {
  CWComplex cw = build_cw(2, 4);
  ChainComplexZ2 cc = cw.chain();
  CHECK(cc.euler() == 0);
  std::vector<std::int64_t> b = cc.betti();
  CHECK_FALSE(reduced_trivial(b));
  INFO("betti(X_{2,4}) = [" << [&] {
    std::string s;
    for (auto x : b) s += std::to_string(x) + " ";
    return s;
  }() << "]");
}

TEST_CASE("asymptotic coefficients of the Euler characteristic", "[cw][slow]") {
  AsymptoticReport g1 = asymptotic_coefficient(1);
  CHECK(g1.base == 2);
  CHECK(g1.coefficient == Rational(1, 4));
  CHECK(g1.anomalies.empty());

  AsymptoticReport g2 = asymptotic_coefficient(2);
  CHECK(g2.base == 3);
  CHECK(g2.coefficient == Rational(-1, 24));
  CHECK(g2.anomalies.empty());

  AsymptoticReport g3 = asymptotic_coefficient(3);
  CHECK(g3.base == 4);
  CHECK(g3.coefficient == Rational(1, 48));
  CHECK(g3.anomalies.empty());
}

TEST_CASE("genus-2 coefficient cross-check against the closed form", "[cw]") {
  // chi(X_{2,n}) = (1/24)(-3^n + ...): the coefficient of 3^n is -1/24.
  AsymptoticReport g2 = asymptotic_coefficient(2);
  CHECK(g2.coefficient == Rational(-1, 24));
}
