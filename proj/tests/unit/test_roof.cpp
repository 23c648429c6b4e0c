#include "fixtures.hpp"

#include "gable/error.hpp"
#include "gable/roof.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace gable;

TEST_CASE("roof of small term lists") {
  CHECK(roof(TermList(0, {{5, {0}}})).is_zero());

  GableChain ab = roof(TermList(0, {{1, {0}}, {1, {1}}}));
  CHECK(ab.terms().size() == 1);
  CHECK(ab.coefficient({{0, 1}}) == 1);

  GableChain abc = roof(TermList(0, {{2, {0}}, {3, {1}}, {1, {2}}}));
  CHECK(abc.coefficient({{0, 1}}) == 6);
  CHECK(abc.coefficient({{0, 2}}) == 2);
  CHECK(abc.coefficient({{1, 2}}) == 3);
  CHECK(abc.terms().size() == 3);

  // Duplicate symbols merge before roofing.
  CHECK(roof(TermList(0, {{1, {0}}, {1, {0}}})).is_zero());
  CHECK(TermList(0, {{1, {0}}, {1, {0}}}).terms().size() == 1);

  try {
    roof(TermList(1, {{1, {0, 1}}, {1, {1, 2}}}));
    FAIL("odd k accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == "odd-dimension");
  }
}

TEST_CASE("roof is invariant under term order and scales cross terms") {
  std::vector<std::pair<Integer, SimplexSymbol>> terms{{1, {0, 1, 2}}, {-2, {0, 2, 3}}, {3, {1, 2, 3}}, {1, {0, 1, 3}}};
  GableChain base = roof(TermList(2, terms));
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  do {
    CHECK(roof(TermList(2, terms)) == base);
  } while (std::next_permutation(terms.begin(), terms.end(),
                                 [](const auto& a, const auto& b) { return a.second < b.second; }));

  GableChain pair = roof(TermList(0, {{1, {0}}, {1, {1}}}));
  GableChain scaled = roof(TermList(0, {{7, {0}}, {1, {1}}}));
  CHECK(scaled.coefficient({{0, 1}}) == 7 * pair.coefficient({{0, 1}}));
}

TEST_CASE("touches_diagonal") {
  Realization r = vertex_realization(fixtures::make(3, {{0, 1, 2}}));
  CHECK(!touches_diagonal({{0, 1}}, r));
  CHECK(touches_diagonal({{0, 1}, {1, 0}}, r));
  CHECK(touches_diagonal({{0, 1}, {2, 2}}, r));
  CHECK(!touches_diagonal({{0, 1}, {0, 2}, {1, 2}}, r));
  // (0,1),(1,2),(2,0): the uniform combination has equal components.
  CHECK(touches_diagonal({{0, 1}, {1, 2}, {2, 0}}, r));

  // Grid-sampling falsification: whenever the test says no, no sampled point is diagonal.
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> v(0, 2);
  for (int trial = 0; trial < 60; ++trial) {
    ProductSimplex s;
    for (int i = 0; i < 3; ++i) s.emplace_back(v(rng), v(rng));
    if (touches_diagonal(s, r)) continue;
    const int n = 6;
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        std::vector<Rational> w{Rational(a, n), Rational(b, n), Rational(n - a - b, n)};
        std::vector<RationalPoint> left, right;
        for (const auto& [x, y] : s) {
          left.push_back(r[x]);
          right.push_back(r[y]);
        }
        CHECK(!(affine_combination(left, w) == affine_combination(right, w)));
      }
  }
}

TEST_CASE("relative cycle classes on the edge gable") {
  SimplicialComplex edge = fixtures::make(2, {{0, 1}});
  GableComplex g(edge);
  DiagonalRegion region = diagonal_region(g);
  RelativeClass zero = relative_cycle_class(GableChain(0), g, region);
  CHECK(zero.is_relative_cycle);
  CHECK(std::all_of(zero.coordinates.begin(), zero.coordinates.end(), [](const Integer& x) { return x == 0; }));

  RelativeClass ab = relative_cycle_class(roof(TermList(0, {{1, {0}}, {1, {1}}})), g, region);
  CHECK(ab.is_relative_cycle);
  CHECK(ab.group.is_trivial());

  GableChain outside(1);
  outside.add({{0, 1}, {1, 0}}, 1);
  CHECK_THROWS_AS(relative_cycle_class(outside, g, region), Error);
}

TEST_CASE("representative independence on the edge") {
  SimplicialComplex edge = fixtures::make(2, {{0, 1}});
  GableComplex g(edge);
  TermList sigma(0, {{1, {0}}, {1, {1}}});
  TermList nu(1, {{1, {0, 1}}});
  DiagonalRegion region = region_union(diagonal_region(g), region_from_cells(g, nu_square_cells(nu)));
  IndependenceReport rep = representative_independence_check(sigma, nu, g, region);
  CHECK(rep.preconditions_ok);
  CHECK(rep.holds);
  CHECK(representative_independence_check(sigma, TermList(1), g, region).holds);
}

TEST_CASE("region precondition violations are reported") {
  SimplicialComplex tri = fixtures::make(3, {{0, 1, 2}});
  GableComplex g(tri);
  DiagonalRegion empty{};
  TermList sigma(0, {{1, {0}}, {1, {2}}});
  TermList nu(1, {{1, {0, 2}}});
  IndependenceReport rep = representative_independence_check(sigma, nu, g, empty);
  CHECK(!rep.preconditions_ok);
  CHECK(rep.violation.find("region misses") == 0);
}

TEST_CASE("fundamental roof checks") {
  SimplicialComplex two_points = fixtures::make(2, {{0}, {1}});
  FundamentalReport pts = fundamental_roof_check(two_points, TermList(0, {{1, {0}}, {1, {1}}}));
  CHECK(pts.ok());
  CHECK(pts.support_size == 1);

  SimplicialComplex sphere = fixtures::make(4, fixtures::boundary_delta3_facets());
  FundamentalReport s = fundamental_roof_check(sphere, fundamental_terms(sphere, 2));
  CHECK(s.ok());
  CHECK(s.support_size == 36);
  CHECK_THROWS_AS(fundamental_roof_check(sphere, TermList(2, {{1, {0, 1, 2}}})), Error);
}

TEST_CASE("roof family on nested regions of the sphere gable") {
  SimplicialComplex sphere = fixtures::make(4, fixtures::boundary_delta3_facets());
  GableComplex g(sphere);
  TermList f = fundamental_terms(sphere, 2);
  DiagonalRegion inner = diagonal_region(g);
  RoofFamily single = roof_family(f, g, {inner});
  REQUIRE(single.levels.size() == 1);
  CHECK(single.levels[0].is_relative_cycle);
  CHECK(single.levels[0].group.to_string() == "Z");

  std::vector<ProductSimplex> extra;
  for (const auto& cell : g.cells(4)) {
    auto where = g.locate(cell);
    if (!inner.contains(4, where->first)) extra.push_back(cell);
    if (extra.size() == 3) break;
  }
  DiagonalRegion outer = region_union(inner, region_from_cells(g, extra));
  RoofFamily fam = roof_family(f, g, {outer, inner});
  CHECK(fam.all_compatible);
  RoofFamily same = roof_family(f, g, {inner, inner, inner});
  CHECK(same.all_compatible);
  CHECK(same.levels[0].coordinates == same.levels[2].coordinates);
  CHECK_THROWS_AS(roof_family(f, g, {inner, outer}), Error);
}
