#include "fixtures.hpp"
#include "oracles.hpp"

#include "gable/cech.hpp"
#include "gable/error.hpp"

#include <doctest.h>

#include <random>

using namespace gable;

namespace {

std::vector<std::vector<int>> facets_of(const SimplicialComplex& k) {
  std::vector<std::vector<int>> out;
  for (const auto& f : k.facets()) out.emplace_back(f.begin(), f.end());
  return out;
}

std::string h(const ComplexPair& p, int k) { return homology(p, k).factors.to_string(); }

PointCloud hexagon() {
  return {{"a", "b", "c", "d", "e", "f"}, {{2, 0}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}}};
}

}  // namespace

TEST_CASE("nerve examples") {
  GroundPair g = fixtures::circle_ground(6);
  CoverPair whole;
  whole.sets["X"] = {g.points.begin(), g.points.end()};
  ComplexPair point = nerve(g, whole);
  CHECK(point.complex().vertex_count() == 1);
  CHECK(point.complex().dimension() == 0);

  ComplexPair circle = nerve(g, fixtures::three_arcs());
  CHECK(circle.complex().labels() == std::vector<std::string>{"U1", "U2", "U3"});
  CHECK(circle.complex().count(1) == 3);
  CHECK(circle.complex().count(2) == 0);
  CHECK(h(circle, 1) == "Z");
  auto oracle = oracle::simplicial_homology(facets_of(circle.complex()));
  CHECK(oracle[1].free_rank == 1);

  CoverPair split;
  split.sets["L"] = {"p0", "p1", "p2"};
  split.sets["R"] = {"p3", "p4", "p5"};
  split.sets["Z"] = {};
  ComplexPair two = nerve(g, split);
  CHECK(two.complex().vertex_count() == 2);
  CHECK(two.complex().count(1) == 0);

  CoverPair holes = split;
  holes.sets["R"].erase("p4");
  try {
    nerve(g, holes);
    FAIL("uncovered point accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == "invalid-cover");
    CHECK(e.witness() == "p4");
  }
}

TEST_CASE("nerve of sets with a common point is a full simplex") {
  GroundPair g = fixtures::circle_ground(8);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    CoverPair c;
    std::uniform_int_distribution<int> count(1, 5), coin(0, 1);
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      auto& s = c.sets["S" + std::to_string(i)];
      s.insert("p0");
      for (const auto& p : g.points)
        if (coin(rng)) s.insert(p);
    }
    c.sets["S0"].insert(g.points.begin(), g.points.end());
    ComplexPair p = nerve(g, c);
    CHECK(p.complex().dimension() == n - 1);
    CHECK(p.complex().count(n - 1) == 1);
    CHECK(h(p, 0) == "Z");
    for (int k = 1; k < n; ++k) CHECK(h(p, k) == "0");
  }
}

TEST_CASE("relative subnerve follows the A-intersection rule") {
  GroundPair g = fixtures::circle_ground(6);
  g.subset_a = {"p0"};
  CoverPair c = fixtures::three_arcs();
  c.relative = {"U1", "U3"};
  ComplexPair p = nerve(g, c);
  CHECK(p.sub().labels() == std::vector<std::string>{"U1", "U3"});
  CHECK(p.sub().count(1) == 1);
  // U1 and U2 meet in p2, which is not in A, and U2 is not relative.
  CHECK(!p.in_sub({0, 1}));
  CHECK(p.in_sub({0, 2}));
  CHECK(h(p, 1) == "Z");

  c.relative = {"U2"};
  CHECK_THROWS_AS(nerve(g, c), Error);
}

TEST_CASE("common refinement") {
  GroundPair g = fixtures::circle_ground(6);
  CoverPair c = fixtures::three_arcs();
  CommonRefinement self = common_refinement(g, c, c);
  std::set<std::set<std::string>> want, got;
  for (const auto& [n, s] : c.sets) want.insert(s);
  for (const auto& [n, s] : self.cover.sets)
    if (s.size() == 3) got.insert(s);
  CHECK(got == want);

  CoverPair rotated = fixtures::arc_cover(6, {{1, 3}, {3, 3}, {5, 3}}, "R");
  CommonRefinement both = common_refinement(g, c, rotated);
  CHECK(both.cover.sets.size() == 6);
  CHECK(!witness_failure(both.cover, c, both.to_first));
  CHECK(!witness_failure(both.cover, rotated, both.to_second));
  CHECK(h(nerve(g, both.cover), 1) == "Z");

  CoverPair whole;
  whole.sets["X"] = {g.points.begin(), g.points.end()};
  CommonRefinement same = common_refinement(g, c, whole);
  CHECK(same.cover.sets.size() == 3);
  CHECK(same.cover.sets.at("(U2,X)") == c.sets.at("U2"));
}

TEST_CASE("composite projections through a refinement agree on homology") {
  GroundPair g = fixtures::circle_ground(6);
  CoverPair coarse = fixtures::three_arcs();
  CoverPair fine = fixtures::six_arcs();
  CommonRefinement w = common_refinement(g, coarse, fine);
  GroupMorphism direct = projection_homology_map(g, w.cover, coarse, w.to_first, 1);
  GroupMorphism via = projection_homology_map(g, fine, coarse, std::nullopt, 1)
                          .compose(projection_homology_map(g, w.cover, fine, w.to_second, 1));
  CHECK(direct.equals(via));
}

TEST_CASE("projections") {
  GroundPair g = fixtures::circle_ground(6);
  CoverPair c = fixtures::three_arcs();
  Projection id = projection(g, c, c);
  CHECK(id.vertex_map == std::vector<std::size_t>{0, 1, 2});
  CHECK(projection_homology_map(g, c, c, std::nullopt, 1).equals(
      GroupMorphism::identity(homology_group(nerve(g, c), 1).group())));

  // {p2} lies in U1 and U2; the smaller name wins every time.
  CoverPair fine = fixtures::six_arcs();
  fine.sets["B"] = {"p2"};
  for (int i = 0; i < 3; ++i) CHECK(projection(g, fine, c).witness.assignment.at("B") == "U1");
  CHECK(all_witnesses(fine, c).size() == 2);

  try {
    projection(g, c, fine);
    FAIL("coarse accepted as refinement of fine");
  } catch (const Error& e) {
    CHECK(e.kind() == "not-a-refinement");
    CHECK(e.witness() == "U1");
  }
  RefinementWitness bad = *find_witness(fine, c);
  bad.assignment["A1"] = "U2";
  try {
    projection(g, fine, c, bad);
    FAIL("bad witness accepted");
  } catch (const Error& e) {
    CHECK(e.witness() == "A1 is not contained in U2");
  }
}

TEST_CASE("projection homology maps do not depend on the witness") {
  GroundPair g = fixtures::circle_ground(12);
  CoverPair coarse = fixtures::wide_arcs();
  CoverPair fine = fixtures::narrow_arcs();
  auto witnesses = all_witnesses(fine, coarse);
  REQUIRE(witnesses.size() == 8);
  GroupMorphism first = projection_homology_map(g, fine, coarse, witnesses.front(), 1);
  CHECK(first.source().invariant_factors().to_string() == "Z");
  CHECK(first.target().invariant_factors().to_string() == "Z");
  for (const auto& w : witnesses) {
    CHECK(projection_homology_map(g, fine, coarse, w, 1).equals(first));
    CHECK(projection_homology_map(g, fine, coarse, w, 0).equals(projection_homology_map(g, fine, coarse, witnesses[0], 0)));
  }
  // Degree one: the generator maps to a generator.
  CHECK((first.matrix()(0, 0) == 1 || first.matrix()(0, 0) == -1));

  GroundPair six = fixtures::circle_ground(6);
  CHECK(all_witnesses(fixtures::six_arcs(), fixtures::three_arcs()).size() == 1);
}

TEST_CASE("cech homology of towers") {
  GroundPair g = fixtures::circle_ground(6);
  CoverTower one{FinitePoset({"c"}, {}), {fixtures::three_arcs()}, {}};
  CHECK(cech_homology(g, one, 1).limit.group.invariant_factors().to_string() == "Z");

  CoverTower two{FinitePoset({"coarse", "fine"}, {{"coarse", "fine"}}), {fixtures::three_arcs(), fixtures::six_arcs()}, {}};
  CechResult r = cech_homology(g, two, 1);
  CHECK(r.limit.group.invariant_factors().to_string() == "Z");
  CHECK(r.levels[0].to_string() == "Z");
  CHECK(r.levels[1].to_string() == "Z");

  // The finest level is a single contractible set.
  CoverPair whole;
  whole.sets["X"] = {g.points.begin(), g.points.end()};
  CoverTower wrong{FinitePoset({"coarse", "blob"}, {{"coarse", "blob"}}), {fixtures::three_arcs(), whole}, {}};
  CHECK_THROWS_AS(cech_homology(g, wrong, 1), Error);
  CoverTower collapse{FinitePoset({"blob", "coarse", "fine"}, {{"blob", "coarse"}, {"coarse", "fine"}}),
                      {whole, fixtures::three_arcs(), fixtures::six_arcs()},
                      {}};
  CechResult c = cech_homology(g, collapse, 1);
  CHECK(c.limit.group.invariant_factors() == c.levels[2]);
  CHECK(cech_homology(g, collapse, 0).limit.group.invariant_factors().to_string() == "Z");

  LimitComparison cmp = restricted_limit_compare(c.system, {"fine"});
  CHECK(cofinality_class(collapse.poset, {"fine"}) == Cofinality::strong);
  CHECK(cmp.is_iso);

  CoverTower bad_witness = two;
  bad_witness.witnesses[{0, 1}] = RefinementWitness{{{"A1", "U2"}}};
  CHECK_THROWS_AS(cech_homology(g, bad_witness, 1), Error);
}

TEST_CASE("ball covers") {
  PointCloud hex = hexagon();
  CoverPair blob = ball_cover(hex, hex.labels, 8, Metric::linf);
  GroundPair g{hex.labels, {}};
  ComplexPair full = nerve(g, blob);
  CHECK(full.complex().dimension() == 5);
  CHECK(h(full, 1) == "0");

  for (Metric m : {Metric::linf, Metric::l2}) {
    CoverPair ring = ball_cover(hex, hex.labels, Rational(5, 2), m);
    ComplexPair p = nerve(g, ring);
    auto oracle = oracle::simplicial_homology(facets_of(p.complex()));
    CHECK(oracle[1].free_rank == 1);
    CHECK(oracle[1].torsion.empty());
    CHECK(h(p, 1) == "Z");

    CoverPair big = ball_cover(hex, hex.labels, 3, m);
    RefinementWitness identity;
    for (const auto& c : hex.labels) identity.assignment[c] = c;
    CHECK(!witness_failure(ring, big, identity));
  }

  CHECK_THROWS_AS(ball_cover(hex, {"a", "b"}, 1, Metric::linf), Error);
  CHECK_THROWS_AS(ball_cover(hex, hex.labels, 0, Metric::linf), Error);

  CoverPair rel = ball_cover(hex, hex.labels, Rational(5, 2), Metric::linf, {"a"});
  CHECK(rel.relative == std::set<std::string>{"a", "b", "f"});
}
