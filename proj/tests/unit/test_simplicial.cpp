#include "fixtures.hpp"
#include "oracles.hpp"

#include "gable/chain.hpp"
#include "gable/error.hpp"
#include "gable/homology.hpp"
#include "gable/subdivision.hpp"

#include <doctest.h>

#include <random>

using namespace gable;

namespace {

std::string h(const SimplicialComplex& k, int d) { return homology(ComplexPair(k), d).factors.to_string(); }

std::string oracle_string(const oracle::Betti& b) {
  InvariantFactors f;
  f.free_rank = b.free_rank;
  for (auto t : b.torsion) f.torsion.emplace_back(t);
  return f.to_string();
}

SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices, int max_dim) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  const int n = nv(rng);
  std::uniform_int_distribution<int> nf(1, 5), dim(0, max_dim), vert(0, n - 1);
  std::vector<std::vector<int>> facets;
  const int count = nf(rng);
  for (int i = 0; i < count; ++i) {
    std::set<int> f;
    const int d = dim(rng);
    while (static_cast<int>(f.size()) < std::min(d + 1, n)) f.insert(vert(rng));
    facets.emplace_back(f.begin(), f.end());
  }
  return fixtures::make(n, facets);
}

}  // namespace

TEST_CASE("complexes close under faces") {
  SimplicialComplex tri = fixtures::make(3, {{0, 1, 2}});
  CHECK(tri.count(0) == 3);
  CHECK(tri.count(1) == 3);
  CHECK(tri.count(2) == 1);
  CHECK(tri.contains({0, 2}));
  CHECK(tri.facets() == std::vector<Simplex>{{0, 1, 2}});
  CHECK_THROWS_AS(SimplicialComplex({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(ComplexPair(fixtures::make(2, {{0}, {1}}), fixtures::make(2, {{0, 1}})), Error);
}

TEST_CASE("chain boundary") {
  Chain edge(1);
  edge.add({0, 1}, 1);
  Chain expected(0);
  expected.add({1}, 1);
  expected.add({0}, -1);
  CHECK(boundary(edge) == expected);

  Chain tri(2);
  tri.add({0, 1, 2}, 1);
  Chain faces(1);
  faces.add({1, 2}, 1);
  faces.add({0, 2}, -1);
  faces.add({0, 1}, 1);
  CHECK(boundary(tri) == faces);

  Chain degenerate(1);
  degenerate.add({3, 3}, 5);
  CHECK(degenerate.is_zero());
}

TEST_CASE("boundary of boundary vanishes on random chains") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> vert(0, 5), coef(-4, 4), dim(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = dim(rng);
    Chain c(d);
    for (int t = 0; t < 4; ++t) {
      SimplexSymbol s;
      for (int i = 0; i <= d; ++i) s.push_back(vert(rng));
      c.add(s, coef(rng));
    }
    CHECK(boundary(boundary(c)).is_zero());
  }
}

TEST_CASE("homology table against the oracle") {
  SimplicialComplex point = fixtures::make(1, {{0}});
  CHECK(h(point, 0) == "Z");
  CHECK(h(point, 3) == "0");
  CHECK_THROWS_AS(homology(ComplexPair(point), -1), Error);

  struct Case {
    int vertices;
    std::vector<std::vector<int>> facets;
    std::vector<std::string> expected;
  };
  std::vector<Case> cases{{4, fixtures::boundary_delta3_facets(), {"Z", "0", "Z"}},
                          {6, fixtures::rp2_facets(), {"Z", "Z/2", "0"}},
                          {7, fixtures::torus_facets(), {"Z", "Z^2", "Z"}}};
  for (const auto& c : cases) {
    SimplicialComplex k = fixtures::make(c.vertices, c.facets);
    auto ref = oracle::simplicial_homology(c.facets);
    for (int d = 0; d < 3; ++d) {
      CHECK(oracle_string(ref[d]) == c.expected[d]);
      CHECK(h(k, d) == c.expected[d]);
    }
  }
}

TEST_CASE("homology generators are relative cycles") {
  SimplicialComplex torus = fixtures::make(7, fixtures::torus_facets());
  auto h1 = homology(ComplexPair(torus), 1);
  REQUIRE(h1.generators.size() == 2);
  for (const auto& g : h1.generators) CHECK(boundary(g).is_zero());
  auto h2 = homology(ComplexPair(torus), 2);
  REQUIRE(h2.generators.size() == 1);
  CHECK(h2.generators[0].terms().size() == 14);
  for (const auto& [s, c] : h2.generators[0].terms()) CHECK((c == 1 || c == -1));
}

TEST_CASE("relative homology of an edge modulo its ends") {
  SimplicialComplex edge = fixtures::make(2, {{0, 1}});
  SimplicialComplex ends = fixtures::make(2, {{0}, {1}});
  ComplexPair pair(edge, ends);
  CHECK(homology(pair, 1).factors.to_string() == "Z");
  CHECK(homology(pair, 0).factors.to_string() == "0");
}

TEST_CASE("induced maps on homology") {
  SimplicialComplex sphere = fixtures::make(4, fixtures::boundary_delta3_facets());
  ComplexPair s(sphere);
  std::vector<std::size_t> id{0, 1, 2, 3};
  CHECK(induced_homology_map(id, s, s, 2).matrix() == IntMatrix{{1}});
  ComplexPair pt(fixtures::make(1, {{0}}));
  CHECK(induced_homology_map({0, 0, 0, 0}, s, pt, 2).matrix().rows() == 0);

  // Hexagon wrapping once around a triangle.
  ComplexPair hex(fixtures::make(6, fixtures::cycle_facets(6)));
  ComplexPair tri(fixtures::make(3, fixtures::cycle_facets(3)));
  GroupMorphism wrap = induced_homology_map({0, 0, 1, 1, 2, 2}, hex, tri, 1);
  CHECK(is_isomorphism(wrap));
  GroupMorphism twice = induced_homology_map({0, 1, 2, 0, 1, 2}, hex, tri, 1);
  CHECK((twice.matrix() == IntMatrix{{2}} || twice.matrix() == IntMatrix{{-2}}));

  CHECK_THROWS_AS(induced_homology_map({0, 2, 1, 0, 2, 1}, hex, ComplexPair(fixtures::make(3, {{0, 1}, {1, 2}})), 1),
                  Error);
}

TEST_CASE("carrier of rational points") {
  SimplicialComplex tri = fixtures::make(3, {{0, 1, 2}});
  CHECK(carrier(vertex_point(1)) == Simplex{1});
  CHECK(carrier(barycenter({0, 1})) == Simplex{0, 1});
  RationalPoint p{{{0, Rational(1, 2)}, {1, Rational(1, 4)}, {2, Rational(1, 4)}}};
  validate(p, tri);
  CHECK(carrier(p) == Simplex{0, 1, 2});
  CHECK_THROWS_AS(validate(RationalPoint{{{0, Rational(1, 2)}}}, tri), Error);
}

TEST_CASE("barycentric subdivision") {
  SimplicialComplex point = fixtures::make(1, {{0}});
  CHECK(barycentric_subdivision(point).sd.size() == 1);

  SimplicialComplex edge = fixtures::make(2, {{0, 1}});
  auto se = barycentric_subdivision(edge);
  CHECK(se.sd.count(0) == 3);
  CHECK(se.sd.count(1) == 2);
  CHECK(se.sd.label(2) == "b(0,1)");

  SimplicialComplex tri = fixtures::make(3, {{0, 1, 2}});
  auto st = barycentric_subdivision(tri);
  CHECK(st.sd.count(2) == 6);
  for (int d = 0; d < 3; ++d) CHECK(h(st.sd, d) == h(tri, d));

  SimplicialComplex bad = SimplicialComplex({"x"}, {{0}});
  CHECK_THROWS_AS(barycentric_subdivision(tri, bad), Error);
}

TEST_CASE("subdivision preserves homology and makes subcomplexes full") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    SimplicialComplex k = random_complex(rng, 5, 3);
    auto sd = barycentric_subdivision(k);
    for (int d = 0; d <= k.dimension(); ++d) CHECK(h(sd.sd, d) == h(k, d));
    // Every subcomplex generated by a subset of simplices becomes full.
    std::vector<Simplex> all;
    for (int d = 0; d <= k.dimension(); ++d)
      for (const auto& s : k.simplices(d)) all.push_back(s);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::vector<Simplex> gens{all[pick(rng)], all[pick(rng)]};
    SimplicialComplex l = k.subcomplex(gens);
    auto sub = barycentric_subdivision(k, l);
    CHECK(is_full(sub.sd, *sub.induced_sub));
  }
}

TEST_CASE("classification of simplices against a full subcomplex") {
  SimplicialComplex edge = SimplicialComplex::from_labels({"u", "v"}, {{"u", "v"}});
  SimplicialComplex l = SimplicialComplex::from_labels({"u"}, {{"u"}});
  CHECK(classify_simplex(edge, l, {0}).kind == SimplexClass::in_l);
  CHECK(classify_simplex(edge, l, {1}).kind == SimplexClass::in_n);
  SimplexClass c = classify_simplex(edge, l, {0, 1});
  CHECK(c.kind == SimplexClass::split);
  CHECK(c.l_part == Simplex{0});
  CHECK(c.n_part == Simplex{1});

  SimplicialComplex tri = fixtures::make(3, {{0, 1, 2}});
  SimplicialComplex hollow = fixtures::make(3, {{0, 1}, {1, 2}, {0, 2}});
  try {
    classify_simplex(tri, hollow, {0, 1, 2});
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.kind() == "not-full");
    CHECK(e.witness() == "[0,1,2]");
  }
}

TEST_CASE("partition check") {
  SimplicialComplex tri = fixtures::make(3, {{0, 1, 2}});
  auto rep = subdivision_partition_check(tri, barycentric_subdivision(tri));
  CHECK(rep.ok);
  const auto& top = rep.entries.back();
  CHECK(top.simplex == Simplex{0, 1, 2});
  int full = 0;
  for (const auto& p : top.pieces)
    if (p.sd_simplex.size() == 3) {
      CHECK(p.volume == Rational(1, 6));
      ++full;
    }
  CHECK(full == 6);

  SimplicialComplex edge = fixtures::make(2, {{0, 1}});
  auto er = subdivision_partition_check(edge, barycentric_subdivision(edge));
  CHECK(er.ok);
  CHECK(er.entries.back().pieces.size() == 3);
  CHECK(subdivision_partition_check(fixtures::make(1, {{0}}), barycentric_subdivision(fixtures::make(1, {{0}}))).ok);
}

TEST_CASE("cone pair") {
  SimplicialComplex edge = SimplicialComplex::from_labels({"a", "b"}, {{"a", "b"}});
  ConeResult empty = cone_pair(ComplexPair(edge));
  CHECK(empty.complex.label(empty.apex) == "*");
  CHECK(empty.complex.count(1) == 1);

  SimplicialComplex ends = SimplicialComplex::from_labels({"a", "b"}, {{"a"}, {"b"}});
  ConeResult circle = cone_pair(ComplexPair(edge, ends));
  CHECK(homology(ComplexPair(circle.complex), 1, true).factors.to_string() == "Z");
  CHECK(homology(ComplexPair(edge, ends), 1).factors.to_string() == "Z");

  SimplicialComplex starred = SimplicialComplex::from_labels({"*", "b"}, {{"*", "b"}});
  CHECK(cone_pair(ComplexPair(starred)).complex.label(2) == "*'");

  SimplicialComplex hollow = fixtures::make(3, fixtures::cycle_facets(3));
  ConeResult disk = cone_pair(ComplexPair(hollow, hollow));
  for (int d = 0; d < 3; ++d) CHECK(homology(ComplexPair(disk.complex), d, true).factors.is_trivial());
}

TEST_CASE("retraction formulas") {
  SimplicialComplex edge = SimplicialComplex::from_labels({"u", "v"}, {{"u", "v"}});
  SimplicialComplex l = SimplicialComplex::from_labels({"u"}, {{"u"}});
  RationalPoint p{{{0, Rational(1, 3)}, {1, Rational(2, 3)}}};
  RetractionResult r = retract_point(edge, l, p, Rational(1));
  CHECK(r.a == Rational(1, 3));
  CHECK(r.alpha_prime == vertex_point(0));
  CHECK(r.alpha_out == vertex_point(0));
  CHECK(retract_point(edge, l, p, Rational(0)).alpha_out == p);
  CHECK(retract_point(edge, l, vertex_point(0), Rational(1, 2)).alpha_out == vertex_point(0));
  CHECK(r.n_complex.labels() == std::vector<std::string>{"v"});
  CHECK(r.n1_complex.labels() == std::vector<std::string>{"b(v)", "b(u,v)"});
  CHECK_THROWS_AS(retract_point(edge, l, vertex_point(1), Rational(1)), Error);
}
