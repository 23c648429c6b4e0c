#include "gable/abelian.hpp"
#include "gable/error.hpp"
#include "gable/inverse_limit.hpp"
#include "gable/smith.hpp"

#include <doctest.h>

#include <random>

using namespace gable;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-9, 9);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("smith form of small examples") {
  SmithForm id = smith_normal_form(IntMatrix::identity(2));
  CHECK(id.d == IntMatrix::identity(2));
  CHECK(id.u == IntMatrix::identity(2));
  CHECK(id.v == IntMatrix::identity(2));

  SmithForm zero = smith_normal_form(IntMatrix(3, 2));
  CHECK(zero.d.is_zero());
  CHECK(zero.rank == 0);

  IntMatrix m{{2, 4}, {6, 8}};
  SmithForm s = smith_normal_form(m);
  CHECK(s.d == IntMatrix{{2, 0}, {0, 4}});
  CHECK(s.u * m * s.v == s.d);
}

TEST_CASE("smith form reconstruction on random matrices") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dim(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m = random_matrix(rng, dim(rng), dim(rng));
    SmithForm s = smith_normal_form(m);
    REQUIRE(s.u * m * s.v == s.d);
    CHECK(s.d.is_diagonal());
    CHECK(s.u * s.u_inv == IntMatrix::identity(m.rows()));
    CHECK(s.v * s.v_inv == IntMatrix::identity(m.cols()));
    auto diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
      CHECK(diag[i] > 0);
      if (i + 1 < diag.size()) CHECK(diag[i + 1] % diag[i] == 0);
    }
    for (std::size_t i = s.rank; i < std::min(m.rows(), m.cols()); ++i) CHECK(s.d(i, i) == 0);
  }
}

TEST_CASE("determinant and integer kernel") {
  CHECK(determinant(IntMatrix{{2, 4}, {6, 8}}) == -8);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  Lattice k = integer_kernel(IntMatrix{{1, 1, 1}});
  CHECK(k.rank() == 2);
  CHECK(k.contains({1, -1, 0}));
  CHECK(!k.contains({1, 0, 0}));
}

TEST_CASE("invariant factors") {
  CHECK(FgAbelianGroup(1).invariant_factors().to_string() == "Z");
  CHECK(FgAbelianGroup(0).invariant_factors().is_trivial());
  FgAbelianGroup z6(2, IntMatrix{{2, 0}, {0, 3}});
  InvariantFactors f = z6.invariant_factors();
  CHECK(f.free_rank == 0);
  REQUIRE(f.torsion.size() == 1);
  CHECK(f.torsion[0] == 6);

  // Permuting generators and adding a redundant relation keeps the factors.
  FgAbelianGroup permuted(2, IntMatrix{{0, 3, 3}, {2, 0, 2}});
  CHECK(permuted.invariant_factors() == f);
}

TEST_CASE("kernels of small morphisms") {
  FgAbelianGroup z(1);
  CHECK(kernel(GroupMorphism(z, z, IntMatrix{{2}})).group.invariant_factors().is_trivial());
  KernelResult all = kernel(GroupMorphism::zero(z, z));
  CHECK(all.group.invariant_factors().to_string() == "Z");
  CHECK(all.inclusion.matrix() == IntMatrix{{1}});
  KernelResult mod2 = kernel(GroupMorphism(z, FgAbelianGroup::cyclic(2), IntMatrix{{1}}));
  CHECK(mod2.group.invariant_factors().to_string() == "Z");
  CHECK(mod2.inclusion.matrix() == IntMatrix{{2}});

  CHECK_THROWS_AS(GroupMorphism(FgAbelianGroup::cyclic(2), z, IntMatrix{{1}}), Error);
}

TEST_CASE("inverse limits of small systems") {
  FgAbelianGroup z(1);
  FinitePoset chain({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});

  InverseSystem constant(chain, {z, z, z}, {{{0, 1}, IntMatrix{{1}}}, {{1, 2}, IntMatrix{{1}}}});
  InverseLimit c = inverse_limit(constant);
  CHECK(c.group.invariant_factors().to_string() == "Z");
  for (const auto& u : c.projections) CHECK(u.matrix() == IntMatrix{{1}});

  InverseSystem doubling(chain, {z, z, z}, {{{0, 1}, IntMatrix{{2}}}, {{1, 2}, IntMatrix{{2}}}});
  InverseLimit d = inverse_limit(doubling);
  CHECK(d.group.invariant_factors().to_string() == "Z");
  REQUIRE(d.basis.size() == 1);
  CHECK(d.basis[0] == std::vector<IntVector>{{4}, {2}, {1}});

  FinitePoset cospan({"l", "m1", "m2"}, {{"l", "m1"}, {"l", "m2"}});
  InverseSystem cs(cospan, {z, z, z}, {{{0, 1}, IntMatrix{{2}}}, {{0, 2}, IntMatrix{{3}}}});
  InverseLimit l = inverse_limit(cs);
  REQUIRE(l.basis.size() == 1);
  CHECK(l.basis[0] == std::vector<IntVector>{{6}, {3}, {2}});
}

TEST_CASE("inconsistent systems are rejected") {
  FgAbelianGroup z(1);
  FinitePoset tri({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK_THROWS_AS(InverseSystem(tri, {z, z, z},
                                {{{0, 1}, IntMatrix{{2}}}, {{1, 2}, IntMatrix{{2}}}, {{0, 2}, IntMatrix{{3}}}}),
                  Error);
  CHECK_THROWS_AS(FinitePoset({"a"}, {{"a", "zz"}}), Error);
}

TEST_CASE("cofinality classes") {
  FinitePoset chain({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
  CHECK(cofinality_class(chain, {"1", "2", "3"}) == Cofinality::strong);
  CHECK(cofinality_class(chain, {"3"}) == Cofinality::strong);
  FinitePoset anti({"a", "b"}, {});
  CHECK(cofinality_class(anti, {"a"}) == Cofinality::none);
  // Two incomparable maxima above a common element: weak only.
  FinitePoset vee({"l", "x", "y"}, {{"l", "x"}, {"l", "y"}});
  CHECK(cofinality_class(vee, {"x", "y"}) == Cofinality::weak);
  CHECK_THROWS_AS(cofinality_class(chain, {"9"}), Error);
}

TEST_CASE("restricted limit comparison on the doubling chain") {
  FgAbelianGroup z(1);
  FinitePoset chain({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
  InverseSystem doubling(chain, {z, z, z}, {{{0, 1}, IntMatrix{{2}}}, {{1, 2}, IntMatrix{{2}}}});
  LimitComparison cmp = restricted_limit_compare(doubling, {"3"});
  CHECK(cmp.is_iso);
  CHECK(cmp.comparison.matrix() == IntMatrix{{1}});
}

TEST_CASE("universal property on a cospan cone") {
  FgAbelianGroup z(1);
  FinitePoset cospan({"l", "m1", "m2"}, {{"l", "m1"}, {"l", "m2"}});
  InverseSystem cs(cospan, {z, z, z}, {{{0, 1}, IntMatrix{{2}}}, {{0, 2}, IntMatrix{{3}}}});
  InverseLimit l = inverse_limit(cs);
  std::vector<GroupMorphism> cone{GroupMorphism(z, z, IntMatrix{{12}}), GroupMorphism(z, z, IntMatrix{{6}}),
                                  GroupMorphism(z, z, IntMatrix{{4}})};
  auto psi = factor_cone(cs, l, cone);
  REQUIRE(psi);
  CHECK(psi->matrix() == IntMatrix{{2}});
  std::vector<GroupMorphism> bad{GroupMorphism(z, z, IntMatrix{{1}}), GroupMorphism(z, z, IntMatrix{{1}}),
                                 GroupMorphism(z, z, IntMatrix{{1}})};
  CHECK(!factor_cone(cs, l, bad));
}
