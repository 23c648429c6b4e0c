#pragma once

#include "gable/complex.hpp"
#include "gable/integer_matrix.hpp"
#include "gable/inverse_limit.hpp"
#include "gable/roof.hpp"
#include "gable/subdivision.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

/// Seeded random inputs for the verification suites and property tests.
namespace gable::gen {

using Rng = std::mt19937_64;

/// Independent stream for item `item` of suite `suite` under `seed`.
Rng make_rng(std::uint64_t seed, const std::string& suite, std::uint64_t item);

int uniform(Rng& rng, int lo, int hi);

IntMatrix random_matrix(Rng& rng, std::size_t max_rows, std::size_t max_cols, long bound);

/// Up to `max_facets` random simplices of dimension <= max_dim on at most
/// max_vertices vertices labelled "0", "1", ...
SimplicialComplex random_complex(Rng& rng, int max_vertices, int max_dim, int max_facets = 5);

/// Random complex with a random subcomplex generated by some of its simplices.
ComplexPair random_pair(Rng& rng, int max_vertices, int max_dim);

/// Random subcomplex that is full: the induced complex on a random vertex subset.
SimplicialComplex random_full_subcomplex(Rng& rng, const SimplicialComplex& k);

/// Random point of |k| with small denominators.
RationalPoint random_point(Rng& rng, const SimplicialComplex& k);

/// Random integer combination of the sorted simplices of dimension d.
Chain random_chain(Rng& rng, const SimplicialComplex& k, int d, int max_terms = 4, long bound = 3);

struct IndependenceTrial {
  SimplicialComplex complex;
  TermList sigma;  // a cycle of even dimension k
  TermList nu;     // a (k+1)-chain
};

/// k = 0 or 2 on at most max_vertices vertices.
IndependenceTrial random_independence_trial(Rng& rng, int max_vertices);

/// Directed quasi-order with a top element (sometimes duplicated) and groups
/// Z^r / L_x with L_x ⊇ L_y for x <= y, presented in random bases.
InverseSystem random_directed_system(Rng& rng, int max_elements, int rank);

/// Named triangulations: "point", "edge", "triangle", "boundary-delta3",
/// "rp2" (6 vertices), "torus" (7 vertices). Throws Error("unknown-label").
SimplicialComplex standard_complex(const std::string& name);

/// Random subset of element labels (nonempty).
std::vector<std::string> random_subset(Rng& rng, const FinitePoset& poset);

}  // namespace gable::gen
