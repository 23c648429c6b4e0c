#pragma once

#include "gable/abelian.hpp"
#include "gable/complex.hpp"
#include "gable/homology.hpp"
#include "gable/integer_matrix.hpp"
#include "gable/inverse_limit.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gable {

/// A finite space X with a subset A, both as point labels.
struct GroundPair {
  std::vector<std::string> points;
  std::set<std::string> subset_a;
};

/// Named subsets of the ground set; `relative` names the sets forming V.
struct CoverPair {
  std::map<std::string, std::set<std::string>> sets;
  std::set<std::string> relative;
};

/// Throws Error("invalid-cover") with an uncovered point (or unknown name) as witness.
void validate(const GroundPair& ground, const CoverPair& cover);

/// Fine set name -> containing coarse set name. Entries for empty fine sets are optional.
struct RefinementWitness {
  std::map<std::string, std::string> assignment;
  friend bool operator==(const RefinementWitness&, const RefinementWitness&) = default;
};

/// First reason the witness fails (missing name, non-containment, relative set
/// sent outside the relative part), or nullopt if it is valid.
std::optional<std::string> witness_failure(const CoverPair& fine, const CoverPair& coarse,
                                           const RefinementWitness& witness);

/// Nerve of the nonempty sets with the subnerve of relative simplices whose
/// intersection meets A. Vertices are set names in lexicographic order.
ComplexPair nerve(const GroundPair& ground, const CoverPair& cover);

struct CommonRefinement {
  CoverPair cover;
  RefinementWitness to_first;
  RefinementWitness to_second;
};

/// Nonempty pairwise intersections, named "(u,v)".
CommonRefinement common_refinement(const GroundPair& ground, const CoverPair& c1, const CoverPair& c2);

/// The lexicographically smallest valid witness, or nullopt if `fine` does not refine `coarse`.
std::optional<RefinementWitness> find_witness(const CoverPair& fine, const CoverPair& coarse);
/// Every valid witness over the nonempty fine sets, in lexicographic order.
/// Throws Error("too-many-witnesses") beyond `limit`.
std::vector<RefinementWitness> all_witnesses(const CoverPair& fine, const CoverPair& coarse,
                                             std::size_t limit = 100000);

struct Projection {
  RefinementWitness witness;
  /// Vertex of nerve(fine) -> vertex of nerve(coarse).
  std::vector<std::size_t> vertex_map;
};

/// Uses the given witness or searches for one. Throws Error("not-a-refinement")
/// with the failing set as witness.
Projection projection(const GroundPair& ground, const CoverPair& fine, const CoverPair& coarse,
                      const std::optional<RefinementWitness>& witness = std::nullopt);

/// H_k(nerve(fine)) -> H_k(nerve(coarse)) induced by the projection.
GroupMorphism projection_homology_map(const GroundPair& ground, const CoverPair& fine, const CoverPair& coarse,
                                      const std::optional<RefinementWitness>& witness, int k);

/// Covers indexed by a finite quasi-order; a <= b means cover b refines cover a.
struct CoverTower {
  FinitePoset poset;
  std::vector<CoverPair> covers;
  /// Optional witnesses for related pairs (a, b), a <= b.
  std::map<std::pair<std::size_t, std::size_t>, RefinementWitness> witnesses;
};

struct CechResult {
  InverseSystem system;
  InverseLimit limit;
  std::vector<InvariantFactors> levels;
};

/// Inverse limit of H_k of the nerves along projections. Reflexive pairs use the
/// identity. Throws Error("not-a-refinement") for an invalid tower and
/// Error("internal-consistency") if the induced maps do not compose.
CechResult cech_homology(const GroundPair& ground, const CoverTower& tower, int k);

enum class Metric { linf, l2 };

struct PointCloud {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> coords;
};

/// Closed balls around the centers, named by center label (squared distances
/// are compared for L2). Relative names are the balls meeting `subset_a`.
/// Throws Error("invalid-radius") or Error("invalid-cover") with an uncovered point.
CoverPair ball_cover(const PointCloud& cloud, const std::vector<std::string>& centers, const Rational& radius,
                     Metric metric, const std::set<std::string>& subset_a = {});

}  // namespace gable
