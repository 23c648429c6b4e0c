#pragma once

#include "gable/chain.hpp"
#include "gable/homology.hpp"
#include "gable/shuffle.hpp"
#include "gable/subdivision.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gable {

/// sigma = sum g_i sigma_i with distinct symbols sigma_i (merged on construction).
class TermList {
 public:
  TermList() = default;
  explicit TermList(int k) : k_(k) {}
  TermList(int k, const std::vector<std::pair<Integer, SimplexSymbol>>& terms);
  static TermList from_chain(const Chain& c);

  int k() const { return k_; }
  const std::vector<std::pair<Integer, SimplexSymbol>>& terms() const { return terms_; }
  /// Adds g to the coefficient of s, keeping first-occurrence order.
  void add(const Integer& g, const SimplexSymbol& s);
  Chain to_chain() const;

 private:
  int k_ = 0;
  std::vector<std::pair<Integer, SimplexSymbol>> terms_;
};

/// sum_{i<j} g_i g_j p(sigma_i x sigma_j). Throws Error("odd-dimension") for odd k.
GableChain roof(const TermList& sigma);

/// Realization of each base vertex as a point of some complex.
using Realization = std::vector<RationalPoint>;
Realization vertex_realization(const SimplicialComplex& k);

/// Whether some convex combination of the pairs has equal components.
bool touches_diagonal(const ProductSimplex& s, const Realization& realization);

/// Face-closed set of gable cells playing the role of a neighbourhood of the
/// diagonal part of the gable.
struct DiagonalRegion {
  RelativeMask cells;

  bool contains(int dim, std::size_t cell) const;
  std::size_t size() const;
  /// True if every cell of `other` is in this region.
  bool includes(const DiagonalRegion& other) const;
  friend bool operator==(const DiagonalRegion&, const DiagonalRegion&) = default;
};

/// Face closure of the cells meeting the diagonal (tested by touches_diagonal)
/// and, when a subcomplex vertex set is given, of the cells with a pair
/// component in it.
DiagonalRegion diagonal_region(const GableComplex& gable, const std::vector<std::size_t>& a_vertices = {});
/// Face closure of the given cells (throws Error("outside-gable")).
DiagonalRegion region_from_cells(const GableComplex& gable, const std::vector<ProductSimplex>& cells);
/// Union of two regions.
DiagonalRegion region_union(const DiagonalRegion& a, const DiagonalRegion& b);

struct RelativeClass {
  bool is_relative_cycle = false;
  InvariantFactors group;
  /// Coordinates in the canonical generators of H(gable, region); empty if not a cycle.
  IntVector coordinates;
  /// A boundary cell outside the region, when not a cycle.
  std::string witness;
};

/// Throws Error("outside-gable") if c is not supported on gable cells.
RelativeClass relative_cycle_class(const GableChain& c, const GableComplex& gable, const DiagonalRegion& region);

struct IndependenceReport {
  bool preconditions_ok = true;
  std::string violation;
  bool holds = false;
  RelativeClass before;
  RelativeClass after;
};

/// Region cells needed for sigma - d(nu): orbits of every shuffle cell of nu_i x nu_i.
std::vector<ProductSimplex> nu_square_cells(const TermList& nu);
/// Compares the classes of roof(sigma) and roof(sigma - d nu) in H(gable, region).
IndependenceReport representative_independence_check(const TermList& sigma, const TermList& nu,
                                                     const GableComplex& gable, const DiagonalRegion& region);

struct RoofFamily {
  std::vector<RelativeClass> levels;
  /// compatible[j]: the inclusion (gable, V_{j+1}) -> (gable, V_j) maps class j+1 to class j.
  std::vector<bool> compatible;
  bool all_compatible = true;
};

/// regions must be nested V_1 ⊇ V_2 ⊇ ...; throws Error("non-nested-regions").
RoofFamily roof_family(const TermList& sigma, const GableComplex& gable, const std::vector<DiagonalRegion>& regions);

/// Morphism H(gable, inner) -> H(gable, outer) induced by the identity, inner ⊆ outer.
GroupMorphism region_inclusion_map(const GableComplex& gable, const DiagonalRegion& inner,
                                   const DiagonalRegion& outer, int degree);

struct FundamentalReport {
  bool relative_cycle = false;
  bool boundary_touches_diagonal = false;
  bool support_matches = false;
  bool unit_coefficients = false;
  std::size_t support_size = 0;
  std::size_t expected_support_size = 0;
  std::size_t boundary_terms = 0;
  std::string witness;
  bool ok() const { return relative_cycle && boundary_touches_diagonal && support_matches && unit_coefficients; }
};

/// Checks roof(fundamental) against the staircase top cells of s x t over
/// unordered pairs of distinct top simplices. Throws Error("odd-dimension"),
/// Error("not-a-cycle") or Error("not-fundamental").
FundamentalReport fundamental_roof_check(const SimplicialComplex& m, const TermList& fundamental);

/// Terms sum over top simplices of the generator of H_k(m) (coefficients +-1, sorted symbols).
TermList fundamental_terms(const SimplicialComplex& m, int k);

}  // namespace gable
