#pragma once

#include "gable/abelian.hpp"
#include "gable/chain.hpp"
#include "gable/complex.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gable {

/// Finite chain complex of free abelian groups given by sparse cell
/// boundaries. Used for simplicial complexes and for the gable.
class CellComplex {
 public:
  using Face = std::pair<std::size_t, int>;  // (index of face cell, incidence)

  /// Appends the next dimension; faces index cells of the previous one.
  void push_dimension(std::vector<std::vector<Face>> cells);
  int dimension() const { return static_cast<int>(cells_.size()) - 1; }
  std::size_t count(int dim) const;
  const std::vector<Face>& faces(int dim, std::size_t cell) const { return cells_[dim][cell]; }

  static CellComplex from_simplicial(const SimplicialComplex& k);

 private:
  std::vector<std::vector<std::vector<Face>>> cells_;
};

/// Cells that belong to the subcomplex, per dimension (may be shorter than the
/// complex; missing entries mean "not relative").
using RelativeMask = std::vector<std::vector<bool>>;

/// H_n of (cells, relative cells), optionally reduced (absolute case only).
/// The group is presented canonically: generators are the nonunit invariant
/// factors in increasing order followed by the free part.
class HomologyGroup {
 public:
  HomologyGroup(const CellComplex& cells, const RelativeMask& relative, int n, bool reduced = false);

  int degree() const { return n_; }
  const InvariantFactors& factors() const { return factors_; }
  const FgAbelianGroup& group() const { return group_; }
  /// Representative relative cycles, as coordinate vectors over all n-cells.
  const std::vector<IntVector>& generators() const { return generators_; }

  /// True if the boundary of z is supported on relative cells.
  bool is_cycle(const IntVector& z) const;
  /// Canonical coordinates of [z] (torsion entries reduced into [0, d)).
  /// Throws Error("not-a-cycle") with the offending boundary cell.
  IntVector class_of(const IntVector& z) const;

 private:
  IntVector restrict_free(const IntVector& z) const;

  int n_;
  std::size_t cell_count_ = 0;
  std::vector<std::size_t> free_cells_;      // n-cells outside the subcomplex
  std::vector<std::ptrdiff_t> free_index_;   // cell -> position in free_cells_, or -1
  IntMatrix boundary_;                       // free (n-1)-cells x free n-cells, augmented if reduced
  Lattice cycles_;
  IntMatrix to_smith_;                       // U of the relation matrix's Smith form
  std::vector<std::size_t> kept_rows_;       // Smith rows with nonunit factors, then free rows
  IntVector moduli_;                         // 0 for free rows
  InvariantFactors factors_;
  FgAbelianGroup group_;
  std::vector<IntVector> generators_;
};

struct SimplicialHomology {
  InvariantFactors factors;
  std::vector<Chain> generators;
};

/// Relative simplicial homology H_k(K, L; Z). Throws Error("negative-dimension") for k < 0.
SimplicialHomology homology(const ComplexPair& pair, int k, bool reduced = false);
HomologyGroup homology_group(const ComplexPair& pair, int k, bool reduced = false);
RelativeMask relative_mask(const ComplexPair& pair);

/// Map H_k(src) -> H_k(tgt) induced by a vertex map (indices of src.complex()
/// to indices of tgt.complex()). Throws Error("non-simplicial-map") with a witness.
GroupMorphism induced_homology_map(const std::vector<std::size_t>& vertex_map, const ComplexPair& src,
                                   const ComplexPair& tgt, int k);

}  // namespace gable
