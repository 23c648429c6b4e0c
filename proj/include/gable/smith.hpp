#pragma once

#include "gable/integer_matrix.hpp"

#include <optional>
#include <vector>

namespace gable {

/// U * M * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}.
/// The inverses of U and V are maintained alongside so callers can move
/// between original and Smith coordinates without inverting.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix u_inv;
  IntMatrix v_inv;
  std::size_t rank = 0;

  /// The first `rank` diagonal entries (all positive).
  IntVector diagonal() const;
};

/// Smallest-absolute-value pivoting with gcd reduction on rows and columns.
SmithForm smith_normal_form(const IntMatrix& m);

/// Nonzero diagonal of the Smith form only (no transforms tracked).
IntVector smith_diagonal(const IntMatrix& m);

/// Column-style Hermite normal form: M * V = H, where the first `rank`
/// columns of H are in echelon form with positive pivots, entries left of a
/// pivot reduced into [0, pivot), and the remaining columns are zero.
struct ColumnHermite {
  IntMatrix h;
  IntMatrix v;
  std::vector<std::size_t> pivot_rows;
  std::size_t rank() const { return pivot_rows.size(); }
};

ColumnHermite column_hermite(const IntMatrix& m, bool track_transform = true);

/// A sublattice of Z^n held in its canonical Hermite basis.
class Lattice {
 public:
  Lattice() = default;
  /// Lattice spanned by the columns of `generators` (rows = ambient dimension).
  explicit Lattice(const IntMatrix& generators);

  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }

  /// Coordinates of v in the basis, or nullopt when v is not in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivot_rows_;
};

/// {x in Z^cols : M x = 0} as a lattice in Z^cols.
Lattice integer_kernel(const IntMatrix& m);

/// Some integer solution of M x = v, or nullopt if none exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& v);

/// Determinant via fraction-free elimination (square matrices only).
Integer determinant(const IntMatrix& m);

}  // namespace gable
