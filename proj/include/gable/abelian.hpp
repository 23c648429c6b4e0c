#pragma once

#include "gable/integer_matrix.hpp"
#include "gable/smith.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gable {

/// Z^free_rank + Z/d_1 + ... + Z/d_t with d_1 | d_2 | ... and every d_i >= 2.
struct InvariantFactors {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2 + Z/2", ...
  std::string to_string() const;

  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

/// Finitely generated abelian group presented as Z^n / (column span of relations).
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  explicit FgAbelianGroup(std::size_t generators);
  FgAbelianGroup(std::size_t generators, IntMatrix relations);

  static FgAbelianGroup cyclic(const Integer& order);

  std::size_t generator_count() const { return generators_; }
  const IntMatrix& relations() const { return relations_; }

  /// True if x represents the zero element.
  bool is_zero(const IntVector& x) const;
  bool equal(const IntVector& x, const IntVector& y) const { return is_zero(x - y); }

  InvariantFactors invariant_factors() const;

 private:
  std::size_t generators_ = 0;
  IntMatrix relations_;
  std::shared_ptr<const Lattice> lattice_;

  friend Lattice relation_lattice(const FgAbelianGroup& g);
};

InvariantFactors invariant_factors(const FgAbelianGroup& g);

/// A homomorphism given by the images of the source generators (columns).
class GroupMorphism {
 public:
  GroupMorphism() = default;
  /// Throws Error("malformed-morphism") when the matrix has the wrong shape or
  /// does not send source relations into the target relation lattice.
  GroupMorphism(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix);

  static GroupMorphism identity(const FgAbelianGroup& g);
  static GroupMorphism zero(const FgAbelianGroup& source, const FgAbelianGroup& target);

  const FgAbelianGroup& source() const { return source_; }
  const FgAbelianGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector apply(const IntVector& x) const { return matrix_ * x; }
  /// this o inner
  GroupMorphism compose(const GroupMorphism& inner) const;
  /// Equality as homomorphisms (images agree modulo target relations).
  bool equals(const GroupMorphism& other) const;

 private:
  FgAbelianGroup source_;
  FgAbelianGroup target_;
  IntMatrix matrix_;
};

struct KernelResult {
  FgAbelianGroup group;
  GroupMorphism inclusion;
};

/// Kernel of f as a presented group together with its inclusion into the source.
KernelResult kernel(const GroupMorphism& f);

FgAbelianGroup cokernel(const GroupMorphism& f);

bool is_injective(const GroupMorphism& f);
bool is_surjective(const GroupMorphism& f);
bool is_isomorphism(const GroupMorphism& f);

/// Lattice generated by the relation columns of g.
Lattice relation_lattice(const FgAbelianGroup& g);

}  // namespace gable
