#include "gable/abelian.hpp"

#include "gable/error.hpp"

#include <sstream>

namespace gable {

std::string InvariantFactors::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << 'Z';
    if (free_rank > 1) out << '^' << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first) out << " + ";
    out << "Z/" << d;
    first = false;
  }
  return out.str();
}

FgAbelianGroup::FgAbelianGroup(std::size_t generators)
    : FgAbelianGroup(generators, IntMatrix(generators, 0)) {}

FgAbelianGroup::FgAbelianGroup(std::size_t generators, IntMatrix relations)
    : generators_(generators), relations_(std::move(relations)) {
  if (relations_.rows() != generators_) {
    throw Error("malformed-group", "relation matrix rows must equal the generator count",
                std::to_string(relations_.rows()) + " != " + std::to_string(generators_));
  }
  lattice_ = std::make_shared<const Lattice>(relations_);
}

FgAbelianGroup FgAbelianGroup::cyclic(const Integer& order) {
  IntMatrix rel(1, 1);
  rel(0, 0) = order;
  return FgAbelianGroup(1, rel);
}

Lattice relation_lattice(const FgAbelianGroup& g) {
  if (!g.lattice_) return Lattice(IntMatrix(g.generators_, 0));
  return *g.lattice_;
}

bool FgAbelianGroup::is_zero(const IntVector& x) const {
  if (x.size() != generators_) throw Error("dimension-mismatch", "element has wrong length");
  if (gable::is_zero(x)) return true;
  if (!lattice_) return false;
  return lattice_->contains(x);
}

InvariantFactors FgAbelianGroup::invariant_factors() const {
  InvariantFactors out;
  IntVector diag = smith_diagonal(relations_);
  out.free_rank = generators_ - diag.size();
  for (auto& d : diag)
    if (d != 1) out.torsion.push_back(d);
  return out;
}

InvariantFactors invariant_factors(const FgAbelianGroup& g) { return g.invariant_factors(); }

GroupMorphism::GroupMorphism(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.generator_count() || matrix_.cols() != source_.generator_count()) {
    throw Error("malformed-morphism", "morphism matrix shape does not match source/target",
                std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()));
  }
  const IntMatrix& rel = source_.relations();
  for (std::size_t j = 0; j < rel.cols(); ++j) {
    IntVector image = matrix_ * rel.column(j);
    if (!target_.is_zero(image)) {
      throw Error("malformed-morphism", "source relation not sent to zero",
                  "relation column " + std::to_string(j));
    }
  }
}

GroupMorphism GroupMorphism::identity(const FgAbelianGroup& g) {
  return GroupMorphism(g, g, IntMatrix::identity(g.generator_count()));
}

GroupMorphism GroupMorphism::zero(const FgAbelianGroup& source, const FgAbelianGroup& target) {
  return GroupMorphism(source, target, IntMatrix(target.generator_count(), source.generator_count()));
}

GroupMorphism GroupMorphism::compose(const GroupMorphism& inner) const {
  if (inner.target_.generator_count() != source_.generator_count()) {
    throw Error("malformed-morphism", "composition of incompatible morphisms");
  }
  return GroupMorphism(inner.source_, target_, matrix_ * inner.matrix_);
}

bool GroupMorphism::equals(const GroupMorphism& other) const {
  if (matrix_.rows() != other.matrix_.rows() || matrix_.cols() != other.matrix_.cols()) return false;
  IntMatrix diff = matrix_ - other.matrix_;
  for (std::size_t j = 0; j < diff.cols(); ++j)
    if (!target_.is_zero(diff.column(j))) return false;
  return true;
}

KernelResult kernel(const GroupMorphism& f) {
  const FgAbelianGroup& src = f.source();
  const FgAbelianGroup& tgt = f.target();
  const std::size_t n = src.generator_count();
  // x is in the kernel iff F x + R_tgt y = 0 for some y.
  Lattice stacked = integer_kernel(IntMatrix::hstack(f.matrix(), tgt.relations()));
  Lattice sub(stacked.basis().block(0, 0, n, stacked.rank()));
  const IntMatrix& basis = sub.basis();

  const IntMatrix& src_rel = src.relations();
  std::vector<IntVector> rel_cols;
  rel_cols.reserve(src_rel.cols());
  for (std::size_t j = 0; j < src_rel.cols(); ++j) {
    auto c = sub.coordinates(src_rel.column(j));
    if (!c) throw Error("malformed-morphism", "source relation outside computed kernel");
    rel_cols.push_back(std::move(*c));
  }
  FgAbelianGroup group(sub.rank(), IntMatrix::from_columns(sub.rank(), rel_cols));
  return {group, GroupMorphism(group, src, basis)};
}

FgAbelianGroup cokernel(const GroupMorphism& f) {
  return FgAbelianGroup(f.target().generator_count(),
                        IntMatrix::hstack(f.target().relations(), f.matrix()));
}

bool is_injective(const GroupMorphism& f) { return kernel(f).group.invariant_factors().is_trivial(); }

bool is_surjective(const GroupMorphism& f) { return cokernel(f).invariant_factors().is_trivial(); }

bool is_isomorphism(const GroupMorphism& f) { return is_injective(f) && is_surjective(f); }

}  // namespace gable
