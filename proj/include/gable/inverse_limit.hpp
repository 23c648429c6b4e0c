#pragma once

#include "gable/abelian.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gable {

/// Finite quasi-order (reflexive, transitive; antisymmetry not required).
/// The relation passed in is closed reflexively and transitively.
class FinitePoset {
 public:
  FinitePoset() = default;
  FinitePoset(std::vector<std::string> elements,
              const std::vector<std::pair<std::string, std::string>>& leq);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element(std::size_t i) const { return elements_.at(i); }
  /// Throws Error("unknown-label").
  std::size_t index_of(const std::string& label) const;
  std::optional<std::size_t> find(const std::string& label) const;

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * elements_.size() + b]; }
  /// All related pairs (a, b), a != b, a <= b.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;
  bool is_directed() const;
  /// Induced sub-quasi-order on the given indices (kept in the given order).
  FinitePoset restrict(const std::vector<std::size_t>& subset) const;

 private:
  std::vector<std::string> elements_;
  std::vector<bool> leq_;
};

/// Co-functor from a finite quasi-order to abelian groups: a group per element
/// and a morphism group_at(b) -> group_at(a) for every a <= b.
class InverseSystem {
 public:
  InverseSystem() = default;
  /// `maps` is keyed by (a, b) with a <= b; missing strict pairs are filled in
  /// by composing along chains of given maps. Reflexive pairs are identities.
  /// Throws Error("inconsistent-system") if the co-functor laws fail.
  InverseSystem(FinitePoset poset, std::vector<FgAbelianGroup> groups,
                std::map<std::pair<std::size_t, std::size_t>, IntMatrix> maps);

  const FinitePoset& poset() const { return poset_; }
  const FgAbelianGroup& group_at(std::size_t i) const { return groups_.at(i); }
  const std::vector<FgAbelianGroup>& groups() const { return groups_; }
  /// Morphism group_at(b) -> group_at(a), requires a <= b.
  const GroupMorphism& map_for(std::size_t a, std::size_t b) const;

  InverseSystem restrict(const std::vector<std::size_t>& subset) const;

 private:
  FinitePoset poset_;
  std::vector<FgAbelianGroup> groups_;
  std::map<std::pair<std::size_t, std::size_t>, GroupMorphism> maps_;
};

struct InverseLimit {
  FgAbelianGroup group;
  /// Direct product of all group_at(i), generators concatenated in element order.
  FgAbelianGroup product;
  /// lim -> product.
  GroupMorphism inclusion;
  /// u_i : lim -> group_at(i).
  std::vector<GroupMorphism> projections;
  /// basis[g][i] = component at element i of limit generator g.
  std::vector<std::vector<IntVector>> basis;
};

/// Compatible tuples x with x_a = I(a<=b) x_b, as the kernel of the
/// difference map from the product into one copy of group_at(a) per strict pair.
InverseLimit inverse_limit(const InverseSystem& system);

/// Given a cone phi_i : K -> group_at(i), the unique psi : K -> lim with
/// u o psi = phi; nullopt if phi is not compatible with the system.
std::optional<GroupMorphism> factor_cone(const InverseSystem& system, const InverseLimit& limit,
                                         const std::vector<GroupMorphism>& cone);

enum class Cofinality { none, weak, strong };
const char* to_string(Cofinality c);

/// weak: every element lies below some subset element; strong: in addition any
/// two subset elements above a common element have an upper bound in the subset.
Cofinality cofinality_class(const FinitePoset& poset, const std::vector<std::string>& subset);

struct LimitComparison {
  InverseLimit full;
  InverseLimit restricted;
  /// lim(full) -> lim(restricted), forgetting components outside the subset.
  GroupMorphism comparison;
  bool is_iso = false;
};

LimitComparison restricted_limit_compare(const InverseSystem& system,
                                         const std::vector<std::string>& subset);

}  // namespace gable
