#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gable {

/// Sorted list of vertex indices.
using Simplex = std::vector<std::size_t>;

/// Finite abstract simplicial complex over an ordered label set. The vertex
/// order is the order of the label list and is used everywhere an order is
/// needed (orientations, orbit representatives, subdivision).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Closes `generators` under faces. Every label becomes a vertex.
  /// Throws Error("malformed-complex") on duplicate labels or bad indices.
  SimplicialComplex(std::vector<std::string> labels, const std::vector<Simplex>& generators);
  static SimplicialComplex from_labels(std::vector<std::string> labels,
                                       const std::vector<std::vector<std::string>>& generators);

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  std::optional<std::size_t> find_vertex(const std::string& label) const;
  /// Throws Error("unknown-label").
  std::size_t vertex_index(const std::string& label) const;

  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Simplex>& simplices(int dim) const;
  std::size_t count(int dim) const { return simplices(dim).size(); }
  std::size_t size() const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  /// Maximal simplices in (dim, lex) order.
  std::vector<Simplex> facets() const;

  /// Subcomplex generated by simplices given in this complex's indices; its
  /// labels are the used vertices in induced order.
  SimplicialComplex subcomplex(const std::vector<Simplex>& generators) const;
  /// The simplices of `sub` re-indexed into this complex, matched by label.
  /// Throws Error("not-a-subcomplex") with the offending simplex.
  std::vector<Simplex> embed(const SimplicialComplex& sub) const;
  /// Labels of a simplex, e.g. "[a,b,c]".
  std::string format(const Simplex& s) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.labels_ == b.labels_ && a.by_dim_ == b.by_dim_;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> label_index_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::map<Simplex, std::size_t> index_;
};

/// A complex with a subcomplex (matched by vertex label).
class ComplexPair {
 public:
  ComplexPair() = default;
  explicit ComplexPair(SimplicialComplex complex);
  /// Throws Error("not-a-subcomplex") if sub is not contained in complex.
  ComplexPair(SimplicialComplex complex, SimplicialComplex sub);

  const SimplicialComplex& complex() const { return complex_; }
  const SimplicialComplex& sub() const { return sub_; }
  /// s given in the indices of complex().
  bool in_sub(const Simplex& s) const;
  /// Per dimension, membership of each simplex of complex() in sub().
  const std::vector<std::vector<bool>>& sub_mask() const { return mask_; }

 private:
  SimplicialComplex complex_;
  SimplicialComplex sub_;
  std::vector<std::vector<bool>> mask_;
};

/// Sign of the permutation sorting `v`, 0 if it has a repeated entry.
int permutation_sign(const std::vector<std::size_t>& v);

}  // namespace gable
