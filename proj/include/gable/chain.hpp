#pragma once

#include "gable/complex.hpp"
#include "gable/integer_matrix.hpp"

#include <map>
#include <utility>
#include <vector>

namespace gable {

/// Ordered vertex list (repeats allowed), standing for the affine simplex
/// through those vertices in that order.
using SimplexSymbol = std::vector<std::size_t>;

/// Integer combination of symbols of a fixed dimension. Normalized: symbols
/// with a repeated vertex and zero coefficients never appear.
class Chain {
 public:
  Chain() = default;
  explicit Chain(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  const std::map<SimplexSymbol, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const SimplexSymbol& s) const;

  /// Throws Error("dimension-mismatch") if the symbol length is not dim + 1.
  void add(const SimplexSymbol& s, const Integer& coef);
  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain operator*(const Integer& c) const;

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  int dim_ = 0;
  std::map<SimplexSymbol, Integer> terms_;
};

Chain operator+(Chain a, const Chain& b);
Chain operator-(Chain a, const Chain& b);

/// Alternating sum of vertex deletions. The boundary of a 0-chain is the zero
/// chain of dimension -1.
Chain boundary(const Chain& c);

/// Checks that every symbol spans a simplex of k; throws Error("outside-complex").
void validate(const Chain& c, const SimplicialComplex& k);

/// Oriented-simplex coordinates: each symbol contributes sign(sort) * coef at
/// the index of its sorted simplex in k.simplices(dim).
IntVector to_oriented(const Chain& c, const SimplicialComplex& k);
/// Inverse direction: one sorted symbol per nonzero entry.
Chain from_oriented(int dim, const IntVector& v, const SimplicialComplex& k);

}  // namespace gable
