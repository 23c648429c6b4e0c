#pragma once

#include "gable/complex.hpp"
#include "gable/integer_matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gable {

/// Point of |K| in barycentric coordinates (zero coordinates omitted).
struct RationalPoint {
  std::map<std::size_t, Rational> coords;

  Rational at(std::size_t v) const;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// Checks nonnegativity, sum 1 and that the support spans a simplex of k.
/// Throws Error("invalid-point").
void validate(const RationalPoint& p, const SimplicialComplex& k);
/// The support of p: the simplex whose interior contains p.
Simplex carrier(const RationalPoint& p);
RationalPoint vertex_point(std::size_t v);
RationalPoint barycenter(const Simplex& s);
/// Sum of w_i * p_i.
RationalPoint affine_combination(const std::vector<RationalPoint>& points, const std::vector<Rational>& weights);
std::string format(const RationalPoint& p, const SimplicialComplex& k);

struct SubdivisionResult {
  /// Vertices b(s) in (dim, lex) order of the underlying simplex s.
  SimplicialComplex sd;
  /// sd vertex -> underlying simplex of K.
  std::vector<Simplex> underlying;
  /// sd vertex -> barycenter in |K|.
  std::vector<RationalPoint> realization;
  /// sd K | L when a subcomplex was supplied.
  std::optional<SimplicialComplex> induced_sub;
};

/// Vertices of sd K are the simplices of K; simplices are chains of faces.
/// Throws Error("not-a-subcomplex") if l is not contained in k.
SubdivisionResult barycentric_subdivision(const SimplicialComplex& k,
                                          const std::optional<SimplicialComplex>& l = std::nullopt);

/// A simplex of k spanned by vertices of l that is missing from l, if any.
std::optional<Simplex> fullness_witness(const SimplicialComplex& k, const SimplicialComplex& l);
bool is_full(const SimplicialComplex& k, const SimplicialComplex& l);

struct SimplexClass {
  enum Kind { in_l, in_n, split };
  Kind kind;
  Simplex l_part;  // vertices in L (k indices)
  Simplex n_part;  // vertices outside L
};
const char* to_string(SimplexClass::Kind kind);

/// Throws Error("not-full") with the witness simplex when l is not full in k.
SimplexClass classify_simplex(const SimplicialComplex& k, const SimplicialComplex& l, const Simplex& s);

struct PartitionPiece {
  Simplex sd_simplex;
  /// Volume of the closed piece relative to |s| (nonzero only for top pieces).
  Rational volume;
};

struct PartitionEntry {
  Simplex simplex;
  std::vector<PartitionPiece> pieces;
  Rational volume_sum;
  bool disjoint = true;
  bool carriers_ok = true;
  bool ok = false;
};

struct PartitionReport {
  std::vector<PartitionEntry> entries;
  bool ok = true;
};

/// For each s in k: the open simplices of sd K with carrier s are pairwise
/// disjoint and their closures have relative volumes summing to 1.
PartitionReport subdivision_partition_check(const SimplicialComplex& k, const SubdivisionResult& sub);

struct ConeResult {
  SimplicialComplex complex;
  std::size_t apex;
};

/// X with the cone on A attached; the apex is a fresh label placed last.
ConeResult cone_pair(const ComplexPair& pair);

struct RetractionResult {
  Rational a;
  RationalPoint alpha_prime;
  RationalPoint alpha_out;
  /// Simplices of K with no vertex in L.
  SimplicialComplex n_complex;
  /// Simplices of sd K with no vertex in sd L.
  SimplicialComplex n1_complex;
};

/// Throws Error("not-full") if l is not full, Error("point-in-n") if p has no
/// mass on L, Error("invalid-point") for bad p or t outside [0, 1].
RetractionResult retract_point(const SimplicialComplex& k, const SimplicialComplex& l, const RationalPoint& p,
                               const Rational& t);

}  // namespace gable
