#pragma once

#include "gable/chain.hpp"
#include "gable/complex.hpp"
#include "gable/homology.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gable {

/// Monotone path in the m x n grid. 'R' advances the first factor, 'U' the second.
struct LatticePath {
  std::string steps;
  int m = 0;
  int n = 0;
  /// Unit squares below the path: for each R step, the number of earlier U steps.
  int area = 0;

  LatticePath reflection() const;
  static LatticePath from_steps(std::string steps);
  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

/// All C(m+n, m) paths in lexicographic order of their step strings ('R' < 'U').
std::vector<LatticePath> enumerate_paths(int m, int n);

using VertexPair = std::pair<std::size_t, std::size_t>;
/// Ordered list of vertex pairs; the symbol (sigma, mu) o l_f of a path.
using ProductSimplex = std::vector<VertexPair>;

ProductSimplex swap_pairs(const ProductSimplex& s);
/// The pairs visited by a path through the vertices of sigma and mu.
ProductSimplex path_simplex(const SimplexSymbol& sigma, const SimplexSymbol& mu, const LatticePath& f);

/// Integer combination of product symbols; symbols with a repeated pair are dropped.
class ProductChain {
 public:
  ProductChain() = default;
  explicit ProductChain(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  const std::map<ProductSimplex, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const ProductSimplex& s) const;
  void add(const ProductSimplex& s, const Integer& coef);
  ProductChain& operator+=(const ProductChain& other);

  friend bool operator==(const ProductChain&, const ProductChain&) = default;

 private:
  int dim_ = 0;
  std::map<ProductSimplex, Integer> terms_;
};

/// sigma x mu = sum over paths f of (-1)^{|f|} (sigma, mu) o l_f, extended bilinearly.
ProductChain cross(const Chain& a, const Chain& b);
ProductChain product_boundary(const ProductChain& c);

/// Orbit of a product symbol under the swap; the representative is the
/// lexicographically smaller of s and swap(s).
struct OrbitSimplex {
  ProductSimplex canonical;
  bool is_diagonal_fixed = false;

  static OrbitSimplex of(const ProductSimplex& s);
  friend bool operator==(const OrbitSimplex&, const OrbitSimplex&) = default;
};

/// Chain on orbit symbols, keyed by canonical representatives.
class GableChain {
 public:
  GableChain() = default;
  explicit GableChain(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  const std::map<ProductSimplex, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const ProductSimplex& canonical) const;
  /// Adds coef to the orbit of s (s need not be canonical).
  void add(const ProductSimplex& s, const Integer& coef);
  GableChain& operator+=(const GableChain& other);
  GableChain& operator-=(const GableChain& other);

  friend bool operator==(const GableChain&, const GableChain&) = default;

 private:
  int dim_ = 0;
  std::map<ProductSimplex, Integer> terms_;
};

/// Sends each product symbol to its orbit, keeping coefficients.
GableChain quotient_project(const ProductChain& c);
/// As above, rejecting products of two different complexes with Error("mixed-complex").
GableChain quotient_project(const ProductChain& c, const SimplicialComplex& left, const SimplicialComplex& right);
GableChain gable_boundary(const GableChain& c);

/// The swap quotient of the staircase triangulation of K x K, as an ordered
/// Delta-complex: a cell is an orbit of a strictly increasing pair chain, its
/// vertices ordered along the chain, and faces are position deletions.
class GableComplex {
 public:
  GableComplex() = default;
  explicit GableComplex(const SimplicialComplex& base);

  const SimplicialComplex& base() const { return base_; }
  int dimension() const { return static_cast<int>(cells_.size()) - 1; }
  std::size_t count(int dim) const;
  const std::vector<ProductSimplex>& cells(int dim) const;
  std::optional<std::size_t> index_of(const ProductSimplex& canonical) const;
  const CellComplex& cell_complex() const { return complex_; }
  std::string format(const ProductSimplex& s) const;

  /// Cell index and orientation sign of an arbitrary product symbol, or
  /// nullopt when its pairs do not form a staircase chain (or it is degenerate).
  std::optional<std::pair<std::size_t, int>> locate(const ProductSimplex& s) const;
  /// Coordinates of c over the cells of dimension c.dim().
  /// Throws Error("outside-gable") with the offending symbol.
  IntVector to_cells(const GableChain& c) const;
  GableChain from_cells(int dim, const IntVector& v) const;

 private:
  SimplicialComplex base_;
  std::vector<std::vector<ProductSimplex>> cells_;
  std::map<ProductSimplex, std::size_t> index_;
  CellComplex complex_;
};

/// Staircase product of K with itself, its gable and the diagonal part.
struct ProductComplexResult {
  /// Vertices "(a,b)" in lexicographic order of (a, b).
  SimplicialComplex product;
  GableComplex gable;
  /// Face closure of the gable cells containing a pair (v,v).
  RelativeMask diagonal_sub;
};

ProductComplexResult product_complex(const SimplicialComplex& k);

/// Smallest face-closed set of gable cells containing the marked ones.
RelativeMask face_closure(const GableComplex& gable, RelativeMask seeds);

/// Cells of the staircase triangulation of s x t for sorted simplices s, t.
std::vector<ProductSimplex> staircase_cells(const Simplex& s, const Simplex& t);

/// Strict chain in the componentwise order (assumes lexicographically sorted pairs).
bool is_staircase_chain(const ProductSimplex& sorted);

}  // namespace gable
