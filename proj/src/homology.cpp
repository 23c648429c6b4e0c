#include "gable/homology.hpp"

#include "gable/error.hpp"

#include <algorithm>

namespace gable {
namespace {

bool is_relative(const RelativeMask& mask, int dim, std::size_t cell) {
  if (dim < 0 || static_cast<std::size_t>(dim) >= mask.size()) return false;
  const auto& layer = mask[static_cast<std::size_t>(dim)];
  return cell < layer.size() && layer[cell];
}

bool mask_is_empty(const RelativeMask& mask) {
  for (const auto& layer : mask)
    if (std::find(layer.begin(), layer.end(), true) != layer.end()) return false;
  return true;
}

// Positions of non-relative cells of one dimension.
std::vector<std::ptrdiff_t> free_positions(const CellComplex& cells, const RelativeMask& mask, int dim,
                                           std::vector<std::size_t>* list) {
  std::vector<std::ptrdiff_t> pos(cells.count(dim), -1);
  std::ptrdiff_t next = 0;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (is_relative(mask, dim, i)) continue;
    pos[i] = next++;
    if (list) list->push_back(i);
  }
  return pos;
}

// Boundary of the free dim-cells into the free (dim-1)-cells.
IntMatrix relative_boundary(const CellComplex& cells, const RelativeMask& mask, int dim,
                            const std::vector<std::ptrdiff_t>& col_pos, std::size_t cols) {
  std::vector<std::size_t> rows_list;
  auto row_pos = free_positions(cells, mask, dim - 1, &rows_list);
  IntMatrix m(rows_list.size(), cols);
  for (std::size_t c = 0; c < col_pos.size(); ++c) {
    if (col_pos[c] < 0) continue;
    for (const auto& [face, inc] : cells.faces(dim, c)) {
      if (row_pos[face] >= 0) m(static_cast<std::size_t>(row_pos[face]), static_cast<std::size_t>(col_pos[c])) += inc;
    }
  }
  return m;
}

}  // namespace

void CellComplex::push_dimension(std::vector<std::vector<Face>> cells) {
  const std::size_t below = cells_.empty() ? 0 : cells_.back().size();
  for (const auto& faces : cells)
    for (const auto& [f, inc] : faces)
      if (f >= below) throw Error("malformed-complex", "face index out of range");
  cells_.push_back(std::move(cells));
}

std::size_t CellComplex::count(int dim) const {
  if (dim < 0 || dim > dimension()) return 0;
  return cells_[static_cast<std::size_t>(dim)].size();
}

CellComplex CellComplex::from_simplicial(const SimplicialComplex& k) {
  CellComplex out;
  for (int d = 0; d <= k.dimension(); ++d) {
    std::vector<std::vector<Face>> layer;
    for (const auto& s : k.simplices(d)) {
      std::vector<Face> faces;
      if (d > 0) {
        for (std::size_t i = 0; i < s.size(); ++i) {
          Simplex f;
          for (std::size_t j = 0; j < s.size(); ++j)
            if (j != i) f.push_back(s[j]);
          faces.emplace_back(*k.index_of(f), i % 2 == 0 ? 1 : -1);
        }
      }
      layer.push_back(std::move(faces));
    }
    out.push_dimension(std::move(layer));
  }
  return out;
}

HomologyGroup::HomologyGroup(const CellComplex& cells, const RelativeMask& relative, int n, bool reduced)
    : n_(n) {
  if (n < 0) throw Error("negative-dimension", "homology degree must be nonnegative", std::to_string(n));
  if (reduced && !mask_is_empty(relative)) {
    throw Error("invalid-argument", "reduced homology is only defined here for absolute complexes");
  }
  cell_count_ = cells.count(n);
  free_index_ = free_positions(cells, relative, n, &free_cells_);
  const std::size_t free_n = free_cells_.size();

  boundary_ = relative_boundary(cells, relative, n, free_index_, free_n);
  if (reduced && n == 0) {
    IntMatrix aug(1, free_n);
    for (std::size_t j = 0; j < free_n; ++j) aug(0, j) = 1;
    boundary_ = IntMatrix::vstack(boundary_, aug);
  }
  cycles_ = integer_kernel(boundary_);
  const std::size_t z = cycles_.rank();

  // Relations: boundaries of free (n+1)-cells, written in cycle coordinates.
  std::vector<std::size_t> upper_list;
  auto upper_pos = free_positions(cells, relative, n + 1, &upper_list);
  IntMatrix upper = relative_boundary(cells, relative, n + 1, upper_pos, upper_list.size());
  std::vector<IntVector> rel_cols;
  for (std::size_t j = 0; j < upper.cols(); ++j) {
    IntVector col = upper.column(j);
    if (is_zero(col)) continue;
    auto c = cycles_.coordinates(col);
    if (!c) throw Error("internal-consistency", "boundary is not a cycle");
    rel_cols.push_back(std::move(*c));
  }
  IntMatrix rel = IntMatrix::from_columns(z, rel_cols);
  SmithForm s = smith_normal_form(rel);
  to_smith_ = s.u;

  IntMatrix lift = cycles_.basis() * s.u_inv;
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < z; ++i) {
    const bool bounded = i < s.rank;
    if (bounded && s.d(i, i) == 1) continue;
    kept_rows_.push_back(i);
    moduli_.push_back(bounded ? s.d(i, i) : Integer(0));
    if (bounded) {
      torsion.push_back(s.d(i, i));
    } else {
      ++factors_.free_rank;
    }
    IntVector full(cell_count_);
    for (std::size_t r = 0; r < free_n; ++r) full[free_cells_[r]] = lift(r, i);
    generators_.push_back(std::move(full));
  }
  factors_.torsion = torsion;
  IntMatrix group_rel(kept_rows_.size(), torsion.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) group_rel(i, i) = torsion[i];
  group_ = FgAbelianGroup(kept_rows_.size(), group_rel);
}

IntVector HomologyGroup::restrict_free(const IntVector& z) const {
  if (z.size() != cell_count_) throw Error("dimension-mismatch", "chain vector length mismatch");
  IntVector out(free_cells_.size());
  for (std::size_t r = 0; r < free_cells_.size(); ++r) out[r] = z[free_cells_[r]];
  return out;
}

bool HomologyGroup::is_cycle(const IntVector& z) const { return is_zero(boundary_ * restrict_free(z)); }

IntVector HomologyGroup::class_of(const IntVector& z) const {
  IntVector bz = boundary_ * restrict_free(z);
  for (std::size_t i = 0; i < bz.size(); ++i) {
    if (bz[i] != 0) throw Error("not-a-cycle", "boundary leaves the relative subcomplex", "row " + std::to_string(i));
  }
  auto x = cycles_.coordinates(restrict_free(z));
  if (!x) throw Error("internal-consistency", "cycle not in computed cycle lattice");
  IntVector y = to_smith_ * *x;
  IntVector out;
  for (std::size_t i = 0; i < kept_rows_.size(); ++i) {
    Integer v = y[kept_rows_[i]];
    if (moduli_[i] != 0) {
      v %= moduli_[i];
      if (v < 0) v += moduli_[i];
    }
    out.push_back(v);
  }
  return out;
}

RelativeMask relative_mask(const ComplexPair& pair) { return pair.sub_mask(); }

HomologyGroup homology_group(const ComplexPair& pair, int k, bool reduced) {
  return HomologyGroup(CellComplex::from_simplicial(pair.complex()), relative_mask(pair), k, reduced);
}

SimplicialHomology homology(const ComplexPair& pair, int k, bool reduced) {
  HomologyGroup h = homology_group(pair, k, reduced);
  SimplicialHomology out{h.factors(), {}};
  for (const auto& g : h.generators()) out.generators.push_back(from_oriented(k, g, pair.complex()));
  return out;
}

GroupMorphism induced_homology_map(const std::vector<std::size_t>& vertex_map, const ComplexPair& src,
                                   const ComplexPair& tgt, int k) {
  const SimplicialComplex& a = src.complex();
  const SimplicialComplex& b = tgt.complex();
  if (vertex_map.size() != a.vertex_count()) {
    throw Error("non-simplicial-map", "vertex map must assign every source vertex");
  }
  for (auto v : vertex_map)
    if (v >= b.vertex_count()) throw Error("non-simplicial-map", "vertex image out of range");
  auto image_of = [&](const Simplex& s) {
    Simplex img;
    for (auto v : s) img.push_back(vertex_map[v]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
  };
  for (int d = 0; d <= a.dimension(); ++d) {
    for (const auto& s : a.simplices(d)) {
      Simplex img = image_of(s);
      if (!b.contains(img)) {
        throw Error("non-simplicial-map", "image of a simplex is not a simplex", a.format(s) + " -> " + b.format(img));
      }
      if (src.in_sub(s) && !tgt.in_sub(img)) {
        throw Error("non-simplicial-map", "subcomplex not mapped into subcomplex", a.format(s));
      }
    }
  }
  HomologyGroup hs = homology_group(src, k);
  HomologyGroup ht = homology_group(tgt, k);
  const auto& cells = a.simplices(k);
  std::vector<IntVector> cols;
  for (const auto& g : hs.generators()) {
    IntVector image(b.count(k));
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (g[i] == 0) continue;
      std::vector<std::size_t> seq;
      for (auto v : cells[i]) seq.push_back(vertex_map[v]);
      const int sign = permutation_sign(seq);
      if (sign == 0) continue;
      std::sort(seq.begin(), seq.end());
      image[*b.index_of(seq)] += sign * g[i];
    }
    cols.push_back(ht.class_of(image));
  }
  return GroupMorphism(hs.group(), ht.group(), IntMatrix::from_columns(ht.group().generator_count(), cols));
}

}  // namespace gable
