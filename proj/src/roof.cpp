#include "gable/roof.hpp"

#include "gable/error.hpp"

#include <algorithm>
#include <set>

namespace gable {
namespace {

bool in_mask(const RelativeMask& mask, int dim, std::size_t cell) {
  if (dim < 0 || static_cast<std::size_t>(dim) >= mask.size()) return false;
  const auto& layer = mask[static_cast<std::size_t>(dim)];
  return cell < layer.size() && layer[cell];
}

RelativeMask empty_mask(const GableComplex& gable) {
  RelativeMask m(static_cast<std::size_t>(std::max(gable.dimension() + 1, 0)));
  for (int d = 0; d <= gable.dimension(); ++d) m[d].assign(gable.count(d), false);
  return m;
}

// Exact feasibility of A x = b, x >= 0 where A's last row is all ones, by
// trying every column subset whose columns are independent (basic solutions).
bool convex_feasible(const std::vector<std::vector<Rational>>& columns, std::size_t rows) {
  const std::size_t n = columns.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (std::size_t{1} << j)) chosen.push_back(j);
    const std::size_t c = chosen.size();
    if (c > rows) continue;
    // Augmented system [A_S | e_last].
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(c + 1));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < c; ++j) m[i][j] = columns[chosen[j]][i];
      m[i][c] = (i + 1 == rows) ? 1 : 0;
    }
    std::size_t r = 0;
    bool independent = true;
    for (std::size_t j = 0; j < c; ++j) {
      std::size_t p = r;
      while (p < rows && m[p][j] == 0) ++p;
      if (p == rows) {
        independent = false;
        break;
      }
      std::swap(m[p], m[r]);
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || m[i][j] == 0) continue;
        Rational f = m[i][j] / m[r][j];
        for (std::size_t t = j; t <= c; ++t) m[i][t] -= f * m[r][t];
      }
      ++r;
    }
    if (!independent) continue;
    bool consistent = true;
    for (std::size_t i = c; i < rows && consistent; ++i) consistent = m[i][c] == 0;
    if (!consistent) continue;
    bool nonnegative = true;
    for (std::size_t j = 0; j < c && nonnegative; ++j) nonnegative = m[j][c] / m[j][j] >= 0;
    if (nonnegative) return true;
  }
  return false;
}

std::optional<std::string> boundary_outside(const GableComplex& gable, const IntVector& v, int dim,
                                            const DiagonalRegion& region) {
  if (dim <= 0) return std::nullopt;
  IntVector b(gable.count(dim - 1));
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] == 0) continue;
    for (const auto& [f, inc] : gable.cell_complex().faces(dim, c)) b[f] += inc * v[c];
  }
  for (std::size_t f = 0; f < b.size(); ++f)
    if (b[f] != 0 && !region.contains(dim - 1, f)) return gable.format(gable.cells(dim - 1)[f]);
  return std::nullopt;
}

RelativeClass class_in(const HomologyGroup& h, const GableComplex& gable, const GableChain& c,
                       const DiagonalRegion& region) {
  RelativeClass out;
  out.group = h.factors();
  IntVector v = gable.to_cells(c);
  if (auto w = boundary_outside(gable, v, c.dim(), region)) {
    out.witness = *w;
    return out;
  }
  out.is_relative_cycle = true;
  out.coordinates = h.class_of(v);
  return out;
}

}  // namespace

TermList::TermList(int k, const std::vector<std::pair<Integer, SimplexSymbol>>& terms) : k_(k) {
  for (const auto& [g, s] : terms) add(g, s);
}

TermList TermList::from_chain(const Chain& c) {
  TermList out(c.dim());
  for (const auto& [s, g] : c.terms()) out.add(g, s);
  return out;
}

void TermList::add(const Integer& g, const SimplexSymbol& s) {
  if (static_cast<int>(s.size()) != k_ + 1) {
    throw Error("dimension-mismatch", "term symbol length does not match k", std::to_string(s.size()));
  }
  if (g == 0 || permutation_sign(s) == 0) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->second != s) continue;
    it->first += g;
    if (it->first == 0) terms_.erase(it);
    return;
  }
  terms_.emplace_back(g, s);
}

Chain TermList::to_chain() const {
  Chain c(k_);
  for (const auto& [g, s] : terms_) c.add(s, g);
  return c;
}

GableChain roof(const TermList& sigma) {
  const int k = sigma.k();
  if (k % 2 != 0) {
    throw Error("odd-dimension",
                "the roof map needs even k: in odd dimensions p(s_i x s_j) = -p(s_j x s_i), so the pair sum "
                "depends on the term order",
                "k=" + std::to_string(k));
  }
  GableChain out(2 * k);
  const auto& t = sigma.terms();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Chain a(k);
    a.add(t[i].second, 1);
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      Chain b(k);
      b.add(t[j].second, 1);
      const Integer g = t[i].first * t[j].first;
      const ProductChain prod = cross(a, b);
      for (const auto& [s, c] : prod.terms()) out.add(s, g * c);
    }
  }
  return out;
}

Realization vertex_realization(const SimplicialComplex& k) {
  Realization r;
  for (std::size_t v = 0; v < k.vertex_count(); ++v) r.push_back(vertex_point(v));
  return r;
}

bool touches_diagonal(const ProductSimplex& s, const Realization& realization) {
  for (const auto& [a, b] : s) {
    if (a >= realization.size() || b >= realization.size()) {
      throw Error("invalid-argument", "pair uses a vertex without a realization");
    }
    if (a == b || realization[a] == realization[b]) return true;
  }
  std::set<std::size_t> coords;
  for (const auto& [a, b] : s) {
    for (const auto& [v, c] : realization[a].coords) coords.insert(v);
    for (const auto& [v, c] : realization[b].coords) coords.insert(v);
  }
  std::vector<std::size_t> axis(coords.begin(), coords.end());
  const std::size_t rows = axis.size() + 1;
  std::vector<std::vector<Rational>> columns;
  for (const auto& [a, b] : s) {
    std::vector<Rational> col(rows);
    for (std::size_t i = 0; i < axis.size(); ++i) col[i] = realization[a].at(axis[i]) - realization[b].at(axis[i]);
    col[rows - 1] = 1;
    columns.push_back(std::move(col));
  }
  return convex_feasible(columns, rows);
}

bool DiagonalRegion::contains(int dim, std::size_t cell) const { return in_mask(cells, dim, cell); }

std::size_t DiagonalRegion::size() const {
  std::size_t n = 0;
  for (const auto& layer : cells) n += static_cast<std::size_t>(std::count(layer.begin(), layer.end(), true));
  return n;
}

bool DiagonalRegion::includes(const DiagonalRegion& other) const {
  for (std::size_t d = 0; d < other.cells.size(); ++d)
    for (std::size_t c = 0; c < other.cells[d].size(); ++c)
      if (other.cells[d][c] && !contains(static_cast<int>(d), c)) return false;
  return true;
}

DiagonalRegion diagonal_region(const GableComplex& gable, const std::vector<std::size_t>& a_vertices) {
  const Realization r = vertex_realization(gable.base());
  std::set<std::size_t> a(a_vertices.begin(), a_vertices.end());
  RelativeMask seeds = empty_mask(gable);
  for (int d = 0; d <= gable.dimension(); ++d) {
    const auto& cells = gable.cells(d);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      bool meets_a = false;
      for (const auto& [x, y] : cells[c]) meets_a = meets_a || a.count(x) || a.count(y);
      seeds[d][c] = meets_a || touches_diagonal(cells[c], r);
    }
  }
  return {face_closure(gable, std::move(seeds))};
}

DiagonalRegion region_from_cells(const GableComplex& gable, const std::vector<ProductSimplex>& cells) {
  RelativeMask seeds = empty_mask(gable);
  for (const auto& s : cells) {
    auto where = gable.locate(s);
    if (!where) throw Error("outside-gable", "region cell is not a gable cell", gable.format(s));
    seeds[s.size() - 1][where->first] = true;
  }
  return {face_closure(gable, std::move(seeds))};
}

DiagonalRegion region_union(const DiagonalRegion& a, const DiagonalRegion& b) {
  DiagonalRegion out = a;
  if (out.cells.size() < b.cells.size()) out.cells.resize(b.cells.size());
  for (std::size_t d = 0; d < b.cells.size(); ++d) {
    if (out.cells[d].size() < b.cells[d].size()) out.cells[d].resize(b.cells[d].size(), false);
    for (std::size_t c = 0; c < b.cells[d].size(); ++c)
      if (b.cells[d][c]) out.cells[d][c] = true;
  }
  return out;
}

RelativeClass relative_cycle_class(const GableChain& c, const GableComplex& gable, const DiagonalRegion& region) {
  gable.to_cells(c);  // rejects support outside the gable before any homology work
  HomologyGroup h(gable.cell_complex(), region.cells, c.dim());
  return class_in(h, gable, c, region);
}

std::vector<ProductSimplex> nu_square_cells(const TermList& nu) {
  std::vector<ProductSimplex> out;
  for (const auto& [g, s] : nu.terms())
    for (const auto& f : enumerate_paths(nu.k(), nu.k())) out.push_back(path_simplex(s, s, f));
  return out;
}

IndependenceReport representative_independence_check(const TermList& sigma, const TermList& nu,
                                                     const GableComplex& gable, const DiagonalRegion& region) {
  if (nu.k() != sigma.k() + 1) throw Error("dimension-mismatch", "nu must have dimension k + 1");
  IndependenceReport rep;
  Chain s = sigma.to_chain();
  if (!boundary(s).is_zero()) {
    rep.preconditions_ok = false;
    rep.violation = "sigma is not a cycle";
    return rep;
  }
  for (const auto& cell : nu_square_cells(nu)) {
    auto where = gable.locate(cell);
    if (!where || !region.contains(static_cast<int>(cell.size()) - 1, where->first)) {
      rep.preconditions_ok = false;
      rep.violation = "region misses " + gable.format(cell);
      return rep;
    }
  }
  TermList shifted = TermList::from_chain(s - boundary(nu.to_chain()));
  GableChain r0 = roof(sigma);
  GableChain r1 = roof(shifted);
  HomologyGroup h(gable.cell_complex(), region.cells, 2 * sigma.k());
  rep.before = class_in(h, gable, r0, region);
  rep.after = class_in(h, gable, r1, region);
  rep.holds = rep.before.is_relative_cycle && rep.after.is_relative_cycle &&
              rep.before.coordinates == rep.after.coordinates;
  return rep;
}

GroupMorphism region_inclusion_map(const GableComplex& gable, const DiagonalRegion& inner,
                                   const DiagonalRegion& outer, int degree) {
  if (!outer.includes(inner)) throw Error("non-nested-regions", "inner region is not contained in outer region");
  HomologyGroup hi(gable.cell_complex(), inner.cells, degree);
  HomologyGroup ho(gable.cell_complex(), outer.cells, degree);
  std::vector<IntVector> cols;
  for (const auto& g : hi.generators()) cols.push_back(ho.class_of(g));
  return GroupMorphism(hi.group(), ho.group(), IntMatrix::from_columns(ho.group().generator_count(), cols));
}

RoofFamily roof_family(const TermList& sigma, const GableComplex& gable, const std::vector<DiagonalRegion>& regions) {
  if (regions.empty()) throw Error("non-nested-regions", "at least one region is required");
  for (std::size_t j = 0; j + 1 < regions.size(); ++j) {
    if (!regions[j].includes(regions[j + 1])) {
      throw Error("non-nested-regions", "regions must shrink along the list", "level " + std::to_string(j + 1));
    }
  }
  const GableChain r = roof(sigma);
  const int degree = 2 * sigma.k();
  std::vector<HomologyGroup> groups;
  RoofFamily fam;
  for (const auto& region : regions) {
    groups.emplace_back(gable.cell_complex(), region.cells, degree);
    fam.levels.push_back(class_in(groups.back(), gable, r, region));
  }
  for (std::size_t j = 0; j + 1 < regions.size(); ++j) {
    bool ok = fam.levels[j].is_relative_cycle && fam.levels[j + 1].is_relative_cycle;
    if (ok) {
      std::vector<IntVector> cols;
      for (const auto& g : groups[j + 1].generators()) cols.push_back(groups[j].class_of(g));
      GroupMorphism inc(groups[j + 1].group(), groups[j].group(),
                        IntMatrix::from_columns(groups[j].group().generator_count(), cols));
      ok = groups[j].group().equal(inc.apply(fam.levels[j + 1].coordinates), fam.levels[j].coordinates);
    }
    fam.compatible.push_back(ok);
    fam.all_compatible = fam.all_compatible && ok;
  }
  return fam;
}

TermList fundamental_terms(const SimplicialComplex& m, int k) {
  SimplicialHomology h = homology(ComplexPair(m), k);
  if (h.factors.free_rank != 1 || !h.factors.torsion.empty() || m.dimension() != k) {
    throw Error("not-fundamental", "H_k is not Z for a k-dimensional complex", h.factors.to_string());
  }
  TermList out = TermList::from_chain(h.generators[0]);
  if (out.terms().size() != m.count(k)) throw Error("not-fundamental", "generator does not cover every top simplex");
  return out;
}

FundamentalReport fundamental_roof_check(const SimplicialComplex& m, const TermList& fundamental) {
  const int k = fundamental.k();
  if (k % 2 != 0) throw Error("odd-dimension", "the roof map needs even k", "k=" + std::to_string(k));
  if (!boundary(fundamental.to_chain()).is_zero()) throw Error("not-a-cycle", "fundamental term list is not a cycle");
  std::set<Simplex> tops;
  for (const auto& [g, s] : fundamental.terms()) {
    Simplex sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (g != 1 && g != -1) throw Error("not-fundamental", "coefficients must be +-1", m.format(s));
    if (!m.contains(sorted)) throw Error("not-fundamental", "term is not a simplex", m.format(s));
    if (!tops.insert(sorted).second) throw Error("not-fundamental", "two terms on one simplex", m.format(s));
  }
  if (m.dimension() != k || tops.size() != m.count(k)) {
    throw Error("not-fundamental", "need exactly one term per top simplex");
  }

  FundamentalReport rep;
  GableComplex gable(m);
  const Realization real = vertex_realization(m);
  const GableChain r = roof(fundamental);
  const GableChain rb = gable_boundary(r);
  rep.boundary_terms = rb.terms().size();
  rep.boundary_touches_diagonal = true;
  for (const auto& [s, c] : rb.terms()) {
    if (!touches_diagonal(s, real)) {
      rep.boundary_touches_diagonal = false;
      if (rep.witness.empty()) rep.witness = "boundary term off the diagonal: " + gable.format(s);
    }
  }

  rep.unit_coefficients = true;
  std::set<std::size_t> support;
  bool located = true;
  for (const auto& [s, c] : r.terms()) {
    if (c != 1 && c != -1) {
      rep.unit_coefficients = false;
      if (rep.witness.empty()) rep.witness = "coefficient " + c.str() + " on " + gable.format(s);
    }
    auto where = gable.locate(s);
    if (!where) {
      located = false;
      if (rep.witness.empty()) rep.witness = "roof term outside the gable: " + gable.format(s);
      continue;
    }
    support.insert(where->first);
  }
  rep.support_size = r.terms().size();

  std::set<std::size_t> expected;
  std::vector<Simplex> top_list(tops.begin(), tops.end());
  for (std::size_t i = 0; i < top_list.size(); ++i)
    for (std::size_t j = i + 1; j < top_list.size(); ++j)
      for (const auto& cell : staircase_cells(top_list[i], top_list[j])) expected.insert(gable.locate(cell)->first);
  rep.expected_support_size = expected.size();
  rep.support_matches = located && support == expected && rep.support_size == expected.size();
  if (!rep.support_matches && rep.witness.empty()) rep.witness = "support differs from the staircase top cells";

  if (located) {
    DiagonalRegion region = diagonal_region(gable);
    auto outside = boundary_outside(gable, gable.to_cells(r), 2 * k, region);
    rep.relative_cycle = !outside;
    if (outside && rep.witness.empty()) rep.witness = "boundary leaves the diagonal region at " + *outside;
  }
  return rep;
}

}  // namespace gable
