#include "gable/shuffle.hpp"

#include "gable/error.hpp"

#include <algorithm>
#include <set>

namespace gable {
namespace {

bool has_repeated_pair(const ProductSimplex& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j]) return true;
  return false;
}

ProductSimplex canonical_of(const ProductSimplex& s) { return std::min(s, swap_pairs(s)); }

const std::vector<LatticePath>& cached_paths(int m, int n) {
  thread_local std::map<std::pair<int, int>, std::vector<LatticePath>> cache;
  auto it = cache.find({m, n});
  if (it == cache.end()) it = cache.emplace(std::make_pair(m, n), enumerate_paths(m, n)).first;
  return it->second;
}

}  // namespace

LatticePath LatticePath::from_steps(std::string steps) {
  LatticePath p;
  int ups = 0;
  for (char c : steps) {
    if (c == 'R') {
      ++p.m;
      p.area += ups;
    } else if (c == 'U') {
      ++p.n;
      ++ups;
    } else {
      throw Error("malformed-path", "steps must be R or U", std::string(1, c));
    }
  }
  p.steps = std::move(steps);
  return p;
}

LatticePath LatticePath::reflection() const {
  std::string flipped = steps;
  for (char& c : flipped) c = (c == 'R') ? 'U' : 'R';
  return from_steps(std::move(flipped));
}

std::vector<LatticePath> enumerate_paths(int m, int n) {
  if (m < 0 || n < 0) throw Error("invalid-argument", "path dimensions must be nonnegative");
  std::string steps = std::string(static_cast<std::size_t>(m), 'R') + std::string(static_cast<std::size_t>(n), 'U');
  std::vector<LatticePath> out;
  do {
    out.push_back(LatticePath::from_steps(steps));
  } while (std::next_permutation(steps.begin(), steps.end()));
  return out;
}

ProductSimplex swap_pairs(const ProductSimplex& s) {
  ProductSimplex out;
  out.reserve(s.size());
  for (const auto& [a, b] : s) out.emplace_back(b, a);
  return out;
}

ProductSimplex path_simplex(const SimplexSymbol& sigma, const SimplexSymbol& mu, const LatticePath& f) {
  if (static_cast<int>(sigma.size()) != f.m + 1 || static_cast<int>(mu.size()) != f.n + 1) {
    throw Error("dimension-mismatch", "path does not fit the symbols");
  }
  ProductSimplex out;
  std::size_t i = 0, j = 0;
  out.emplace_back(sigma[0], mu[0]);
  for (char c : f.steps) {
    (c == 'R' ? i : j)++;
    out.emplace_back(sigma[i], mu[j]);
  }
  return out;
}

Integer ProductChain::coefficient(const ProductSimplex& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Integer(0) : it->second;
}

void ProductChain::add(const ProductSimplex& s, const Integer& coef) {
  if (static_cast<int>(s.size()) != dim_ + 1) throw Error("dimension-mismatch", "product symbol length mismatch");
  if (coef == 0 || has_repeated_pair(s)) return;
  auto [it, fresh] = terms_.try_emplace(s, coef);
  if (!fresh) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

ProductChain& ProductChain::operator+=(const ProductChain& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) dim_ = other.dim_;
  for (const auto& [s, c] : other.terms_) add(s, c);
  return *this;
}

ProductChain cross(const Chain& a, const Chain& b) {
  ProductChain out(a.dim() + b.dim());
  if (a.is_zero() || b.is_zero()) return out;
  const auto& paths = cached_paths(a.dim(), b.dim());
  for (const auto& [s1, c1] : a.terms())
    for (const auto& [s2, c2] : b.terms()) {
      const Integer c = c1 * c2;
      for (const auto& f : paths) out.add(path_simplex(s1, s2, f), f.area % 2 == 0 ? c : Integer(-c));
    }
  return out;
}

ProductChain product_boundary(const ProductChain& c) {
  ProductChain out(c.dim() - 1);
  if (c.dim() <= 0) return out;
  for (const auto& [s, coef] : c.terms()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      ProductSimplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      out.add(face, i % 2 == 0 ? coef : Integer(-coef));
    }
  }
  return out;
}

OrbitSimplex OrbitSimplex::of(const ProductSimplex& s) {
  ProductSimplex sw = swap_pairs(s);
  return {std::min(s, sw), s == sw};
}

Integer GableChain::coefficient(const ProductSimplex& canonical) const {
  auto it = terms_.find(canonical);
  return it == terms_.end() ? Integer(0) : it->second;
}

void GableChain::add(const ProductSimplex& s, const Integer& coef) {
  if (static_cast<int>(s.size()) != dim_ + 1) throw Error("dimension-mismatch", "orbit symbol length mismatch");
  if (coef == 0 || has_repeated_pair(s)) return;
  auto [it, fresh] = terms_.try_emplace(canonical_of(s), coef);
  if (!fresh) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

GableChain& GableChain::operator+=(const GableChain& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) dim_ = other.dim_;
  for (const auto& [s, c] : other.terms_) add(s, c);
  return *this;
}

GableChain& GableChain::operator-=(const GableChain& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) dim_ = other.dim_;
  for (const auto& [s, c] : other.terms_) add(s, -c);
  return *this;
}

GableChain quotient_project(const ProductChain& c) {
  GableChain out(c.dim());
  for (const auto& [s, coef] : c.terms()) out.add(s, coef);
  return out;
}

GableChain quotient_project(const ProductChain& c, const SimplicialComplex& left, const SimplicialComplex& right) {
  if (!(left == right)) throw Error("mixed-complex", "the swap quotient needs both factors to be the same complex");
  return quotient_project(c);
}

GableChain gable_boundary(const GableChain& c) {
  GableChain out(c.dim() - 1);
  if (c.dim() <= 0) return out;
  for (const auto& [s, coef] : c.terms()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      ProductSimplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      out.add(face, i % 2 == 0 ? coef : Integer(-coef));
    }
  }
  return out;
}

bool is_staircase_chain(const ProductSimplex& sorted) {
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const auto& p = sorted[i];
    const auto& q = sorted[i + 1];
    if (!(p.first <= q.first && p.second <= q.second) || p == q) return false;
  }
  return true;
}

std::vector<ProductSimplex> staircase_cells(const Simplex& s, const Simplex& t) {
  std::vector<ProductSimplex> out;
  for (const auto& f : cached_paths(static_cast<int>(s.size()) - 1, static_cast<int>(t.size()) - 1))
    out.push_back(path_simplex(s, t, f));
  return out;
}

GableComplex::GableComplex(const SimplicialComplex& base) : base_(base) {
  std::vector<std::set<ProductSimplex>> layers;
  const auto facets = base_.facets();
  for (const auto& s : facets)
    for (const auto& t : facets)
      for (const auto& top : staircase_cells(s, t)) {
        const std::size_t n = top.size();
        if (layers.size() < n) layers.resize(n);
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
          ProductSimplex face;
          for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) face.push_back(top[i]);
          layers[face.size() - 1].insert(canonical_of(face));
        }
      }
  for (const auto& layer : layers) {
    cells_.emplace_back(layer.begin(), layer.end());
    for (std::size_t i = 0; i < cells_.back().size(); ++i) index_.emplace(cells_.back()[i], i);
  }
  for (std::size_t d = 0; d < cells_.size(); ++d) {
    std::vector<std::vector<CellComplex::Face>> layer;
    for (const auto& cell : cells_[d]) {
      std::vector<CellComplex::Face> faces;
      if (d > 0) {
        for (std::size_t i = 0; i < cell.size(); ++i) {
          ProductSimplex face = cell;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          faces.emplace_back(index_.at(canonical_of(face)), i % 2 == 0 ? 1 : -1);
        }
      }
      layer.push_back(std::move(faces));
    }
    complex_.push_dimension(std::move(layer));
  }
}

std::size_t GableComplex::count(int dim) const { return cells(dim).size(); }

const std::vector<ProductSimplex>& GableComplex::cells(int dim) const {
  static const std::vector<ProductSimplex> empty;
  if (dim < 0 || dim > dimension()) return empty;
  return cells_[static_cast<std::size_t>(dim)];
}

std::optional<std::size_t> GableComplex::index_of(const ProductSimplex& canonical) const {
  auto it = index_.find(canonical);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string GableComplex::format(const ProductSimplex& s) const {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += "(" + base_.label(s[i].first) + "," + base_.label(s[i].second) + ")";
  }
  return out + "]";
}

std::optional<std::pair<std::size_t, int>> GableComplex::locate(const ProductSimplex& s) const {
  if (s.empty() || has_repeated_pair(s)) return std::nullopt;
  std::vector<std::size_t> order(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return s[x] < s[y]; });
  ProductSimplex sorted;
  for (auto i : order) sorted.push_back(s[i]);
  if (!is_staircase_chain(sorted)) return std::nullopt;
  auto idx = index_of(canonical_of(sorted));
  if (!idx) return std::nullopt;
  return std::make_pair(*idx, permutation_sign(order));
}

IntVector GableComplex::to_cells(const GableChain& c) const {
  IntVector out(count(c.dim()));
  for (const auto& [s, coef] : c.terms()) {
    auto where = locate(s);
    if (!where) throw Error("outside-gable", "symbol is not a cell of the staircase gable", format(s));
    out[where->first] += where->second * coef;
  }
  return out;
}

GableChain GableComplex::from_cells(int dim, const IntVector& v) const {
  GableChain out(dim);
  const auto& cs = cells(dim);
  if (v.size() != cs.size()) throw Error("dimension-mismatch", "cell vector length mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) out.add(cs[i], v[i]);
  return out;
}

RelativeMask face_closure(const GableComplex& gable, RelativeMask seeds) {
  const int top = gable.dimension();
  seeds.resize(static_cast<std::size_t>(std::max(top + 1, 0)));
  for (int d = 0; d <= top; ++d) seeds[d].resize(gable.count(d), false);
  for (int d = top; d > 0; --d) {
    for (std::size_t c = 0; c < gable.count(d); ++c) {
      if (!seeds[d][c]) continue;
      for (const auto& [f, inc] : gable.cell_complex().faces(d, c)) seeds[d - 1][f] = true;
    }
  }
  return seeds;
}

ProductComplexResult product_complex(const SimplicialComplex& k) {
  const std::size_t n = k.vertex_count();
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) labels.push_back("(" + k.label(a) + "," + k.label(b) + ")");
  std::vector<Simplex> gens;
  const auto facets = k.facets();
  for (const auto& s : facets)
    for (const auto& t : facets)
      for (const auto& cell : staircase_cells(s, t)) {
        Simplex g;
        for (const auto& [a, b] : cell) g.push_back(a * n + b);
        gens.push_back(std::move(g));
      }
  ProductComplexResult out{SimplicialComplex(std::move(labels), gens), GableComplex(k), {}};
  RelativeMask seeds(static_cast<std::size_t>(std::max(out.gable.dimension() + 1, 0)));
  for (int d = 0; d <= out.gable.dimension(); ++d) {
    seeds[d].assign(out.gable.count(d), false);
    const auto& cells = out.gable.cells(d);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (const auto& [a, b] : cells[c])
        if (a == b) seeds[d][c] = true;
  }
  out.diagonal_sub = face_closure(out.gable, std::move(seeds));
  return out;
}

}  // namespace gable
