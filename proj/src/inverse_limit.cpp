#include "gable/inverse_limit.hpp"

#include "gable/error.hpp"

#include <algorithm>

namespace gable {

FinitePoset::FinitePoset(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& leq)
    : elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (elements_[i] == elements_[j]) throw Error("malformed-poset", "duplicate element", elements_[i]);
  leq_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = true;
  for (const auto& [a, b] : leq) leq_[index_of(a) * n + index_of(b)] = true;
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k * n + j]) leq_[i * n + j] = true;
}

std::optional<std::size_t> FinitePoset::find(const std::string& label) const {
  auto it = std::find(elements_.begin(), elements_.end(), label);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t FinitePoset::index_of(const std::string& label) const {
  auto i = find(label);
  if (!i) throw Error("unknown-label", "label is not an element of the poset", label);
  return *i;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (a != b && leq(a, b)) out.emplace_back(a, b);
  return out;
}

bool FinitePoset::is_directed() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b) {
      bool bounded = false;
      for (std::size_t c = 0; c < size() && !bounded; ++c) bounded = leq(a, c) && leq(b, c);
      if (!bounded) return false;
    }
  return true;
}

FinitePoset FinitePoset::restrict(const std::vector<std::size_t>& subset) const {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> rel;
  for (auto i : subset) names.push_back(element(i));
  for (auto i : subset)
    for (auto j : subset)
      if (leq(i, j)) rel.emplace_back(element(i), element(j));
  return FinitePoset(std::move(names), rel);
}

InverseSystem::InverseSystem(FinitePoset poset, std::vector<FgAbelianGroup> groups,
                             std::map<std::pair<std::size_t, std::size_t>, IntMatrix> maps)
    : poset_(std::move(poset)), groups_(std::move(groups)) {
  const std::size_t n = poset_.size();
  if (groups_.size() != n) throw Error("inconsistent-system", "one group per poset element required");

  for (auto& [key, matrix] : maps) {
    auto [a, b] = key;
    if (a >= n || b >= n || !poset_.leq(a, b)) {
      throw Error("inconsistent-system", "map given for an unrelated pair",
                  (a < n ? poset_.element(a) : "?") + "<=" + (b < n ? poset_.element(b) : "?"));
    }
    try {
      maps_.emplace(key, GroupMorphism(groups_[b], groups_[a], matrix));
    } catch (const Error& e) {
      throw Error("inconsistent-system", std::string("ill-defined map: ") + e.what(),
                  poset_.element(a) + "<=" + poset_.element(b));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    auto it = maps_.find({a, a});
    if (it != maps_.end() && !it->second.equals(GroupMorphism::identity(groups_[a]))) {
      throw Error("inconsistent-system", "reflexive map is not the identity", poset_.element(a));
    }
    maps_.insert_or_assign({a, a}, GroupMorphism::identity(groups_[a]));
  }
  // Fill missing pairs by composing through intermediate elements until stable.
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto [a, b] : poset_.strict_pairs()) {
      if (maps_.count({a, b})) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        auto lower = maps_.find({a, c});
        auto upper = maps_.find({c, b});
        if (lower != maps_.end() && upper != maps_.end()) {
          maps_.emplace(std::make_pair(a, b), lower->second.compose(upper->second));
          progress = true;
          break;
        }
      }
    }
  }
  for (auto [a, b] : poset_.strict_pairs()) {
    if (!maps_.count({a, b})) {
      throw Error("inconsistent-system", "no map for related pair",
                  poset_.element(a) + "<=" + poset_.element(b));
    }
  }
  // Co-functor law: I(a<=b) o I(b<=c) = I(a<=c).
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!poset_.leq(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!poset_.leq(b, c)) continue;
        if (!maps_.at({a, b}).compose(maps_.at({b, c})).equals(maps_.at({a, c}))) {
          throw Error("inconsistent-system", "maps do not compose",
                      poset_.element(a) + "<=" + poset_.element(b) + "<=" + poset_.element(c));
        }
      }
    }
}

const GroupMorphism& InverseSystem::map_for(std::size_t a, std::size_t b) const {
  auto it = maps_.find({a, b});
  if (it == maps_.end()) throw Error("unknown-label", "elements are not related");
  return it->second;
}

InverseSystem InverseSystem::restrict(const std::vector<std::size_t>& subset) const {
  std::vector<FgAbelianGroup> groups;
  std::map<std::pair<std::size_t, std::size_t>, IntMatrix> maps;
  for (auto i : subset) groups.push_back(groups_.at(i));
  for (std::size_t x = 0; x < subset.size(); ++x)
    for (std::size_t y = 0; y < subset.size(); ++y)
      if (x != y && poset_.leq(subset[x], subset[y]))
        maps.emplace(std::make_pair(x, y), map_for(subset[x], subset[y]).matrix());
  return InverseSystem(poset_.restrict(subset), std::move(groups), std::move(maps));
}

InverseLimit inverse_limit(const InverseSystem& system) {
  const FinitePoset& poset = system.poset();
  const std::size_t n = poset.size();

  std::vector<std::size_t> offset(n + 1, 0);
  std::vector<IntMatrix> rel_blocks;
  for (std::size_t i = 0; i < n; ++i) {
    offset[i + 1] = offset[i] + system.group_at(i).generator_count();
    rel_blocks.push_back(system.group_at(i).relations());
  }
  const std::size_t total = offset[n];
  FgAbelianGroup product(total, IntMatrix::block_diagonal(rel_blocks));

  // Difference map: one block row per strict pair (a <= b): x_a - I(a<=b) x_b.
  auto pairs = poset.strict_pairs();
  std::size_t out_dim = 0;
  std::vector<IntMatrix> tgt_rel;
  for (auto [a, b] : pairs) {
    out_dim += system.group_at(a).generator_count();
    tgt_rel.push_back(system.group_at(a).relations());
  }
  IntMatrix diff(out_dim, total);
  std::size_t row = 0;
  for (auto [a, b] : pairs) {
    const IntMatrix& m = system.map_for(a, b).matrix();
    const std::size_t ga = system.group_at(a).generator_count();
    for (std::size_t i = 0; i < ga; ++i) {
      diff(row + i, offset[a] + i) += 1;
      for (std::size_t j = 0; j < m.cols(); ++j) diff(row + i, offset[b] + j) -= m(i, j);
    }
    row += ga;
  }
  FgAbelianGroup pair_target(out_dim, IntMatrix::block_diagonal(tgt_rel));
  KernelResult k = kernel(GroupMorphism(product, pair_target, diff));

  InverseLimit out{k.group, product, k.inclusion, {}, {}};
  const IntMatrix& inc = k.inclusion.matrix();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t gi = system.group_at(i).generator_count();
    out.projections.emplace_back(k.group, system.group_at(i), inc.block(offset[i], 0, gi, inc.cols()));
  }
  for (std::size_t g = 0; g < inc.cols(); ++g) {
    std::vector<IntVector> comps;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector c;
      for (std::size_t r = offset[i]; r < offset[i + 1]; ++r) c.push_back(inc(r, g));
      comps.push_back(std::move(c));
    }
    out.basis.push_back(std::move(comps));
  }
  return out;
}

std::optional<GroupMorphism> factor_cone(const InverseSystem& system, const InverseLimit& limit,
                                         const std::vector<GroupMorphism>& cone) {
  const FinitePoset& poset = system.poset();
  const std::size_t n = poset.size();
  if (cone.size() != n) throw Error("dimension-mismatch", "one cone morphism per poset element required");
  if (n == 0) return std::nullopt;
  const FgAbelianGroup& apex = cone.front().source();
  for (std::size_t i = 0; i < n; ++i) {
    if (cone[i].source().generator_count() != apex.generator_count() ||
        cone[i].target().generator_count() != system.group_at(i).generator_count()) {
      throw Error("dimension-mismatch", "cone morphism has the wrong shape", poset.element(i));
    }
  }
  for (auto [a, b] : poset.strict_pairs())
    if (!system.map_for(a, b).compose(cone[b]).equals(cone[a])) return std::nullopt;

  // Stack the cone into K -> product and lift each column through the inclusion.
  IntMatrix stacked(0, apex.generator_count());
  for (const auto& phi : cone) stacked = IntMatrix::vstack(stacked, phi.matrix());
  const IntMatrix system_matrix = IntMatrix::hstack(limit.inclusion.matrix(), limit.product.relations());
  const std::size_t lim_gens = limit.group.generator_count();
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < stacked.cols(); ++j) {
    auto sol = solve_integer(system_matrix, stacked.column(j));
    if (!sol) return std::nullopt;
    cols.emplace_back(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(lim_gens));
  }
  return GroupMorphism(apex, limit.group, IntMatrix::from_columns(lim_gens, cols));
}

const char* to_string(Cofinality c) {
  switch (c) {
    case Cofinality::none: return "none";
    case Cofinality::weak: return "weak";
    case Cofinality::strong: return "strong";
  }
  return "none";
}

Cofinality cofinality_class(const FinitePoset& poset, const std::vector<std::string>& subset) {
  std::vector<std::size_t> idx;
  for (const auto& label : subset) idx.push_back(poset.index_of(label));
  for (std::size_t l = 0; l < poset.size(); ++l) {
    bool dominated = false;
    for (auto w : idx) dominated = dominated || poset.leq(l, w);
    if (!dominated) return Cofinality::none;
  }
  for (std::size_t l = 0; l < poset.size(); ++l)
    for (auto w1 : idx)
      for (auto w2 : idx) {
        if (!poset.leq(l, w1) || !poset.leq(l, w2)) continue;
        bool bounded = false;
        for (auto w : idx) bounded = bounded || (poset.leq(w1, w) && poset.leq(w2, w));
        if (!bounded) return Cofinality::weak;
      }
  return Cofinality::strong;
}

LimitComparison restricted_limit_compare(const InverseSystem& system,
                                         const std::vector<std::string>& subset) {
  if (subset.empty()) throw Error("empty-subset", "restricted limit needs a nonempty subset");
  std::vector<std::size_t> idx;
  for (const auto& label : subset) {
    std::size_t i = system.poset().index_of(label);
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
  }
  InverseSystem restricted = system.restrict(idx);
  LimitComparison out{inverse_limit(system), inverse_limit(restricted), {}, false};

  // The full limit's projections onto the subset form a cone over the restricted system.
  std::vector<GroupMorphism> cone;
  for (auto i : idx) cone.push_back(out.full.projections[i]);
  auto psi = factor_cone(restricted, out.restricted, cone);
  if (!psi) throw Error("internal-consistency", "full limit projections are not a cone on the subset");
  out.comparison = std::move(*psi);
  out.is_iso = is_isomorphism(out.comparison);
  return out;
}

}  // namespace gable
