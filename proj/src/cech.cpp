#include "gable/cech.hpp"

#include "gable/error.hpp"

#include <algorithm>
#include <functional>

namespace gable {
namespace {

bool subset_of(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::set<std::string> intersect(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

/// Coarse names that may receive the fine set `name`, in lexicographic order.
std::vector<std::string> candidates(const CoverPair& fine, const CoverPair& coarse, const std::string& name) {
  const auto& set = fine.sets.at(name);
  const bool rel = fine.relative.count(name) > 0;
  std::vector<std::string> out;
  for (const auto& [cname, cset] : coarse.sets) {
    if (rel && !coarse.relative.count(cname)) continue;
    if (subset_of(set, cset)) out.push_back(cname);
  }
  return out;
}

Rational distance(const std::vector<Rational>& a, const std::vector<Rational>& b, Metric metric) {
  Rational out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational d = a[i] - b[i];
    if (d < 0) d = -d;
    if (metric == Metric::linf) {
      out = std::max(out, d);
    } else {
      out += d * d;
    }
  }
  return out;
}

}  // namespace

void validate(const GroundPair& ground, const CoverPair& cover) {
  std::set<std::string> points(ground.points.begin(), ground.points.end());
  for (const auto& a : ground.subset_a)
    if (!points.count(a)) throw Error("invalid-cover", "subset point is not a ground point", a);
  std::set<std::string> all, rel;
  for (const auto& [name, set] : cover.sets) {
    for (const auto& p : set)
      if (!points.count(p)) throw Error("invalid-cover", "cover set " + name + " has a point outside the ground set", p);
    all.insert(set.begin(), set.end());
    if (cover.relative.count(name)) rel.insert(set.begin(), set.end());
  }
  for (const auto& r : cover.relative)
    if (!cover.sets.count(r)) throw Error("invalid-cover", "relative name is not a cover set", r);
  for (const auto& p : ground.points)
    if (!all.count(p)) throw Error("invalid-cover", "point not covered", p);
  for (const auto& a : ground.subset_a)
    if (!rel.count(a)) throw Error("invalid-cover", "point of A not covered by the relative sets", a);
}

std::optional<std::string> witness_failure(const CoverPair& fine, const CoverPair& coarse,
                                           const RefinementWitness& witness) {
  for (const auto& [name, set] : fine.sets) {
    auto it = witness.assignment.find(name);
    if (it == witness.assignment.end()) {
      if (set.empty()) continue;
      return "no coarse set assigned to " + name;
    }
    auto target = coarse.sets.find(it->second);
    if (target == coarse.sets.end()) return name + " assigned to unknown set " + it->second;
    if (!subset_of(set, target->second)) return name + " is not contained in " + it->second;
    if (fine.relative.count(name) && !coarse.relative.count(it->second)) {
      return "relative set " + name + " assigned to non-relative " + it->second;
    }
  }
  for (const auto& [name, target] : witness.assignment)
    if (!fine.sets.count(name)) return "witness names unknown fine set " + name;
  return std::nullopt;
}

ComplexPair nerve(const GroundPair& ground, const CoverPair& cover) {
  validate(ground, cover);
  std::vector<std::string> names;
  std::vector<const std::set<std::string>*> sets;
  for (const auto& [name, set] : cover.sets) {
    if (set.empty()) continue;
    names.push_back(name);
    sets.push_back(&set);
  }
  // Depth-first over increasing vertex lists, carrying the running intersection.
  std::vector<Simplex> all, relative;
  Simplex current;
  std::function<void(std::size_t, const std::set<std::string>&)> grow = [&](std::size_t from,
                                                                            const std::set<std::string>& common) {
    for (std::size_t v = from; v < names.size(); ++v) {
      std::set<std::string> next = current.empty() ? *sets[v] : intersect(common, *sets[v]);
      if (next.empty()) continue;
      current.push_back(v);
      all.push_back(current);
      bool rel = std::all_of(current.begin(), current.end(), [&](std::size_t u) { return cover.relative.count(names[u]); });
      if (rel && std::any_of(next.begin(), next.end(), [&](const std::string& p) { return ground.subset_a.count(p); })) {
        relative.push_back(current);
      }
      grow(v + 1, next);
      current.pop_back();
    }
  };
  grow(0, {});
  SimplicialComplex k(names, all);
  return ComplexPair(k, k.subcomplex(relative));
}

CommonRefinement common_refinement(const GroundPair& ground, const CoverPair& c1, const CoverPair& c2) {
  validate(ground, c1);
  validate(ground, c2);
  CommonRefinement out;
  for (const auto& [n1, s1] : c1.sets) {
    for (const auto& [n2, s2] : c2.sets) {
      auto common = intersect(s1, s2);
      if (common.empty()) continue;
      const std::string name = "(" + n1 + "," + n2 + ")";
      out.cover.sets[name] = std::move(common);
      if (c1.relative.count(n1) && c2.relative.count(n2)) out.cover.relative.insert(name);
      out.to_first.assignment[name] = n1;
      out.to_second.assignment[name] = n2;
    }
  }
  return out;
}

std::optional<RefinementWitness> find_witness(const CoverPair& fine, const CoverPair& coarse) {
  RefinementWitness w;
  for (const auto& [name, set] : fine.sets) {
    if (set.empty()) continue;
    auto c = candidates(fine, coarse, name);
    if (c.empty()) return std::nullopt;
    w.assignment[name] = c.front();
  }
  return w;
}

std::vector<RefinementWitness> all_witnesses(const CoverPair& fine, const CoverPair& coarse, std::size_t limit) {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> choices;
  std::size_t total = 1;
  for (const auto& [name, set] : fine.sets) {
    if (set.empty()) continue;
    names.push_back(name);
    choices.push_back(candidates(fine, coarse, name));
    if (choices.back().empty()) return {};
    total *= choices.back().size();
    if (total > limit) throw Error("too-many-witnesses", "witness enumeration exceeds the limit", std::to_string(limit));
  }
  std::vector<RefinementWitness> out;
  std::vector<std::size_t> pick(names.size(), 0);
  while (true) {
    RefinementWitness w;
    for (std::size_t i = 0; i < names.size(); ++i) w.assignment[names[i]] = choices[i][pick[i]];
    out.push_back(std::move(w));
    std::size_t i = names.size();
    while (i > 0 && ++pick[i - 1] == choices[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

Projection projection(const GroundPair& ground, const CoverPair& fine, const CoverPair& coarse,
                      const std::optional<RefinementWitness>& witness) {
  validate(ground, fine);
  validate(ground, coarse);
  Projection out;
  if (witness) {
    if (auto why = witness_failure(fine, coarse, *witness)) throw Error("not-a-refinement", "invalid witness", *why);
    out.witness = *witness;
  } else {
    for (const auto& [name, set] : fine.sets) {
      if (!set.empty() && candidates(fine, coarse, name).empty()) {
        throw Error("not-a-refinement", "fine set has no containing coarse set", name);
      }
    }
    out.witness = *find_witness(fine, coarse);
  }
  ComplexPair src = nerve(ground, fine);
  ComplexPair tgt = nerve(ground, coarse);
  for (const auto& name : src.complex().labels()) {
    out.vertex_map.push_back(tgt.complex().vertex_index(out.witness.assignment.at(name)));
  }
  return out;
}

GroupMorphism projection_homology_map(const GroundPair& ground, const CoverPair& fine, const CoverPair& coarse,
                                      const std::optional<RefinementWitness>& witness, int k) {
  Projection p = projection(ground, fine, coarse, witness);
  return induced_homology_map(p.vertex_map, nerve(ground, fine), nerve(ground, coarse), k);
}

CechResult cech_homology(const GroundPair& ground, const CoverTower& tower, int k) {
  const FinitePoset& poset = tower.poset;
  if (tower.covers.size() != poset.size()) {
    throw Error("malformed-tower", "one cover per poset element required");
  }
  std::vector<ComplexPair> nerves;
  std::vector<FgAbelianGroup> groups;
  CechResult out;
  for (const auto& c : tower.covers) {
    nerves.push_back(nerve(ground, c));
    HomologyGroup h = homology_group(nerves.back(), k);
    groups.push_back(h.group());
    out.levels.push_back(h.factors());
  }
  for (const auto& [key, w] : tower.witnesses) {
    if (key.first >= poset.size() || key.second >= poset.size() || !poset.leq(key.first, key.second)) {
      throw Error("malformed-tower", "witness given for unrelated elements",
                  (key.first < poset.size() ? poset.element(key.first) : "?") + " <= " +
                      (key.second < poset.size() ? poset.element(key.second) : "?"));
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, IntMatrix> maps;
  for (const auto& [a, b] : poset.strict_pairs()) {
    std::optional<RefinementWitness> w;
    if (auto it = tower.witnesses.find({a, b}); it != tower.witnesses.end()) w = it->second;
    Projection p;
    try {
      p = projection(ground, tower.covers[b], tower.covers[a], w);
    } catch (const Error& e) {
      throw Error("not-a-refinement", poset.element(b) + " does not refine " + poset.element(a) + ": " + e.what(),
                  e.witness());
    }
    maps[{a, b}] = induced_homology_map(p.vertex_map, nerves[b], nerves[a], k).matrix();
  }
  try {
    out.system = InverseSystem(poset, groups, std::move(maps));
  } catch (const Error& e) {
    throw Error("internal-consistency", std::string("projection maps do not compose: ") + e.what(), e.witness());
  }
  out.limit = inverse_limit(out.system);
  return out;
}

CoverPair ball_cover(const PointCloud& cloud, const std::vector<std::string>& centers, const Rational& radius,
                     Metric metric, const std::set<std::string>& subset_a) {
  if (radius <= 0) throw Error("invalid-radius", "radius must be positive", radius.str());
  if (cloud.coords.size() != cloud.labels.size()) throw Error("malformed-points", "one coordinate list per label");
  const Rational bound = metric == Metric::linf ? radius : radius * radius;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < cloud.labels.size(); ++i) index[cloud.labels[i]] = i;
  CoverPair out;
  std::set<std::string> covered;
  for (const auto& c : centers) {
    auto it = index.find(c);
    if (it == index.end()) throw Error("unknown-label", "center is not a point", c);
    auto& ball = out.sets[c];
    for (std::size_t i = 0; i < cloud.labels.size(); ++i) {
      if (distance(cloud.coords[it->second], cloud.coords[i], metric) <= bound) ball.insert(cloud.labels[i]);
    }
    covered.insert(ball.begin(), ball.end());
    if (std::any_of(ball.begin(), ball.end(), [&](const std::string& p) { return subset_a.count(p); })) {
      out.relative.insert(c);
    }
  }
  for (const auto& p : cloud.labels)
    if (!covered.count(p)) throw Error("invalid-cover", "point not covered; increase the radius", p);
  return out;
}

}  // namespace gable
