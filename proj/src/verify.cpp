#include "gable/verify.hpp"

#include "gable/cech.hpp"
#include "gable/error.hpp"
#include "gable/generators.hpp"
#include "gable/homology.hpp"
#include "gable/inverse_limit.hpp"
#include "gable/roof.hpp"
#include "gable/shuffle.hpp"
#include "gable/smith.hpp"
#include "gable/subdivision.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace gable::verify {
namespace {

using gen::Rng;

struct Item {
  std::string name;
  std::function<Check(Rng&)> run;
};

Check verdict(std::string name, bool pass, std::string witness = {}) {
  return Check{std::move(name), pass, pass ? std::string() : std::move(witness)};
}

std::string h(const ComplexPair& p, int k, bool reduced = false) { return homology(p, k, reduced).factors.to_string(); }

Chain symbol(const std::vector<std::size_t>& s) {
  Chain c(static_cast<int>(s.size()) - 1);
  c.add(s, 1);
  return c;
}

ProductChain scaled(const ProductChain& c, long f) {
  ProductChain out(c.dim());
  for (const auto& [s, x] : c.terms()) out.add(s, x * f);
  return out;
}

/// Injective words of the given length over {0, ..., n-1}.
std::vector<std::vector<std::size_t>> words(std::size_t n, std::size_t length) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> w;
  std::function<void()> grow = [&] {
    if (w.size() == length) {
      out.push_back(w);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (std::find(w.begin(), w.end(), v) != w.end()) continue;
      w.push_back(v);
      grow();
      w.pop_back();
    }
  };
  grow();
  return out;
}

/// Coefficients of the Gaussian binomial [m+n choose m]_q by the Pascal recurrence.
std::vector<long long> gaussian(int m, int n) {
  if (m == 0 || n == 0) return {1};
  auto a = gaussian(m - 1, n);  // q^0 branch: last step is R
  auto b = gaussian(m, n - 1);  // last step U, shifted by m
  std::vector<long long> out(static_cast<std::size_t>(m * n + 1), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + static_cast<std::size_t>(m)] += b[i];
  return out;
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Item> snf_suite() {
  std::vector<Item> items;
  for (int i = 0; i < 200; ++i) {
    items.push_back({"snf-" + std::to_string(i), [i](Rng& rng) {
                       IntMatrix m = gen::random_matrix(rng, 6, 6, 9);
                       SmithForm s = smith_normal_form(m);
                       bool ok = s.u * m * s.v == s.d && s.d.is_diagonal();
                       IntVector d = s.diagonal();
                       for (std::size_t j = 0; j + 1 < d.size(); ++j) ok = ok && d[j + 1] % d[j] == 0;
                       for (const auto& x : d) ok = ok && x > 0;
                       ok = ok && s.u * s.u_inv == IntMatrix::identity(m.rows()) &&
                            s.v * s.v_inv == IntMatrix::identity(m.cols());
                       Integer du = determinant(s.u), dv = determinant(s.v);
                       ok = ok && (du == 1 || du == -1) && (dv == 1 || dv == -1);
                       return verdict("snf-" + std::to_string(i), ok, m.to_string());
                     }});
  }
  return items;
}

std::vector<Item> homology_suite() {
  std::vector<Item> items;
  const std::vector<std::pair<std::string, std::vector<std::string>>> table{
      {"boundary-delta3", {"Z", "0", "Z"}}, {"rp2", {"Z", "Z/2", "0"}}, {"torus", {"Z", "Z^2", "Z"}}, {"point", {"Z"}}};
  for (const auto& [name, expected] : table) {
    items.push_back({"table-" + name, [name, expected](Rng&) {
                       ComplexPair p(gen::standard_complex(name));
                       std::string got;
                       bool ok = true;
                       for (std::size_t k = 0; k < expected.size(); ++k) {
                         std::string g = h(p, static_cast<int>(k));
                         got += (k ? ", " : "") + g;
                         ok = ok && g == expected[k];
                       }
                       return verdict("table-" + name, ok, got);
                     }});
  }
  for (int i = 0; i < 20; ++i) {
    items.push_back({"euler-sd-" + std::to_string(i), [i](Rng& rng) {
                       SimplicialComplex k = gen::random_complex(rng, 6, 3);
                       SubdivisionResult sd = barycentric_subdivision(k);
                       long chi_cells = 0, chi_homology = 0;
                       bool same = true;
                       std::string witness;
                       for (int d = 0; d <= k.dimension(); ++d) {
                         auto f = homology(ComplexPair(k), d).factors;
                         chi_cells += (d % 2 ? -1 : 1) * static_cast<long>(k.count(d));
                         chi_homology += (d % 2 ? -1 : 1) * static_cast<long>(f.free_rank);
                         auto g = homology(ComplexPair(sd.sd), d).factors;
                         if (!(f == g)) {
                           same = false;
                           witness = "H_" + std::to_string(d) + ": " + f.to_string() + " vs " + g.to_string();
                         }
                       }
                       if (chi_cells != chi_homology) witness = "Euler characteristic mismatch";
                       return verdict("euler-sd-" + std::to_string(i), same && chi_cells == chi_homology, witness);
                     }});
  }
  return items;
}

std::vector<Item> shuffle_laws_suite(const Options& o) {
  std::vector<Item> items;
  for (int m = 0; m <= o.max_path; ++m) {
    for (int n = 0; n <= o.max_path; ++n) {
      const std::string name = "paths-" + std::to_string(m) + "x" + std::to_string(n);
      items.push_back({name, [m, n, name](Rng&) {
                         auto paths = enumerate_paths(m, n);
                         std::vector<long long> poly(static_cast<std::size_t>(m * n + 1), 0);
                         bool refl = true;
                         for (const auto& f : paths) {
                           ++poly[static_cast<std::size_t>(f.area)];
                           refl = refl && f.area + f.reflection().area == m * n;
                         }
                         const bool count = static_cast<long long>(paths.size()) == binomial(m + n, m);
                         const bool q = poly == gaussian(m, n);
                         return verdict(name, count && q && refl,
                                        !count ? "path count" : !q ? "area polynomial" : "reflection areas");
                       }});
    }
  }
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; m + n <= 5; ++n) {
      const std::string name = "boundary-" + std::to_string(m) + "+" + std::to_string(n);
      items.push_back({name, [m, n, name](Rng&) {
                         auto left = words(static_cast<std::size_t>(m + 1), static_cast<std::size_t>(m + 1));
                         auto right = words(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1));
                         for (const auto& s : left) {
                           for (const auto& t : right) {
                             Chain a = symbol(s), b = symbol(t);
                             ProductChain rhs = cross(boundary(a), b);
                             rhs += scaled(cross(a, boundary(b)), m % 2 == 0 ? 1 : -1);
                             if (!(product_boundary(cross(a, b)) == rhs)) {
                               std::ostringstream w;
                               for (auto v : s) w << v;
                               w << " x ";
                               for (auto v : t) w << v;
                               return verdict(name, false, w.str());
                             }
                           }
                         }
                         return verdict(name, true);
                       }});
    }
  }
  return items;
}

std::vector<Item> parity_suite(const Options& o) {
  std::vector<Item> items;
  for (int k = 1; k <= o.max_k; ++k) {
    const std::string name = "parity-k" + std::to_string(k);
    items.push_back({name, [k, name](Rng&) {
                       auto ws = words(4, static_cast<std::size_t>(k + 1));
                       const long sign = k % 2 == 0 ? 1 : -1;
                       for (const auto& s1 : ws) {
                         for (const auto& s2 : ws) {
                           GableChain lhs = quotient_project(cross(symbol(s1), symbol(s2)));
                           GableChain rhs = quotient_project(scaled(cross(symbol(s2), symbol(s1)), sign));
                           if (!(lhs == rhs)) {
                             std::ostringstream w;
                             for (auto v : s1) w << v;
                             w << " x ";
                             for (auto v : s2) w << v;
                             return verdict(name, false, w.str());
                           }
                         }
                       }
                       return verdict(name, true);
                     }});
  }
  return items;
}

Check fundamental_item(const std::string& name, const std::string& complex, std::size_t expected) {
  SimplicialComplex m = gen::standard_complex(complex);
  FundamentalReport r = fundamental_roof_check(m, fundamental_terms(m, 2));
  std::ostringstream w;
  w << "support " << r.support_size << " of " << r.expected_support_size << "; " << r.witness;
  return verdict(name, r.ok() && r.support_size == expected, w.str());
}

std::vector<Item> roof_existence_suite() {
  return {{"boundary-delta3", [](Rng&) { return fundamental_item("boundary-delta3", "boundary-delta3", 36); }},
          {"torus", [](Rng&) { return fundamental_item("torus", "torus", 546); }}};
}

std::vector<Item> independence_suite() {
  std::vector<Item> items;
  for (int i = 0; i < 50; ++i) {
    const std::string name = "trial-" + std::to_string(i);
    items.push_back({name, [name](Rng& rng) {
                       auto t = gen::random_independence_trial(rng, 6);
                       GableComplex g(t.complex);
                       DiagonalRegion region =
                           region_union(diagonal_region(g), region_from_cells(g, nu_square_cells(t.nu)));
                       IndependenceReport r = representative_independence_check(t.sigma, t.nu, g, region);
                       return verdict(name, r.preconditions_ok && r.holds,
                                      r.preconditions_ok ? "classes differ" : r.violation);
                     }});
  }
  return items;
}

/// Regions V_1 ⊇ ... ⊇ V_r on the ∂Δ³ gable: the diagonal region with the
/// closures of a growing number of further top cells.
std::vector<DiagonalRegion> nested_regions(const GableComplex& g, const std::vector<std::size_t>& extra_counts) {
  DiagonalRegion inner = diagonal_region(g);
  std::vector<ProductSimplex> outside;
  for (const auto& cell : g.cells(g.dimension()))
    if (!inner.contains(g.dimension(), *g.index_of(cell))) outside.push_back(cell);
  std::vector<DiagonalRegion> out;
  for (auto n : extra_counts) {
    std::vector<ProductSimplex> pick(outside.begin(), outside.begin() + static_cast<std::ptrdiff_t>(std::min(n, outside.size())));
    out.push_back(region_union(inner, region_from_cells(g, pick)));
  }
  return out;
}

std::vector<Item> roof_family_suite() {
  std::vector<Item> items;
  const std::vector<std::vector<std::size_t>> families{{0, 0}, {3, 0}, {10, 3, 0}, {24, 12, 1, 0}};
  for (std::size_t i = 0; i < families.size(); ++i) {
    const std::string name = "family-" + std::to_string(i);
    items.push_back({name, [name, fam = families[i]](Rng&) {
                       SimplicialComplex m = gen::standard_complex("boundary-delta3");
                       GableComplex g(m);
                       RoofFamily f = roof_family(fundamental_terms(m, 2), g, nested_regions(g, fam));
                       bool cycles = std::all_of(f.levels.begin(), f.levels.end(),
                                                 [](const RelativeClass& c) { return c.is_relative_cycle; });
                       return verdict(name, f.all_compatible && cycles, "incompatible levels");
                     }});
  }
  return items;
}

InverseSystem chain_system() {
  FgAbelianGroup z(1);
  return InverseSystem(FinitePoset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), {z, z, z},
                       {{{0, 1}, IntMatrix{{2}}}, {{1, 2}, IntMatrix{{2}}}});
}

InverseSystem cospan_system() {
  FgAbelianGroup z(1);
  return InverseSystem(FinitePoset({"l", "m1", "m2"}, {{"l", "m1"}, {"l", "m2"}}), {z, z, z},
                       {{{0, 1}, IntMatrix{{2}}}, {{0, 2}, IntMatrix{{3}}}});
}

std::vector<Item> limits_suite() {
  std::vector<Item> items;
  items.push_back({"chain-basis", [](Rng&) {
                     InverseLimit l = inverse_limit(chain_system());
                     bool ok = l.basis.size() == 1 && l.basis[0] == std::vector<IntVector>{{4}, {2}, {1}};
                     return verdict("chain-basis", ok, invariant_factors(l.group).to_string());
                   }});
  items.push_back({"cospan-basis", [](Rng&) {
                     InverseLimit l = inverse_limit(cospan_system());
                     bool ok = l.basis.size() == 1 && l.basis[0] == std::vector<IntVector>{{6}, {3}, {2}};
                     return verdict("cospan-basis", ok, invariant_factors(l.group).to_string());
                   }});
  for (int i = 0; i < 20; ++i) {
    const std::string name = "cone-" + std::to_string(i);
    items.push_back({name, [name, i](Rng& rng) {
                       InverseSystem sys = i % 5 == 0   ? chain_system()
                                           : i % 5 == 1 ? cospan_system()
                                                        : gen::random_directed_system(rng, 5, gen::uniform(rng, 1, 3));
                       InverseLimit lim = inverse_limit(sys);
                       const auto rank = static_cast<std::size_t>(gen::uniform(rng, 1, 2));
                       FgAbelianGroup k(rank);
                       IntMatrix m(lim.group.generator_count(), rank);
                       for (std::size_t r = 0; r < m.rows(); ++r)
                         for (std::size_t c = 0; c < rank; ++c) m(r, c) = gen::uniform(rng, -4, 4);
                       GroupMorphism psi(k, lim.group, m);
                       std::vector<GroupMorphism> cone;
                       for (const auto& u : lim.projections) cone.push_back(u.compose(psi));
                       auto out = factor_cone(sys, lim, cone);
                       bool ok = out && out->equals(psi);
                       for (std::size_t j = 0; ok && j < cone.size(); ++j) ok = lim.projections[j].compose(*out).equals(cone[j]);
                       return verdict(name, ok, out ? "factorization differs" : "no factorization");
                     }});
  }
  return items;
}

std::vector<Item> cofinality_suite() {
  std::vector<Item> items;
  for (int i = 0; i < 30; ++i) {
    const std::string name = "system-" + std::to_string(i);
    items.push_back({name, [name](Rng& rng) {
                       InverseSystem sys = gen::random_directed_system(rng, 6, gen::uniform(rng, 1, 3));
                       std::vector<std::string> subset;
                       for (int attempt = 0; attempt < 20; ++attempt) {
                         subset = gen::random_subset(rng, sys.poset());
                         if (cofinality_class(sys.poset(), subset) == Cofinality::strong) break;
                       }
                       if (cofinality_class(sys.poset(), subset) != Cofinality::strong) subset.push_back("top");
                       if (!sys.poset().is_directed() || cofinality_class(sys.poset(), subset) != Cofinality::strong) {
                         return verdict(name, false, "generator produced no strong-cofinal subset");
                       }
                       std::sort(subset.begin(), subset.end());
                       subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
                       LimitComparison cmp = restricted_limit_compare(sys, subset);
                       bool commutes = true;
                       for (std::size_t j = 0; j < subset.size(); ++j) {
                         const std::size_t full_index = sys.poset().index_of(subset[j]);
                         commutes = commutes && cmp.restricted.projections[j].compose(cmp.comparison).equals(
                                                    cmp.full.projections[full_index]);
                       }
                       return verdict(name, cmp.is_iso && commutes, cmp.is_iso ? "projections do not commute" : "not an isomorphism");
                     }});
  }
  return items;
}

Check independence_over_witnesses(const std::string& name, const GroundPair& g, const CoverPair& fine,
                                  const CoverPair& coarse, std::size_t expected) {
  auto all = all_witnesses(fine, coarse);
  if (all.size() != expected) return verdict(name, false, std::to_string(all.size()) + " witnesses");
  for (int k = 0; k <= 1; ++k) {
    GroupMorphism first = projection_homology_map(g, fine, coarse, all.front(), k);
    for (const auto& w : all) {
      if (!projection_homology_map(g, fine, coarse, w, k).equals(first)) {
        std::string desc;
        for (const auto& [a, b] : w.assignment) desc += a + "->" + b + " ";
        return verdict(name, false, "H_" + std::to_string(k) + " differs for " + desc);
      }
    }
  }
  return verdict(name, true);
}

GroundPair circle(int n) {
  GroundPair g;
  for (int i = 0; i < n; ++i) g.points.push_back("p" + std::to_string(i));
  return g;
}

CoverPair arcs(int n, const std::vector<std::pair<int, int>>& spans, const std::string& prefix) {
  CoverPair c;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    auto& set = c.sets[prefix + std::to_string(i + 1)];
    for (int j = 0; j < spans[i].second; ++j) set.insert("p" + std::to_string((spans[i].first + j) % n));
  }
  return c;
}

CoverPair three_arcs() { return arcs(6, {{0, 3}, {2, 3}, {4, 3}}, "U"); }
CoverPair six_arcs() { return arcs(6, {{0, 2}, {1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 2}}, "A"); }

std::vector<Item> projection_suite() {
  return {{"six-to-three-arcs",
           [](Rng&) { return independence_over_witnesses("six-to-three-arcs", circle(6), six_arcs(), three_arcs(), 1); }},
          {"twelve-point-circle", [](Rng&) {
             return independence_over_witnesses("twelve-point-circle", circle(12),
                                                arcs(12, {{0, 3}, {2, 3}, {4, 3}, {6, 3}, {8, 3}, {10, 3}}, "F"),
                                                arcs(12, {{0, 7}, {4, 7}, {8, 7}}, "V"), 8);
           }}};
}

std::vector<Item> nerve_suite() {
  std::vector<Item> items;
  items.push_back({"three-arcs", [](Rng&) {
                     ComplexPair n = nerve(circle(6), three_arcs());
                     return verdict("three-arcs", h(n, 1) == "Z" && n.complex().count(2) == 0, h(n, 1));
                   }});
  items.push_back({"two-level-tower", [](Rng&) {
                     CoverTower t{FinitePoset({"coarse", "fine"}, {{"coarse", "fine"}}), {three_arcs(), six_arcs()}, {}};
                     CechResult r = cech_homology(circle(6), t, 1);
                     std::string got = invariant_factors(r.limit.group).to_string();
                     return verdict("two-level-tower", got == "Z", got);
                   }});
  items.push_back({"hexagon-balls", [](Rng&) {
                     PointCloud hex{{"a", "b", "c", "d", "e", "f"},
                                    {{2, 0}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}}};
                     GroundPair g{hex.labels, {}};
                     bool ok = true;
                     std::string w;
                     for (Metric m : {Metric::linf, Metric::l2}) {
                       std::string got = h(nerve(g, ball_cover(hex, hex.labels, Rational(5, 2), m)), 1);
                       if (got != "Z") {
                         ok = false;
                         w = got;
                       }
                     }
                     return verdict("hexagon-balls", ok, w);
                   }});
  for (int i = 0; i < 10; ++i) {
    const std::string name = "common-point-" + std::to_string(i);
    items.push_back({name, [name](Rng& rng) {
                       GroundPair g = circle(8);
                       CoverPair c;
                       const int n = gen::uniform(rng, 1, 5);
                       for (int s = 0; s < n; ++s) {
                         auto& set = c.sets["S" + std::to_string(s)];
                         set.insert("p0");
                         for (const auto& p : g.points)
                           if (gen::uniform(rng, 0, 1)) set.insert(p);
                       }
                       c.sets["S0"].insert(g.points.begin(), g.points.end());
                       ComplexPair p = nerve(g, c);
                       bool ok = p.complex().dimension() == n - 1 && p.complex().count(n - 1) == 1 && h(p, 0) == "Z";
                       for (int k = 1; k < n; ++k) ok = ok && h(p, k) == "0";
                       return verdict(name, ok, std::to_string(n) + " sets");
                     }});
  }
  for (int i = 0; i < 10; ++i) {
    const std::string name = "refinement-" + std::to_string(i);
    items.push_back({name, [name](Rng& rng) {
                       GroundPair g = circle(6);
                       const int shift = gen::uniform(rng, 0, 5);
                       CoverPair rotated = arcs(6, {{shift, 3}, {shift + 2, 3}, {shift + 4, 3}}, "R");
                       CommonRefinement w = common_refinement(g, three_arcs(), rotated);
                       if (auto why = witness_failure(w.cover, three_arcs(), w.to_first)) return verdict(name, false, *why);
                       if (auto why = witness_failure(w.cover, rotated, w.to_second)) return verdict(name, false, *why);
                       // Through the six-arc cover when it refines the intersection cover's target.
                       GroupMorphism direct = projection_homology_map(g, w.cover, three_arcs(), w.to_first, 1);
                       auto to_six = find_witness(w.cover, six_arcs());
                       if (!to_six) return verdict(name, true);
                       GroupMorphism via = projection_homology_map(g, six_arcs(), three_arcs(), std::nullopt, 1)
                                               .compose(projection_homology_map(g, w.cover, six_arcs(), to_six, 1));
                       return verdict(name, direct.equals(via), "composite projections differ");
                     }});
  }
  return items;
}

std::vector<Item> cone_suite() {
  std::vector<Item> items;
  for (int i = 0; i < 20; ++i) {
    const std::string name = "pair-" + std::to_string(i);
    items.push_back({name, [name](Rng& rng) {
                       ComplexPair p = gen::random_pair(rng, 6, 3);
                       ConeResult c = cone_pair(p);
                       ComplexPair cone(c.complex);
                       for (int k = 0; k <= p.complex().dimension() + 1; ++k) {
                         std::string rel = h(p, k), red = h(cone, k, true);
                         if (rel != red) return verdict(name, false, "H_" + std::to_string(k) + ": " + rel + " vs " + red);
                       }
                       return verdict(name, true);
                     }});
  }
  return items;
}

std::vector<Item> subdivision_suite() {
  std::vector<Item> items;
  for (int i = 0; i < 20; ++i) {
    const std::string name = "sd-" + std::to_string(i);
    items.push_back({name, [name](Rng& rng) {
                       ComplexPair p = gen::random_pair(rng, 6, 3);
                       SubdivisionResult sd = barycentric_subdivision(p.complex(), p.sub());
                       for (int k = 0; k <= p.complex().dimension(); ++k) {
                         if (h(p, k) != h(ComplexPair(sd.sd, *sd.induced_sub), k)) {
                           return verdict(name, false, "H_" + std::to_string(k));
                         }
                       }
                       if (!is_full(sd.sd, *sd.induced_sub)) return verdict(name, false, "sd L not full");
                       return verdict(name, subdivision_partition_check(p.complex(), sd).ok, "partition");
                     }});
  }
  items.push_back({"full-exhaustive", [](Rng&) {
                     SimplicialComplex tri = gen::standard_complex("triangle");
                     std::vector<Simplex> all;
                     for (int d = 0; d <= 2; ++d)
                       for (const auto& s : tri.simplices(d)) all.push_back(s);
                     for (unsigned mask = 1; mask < (1u << all.size()); ++mask) {
                       std::vector<Simplex> gens;
                       for (std::size_t j = 0; j < all.size(); ++j)
                         if (mask & (1u << j)) gens.push_back(all[j]);
                       SubdivisionResult sd = barycentric_subdivision(tri, tri.subcomplex(gens));
                       if (!is_full(sd.sd, *sd.induced_sub)) return verdict("full-exhaustive", false, std::to_string(mask));
                     }
                     return verdict("full-exhaustive", true);
                   }});
  items.push_back({"delta2-partition", [](Rng&) {
                     SimplicialComplex tri = gen::standard_complex("triangle");
                     PartitionReport r = subdivision_partition_check(tri, barycentric_subdivision(tri));
                     const PartitionEntry& top = r.entries.back();
                     std::size_t sixths = 0;
                     for (const auto& piece : top.pieces) sixths += piece.volume == Rational(1, 6);
                     return verdict("delta2-partition", r.ok && sixths == 6 && top.volume_sum == 1,
                                    std::to_string(sixths) + " pieces of 1/6");
                   }});
  return items;
}

std::vector<Item> retraction_suite() {
  std::vector<Item> items;
  items.push_back({"edge-example", [](Rng&) {
                     SimplicialComplex edge = SimplicialComplex::from_labels({"u", "v"}, {{"u", "v"}});
                     SimplicialComplex l = SimplicialComplex::from_labels({"u"}, {{"u"}});
                     RationalPoint p{{{0, Rational(1, 3)}, {1, Rational(2, 3)}}};
                     RetractionResult r = retract_point(edge, l, p, Rational(1, 2));
                     RationalPoint half{{{0, Rational(2, 3)}, {1, Rational(1, 3)}}};
                     bool ok = r.a == Rational(1, 3) && r.alpha_prime == vertex_point(0) && r.alpha_out == half &&
                               r.n_complex.vertex_count() == 1 && r.n_complex.label(0) == "v";
                     return verdict("edge-example", ok, "a=" + r.a.str());
                   }});
  for (int i = 0; i < 50; ++i) {
    const std::string name = "fixed-" + std::to_string(i);
    items.push_back({name, [name](Rng& rng) {
                       SimplicialComplex k = gen::random_complex(rng, 6, 3);
                       SimplicialComplex l = gen::random_full_subcomplex(rng, k);
                       RationalPoint p = gen::random_point(rng, l);
                       RationalPoint in_k;
                       for (const auto& [v, c] : p.coords) in_k.coords[k.vertex_index(l.label(v))] = c;
                       Rational t(gen::uniform(rng, 0, 4), 4);
                       RetractionResult r = retract_point(k, l, in_k, t);
                       bool ok = r.a == 1 && r.alpha_prime == in_k && r.alpha_out == in_k;
                       return verdict(name, ok, format(in_k, k));
                     }});
  }
  return items;
}

std::vector<Item> suite_items(const std::string& name, const Options& o) {
  if (name == "snf") return snf_suite();
  if (name == "homology") return homology_suite();
  if (name == "shuffle-laws") return shuffle_laws_suite(o);
  if (name == "shuffle-parity") return parity_suite(o);
  if (name == "roof-existence") return roof_existence_suite();
  if (name == "representative-independence") return independence_suite();
  if (name == "roof-family") return roof_family_suite();
  if (name == "limits") return limits_suite();
  if (name == "cofinality") return cofinality_suite();
  if (name == "projection-independence") return projection_suite();
  if (name == "nerve") return nerve_suite();
  if (name == "cone") return cone_suite();
  if (name == "subdivision") return subdivision_suite();
  if (name == "retraction") return retraction_suite();
  throw Error("unknown-suite", "unknown verification suite", name);
}

}  // namespace

bool SuiteReport::pass() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "snf",         "homology", "shuffle-laws", "shuffle-parity", "roof-existence", "representative-independence",
      "roof-family", "limits",   "cofinality",   "projection-independence",         "nerve",
      "cone",        "subdivision", "retraction"};
  return names;
}

std::vector<SuiteReport> run(const std::string& name, const Options& options) {
  std::vector<std::string> selected;
  if (name == "all") {
    selected = suite_names();
  } else {
    suite_items(name, options);  // validates the name
    selected = {name};
  }
  struct Task {
    std::size_t suite;
    std::size_t index;
    const Item* item;
  };
  std::vector<std::vector<Item>> items;
  std::vector<SuiteReport> reports;
  for (const auto& s : selected) {
    items.push_back(suite_items(s, options));
    reports.push_back({s, std::vector<Check>(items.back().size())});
  }
  std::vector<Task> tasks;
  for (std::size_t s = 0; s < items.size(); ++s)
    for (std::size_t i = 0; i < items[s].size(); ++i) tasks.push_back({s, i, &items[s][i]});

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const Task& task = tasks[t];
      Rng rng = gen::make_rng(options.seed, selected[task.suite], task.index);
      Check c;
      try {
        c = task.item->run(rng);
      } catch (const Error& e) {
        c = Check{task.item->name, false, e.kind() + ": " + e.what() + (e.witness().empty() ? "" : " [" + e.witness() + "]")};
      } catch (const std::exception& e) {
        c = Check{task.item->name, false, e.what()};
      }
      reports[task.suite].checks[task.index] = std::move(c);
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return reports;
}

nlohmann::json to_json(const std::vector<SuiteReport>& reports, const Options& options) {
  nlohmann::json suites = nlohmann::json::array();
  bool all = true;
  for (const auto& r : reports) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& c : r.checks)
      if (!c.pass) failures.push_back({{"check", c.name}, {"witness", c.witness}});
    suites.push_back({{"suite", r.suite},
                      {"pass", r.pass()},
                      {"checks", r.checks.size()},
                      {"failed", r.failures()},
                      {"failures", failures}});
    all = all && r.pass();
  }
  return {{"seed", options.seed}, {"suites", suites}, {"pass", all}};
}

}  // namespace gable::verify
