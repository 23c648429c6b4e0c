#include "gable/generators.hpp"

#include "gable/error.hpp"
#include "gable/homology.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gable::gen {

Rng make_rng(std::uint64_t seed, const std::string& suite, std::uint64_t item) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                   static_cast<std::uint32_t>(item), static_cast<std::uint32_t>(item >> 32)};
  for (unsigned char c : suite) words.push_back(c);
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

IntMatrix random_matrix(Rng& rng, std::size_t max_rows, std::size_t max_cols, long bound) {
  const auto r = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_rows)));
  const auto c = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_cols)));
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(rng, static_cast<int>(-bound), static_cast<int>(bound));
  return m;
}

namespace {

std::vector<std::string> numbered(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

Simplex random_simplex(Rng& rng, int n, int size) {
  std::set<std::size_t> s;
  while (static_cast<int>(s.size()) < std::min(size, n)) s.insert(static_cast<std::size_t>(uniform(rng, 0, n - 1)));
  return Simplex(s.begin(), s.end());
}

}  // namespace

SimplicialComplex random_complex(Rng& rng, int max_vertices, int max_dim, int max_facets) {
  const int n = uniform(rng, 1, max_vertices);
  std::vector<Simplex> facets;
  const int count = uniform(rng, 1, max_facets);
  for (int i = 0; i < count; ++i) facets.push_back(random_simplex(rng, n, uniform(rng, 0, max_dim) + 1));
  return SimplicialComplex(numbered(n), facets);
}

ComplexPair random_pair(Rng& rng, int max_vertices, int max_dim) {
  SimplicialComplex k = random_complex(rng, max_vertices, max_dim);
  std::vector<Simplex> gens;
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d))
      if (uniform(rng, 0, 3) == 0) gens.push_back(s);
  return ComplexPair(k, k.subcomplex(gens));
}

SimplicialComplex random_full_subcomplex(Rng& rng, const SimplicialComplex& k) {
  std::set<std::size_t> keep;
  for (std::size_t v = 0; v < k.vertex_count(); ++v)
    if (uniform(rng, 0, 1)) keep.insert(v);
  if (keep.empty()) keep.insert(static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(k.vertex_count()) - 1)));
  std::vector<Simplex> gens;
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d))
      if (std::all_of(s.begin(), s.end(), [&](std::size_t v) { return keep.count(v) > 0; })) gens.push_back(s);
  return k.subcomplex(gens);
}

RationalPoint random_point(Rng& rng, const SimplicialComplex& k) {
  const int d = uniform(rng, 0, k.dimension());
  const auto& pool = k.simplices(d);
  const Simplex& s = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
  std::vector<long> w;
  long total = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    w.push_back(uniform(rng, 0, 4));
    total += w.back();
  }
  if (total == 0) {
    w[0] = 1;
    total = 1;
  }
  RationalPoint p;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (w[i]) p.coords[s[i]] = Rational(w[i], total);
  return p;
}

Chain random_chain(Rng& rng, const SimplicialComplex& k, int d, int max_terms, long bound) {
  Chain c(d);
  if (d > k.dimension()) return c;
  const auto& pool = k.simplices(d);
  const int terms = uniform(rng, 1, max_terms);
  for (int i = 0; i < terms; ++i) {
    const Simplex& s = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
    c.add(s, uniform(rng, static_cast<int>(-bound), static_cast<int>(bound)));
  }
  return c;
}

IndependenceTrial random_independence_trial(Rng& rng, int max_vertices) {
  const int k = uniform(rng, 0, 1) * 2;
  const int n = uniform(rng, std::min(4, max_vertices), max_vertices);
  std::vector<Simplex> facets;
  if (k == 0) {
    const int count = uniform(rng, 1, 4);
    for (int i = 0; i < count; ++i) facets.push_back(random_simplex(rng, n, uniform(rng, 1, 3)));
  } else {
    // A hollow tetrahedron carries H_2; the solid ones carry nu.
    const Simplex hollow = random_simplex(rng, n, 4);
    for (std::size_t skip = 0; skip < 4; ++skip) {
      Simplex face;
      for (std::size_t i = 0; i < 4; ++i)
        if (i != skip) face.push_back(hollow[i]);
      facets.push_back(std::move(face));
    }
    const int tets = uniform(rng, 1, 2);
    for (int i = 0; i < tets; ++i) {
      Simplex t = random_simplex(rng, n, 4);
      if (t != hollow) facets.push_back(std::move(t));
    }
  }
  SimplicialComplex complex(numbered(n), facets);

  Chain sigma(k);
  for (int attempt = 0; attempt < 8 && sigma.is_zero(); ++attempt) {
    if (k == 0) {
      sigma = random_chain(rng, complex, 0);
    } else {
      sigma = boundary(random_chain(rng, complex, 3, 2, 2));
      for (const auto& z : homology(ComplexPair(complex), 2).generators) sigma += z * uniform(rng, -2, 2);
    }
  }
  Chain nu = random_chain(rng, complex, k + 1, 2, 2);
  return {complex, TermList::from_chain(sigma), TermList::from_chain(nu)};
}

InverseSystem random_directed_system(Rng& rng, int max_elements, int rank) {
  const int lower = uniform(rng, 1, std::max(1, max_elements - 1));
  const bool duplicate_top = uniform(rng, 0, 1) == 1;
  std::vector<std::string> names;
  for (int i = 0; i < lower; ++i) names.push_back("e" + std::to_string(i));
  names.push_back("top");
  if (duplicate_top) names.push_back("top2");
  std::vector<std::pair<std::string, std::string>> leq;
  for (int i = 0; i < lower; ++i) {
    for (int j = i + 1; j < lower; ++j)
      if (uniform(rng, 0, 2) == 0) leq.emplace_back(names[i], names[j]);
    leq.emplace_back(names[i], "top");
  }
  if (duplicate_top) {
    leq.emplace_back("top", "top2");
    leq.emplace_back("top2", "top");
  }
  FinitePoset poset(names, leq);
  const std::size_t size = poset.size();
  const auto r = static_cast<std::size_t>(rank);

  // Each element contributes relation columns to itself and everything below it.
  std::vector<std::vector<IntVector>> own(size);
  for (std::size_t x = 0; x < size; ++x) {
    const int cols = uniform(rng, 0, 1);
    for (int c = 0; c < cols; ++c) {
      IntVector v(r);
      for (auto& e : v) e = uniform(rng, -3, 3);
      v[static_cast<std::size_t>(uniform(rng, 0, rank - 1))] += 2;
      own[x].push_back(std::move(v));
    }
  }
  std::vector<IntMatrix> basis(size), basis_inv(size);
  std::vector<FgAbelianGroup> groups;
  for (std::size_t x = 0; x < size; ++x) {
    IntMatrix w = IntMatrix::identity(r), w_inv = IntMatrix::identity(r);
    for (int step = 0; step < 4 && r > 1; ++step) {
      const auto t = static_cast<std::size_t>(uniform(rng, 0, rank - 1));
      auto s = static_cast<std::size_t>(uniform(rng, 0, rank - 2));
      if (s >= t) ++s;
      const int f = uniform(rng, -2, 2);
      w.add_row_multiple(t, s, f);
      w_inv.add_col_multiple(s, t, -f);
    }
    std::vector<IntVector> rel;
    for (std::size_t y = 0; y < size; ++y)
      if (poset.leq(x, y))
        for (const auto& v : own[y]) rel.push_back(w * v);
    groups.push_back(rel.empty() ? FgAbelianGroup(r) : FgAbelianGroup(r, IntMatrix::from_columns(r, rel)));
    basis[x] = std::move(w);
    basis_inv[x] = std::move(w_inv);
  }
  std::map<std::pair<std::size_t, std::size_t>, IntMatrix> maps;
  for (const auto& [a, b] : poset.strict_pairs()) maps[{a, b}] = basis[a] * basis_inv[b];
  return InverseSystem(std::move(poset), std::move(groups), std::move(maps));
}

SimplicialComplex standard_complex(const std::string& name) {
  std::vector<Simplex> facets;
  int n = 0;
  if (name == "point") {
    n = 1;
    facets = {{0}};
  } else if (name == "edge") {
    n = 2;
    facets = {{0, 1}};
  } else if (name == "triangle") {
    n = 3;
    facets = {{0, 1, 2}};
  } else if (name == "boundary-delta3") {
    n = 4;
    facets = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  } else if (name == "rp2") {
    n = 6;
    facets = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
              {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
  } else if (name == "torus") {
    n = 7;
    for (std::size_t i = 0; i < 7; ++i) {
      Simplex a{i, (i + 1) % 7, (i + 3) % 7}, b{i, (i + 2) % 7, (i + 3) % 7};
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      facets.push_back(a);
      facets.push_back(b);
    }
  } else {
    throw Error("unknown-label", "unknown standard complex", name);
  }
  return SimplicialComplex(numbered(n), facets);
}

std::vector<std::string> random_subset(Rng& rng, const FinitePoset& poset) {
  std::vector<std::string> out;
  for (const auto& e : poset.elements())
    if (uniform(rng, 0, 2) == 0) out.push_back(e);
  if (out.empty()) out.push_back(poset.element(static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(poset.size()) - 1))));
  return out;
}

}  // namespace gable::gen
