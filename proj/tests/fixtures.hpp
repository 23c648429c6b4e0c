#pragma once

#include "gable/cech.hpp"
#include "gable/complex.hpp"

#include <string>
#include <vector>

namespace fixtures {

inline std::vector<std::string> numbered(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

inline std::vector<std::vector<int>> boundary_delta3_facets() { return {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}; }

inline std::vector<std::vector<int>> rp2_facets() {
  return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
          {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
}

inline std::vector<std::vector<int>> torus_facets() {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < 7; ++i) {
    out.push_back({i, (i + 1) % 7, (i + 3) % 7});
    out.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return out;
}

inline std::vector<std::vector<int>> cycle_facets(int n) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) out.push_back({i, (i + 1) % n});
  return out;
}

inline gable::SimplicialComplex make(int vertices, const std::vector<std::vector<int>>& facets) {
  std::vector<gable::Simplex> gens;
  for (const auto& f : facets) gens.emplace_back(f.begin(), f.end());
  return gable::SimplicialComplex(numbered(vertices), gens);
}

/// Ground set "p0".."p{n-1}" with empty A.
inline gable::GroundPair circle_ground(int n) {
  gable::GroundPair g;
  for (int i = 0; i < n; ++i) g.points.push_back("p" + std::to_string(i));
  return g;
}

/// Cover of the n-point circle by named sets of consecutive points.
inline gable::CoverPair arc_cover(int n, const std::vector<std::pair<int, int>>& arcs, const std::string& prefix) {
  gable::CoverPair c;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    auto& set = c.sets[prefix + std::to_string(i + 1)];
    for (int j = 0; j < arcs[i].second; ++j) set.insert("p" + std::to_string((arcs[i].first + j) % n));
  }
  return c;
}

/// U1={0,1,2}, U2={2,3,4}, U3={4,5,0} on six points.
inline gable::CoverPair three_arcs() { return arc_cover(6, {{0, 3}, {2, 3}, {4, 3}}, "U"); }
/// A_i = {i-1, i} on six points.
inline gable::CoverPair six_arcs() { return arc_cover(6, {{0, 2}, {1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 2}}, "A"); }

/// Twelve-point circle: seven-point arcs overlapping in three points, and
/// three-point arcs of which three lie in two coarse arcs each (8 projections).
inline gable::CoverPair wide_arcs() { return arc_cover(12, {{0, 7}, {4, 7}, {8, 7}}, "V"); }
inline gable::CoverPair narrow_arcs() {
  return arc_cover(12, {{0, 3}, {2, 3}, {4, 3}, {6, 3}, {8, 3}, {10, 3}}, "F");
}

}  // namespace fixtures
