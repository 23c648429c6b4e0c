#pragma once

// Independent reference computations used to freeze expected values. They
// share no code with the library: plain 64-bit arithmetic and textbook loops.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<long long>>;

/// Nonzero Smith diagonal by repeated gcd elimination (dense, 64-bit).
inline std::vector<long long> smith_diagonal(Mat a) {
  std::vector<long long> out;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return out;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool done = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        long long q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) done = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        long long q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) done = false;
      }
      if (!done) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.push_back(std::llabs(a[t][t]));
  }
  return out;
}

inline std::size_t rank_of(const Mat& a) { return smith_diagonal(a).size(); }

/// Homology of an absolute complex given by its facets (vertex ids), as
/// (free rank, torsion list) per degree 0..max_dim.
struct Betti {
  std::size_t free_rank;
  std::vector<long long> torsion;
};

inline std::vector<Betti> simplicial_homology(const std::vector<std::vector<int>>& facets) {
  std::set<std::vector<int>> all;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    const int n = static_cast<int>(f.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) s.push_back(f[i]);
      all.insert(s);
    }
  }
  std::size_t top = 0;
  for (const auto& s : all) top = std::max(top, s.size() - 1);
  std::vector<std::vector<std::vector<int>>> by_dim(top + 2);
  for (const auto& s : all) by_dim[s.size() - 1].push_back(s);
  auto boundary = [&](std::size_t d) {
    // d-cells -> (d-1)-cells
    Mat m(d == 0 ? 0 : by_dim[d - 1].size(), std::vector<long long>(by_dim[d].size(), 0));
    if (d == 0) return m;
    std::map<std::vector<int>, std::size_t> idx;
    for (std::size_t i = 0; i < by_dim[d - 1].size(); ++i) idx[by_dim[d - 1][i]] = i;
    for (std::size_t j = 0; j < by_dim[d].size(); ++j) {
      const auto& s = by_dim[d][j];
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> f = s;
        f.erase(f.begin() + static_cast<long>(i));
        m[idx[f]][j] += (i % 2 == 0) ? 1 : -1;
      }
    }
    return m;
  };
  std::vector<Betti> out;
  for (std::size_t d = 0; d <= top; ++d) {
    std::size_t rank_d = d == 0 ? 0 : rank_of(boundary(d));
    auto diag_up = smith_diagonal(boundary(d + 1));
    Betti b{by_dim[d].size() - rank_d - diag_up.size(), {}};
    for (auto x : diag_up)
      if (x != 1) b.torsion.push_back(x);
    out.push_back(b);
  }
  return out;
}

/// Coefficients of the Gaussian binomial [m+n choose m]_q by the recurrence
/// G(m,n) = G(m-1,n) + q^m G(m,n-1).
inline std::vector<long long> gaussian_binomial(int m, int n) {
  std::vector<std::vector<std::vector<long long>>> g(m + 1, std::vector<std::vector<long long>>(n + 1));
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == 0 || j == 0) {
        g[i][j] = {1};
        continue;
      }
      std::vector<long long> r(static_cast<std::size_t>(i * j + 1), 0);
      for (std::size_t e = 0; e < g[i - 1][j].size(); ++e) r[e] += g[i - 1][j][e];
      for (std::size_t e = 0; e < g[i][j - 1].size(); ++e) r[e + i] += g[i][j - 1][e];
      g[i][j] = r;
    }
  return g[m][n];
}

inline long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
