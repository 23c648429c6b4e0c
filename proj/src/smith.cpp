#include "gable/smith.hpp"

#include "gable/error.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace gable {
namespace {

using boost::multiprecision::abs;

// Applies the same elementary operations to D and, optionally, to the
// transforms and their inverses.
class SmithWorkspace {
 public:
  SmithWorkspace(const IntMatrix& m, bool track)
      : d(m), track_(track) {
    if (track_) {
      u = IntMatrix::identity(m.rows());
      u_inv = u;
      v = IntMatrix::identity(m.cols());
      v_inv = v;
    }
  }

  void row_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    d.swap_rows(a, b);
    if (track_) {
      u.swap_rows(a, b);
      u_inv.swap_cols(a, b);
    }
  }
  void row_add(std::size_t target, std::size_t source, const Integer& f) {
    if (f == 0) return;
    d.add_row_multiple(target, source, f);
    if (track_) {
      u.add_row_multiple(target, source, f);
      u_inv.add_col_multiple(source, target, -f);
    }
  }
  void row_negate(std::size_t i) {
    d.negate_row(i);
    if (track_) {
      u.negate_row(i);
      u_inv.negate_col(i);
    }
  }
  void col_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    d.swap_cols(a, b);
    if (track_) {
      v.swap_cols(a, b);
      v_inv.swap_rows(a, b);
    }
  }
  void col_add(std::size_t target, std::size_t source, const Integer& f) {
    if (f == 0) return;
    d.add_col_multiple(target, source, f);
    if (track_) {
      v.add_col_multiple(target, source, f);
      v_inv.add_row_multiple(source, target, -f);
    }
  }

  IntMatrix d, u, u_inv, v, v_inv;

 private:
  bool track_;
};

std::size_t reduce(SmithWorkspace& w) {
  IntMatrix& d = w.d;
  const std::size_t rows = d.rows(), cols = d.cols();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Global smallest nonzero entry of the trailing block.
    bool found = false;
    std::size_t pi = t, pj = t;
    Integer best;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        const Integer& x = d(i, j);
        if (x == 0) continue;
        if (!found || abs(x) < best) {
          best = abs(x);
          pi = i;
          pj = j;
          found = true;
        }
      }
    }
    if (!found) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        w.row_add(i, t, -floor_div(d(i, t), d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        w.col_add(j, t, -floor_div(d(t, j), d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder survived: bring the smallest one of row/column t to the pivot.
        Integer small = abs(d(t, t));
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (d(i, t) != 0 && abs(d(i, t)) < small) {
            small = abs(d(i, t));
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d(t, j) != 0 && abs(d(t, j)) < small) {
            small = abs(d(t, j));
            bi = t;
            bj = j;
          }
        }
        w.row_swap(t, bi);
        w.col_swap(t, bj);
        continue;
      }
      // Divisibility: the pivot must divide every trailing entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            w.row_add(t, i, Integer(1));
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (d(t, t) < 0) w.row_negate(t);
    ++t;
  }
  return t;
}

}  // namespace

IntVector SmithForm::diagonal() const {
  IntVector out;
  out.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithWorkspace w(m, true);
  SmithForm out;
  out.rank = reduce(w);
  out.d = std::move(w.d);
  out.u = std::move(w.u);
  out.u_inv = std::move(w.u_inv);
  out.v = std::move(w.v);
  out.v_inv = std::move(w.v_inv);
  return out;
}

IntVector smith_diagonal(const IntMatrix& m) {
  SmithWorkspace w(m, false);
  const std::size_t rank = reduce(w);
  IntVector out;
  out.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) out.push_back(w.d(i, i));
  return out;
}

ColumnHermite column_hermite(const IntMatrix& m, bool track_transform) {
  ColumnHermite out;
  out.h = m;
  IntMatrix& h = out.h;
  const std::size_t rows = h.rows(), cols = h.cols();
  if (track_transform) out.v = IntMatrix::identity(cols);

  auto col_add = [&](std::size_t target, std::size_t source, const Integer& f) {
    if (f == 0) return;
    h.add_col_multiple(target, source, f);
    if (track_transform) out.v.add_col_multiple(target, source, f);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    h.swap_cols(a, b);
    if (track_transform) out.v.swap_cols(a, b);
  };

  std::size_t cur = 0;
  for (std::size_t r = 0; r < rows && cur < cols; ++r) {
    for (;;) {
      std::size_t best = cols;
      for (std::size_t j = cur; j < cols; ++j) {
        if (h(r, j) == 0) continue;
        if (best == cols || abs(h(r, j)) < abs(h(r, best))) best = j;
      }
      if (best == cols) break;
      col_swap(cur, best);
      bool clean = true;
      for (std::size_t j = cur + 1; j < cols; ++j) {
        if (h(r, j) == 0) continue;
        col_add(j, cur, -floor_div(h(r, j), h(r, cur)));
        if (h(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (cur >= cols || h(r, cur) == 0) continue;
    if (h(r, cur) < 0) {
      h.negate_col(cur);
      if (track_transform) out.v.negate_col(cur);
    }
    for (std::size_t j = 0; j < cur; ++j) {
      if (h(r, j) == 0) continue;
      col_add(j, cur, -floor_div(h(r, j), h(r, cur)));
    }
    out.pivot_rows.push_back(r);
    ++cur;
  }
  return out;
}

Lattice::Lattice(const IntMatrix& generators) : ambient_(generators.rows()) {
  ColumnHermite ch = column_hermite(generators, false);
  basis_ = ch.h.block(0, 0, ch.h.rows(), ch.rank());
  pivot_rows_ = std::move(ch.pivot_rows);
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
  if (v.size() != ambient_) throw Error("dimension-mismatch", "vector not in lattice ambient space");
  IntVector rest = v;
  IntVector coords(rank());
  for (std::size_t j = 0; j < rank(); ++j) {
    const std::size_t p = pivot_rows_[j];
    // Entries above the pivot must already be cleared.
    for (std::size_t i = (j == 0 ? 0 : pivot_rows_[j - 1] + 1); i < p; ++i)
      if (rest[i] != 0) return std::nullopt;
    if (rest[p] % basis_(p, j) != 0) return std::nullopt;
    coords[j] = rest[p] / basis_(p, j);
    if (coords[j] != 0)
      for (std::size_t i = p; i < ambient_; ++i)
        if (basis_(i, j) != 0) rest[i] -= coords[j] * basis_(i, j);
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

Lattice integer_kernel(const IntMatrix& m) {
  ColumnHermite ch = column_hermite(m, true);
  const std::size_t r = ch.rank();
  return Lattice(ch.v.block(0, r, ch.v.rows(), ch.v.cols() - r));
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& v) {
  if (v.size() != m.rows()) throw Error("dimension-mismatch", "right-hand side length mismatch");
  SmithForm s = smith_normal_form(m);
  IntVector uv = s.u * v;
  IntVector y(m.cols());
  for (std::size_t i = 0; i < uv.size(); ++i) {
    if (i < s.rank) {
      if (uv[i] % s.d(i, i) != 0) return std::nullopt;
      y[i] = uv[i] / s.d(i, i);
    } else if (uv[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v * y;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("malformed-matrix", "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  // Bareiss elimination.
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return Integer(0);
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace gable
