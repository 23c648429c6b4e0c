#include "gable/chain.hpp"

#include "gable/error.hpp"

#include <algorithm>

namespace gable {

Integer Chain::coefficient(const SimplexSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Chain::add(const SimplexSymbol& s, const Integer& coef) {
  if (static_cast<int>(s.size()) != dim_ + 1) {
    throw Error("dimension-mismatch", "symbol length does not match chain dimension",
                std::to_string(s.size()) + " vs dim " + std::to_string(dim_));
  }
  if (coef == 0 || permutation_sign(s) == 0) return;
  auto [it, fresh] = terms_.try_emplace(s, coef);
  if (!fresh) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) dim_ = other.dim_;
  for (const auto& [s, c] : other.terms_) add(s, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) dim_ = other.dim_;
  for (const auto& [s, c] : other.terms_) add(s, -c);
  return *this;
}

Chain Chain::operator*(const Integer& c) const {
  Chain out(dim_);
  for (const auto& [s, x] : terms_) out.add(s, x * c);
  return out;
}

Chain operator+(Chain a, const Chain& b) { return a += b; }
Chain operator-(Chain a, const Chain& b) { return a -= b; }

Chain boundary(const Chain& c) {
  Chain out(c.dim() - 1);
  if (c.dim() <= 0) return out;
  for (const auto& [s, coef] : c.terms()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      SimplexSymbol face;
      face.reserve(s.size() - 1);
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) face.push_back(s[j]);
      out.add(face, i % 2 == 0 ? coef : Integer(-coef));
    }
  }
  return out;
}

void validate(const Chain& c, const SimplicialComplex& k) {
  for (const auto& [s, coef] : c.terms()) {
    Simplex sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (!k.contains(sorted)) throw Error("outside-complex", "symbol does not span a simplex", k.format(s));
  }
}

IntVector to_oriented(const Chain& c, const SimplicialComplex& k) {
  IntVector out(k.count(c.dim()));
  for (const auto& [s, coef] : c.terms()) {
    Simplex sorted = s;
    std::sort(sorted.begin(), sorted.end());
    auto idx = k.index_of(sorted);
    if (!idx) throw Error("outside-complex", "symbol does not span a simplex", k.format(s));
    out[*idx] += permutation_sign(s) * coef;
  }
  return out;
}

Chain from_oriented(int dim, const IntVector& v, const SimplicialComplex& k) {
  Chain out(dim);
  const auto& cells = k.simplices(dim);
  if (v.size() != cells.size()) throw Error("dimension-mismatch", "coordinate vector length mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) out.add(cells[i], v[i]);
  return out;
}

}  // namespace gable
