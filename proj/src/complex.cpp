#include "gable/complex.hpp"

#include "gable/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gable {

int permutation_sign(const std::vector<std::size_t>& v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) return 0;
      if (v[i] > v[j]) sign = -sign;
    }
  return sign;
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, const std::vector<Simplex>& generators)
    : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!label_index_.emplace(labels_[i], i).second) {
      throw Error("malformed-complex", "duplicate vertex label", labels_[i]);
    }
  }
  std::set<Simplex> all;
  for (std::size_t v = 0; v < labels_.size(); ++v) all.insert(Simplex{v});
  for (Simplex g : generators) {
    if (g.empty()) continue;
    std::sort(g.begin(), g.end());
    if (std::adjacent_find(g.begin(), g.end()) != g.end()) {
      throw Error("malformed-complex", "simplex with a repeated vertex");
    }
    if (g.back() >= labels_.size()) throw Error("malformed-complex", "vertex index out of range");
    if (g.size() > 24) throw Error("malformed-complex", "simplex dimension too large");
    if (all.count(g)) continue;
    const std::size_t n = g.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) face.push_back(g[i]);
      all.insert(std::move(face));
    }
  }
  for (const auto& s : all) {
    const std::size_t d = s.size() - 1;
    if (by_dim_.size() <= d) by_dim_.resize(d + 1);
    by_dim_[d].push_back(s);
  }
  for (auto& layer : by_dim_) {
    for (std::size_t i = 0; i < layer.size(); ++i) index_.emplace(layer[i], i);
  }
}

SimplicialComplex SimplicialComplex::from_labels(std::vector<std::string> labels,
                                                 const std::vector<std::vector<std::string>>& generators) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < labels.size(); ++i) idx.emplace(labels[i], i);
  std::vector<Simplex> gens;
  for (const auto& g : generators) {
    Simplex s;
    for (const auto& l : g) {
      auto it = idx.find(l);
      if (it == idx.end()) throw Error("unknown-label", "simplex uses an undeclared vertex", l);
      s.push_back(it->second);
    }
    gens.push_back(std::move(s));
  }
  return SimplicialComplex(std::move(labels), gens);
}

std::optional<std::size_t> SimplicialComplex::find_vertex(const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SimplicialComplex::vertex_index(const std::string& label) const {
  auto v = find_vertex(label);
  if (!v) throw Error("unknown-label", "vertex not in complex", label);
  return *v;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
  static const std::vector<Simplex> empty;
  if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return empty;
  return by_dim_[static_cast<std::size_t>(dim)];
}

std::size_t SimplicialComplex::size() const { return index_.size(); }

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d) {
    for (const auto& s : simplices(d)) {
      bool maximal = true;
      for (const auto& t : simplices(d + 1)) {
        if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(s);
    }
  }
  return out;
}

SimplicialComplex SimplicialComplex::subcomplex(const std::vector<Simplex>& generators) const {
  std::set<std::size_t> used;
  for (const auto& g : generators) {
    if (!contains(g)) throw Error("not-a-subcomplex", "generator is not a simplex", format(g));
    used.insert(g.begin(), g.end());
  }
  std::vector<std::size_t> old_of(used.begin(), used.end());
  std::map<std::size_t, std::size_t> new_of;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < old_of.size(); ++i) {
    new_of[old_of[i]] = i;
    labels.push_back(labels_[old_of[i]]);
  }
  std::vector<Simplex> gens;
  for (const auto& g : generators) {
    Simplex s;
    for (auto v : g) s.push_back(new_of[v]);
    gens.push_back(std::move(s));
  }
  return SimplicialComplex(std::move(labels), gens);
}

std::vector<Simplex> SimplicialComplex::embed(const SimplicialComplex& sub) const {
  std::vector<std::size_t> to_ambient(sub.vertex_count());
  for (std::size_t v = 0; v < sub.vertex_count(); ++v) {
    auto a = find_vertex(sub.label(v));
    if (!a) throw Error("not-a-subcomplex", "vertex missing from the complex", sub.label(v));
    to_ambient[v] = *a;
  }
  std::vector<Simplex> out;
  for (int d = 0; d <= sub.dimension(); ++d) {
    for (const auto& s : sub.simplices(d)) {
      Simplex t;
      for (auto v : s) t.push_back(to_ambient[v]);
      std::sort(t.begin(), t.end());
      if (!contains(t)) throw Error("not-a-subcomplex", "simplex missing from the complex", sub.format(s));
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::string SimplicialComplex::format(const Simplex& s) const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << (s[i] < labels_.size() ? labels_[s[i]] : "?");
  }
  out << ']';
  return out.str();
}

ComplexPair::ComplexPair(SimplicialComplex complex) : ComplexPair(std::move(complex), SimplicialComplex()) {}

ComplexPair::ComplexPair(SimplicialComplex complex, SimplicialComplex sub)
    : complex_(std::move(complex)), sub_(std::move(sub)) {
  mask_.resize(static_cast<std::size_t>(std::max(complex_.dimension() + 1, 0)));
  for (int d = 0; d <= complex_.dimension(); ++d) mask_[d].assign(complex_.count(d), false);
  for (const auto& s : complex_.embed(sub_)) mask_[s.size() - 1][*complex_.index_of(s)] = true;
}

bool ComplexPair::in_sub(const Simplex& s) const {
  auto i = complex_.index_of(s);
  return i && mask_[s.size() - 1][*i];
}

}  // namespace gable
