#include "gable/subdivision.hpp"

#include "gable/error.hpp"
#include "gable/smith.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace gable {
namespace {

std::set<std::size_t> vertex_set(const std::vector<Simplex>& simplices) {
  std::set<std::size_t> out;
  for (const auto& s : simplices) out.insert(s.begin(), s.end());
  return out;
}

std::string join_labels(const SimplicialComplex& k, const Simplex& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += k.label(s[i]);
  }
  return out;
}

}  // namespace

Rational RationalPoint::at(std::size_t v) const {
  auto it = coords.find(v);
  return it == coords.end() ? Rational(0) : it->second;
}

void validate(const RationalPoint& p, const SimplicialComplex& k) {
  Rational sum = 0;
  for (const auto& [v, c] : p.coords) {
    if (v >= k.vertex_count()) throw Error("invalid-point", "coordinate on an unknown vertex");
    if (c < 0) throw Error("invalid-point", "negative barycentric coordinate", k.label(v));
    sum += c;
  }
  if (sum != 1) throw Error("invalid-point", "coordinates do not sum to 1", sum.str());
  Simplex s = carrier(p);
  if (!k.contains(s)) throw Error("invalid-point", "support does not span a simplex", k.format(s));
}

Simplex carrier(const RationalPoint& p) {
  Simplex s;
  for (const auto& [v, c] : p.coords)
    if (c != 0) s.push_back(v);
  return s;
}

RationalPoint vertex_point(std::size_t v) { return RationalPoint{{{v, Rational(1)}}}; }

RationalPoint barycenter(const Simplex& s) {
  RationalPoint p;
  for (auto v : s) p.coords[v] = Rational(1, static_cast<long>(s.size()));
  return p;
}

RationalPoint affine_combination(const std::vector<RationalPoint>& points, const std::vector<Rational>& weights) {
  RationalPoint out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (weights[i] == 0) continue;
    for (const auto& [v, c] : points[i].coords) out.coords[v] += weights[i] * c;
  }
  for (auto it = out.coords.begin(); it != out.coords.end();) {
    if (it->second == 0) {
      it = out.coords.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

std::string format(const RationalPoint& p, const SimplicialComplex& k) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [v, c] : p.coords) {
    if (!first) out << ',';
    out << k.label(v) << ':' << c;
    first = false;
  }
  out << '}';
  return out.str();
}

SubdivisionResult barycentric_subdivision(const SimplicialComplex& k, const std::optional<SimplicialComplex>& l) {
  SubdivisionResult out;
  std::map<Simplex, std::size_t> sd_index;
  std::vector<std::string> labels;
  for (int d = 0; d <= k.dimension(); ++d) {
    for (const auto& s : k.simplices(d)) {
      sd_index.emplace(s, out.underlying.size());
      out.underlying.push_back(s);
      out.realization.push_back(barycenter(s));
      labels.push_back("b(" + join_labels(k, s) + ")");
    }
  }
  // Maximal flags of each facet: remove one vertex at a time.
  std::vector<Simplex> flags;
  Simplex acc;
  std::function<void(const Simplex&)> descend = [&](const Simplex& s) {
    acc.push_back(sd_index.at(s));
    if (s.size() == 1) {
      Simplex f = acc;
      std::sort(f.begin(), f.end());
      flags.push_back(std::move(f));
    } else {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != i) face.push_back(s[j]);
        descend(face);
      }
    }
    acc.pop_back();
  };
  for (const auto& f : k.facets()) descend(f);
  out.sd = SimplicialComplex(std::move(labels), flags);

  if (l) {
    auto embedded = k.embed(*l);
    std::set<Simplex> in_l(embedded.begin(), embedded.end());
    std::vector<Simplex> kept;
    for (int d = 0; d <= out.sd.dimension(); ++d) {
      for (const auto& s : out.sd.simplices(d)) {
        bool all = std::all_of(s.begin(), s.end(), [&](std::size_t v) { return in_l.count(out.underlying[v]) > 0; });
        if (all) kept.push_back(s);
      }
    }
    out.induced_sub = out.sd.subcomplex(kept);
  }
  return out;
}

std::optional<Simplex> fullness_witness(const SimplicialComplex& k, const SimplicialComplex& l) {
  auto embedded = k.embed(l);
  std::set<Simplex> in_l(embedded.begin(), embedded.end());
  auto lv = vertex_set(embedded);
  for (int d = 1; d <= k.dimension(); ++d) {
    for (const auto& s : k.simplices(d)) {
      bool spanned = std::all_of(s.begin(), s.end(), [&](std::size_t v) { return lv.count(v) > 0; });
      if (spanned && !in_l.count(s)) return s;
    }
  }
  return std::nullopt;
}

bool is_full(const SimplicialComplex& k, const SimplicialComplex& l) { return !fullness_witness(k, l); }

const char* to_string(SimplexClass::Kind kind) {
  switch (kind) {
    case SimplexClass::in_l: return "in_L";
    case SimplexClass::in_n: return "in_N";
    case SimplexClass::split: return "split";
  }
  return "split";
}

SimplexClass classify_simplex(const SimplicialComplex& k, const SimplicialComplex& l, const Simplex& s) {
  if (auto w = fullness_witness(k, l)) throw Error("not-full", "subcomplex is not full", k.format(*w));
  if (!k.contains(s)) throw Error("outside-complex", "not a simplex of the complex", k.format(s));
  auto lv = vertex_set(k.embed(l));
  SimplexClass out{SimplexClass::split, {}, {}};
  for (auto v : s) (lv.count(v) ? out.l_part : out.n_part).push_back(v);
  if (out.n_part.empty()) out.kind = SimplexClass::in_l;
  if (out.l_part.empty()) out.kind = SimplexClass::in_n;
  return out;
}

PartitionReport subdivision_partition_check(const SimplicialComplex& k, const SubdivisionResult& sub) {
  PartitionReport report;
  std::map<Simplex, std::vector<Simplex>> by_carrier;
  for (int d = 0; d <= sub.sd.dimension(); ++d) {
    for (const auto& piece : sub.sd.simplices(d)) {
      Simplex top;
      for (auto v : piece) {
        const Simplex& u = sub.underlying[v];
        top.insert(top.end(), u.begin(), u.end());
      }
      std::sort(top.begin(), top.end());
      top.erase(std::unique(top.begin(), top.end()), top.end());
      by_carrier[top].push_back(piece);
    }
  }
  for (int q = 0; q <= k.dimension(); ++q) {
    for (const auto& s : k.simplices(q)) {
      PartitionEntry entry;
      entry.simplex = s;
      std::set<Simplex> seen;
      for (const auto& piece : by_carrier[s]) {
        if (!seen.insert(piece).second) entry.disjoint = false;
        std::vector<RationalPoint> pts;
        for (auto v : piece) pts.push_back(sub.realization[v]);
        RationalPoint centre =
            affine_combination(pts, std::vector<Rational>(pts.size(), Rational(1, static_cast<long>(pts.size()))));
        if (carrier(centre) != s) entry.carriers_ok = false;

        PartitionPiece pp{piece, Rational(0)};
        if (piece.size() == s.size()) {
          // Column j holds b(t_j) scaled by |t_j|, which is integral.
          IntMatrix m(s.size(), s.size());
          Integer scale = 1;
          for (std::size_t j = 0; j < piece.size(); ++j) {
            const Simplex& t = sub.underlying[piece[j]];
            scale *= static_cast<long>(t.size());
            for (std::size_t i = 0; i < s.size(); ++i)
              if (std::binary_search(t.begin(), t.end(), s[i])) m(i, j) = 1;
          }
          Integer det = determinant(m);
          if (det < 0) det = -det;
          pp.volume = Rational(det, scale);
        }
        entry.volume_sum += pp.volume;
        entry.pieces.push_back(std::move(pp));
      }
      entry.ok = entry.disjoint && entry.carriers_ok && entry.volume_sum == 1 && !entry.pieces.empty();
      report.ok = report.ok && entry.ok;
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

ConeResult cone_pair(const ComplexPair& pair) {
  const SimplicialComplex& x = pair.complex();
  std::vector<std::string> labels = x.labels();
  std::string apex = "*";
  while (x.find_vertex(apex)) apex += '\'';
  const std::size_t a = labels.size();
  labels.push_back(apex);
  std::vector<Simplex> gens = x.facets();
  gens.push_back({a});
  for (Simplex s : x.embed(pair.sub())) {
    s.push_back(a);
    gens.push_back(std::move(s));
  }
  return {SimplicialComplex(std::move(labels), gens), a};
}

RetractionResult retract_point(const SimplicialComplex& k, const SimplicialComplex& l, const RationalPoint& p,
                               const Rational& t) {
  validate(p, k);
  if (t < 0 || t > 1) throw Error("invalid-point", "homotopy parameter outside [0,1]", t.str());
  if (auto w = fullness_witness(k, l)) throw Error("not-full", "subcomplex is not full", k.format(*w));
  auto lv = vertex_set(k.embed(l));

  RetractionResult out;
  out.a = 0;
  for (const auto& [v, c] : p.coords)
    if (lv.count(v)) out.a += c;
  if (out.a == 0) throw Error("point-in-n", "point has no mass on L; the retraction is undefined", format(p, k));
  for (const auto& [v, c] : p.coords)
    if (lv.count(v)) out.alpha_prime.coords[v] = c / out.a;
  out.alpha_out = affine_combination({out.alpha_prime, p}, {t, 1 - t});

  std::vector<Simplex> n_gens;
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d))
      if (std::none_of(s.begin(), s.end(), [&](std::size_t v) { return lv.count(v) > 0; })) n_gens.push_back(s);
  out.n_complex = k.subcomplex(n_gens);

  SubdivisionResult sd = barycentric_subdivision(k, l);
  auto sd_lv = vertex_set(sd.sd.embed(*sd.induced_sub));
  std::vector<Simplex> n1_gens;
  for (int d = 0; d <= sd.sd.dimension(); ++d)
    for (const auto& s : sd.sd.simplices(d))
      if (std::none_of(s.begin(), s.end(), [&](std::size_t v) { return sd_lv.count(v) > 0; })) n1_gens.push_back(s);
  out.n1_complex = sd.sd.subcomplex(n1_gens);
  return out;
}

}  // namespace gable
