#include "gable/io.hpp"

#include "gable/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace gable::io {
namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error("parse-error", std::string("missing field \"") + key + "\"");
  return j.at(key);
}

bool is_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::vector<std::size_t> indices_of(const SimplicialComplex& k, const json& vertices) {
  std::vector<std::size_t> out;
  for (const auto& v : vertices) out.push_back(k.vertex_index(label_of(v)));
  return out;
}

std::vector<std::string> label_list(const SimplicialComplex& k, const std::vector<std::size_t>& s) {
  std::vector<std::string> out;
  for (auto v : s) out.push_back(k.label(v));
  return out;
}

std::set<std::string> label_set(const json& j) {
  std::set<std::string> out;
  for (const auto& v : j) out.insert(label_of(v));
  return out;
}

std::pair<std::string, std::string> split_relation(const std::string& key) {
  auto at = key.find("<=");
  if (at == std::string::npos) throw Error("parse-error", "relation keys look like \"a<=b\"", key);
  return {key.substr(0, at), key.substr(at + 2)};
}

}  // namespace

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io-error", "cannot open file", path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error("parse-error", e.what(), path);
  }
}

bool natural_less(const std::string& a, const std::string& b) {
  if (is_integer_text(a) && is_integer_text(b)) {
    Integer x(a), y(b);
    if (x != y) return x < y;
    return a < b;
  }
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      Integer x(a.substr(i, ie - i)), y(b.substr(j, je - j));
      if (x != y) return x < y;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if (a.size() - i != b.size() - j) return a.size() - i < b.size() - j;
  return a < b;
}

std::string label_of(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw Error("parse-error", "labels must be strings or integers", j.dump());
}

Integer integer_of(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  if (j.is_string() && is_integer_text(j.get<std::string>())) {
    std::string s = j.get<std::string>();
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s);
  }
  throw Error("parse-error", "expected an integer", j.dump());
}

Rational rational_of(const json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer_of(j));
  if (!j.is_string()) throw Error("parse-error", "expected a rational such as \"3/4\"", j.dump());
  const std::string s = j.get<std::string>();
  if (auto slash = s.find('/'); slash != std::string::npos) {
    json num = s.substr(0, slash), den = s.substr(slash + 1);
    Integer d = integer_of(den);
    if (d == 0) throw Error("parse-error", "zero denominator", s);
    return Rational(integer_of(num), d);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (!is_integer_text(digits)) throw Error("parse-error", "expected a rational", s);
    Integer scale = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) scale *= 10;
    return Rational(Integer(digits[0] == '+' ? digits.substr(1) : digits), scale);
  }
  return Rational(integer_of(j));
}

json to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return x.convert_to<long long>();
  }
  return x.str();
}

json to_json(const Rational& x) {
  if (denominator(x) == 1) return to_json(Integer(numerator(x)));
  return x.str();
}

json to_json(const IntMatrix& m) {
  json entries = json::array();
  for (const auto& e : m.entries()) entries.push_back(to_json(e));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

IntMatrix matrix_from_json(const json& j) {
  if (j.is_array()) {
    // Row list shorthand.
    std::vector<Integer> entries;
    std::size_t cols = j.empty() ? 0 : j.at(0).size();
    for (const auto& row : j) {
      if (row.size() != cols) throw Error("parse-error", "ragged matrix rows");
      for (const auto& e : row) entries.push_back(integer_of(e));
    }
    return IntMatrix(j.size(), cols, std::move(entries));
  }
  const std::size_t rows = field(j, "rows").get<std::size_t>();
  const std::size_t cols = field(j, "cols").get<std::size_t>();
  const json& e = field(j, "entries");
  if (e.size() != rows * cols) throw Error("parse-error", "entries length must be rows*cols", std::to_string(e.size()));
  std::vector<Integer> entries;
  for (const auto& x : e) entries.push_back(integer_of(x));
  return IntMatrix(rows, cols, std::move(entries));
}

json to_json(const InvariantFactors& f) {
  json torsion = json::array();
  for (const auto& t : f.torsion) torsion.push_back(to_json(t));
  return {{"free_rank", f.free_rank}, {"torsion", torsion}, {"text", f.to_string()}};
}

json to_json(const FgAbelianGroup& g) {
  return {{"gens", g.generator_count()}, {"relations", to_json(g.relations())}};
}

FgAbelianGroup group_from_json(const json& j) {
  const std::size_t n = field(j, "gens").get<std::size_t>();
  if (!j.contains("relations")) return FgAbelianGroup(n);
  IntMatrix r = matrix_from_json(j.at("relations"));
  if (r.cols() == 0) return FgAbelianGroup(n);
  if (r.rows() != n) throw Error("parse-error", "relations must have one row per generator");
  return FgAbelianGroup(n, std::move(r));
}

json to_json(const GroupMorphism& f) {
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"matrix", to_json(f.matrix())}};
}

FinitePoset poset_from_json(const json& j) {
  std::vector<std::string> elements;
  for (const auto& e : field(j, "elements")) elements.push_back(label_of(e));
  std::vector<std::pair<std::string, std::string>> leq;
  if (j.contains("leq")) {
    for (const auto& r : j.at("leq")) {
      if (!r.is_array() || r.size() != 2) throw Error("parse-error", "leq entries are [a, b] pairs", r.dump());
      leq.emplace_back(label_of(r[0]), label_of(r[1]));
    }
  }
  return FinitePoset(std::move(elements), leq);
}

json to_json(const FinitePoset& p) {
  json leq = json::array();
  for (const auto& [a, b] : p.strict_pairs()) leq.push_back({p.element(a), p.element(b)});
  return {{"elements", p.elements()}, {"leq", leq}};
}

InverseSystem system_from_json(const json& j) {
  FinitePoset poset = poset_from_json(field(j, "poset"));
  const json& groups = field(j, "groups");
  std::vector<FgAbelianGroup> gs;
  for (const auto& e : poset.elements()) {
    if (!groups.contains(e)) throw Error("parse-error", "no group for element", e);
    gs.push_back(group_from_json(groups.at(e)));
  }
  std::map<std::pair<std::size_t, std::size_t>, IntMatrix> maps;
  if (j.contains("maps")) {
    for (const auto& [key, m] : j.at("maps").items()) {
      auto [a, b] = split_relation(key);
      maps[{poset.index_of(a), poset.index_of(b)}] = matrix_from_json(m);
    }
  }
  return InverseSystem(std::move(poset), std::move(gs), std::move(maps));
}

json to_json(const InverseSystem& s) {
  const FinitePoset& p = s.poset();
  json groups = json::object(), maps = json::object();
  for (std::size_t i = 0; i < p.size(); ++i) groups[p.element(i)] = to_json(s.group_at(i));
  for (const auto& [a, b] : p.strict_pairs()) maps[p.element(a) + "<=" + p.element(b)] = to_json(s.map_for(a, b).matrix());
  return {{"poset", to_json(p)}, {"groups", groups}, {"maps", maps}};
}

json limit_to_json(const InverseSystem& s, const InverseLimit& l) {
  json basis = json::array();
  for (const auto& element : l.basis) {
    json comp = json::object();
    for (std::size_t i = 0; i < element.size(); ++i) {
      json v = json::array();
      for (const auto& x : element[i]) v.push_back(to_json(x));
      comp[s.poset().element(i)] = v;
    }
    basis.push_back(comp);
  }
  json projections = json::object();
  for (std::size_t i = 0; i < l.projections.size(); ++i) {
    projections[s.poset().element(i)] = to_json(l.projections[i].matrix());
  }
  return {{"group", to_json(invariant_factors(l.group))},
          {"presentation", to_json(l.group)},
          {"basis", basis},
          {"projections", projections}};
}

SimplicialComplex complex_from_json(const json& j) {
  const json& simplices = field(j, "simplices");
  std::vector<std::string> labels;
  if (j.contains("vertices")) {
    for (const auto& v : j.at("vertices")) labels.push_back(label_of(v));
  } else {
    std::set<std::string> seen;
    for (const auto& s : simplices)
      for (const auto& v : s) seen.insert(label_of(v));
    labels.assign(seen.begin(), seen.end());
    std::sort(labels.begin(), labels.end(), natural_less);
  }
  std::vector<std::vector<std::string>> gens;
  for (const auto& s : simplices) {
    std::vector<std::string> g;
    for (const auto& v : s) g.push_back(label_of(v));
    if (g.empty()) throw Error("malformed-complex", "empty simplex");
    gens.push_back(std::move(g));
  }
  return SimplicialComplex::from_labels(std::move(labels), gens);
}

json to_json(const SimplicialComplex& k) {
  json simplices = json::array();
  for (const auto& f : k.facets()) simplices.push_back(label_list(k, f));
  return {{"vertices", k.labels()}, {"simplices", simplices}};
}

SimplicialComplex sub_from_json(const SimplicialComplex& k, const json& j) {
  if (j.contains("vertices")) return complex_from_json(j);
  // Without a vertex list, inherit the order of k.
  std::set<std::string> used;
  for (const auto& s : field(j, "simplices"))
    for (const auto& v : s) used.insert(label_of(v));
  std::vector<std::string> labels;
  for (const auto& l : k.labels())
    if (used.count(l)) labels.push_back(l);
  for (const auto& l : used)
    if (!k.find_vertex(l)) throw Error("not-a-subcomplex", "subcomplex vertex not in the complex", l);
  json copy = j;
  copy["vertices"] = labels;
  return complex_from_json(copy);
}

ComplexPair pair_from_json(const json& j) {
  if (j.contains("complex")) {
    SimplicialComplex k = complex_from_json(j.at("complex"));
    if (!j.contains("sub")) return ComplexPair(std::move(k));
    SimplicialComplex l = sub_from_json(k, j.at("sub"));
    return ComplexPair(std::move(k), std::move(l));
  }
  return ComplexPair(complex_from_json(j));
}

std::vector<std::string> chain_labels(const json& j) {
  std::set<std::string> seen;
  for (const auto& t : field(j, "terms"))
    for (const auto& v : field(t, "vertices")) seen.insert(label_of(v));
  std::vector<std::string> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), natural_less);
  return out;
}

Chain chain_from_json(const SimplicialComplex& k, const json& j) {
  const int dim = j.contains("dim") ? j.at("dim").get<int>() : field(j, "k").get<int>();
  if (dim < 0) throw Error("negative-dimension", "chain dimension must be nonnegative", std::to_string(dim));
  Chain c(dim);
  for (const auto& t : field(j, "terms")) c.add(indices_of(k, field(t, "vertices")), integer_of(field(t, "coef")));
  validate(c, k);
  return c;
}

json to_json(const SimplicialComplex& k, const Chain& c) {
  json terms = json::array();
  for (const auto& [s, g] : c.terms()) terms.push_back({{"coef", to_json(g)}, {"vertices", label_list(k, s)}});
  return {{"dim", c.dim()}, {"terms", terms}};
}

TermList terms_from_json(const SimplicialComplex& k, const json& j) {
  const int dim = j.contains("dim") ? j.at("dim").get<int>() : field(j, "k").get<int>();
  if (dim < 0) throw Error("negative-dimension", "term list dimension must be nonnegative", std::to_string(dim));
  std::vector<std::pair<Integer, SimplexSymbol>> terms;
  for (const auto& t : field(j, "terms")) {
    SimplexSymbol s = indices_of(k, field(t, "vertices"));
    if (s.size() != static_cast<std::size_t>(dim) + 1) {
      throw Error("dimension-mismatch", "symbol length must be dim + 1", field(t, "vertices").dump());
    }
    terms.emplace_back(integer_of(field(t, "coef")), std::move(s));
  }
  TermList out(dim, terms);
  validate(out.to_chain(), k);
  return out;
}

json to_json(const SimplicialComplex& k, const TermList& t) {
  json terms = json::array();
  for (const auto& [g, s] : t.terms()) terms.push_back({{"coef", to_json(g)}, {"vertices", label_list(k, s)}});
  return {{"dim", t.k()}, {"terms", terms}};
}

ProductSimplex product_simplex_from_json(const SimplicialComplex& left, const SimplicialComplex& right, const json& j) {
  const json& pairs = j.is_object() ? field(j, "pairs") : j;
  ProductSimplex s;
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) throw Error("parse-error", "pairs are [a, b] lists", p.dump());
    s.emplace_back(left.vertex_index(label_of(p[0])), right.vertex_index(label_of(p[1])));
  }
  return s;
}

json to_json(const SimplicialComplex& left, const SimplicialComplex& right, const ProductSimplex& s) {
  json pairs = json::array();
  for (const auto& [a, b] : s) pairs.push_back({left.label(a), right.label(b)});
  return pairs;
}

ProductChain product_chain_from_json(const SimplicialComplex& left, const SimplicialComplex& right, const json& j) {
  ProductChain c(field(j, "dim").get<int>());
  for (const auto& t : field(j, "terms")) {
    ProductSimplex s = product_simplex_from_json(left, right, field(t, "pairs"));
    if (s.size() != static_cast<std::size_t>(c.dim()) + 1) {
      throw Error("dimension-mismatch", "pair list length must be dim + 1", field(t, "pairs").dump());
    }
    c.add(s, integer_of(field(t, "coef")));
  }
  return c;
}

json to_json(const SimplicialComplex& k, const ProductChain& c) {
  json terms = json::array();
  for (const auto& [s, g] : c.terms()) terms.push_back({{"coef", to_json(g)}, {"pairs", to_json(k, k, s)}});
  return {{"dim", c.dim()}, {"terms", terms}};
}

json to_json(const SimplicialComplex& k, const GableChain& c) {
  json terms = json::array();
  for (const auto& [s, g] : c.terms()) terms.push_back({{"coef", to_json(g)}, {"pairs", to_json(k, k, s)}});
  return {{"dim", c.dim()}, {"terms", terms}};
}

RationalPoint point_from_json(const SimplicialComplex& k, const json& j) {
  RationalPoint p;
  for (const auto& [label, c] : field(j, "coords").items()) {
    Rational x = rational_of(c);
    if (x != 0) p.coords[k.vertex_index(label)] = x;
  }
  validate(p, k);
  return p;
}

json to_json(const SimplicialComplex& k, const RationalPoint& p) {
  json coords = json::object();
  for (const auto& [v, c] : p.coords) coords[k.label(v)] = c.str();
  return {{"coords", coords}};
}

DiagonalRegion region_from_json(const GableComplex& g, const json& j) {
  const SimplicialComplex& k = g.base();
  std::vector<std::size_t> a;
  if (j.contains("a"))
    for (const auto& v : j.at("a")) a.push_back(k.vertex_index(label_of(v)));
  const bool diagonal = !j.contains("diagonal") || j.at("diagonal").get<bool>();
  DiagonalRegion out = diagonal ? diagonal_region(g, a) : region_from_cells(g, {});
  if (!diagonal && !a.empty()) throw Error("parse-error", "\"a\" requires the diagonal rule");
  if (j.contains("cells")) {
    std::vector<ProductSimplex> cells;
    for (const auto& c : j.at("cells")) cells.push_back(product_simplex_from_json(k, k, c));
    out = region_union(out, region_from_cells(g, cells));
  }
  return out;
}

std::vector<DiagonalRegion> regions_from_json(const GableComplex& g, const json& j) {
  const json& list = j.is_object() ? field(j, "regions") : j;
  std::vector<DiagonalRegion> out;
  for (const auto& r : list) out.push_back(region_from_json(g, r));
  return out;
}

CoverPair cover_from_json(const json& j) {
  CoverPair c;
  for (const auto& [name, set] : field(j, "sets").items()) c.sets[name] = label_set(set);
  if (j.contains("relative"))
    for (const auto& r : j.at("relative")) c.relative.insert(label_of(r));
  return c;
}

json to_json(const CoverPair& c) {
  json sets = json::object();
  for (const auto& [name, s] : c.sets) sets[name] = std::vector<std::string>(s.begin(), s.end());
  return {{"sets", sets}, {"relative", std::vector<std::string>(c.relative.begin(), c.relative.end())}};
}

GroundPair ground_from_json(const std::vector<json>& docs, const std::vector<CoverPair>& covers) {
  std::set<std::string> points;
  bool explicit_points = false;
  GroundPair g;
  for (const auto& d : docs) {
    if (d.contains("points")) {
      explicit_points = true;
      for (const auto& p : d.at("points")) points.insert(label_of(p));
    }
    if (d.contains("a"))
      for (const auto& p : d.at("a")) g.subset_a.insert(label_of(p));
  }
  if (!explicit_points)
    for (const auto& c : covers)
      for (const auto& [name, s] : c.sets) points.insert(s.begin(), s.end());
  g.points.assign(points.begin(), points.end());
  std::sort(g.points.begin(), g.points.end(), natural_less);
  return g;
}

RefinementWitness witness_from_json(const json& j) {
  RefinementWitness w;
  const json& m = j.contains("assignment") ? j.at("assignment") : j;
  for (const auto& [fine, coarse] : m.items()) w.assignment[fine] = label_of(coarse);
  return w;
}

json to_json(const RefinementWitness& w) { return w.assignment; }

json to_json(const ComplexPair& p) { return {{"complex", to_json(p.complex())}, {"sub", to_json(p.sub())}}; }

TowerInput tower_from_json(const json& j) {
  TowerInput out;
  const json& covers = field(j, "covers");
  std::vector<std::string> names;
  if (j.contains("poset") && j.at("poset").contains("elements")) {
    for (const auto& e : j.at("poset").at("elements")) names.push_back(label_of(e));
  } else {
    for (const auto& [name, c] : covers.items()) names.push_back(name);
  }
  std::optional<PointCloud> cloud;
  Metric metric = Metric::linf;
  if (j.contains("cloud")) {
    PointCloud pc;
    for (const auto& l : field(j.at("cloud"), "labels")) pc.labels.push_back(label_of(l));
    for (const auto& row : field(j.at("cloud"), "coords")) {
      std::vector<Rational> x;
      for (const auto& c : row) x.push_back(rational_of(c));
      pc.coords.push_back(std::move(x));
    }
    cloud = std::move(pc);
    if (j.contains("metric")) {
      const std::string m = j.at("metric").get<std::string>();
      if (m == "l2") {
        metric = Metric::l2;
      } else if (m != "linf") {
        throw Error("parse-error", "metric must be \"linf\" or \"l2\"", m);
      }
    }
  }
  std::set<std::string> a;
  if (j.contains("a"))
    for (const auto& p : j.at("a")) a.insert(label_of(p));
  for (const auto& name : names) {
    if (!covers.contains(name)) throw Error("parse-error", "no cover for poset element", name);
    const json& c = covers.at(name);
    if (c.contains("radius")) {
      if (!cloud) throw Error("parse-error", "ball covers need a \"cloud\"", name);
      std::vector<std::string> centers;
      if (c.contains("centers")) {
        for (const auto& x : c.at("centers")) centers.push_back(label_of(x));
      } else {
        centers = cloud->labels;
      }
      out.tower.covers.push_back(ball_cover(*cloud, centers, rational_of(c.at("radius")), metric, a));
    } else {
      out.tower.covers.push_back(cover_from_json(c));
    }
  }
  std::vector<std::pair<std::string, std::string>> leq;
  if (j.contains("poset") && j.at("poset").contains("leq")) {
    for (const auto& r : j.at("poset").at("leq")) leq.emplace_back(label_of(r.at(0)), label_of(r.at(1)));
  }
  out.tower.poset = FinitePoset(names, leq);
  if (j.contains("witnesses")) {
    for (const auto& [key, w] : j.at("witnesses").items()) {
      auto [lo, hi] = split_relation(key);
      out.tower.witnesses[{out.tower.poset.index_of(lo), out.tower.poset.index_of(hi)}] = witness_from_json(w);
    }
  }
  std::vector<json> docs{j};
  if (cloud && !j.contains("points")) docs.push_back({{"points", cloud->labels}});
  out.ground = ground_from_json(docs, out.tower.covers);
  return out;
}

}  // namespace gable::io
