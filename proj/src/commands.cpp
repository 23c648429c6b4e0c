#include "gable/commands.hpp"

#include "gable/cech.hpp"
#include "gable/error.hpp"
#include "gable/homology.hpp"
#include "gable/io.hpp"
#include "gable/roof.hpp"
#include "gable/shuffle.hpp"
#include "gable/subdivision.hpp"
#include "gable/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace gable {
namespace {

using io::json;
using io::to_json;

const json& need(const json& req, const char* key, const std::string& command) {
  if (!req.contains(key) || req.at(key).is_null()) {
    throw Error("missing-input", command + " needs --" + std::string(key == std::string("max_k") ? "max-k" : key));
  }
  return req.at(key);
}

int degree(const json& req, const std::string& command) {
  const int k = need(req, "k", command).get<int>();
  if (k < 0) throw Error("negative-dimension", "dimension must be nonnegative", std::to_string(k));
  return k;
}

ComplexPair load_pair(const json& req, const std::string& command) {
  if (req.contains("pair")) return io::pair_from_json(req.at("pair"));
  SimplicialComplex k = io::complex_from_json(need(req, "complex", command));
  if (!req.contains("sub")) return ComplexPair(std::move(k));
  SimplicialComplex l = io::sub_from_json(k, req.at("sub"));
  return ComplexPair(std::move(k), std::move(l));
}

/// The complex from --complex, or one spanned by the labels the chains use.
SimplicialComplex complex_for_terms(const json& req, const std::vector<json>& chains) {
  if (req.contains("complex")) return io::complex_from_json(req.at("complex"));
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> simplices;
  for (const auto& c : chains) {
    for (const auto& l : io::chain_labels(c))
      if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
    for (const auto& t : c.at("terms")) {
      std::vector<std::string> s;
      for (const auto& v : t.at("vertices"))
        if (std::find(s.begin(), s.end(), io::label_of(v)) == s.end()) s.push_back(io::label_of(v));
      simplices.push_back(std::move(s));
    }
  }
  std::sort(labels.begin(), labels.end(), io::natural_less);
  return SimplicialComplex::from_labels(labels, simplices);
}

json chains_json(const SimplicialComplex& k, const std::vector<Chain>& chains) {
  json out = json::array();
  for (const auto& c : chains) out.push_back(to_json(k, c));
  return out;
}

json coordinates_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json relative_class_json(const RelativeClass& c) {
  json out{{"is_relative_cycle", c.is_relative_cycle}, {"group", to_json(c.group)}};
  if (c.is_relative_cycle) {
    out["coordinates"] = coordinates_json(c.coordinates);
  } else {
    out["witness"] = c.witness;
  }
  return out;
}

json homology_cmd(const json& req) {
  ComplexPair p = load_pair(req, "homology");
  const bool reduced = req.value("reduced", false);
  std::vector<int> degrees;
  if (req.contains("k")) {
    degrees.push_back(degree(req, "homology"));
  } else {
    for (int k = 0; k <= std::max(0, p.complex().dimension()); ++k) degrees.push_back(k);
  }
  json out = json::array();
  for (int k : degrees) {
    SimplicialHomology h = homology(p, k, reduced);
    out.push_back({{"k", k}, {"group", to_json(h.factors)}, {"generators", chains_json(p.complex(), h.generators)}});
  }
  return {{"reduced", reduced}, {"homology", out}};
}

json subdivide_cmd(const json& req) {
  ComplexPair p = load_pair(req, "subdivide");
  const bool has_sub = req.contains("sub") || req.contains("pair");
  SubdivisionResult sd = barycentric_subdivision(p.complex(), has_sub ? std::optional(p.sub()) : std::nullopt);
  json realization = json::object();
  for (std::size_t v = 0; v < sd.sd.vertex_count(); ++v) {
    realization[sd.sd.label(v)] = to_json(p.complex(), sd.realization[v])["coords"];
  }
  PartitionReport part = subdivision_partition_check(p.complex(), sd);
  json out{{"sd", to_json(sd.sd)}, {"realization", realization}, {"partition_ok", part.ok}};
  if (sd.induced_sub) {
    out["induced_sub"] = to_json(*sd.induced_sub);
    out["induced_sub_full"] = is_full(sd.sd, *sd.induced_sub);
  }
  return out;
}

json cone_cmd(const json& req) {
  ComplexPair p = load_pair(req, "cone");
  ConeResult c = cone_pair(p);
  ComplexPair cone(c.complex);
  json cmp = json::array();
  for (int k = 0; k <= p.complex().dimension() + 1; ++k) {
    InvariantFactors rel = homology(p, k).factors, red = homology(cone, k, true).factors;
    cmp.push_back({{"k", k}, {"relative", to_json(rel)}, {"reduced_cone", to_json(red)}, {"equal", rel == red}});
  }
  return {{"cone", to_json(c.complex)}, {"apex", c.complex.label(c.apex)}, {"comparison", cmp}};
}

json retract_cmd(const json& req) {
  SimplicialComplex k = io::complex_from_json(need(req, "complex", "retract"));
  SimplicialComplex l = io::sub_from_json(k, need(req, "sub", "retract"));
  RationalPoint p = io::point_from_json(k, need(req, "point", "retract"));
  Rational t = req.contains("t") ? io::rational_of(req.at("t")) : Rational(1);
  RetractionResult r = retract_point(k, l, p, t);
  return {{"a", to_json(r.a)},
          {"alpha_prime", to_json(k, r.alpha_prime)},
          {"alpha_out", to_json(k, r.alpha_out)},
          {"t", to_json(t)},
          {"n_complex", to_json(r.n_complex)},
          {"n1_complex", to_json(r.n1_complex)}};
}

json cross_cmd(const json& req) {
  const json& terms = need(req, "terms", "cross");
  json left, right;
  if (terms.is_array() && terms.size() == 2) {
    left = terms[0];
    right = terms[1];
  } else {
    left = need(terms, "left", "cross");
    right = need(terms, "right", "cross");
  }
  SimplicialComplex k = complex_for_terms(req, {left, right});
  ProductChain c = cross(io::chain_from_json(k, left), io::chain_from_json(k, right));
  return {{"cross", to_json(k, c)}, {"boundary", to_json(k, product_boundary(c))}};
}

json quotient_cmd(const json& req) {
  SimplicialComplex k = io::complex_from_json(need(req, "complex", "quotient"));
  const json& terms = need(req, "terms", "quotient");
  ProductChain c = io::product_chain_from_json(k, k, terms);
  GableChain q = quotient_project(c);
  return {{"quotient", to_json(k, q)}, {"boundary", to_json(k, gable_boundary(q))}};
}

json product_complex_cmd(const json& req) {
  SimplicialComplex k = io::complex_from_json(need(req, "complex", "product-complex"));
  ProductComplexResult r = product_complex(k);
  json counts = json::array(), gable_counts = json::array(), diag = json::array();
  for (int d = 0; d <= r.product.dimension(); ++d) counts.push_back(r.product.count(d));
  for (int d = 0; d <= r.gable.dimension(); ++d) {
    gable_counts.push_back(r.gable.count(d));
    std::size_t n = 0;
    if (static_cast<std::size_t>(d) < r.diagonal_sub.size())
      for (bool b : r.diagonal_sub[static_cast<std::size_t>(d)]) n += b;
    diag.push_back(n);
  }
  json top = json::array();
  for (const auto& cell : r.gable.cells(r.gable.dimension())) top.push_back(to_json(k, k, cell));
  return {{"product", to_json(r.product)},
          {"product_counts", counts},
          {"gable_counts", gable_counts},
          {"diagonal_counts", diag},
          {"gable_top_cells", top}};
}

json roof_cmd(const json& req) {
  const json& terms = need(req, "terms", "roof");
  SimplicialComplex k = complex_for_terms(req, {terms});
  TermList t = io::terms_from_json(k, terms);
  GableChain r = roof(t);
  GableChain b = gable_boundary(r);
  Realization real = vertex_realization(k);
  bool touches = true;
  for (const auto& [s, g] : b.terms()) touches = touches && touches_diagonal(s, real);
  return {{"roof", to_json(k, r)}, {"boundary_terms", b.terms().size()}, {"boundary_touches_diagonal", touches}};
}

std::vector<DiagonalRegion> regions_for(const GableComplex& g, const json& req) {
  if (!req.contains("region")) return {diagonal_region(g)};
  return io::regions_from_json(g, req.at("region"));
}

json roof_family_cmd(const json& req) {
  const json& terms = need(req, "terms", "roof-family");
  SimplicialComplex k = complex_for_terms(req, {terms});
  TermList t = io::terms_from_json(k, terms);
  GableComplex g(k);
  RoofFamily f = roof_family(t, g, regions_for(g, req));
  json levels = json::array();
  for (const auto& c : f.levels) levels.push_back(relative_class_json(c));
  json compat = json::array();
  for (bool b : f.compatible) compat.push_back(b);
  return {{"levels", levels}, {"compatible", compat}, {"all_compatible", f.all_compatible}};
}

json fundamental_cmd(const json& req) {
  SimplicialComplex m = io::complex_from_json(need(req, "complex", "fundamental-check"));
  TermList t = req.contains("terms") ? io::terms_from_json(m, req.at("terms"))
                                     : fundamental_terms(m, req.contains("k") ? degree(req, "fundamental-check")
                                                                              : m.dimension());
  FundamentalReport r = fundamental_roof_check(m, t);
  return {{"ok", r.ok()},
          {"relative_cycle", r.relative_cycle},
          {"boundary_touches_diagonal", r.boundary_touches_diagonal},
          {"support_matches", r.support_matches},
          {"unit_coefficients", r.unit_coefficients},
          {"support_size", r.support_size},
          {"expected_support_size", r.expected_support_size},
          {"boundary_terms", r.boundary_terms},
          {"witness", r.witness},
          {"terms", to_json(m, t)}};
}

struct CoverInputs {
  GroundPair ground;
  std::vector<CoverPair> covers;
};

CoverInputs load_covers(const json& req, const std::string& command, std::size_t count) {
  const json& docs = need(req, "covers", command);
  if (!docs.is_array() || docs.size() != count) {
    throw Error("missing-input", command + " needs " + std::to_string(count) + " --cover file(s)");
  }
  CoverInputs out;
  std::vector<json> list;
  for (const auto& d : docs) {
    out.covers.push_back(io::cover_from_json(d));
    list.push_back(d);
  }
  out.ground = io::ground_from_json(list, out.covers);
  return out;
}

json nerve_homology(const ComplexPair& p) {
  json out = json::array();
  for (int k = 0; k <= std::max(0, p.complex().dimension()); ++k) {
    out.push_back({{"k", k}, {"group", to_json(homology(p, k).factors)}});
  }
  return out;
}

json nerve_cmd(const json& req) {
  CoverInputs in = load_covers(req, "nerve", 1);
  ComplexPair p = nerve(in.ground, in.covers[0]);
  return {{"nerve", to_json(p)}, {"homology", nerve_homology(p)}};
}

json refine_cmd(const json& req) {
  CoverInputs in = load_covers(req, "refine", 2);
  CommonRefinement r = common_refinement(in.ground, in.covers[0], in.covers[1]);
  return {{"cover", to_json(r.cover)}, {"to_first", to_json(r.to_first)}, {"to_second", to_json(r.to_second)}};
}

json project_cmd(const json& req) {
  CoverInputs in = load_covers(req, "project", 2);
  const CoverPair& fine = in.covers[0];
  const CoverPair& coarse = in.covers[1];
  std::optional<RefinementWitness> w;
  if (req.contains("witness")) w = io::witness_from_json(req.at("witness"));
  Projection p = projection(in.ground, fine, coarse, w);
  ComplexPair src = nerve(in.ground, fine), tgt = nerve(in.ground, coarse);
  json vertex_map = json::object();
  for (std::size_t v = 0; v < p.vertex_map.size(); ++v) {
    vertex_map[src.complex().label(v)] = tgt.complex().label(p.vertex_map[v]);
  }
  json out{{"witness", to_json(p.witness)}, {"vertex_map", vertex_map}};
  if (req.contains("k")) {
    const int k = degree(req, "project");
    GroupMorphism f = induced_homology_map(p.vertex_map, src, tgt, k);
    auto all = all_witnesses(fine, coarse);
    bool independent = true;
    for (const auto& other : all) {
      independent = independent && projection_homology_map(in.ground, fine, coarse, other, k).equals(f);
    }
    out["k"] = k;
    out["induced"] = to_json(f);
    out["witness_count"] = all.size();
    out["independent_of_witness"] = independent;
  }
  return out;
}

json cech_cmd(const json& req) {
  io::TowerInput in = io::tower_from_json(need(req, "tower", "cech"));
  const int k = degree(req, "cech");
  CechResult r = cech_homology(in.ground, in.tower, k);
  json levels = json::object();
  for (std::size_t i = 0; i < r.levels.size(); ++i) levels[in.tower.poset.element(i)] = to_json(r.levels[i]);
  return {{"k", k}, {"levels", levels}, {"limit", io::limit_to_json(r.system, r.limit)}};
}

json limit_cmd(const json& req) {
  InverseSystem s = io::system_from_json(need(req, "system", "limit"));
  return io::limit_to_json(s, inverse_limit(s));
}

json cofinal_cmd(const json& req) {
  std::vector<std::string> subset;
  for (const auto& l : need(req, "subset", "cofinal")) subset.push_back(io::label_of(l));
  const json& sys = need(req, "system", "cofinal");
  if (!sys.contains("groups")) {
    FinitePoset p = io::poset_from_json(sys.contains("poset") ? sys.at("poset") : sys);
    return {{"class", to_string(cofinality_class(p, subset))}, {"directed", p.is_directed()}};
  }
  InverseSystem s = io::system_from_json(sys);
  Cofinality c = cofinality_class(s.poset(), subset);
  LimitComparison cmp = restricted_limit_compare(s, subset);
  return {{"class", to_string(c)},
          {"directed", s.poset().is_directed()},
          {"full", to_json(invariant_factors(cmp.full.group))},
          {"restricted", to_json(invariant_factors(cmp.restricted.group))},
          {"comparison", to_json(cmp.comparison.matrix())},
          {"is_iso", cmp.is_iso}};
}

json verify_cmd(const json& req) {
  verify::Options o;
  o.seed = req.value("seed", std::uint64_t{0});
  o.jobs = req.value("jobs", 1u);
  o.max_k = req.value("max_k", 3);
  if (o.max_k < 1) throw Error("invalid-bound", "--max-k must be at least 1", std::to_string(o.max_k));
  const std::string suite = need(req, "suite", "verify").get<std::string>();
  return verify::to_json(verify::run(suite, o), o);
}

const std::map<std::string, std::function<json(const json&)>>& table() {
  static const std::map<std::string, std::function<json(const json&)>> t{
      {"homology", homology_cmd},
      {"subdivide", subdivide_cmd},
      {"cone", cone_cmd},
      {"retract", retract_cmd},
      {"cross", cross_cmd},
      {"quotient", quotient_cmd},
      {"product-complex", product_complex_cmd},
      {"roof", roof_cmd},
      {"roof-family", roof_family_cmd},
      {"fundamental-check", fundamental_cmd},
      {"nerve", nerve_cmd},
      {"refine", refine_cmd},
      {"project", project_cmd},
      {"cech", cech_cmd},
      {"limit", limit_cmd},
      {"cofinal", cofinal_cmd},
      {"verify", verify_cmd}};
  return t;
}

void render(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto inline_value = [&](const json& v) {
    if (v.is_object() && v.contains("text") && v.contains("free_rank")) return std::optional(v.at("text").get<std::string>());
    if (v.is_primitive()) return std::optional(scalar(v));
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
      return std::optional(v.dump());
    }
    return std::optional<std::string>();
  };
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) {
      if (auto s = inline_value(v)) {
        out << pad << key << ": " << *s << '\n';
      } else {
        out << pad << key << ":\n";
        render(out, v, indent + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (auto s = inline_value(v)) {
        out << pad << "- " << *s << '\n';
      } else {
        out << pad << "-\n";
        render(out, v, indent + 1);
      }
    }
  } else {
    out << pad << scalar(j) << '\n';
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, f] : table()) out.push_back(name);
    return out;
  }();
  return names;
}

json execute(const std::string& command, const json& request) {
  auto it = table().find(command);
  if (it == table().end()) throw Error("unknown-command", "unknown command", command);
  return it->second(request);
}

json report(const std::string& command, const json& request) {
  try {
    json result = execute(command, request);
    const bool ok = !result.is_object() || !result.contains("pass") || result.at("pass").get<bool>();
    return {{"command", command}, {"ok", ok}, {"result", std::move(result)}};
  } catch (const Error& e) {
    return {{"command", command},
            {"ok", false},
            {"error", {{"kind", e.kind()}, {"message", e.what()}, {"witness", e.witness()}}}};
  } catch (const json::exception& e) {
    return {{"command", command}, {"ok", false}, {"error", {{"kind", "parse-error"}, {"message", e.what()}, {"witness", ""}}}};
  }
}

std::string render_text(const json& rep) {
  std::ostringstream out;
  render(out, rep, 0);
  return out.str();
}

}  // namespace gable
