#pragma once

#include "gable/abelian.hpp"
#include "gable/cech.hpp"
#include "gable/chain.hpp"
#include "gable/complex.hpp"
#include "gable/inverse_limit.hpp"
#include "gable/roof.hpp"
#include "gable/shuffle.hpp"
#include "gable/subdivision.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gable::io {

using nlohmann::json;

/// Reads and parses a file. Throws Error("io-error") or Error("parse-error").
json load_file(const std::string& path);

/// Natural order: numeric labels by value, then digit runs compared numerically.
bool natural_less(const std::string& a, const std::string& b);
/// A JSON string or number as a label.
std::string label_of(const json& j);

/// Accepts JSON integers or decimal strings. Throws Error("parse-error").
Integer integer_of(const json& j);
/// Accepts integers, "p/q" strings and decimal strings.
Rational rational_of(const json& j);
/// Machine integers as numbers, larger values as strings.
json to_json(const Integer& x);
json to_json(const Rational& x);

json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);
json to_json(const InvariantFactors& f);
json to_json(const FgAbelianGroup& g);
FgAbelianGroup group_from_json(const json& j);
json to_json(const GroupMorphism& f);

/// {"poset":{"elements":[...],"leq":[[a,b],...]},"groups":{a:group},"maps":{"a<=b":matrix}}.
InverseSystem system_from_json(const json& j);
json to_json(const InverseSystem& s);
FinitePoset poset_from_json(const json& j);
json to_json(const FinitePoset& p);
/// Components keyed by element label.
json limit_to_json(const InverseSystem& s, const InverseLimit& l);

/// {"vertices":[...],"simplices":[[...],...]}; without "vertices" the labels
/// used by the simplices are taken in natural order.
SimplicialComplex complex_from_json(const json& j);
json to_json(const SimplicialComplex& k);
/// {"complex":{...},"sub":{...}} or a bare complex (empty subcomplex).
ComplexPair pair_from_json(const json& j);
/// Subcomplex given as a complex JSON over labels of k.
SimplicialComplex sub_from_json(const SimplicialComplex& k, const json& j);

/// Labels of every vertex mentioned by a chain or term list JSON, in natural order.
std::vector<std::string> chain_labels(const json& j);
/// {"dim":k,"terms":[{"coef":g,"vertices":[...]},...]}.
Chain chain_from_json(const SimplicialComplex& k, const json& j);
json to_json(const SimplicialComplex& k, const Chain& c);
TermList terms_from_json(const SimplicialComplex& k, const json& j);
json to_json(const SimplicialComplex& k, const TermList& t);

ProductSimplex product_simplex_from_json(const SimplicialComplex& left, const SimplicialComplex& right, const json& j);
json to_json(const SimplicialComplex& left, const SimplicialComplex& right, const ProductSimplex& s);
/// {"dim":k,"terms":[{"coef":g,"pairs":[[a,b],...]},...]}.
ProductChain product_chain_from_json(const SimplicialComplex& left, const SimplicialComplex& right, const json& j);
json to_json(const SimplicialComplex& k, const ProductChain& c);
json to_json(const SimplicialComplex& k, const GableChain& c);

/// {"coords":{"v":"p/q",...}}.
RationalPoint point_from_json(const SimplicialComplex& k, const json& j);
json to_json(const SimplicialComplex& k, const RationalPoint& p);

/// {"diagonal":true,"a":[labels],"cells":[[[a,b],...],...]}: union of the
/// diagonal region (when "diagonal" is absent or true) and the closure of the cells.
DiagonalRegion region_from_json(const GableComplex& g, const json& j);
/// A list of regions or {"regions":[...]}.
std::vector<DiagonalRegion> regions_from_json(const GableComplex& g, const json& j);

/// {"sets":{"U1":["p0",...],...},"relative":[...]}.
CoverPair cover_from_json(const json& j);
json to_json(const CoverPair& c);
/// Ground from "points"/"a" fields of the given documents, defaulting to the union of the cover sets.
GroundPair ground_from_json(const std::vector<json>& docs, const std::vector<CoverPair>& covers);
RefinementWitness witness_from_json(const json& j);
json to_json(const RefinementWitness& w);
json to_json(const ComplexPair& p);

struct TowerInput {
  GroundPair ground;
  CoverTower tower;
};
/// {"points":[...],"a":[...],"covers":{name:cover},"poset":{"elements":[...],"leq":[...]},
///  "witnesses":{"a<=b":{fine:coarse}}}. A cover may instead be a ball cover
/// {"centers":[...],"radius":"r"} over "cloud":{"labels":[...],"coords":[[...],...]},"metric":"linf"|"l2".
TowerInput tower_from_json(const json& j);

}  // namespace gable::io
