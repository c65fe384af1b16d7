#pragma once

#include <json.hpp>

#include <string>

#include "seamrep/cell_module.hpp"
#include "seamrep/exact_matrix.hpp"
#include "seamrep/gl_morphism.hpp"
#include "seamrep/seam.hpp"
#include "seamrep/structure.hpp"

namespace seamrep::io {

using Json = nlohmann::json;  // std::map objects: keys come out sorted

Json to_json(const LaurentPoly& p);  // [[exp, "p/q"], ...], increasing exponent
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const RationalFunction& x);  // {"backend":"generic","num":..,"den":..}
Json to_json(const Cyclotomic& x);        // {"backend":"root","num":..,"den":[[0,"1"]],"N":..}
RationalFunction ratfunc_from_json(const Json& j);
Cyclotomic cyclotomic_from_json(const Json& j);

Json to_json(const Diagram& d);  // canonical text form
Diagram diagram_from_json(const Json& j);

template <class S>
Json to_json(const Element<S>& x) {
  Json out = Json::array();
  for (const auto& [d, c] : x.terms()) out.push_back(Json::array({to_json(d), to_json(c)}));
  return out;
}

template <class S>
Json to_json(const ExactMatrix<S>& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

ExactMatrix<RationalFunction> ratfunc_matrix_from_json(const Json& j);
ExactMatrix<Cyclotomic> cyclotomic_matrix_from_json(const Json& j);

Json to_json(const CellDatum& c);
CellDatum cell_datum_from_json(const Json& j);

Json to_json(const StructureReport& r);
StructureReport structure_report_from_json(const Json& j);

Json to_json(const Bratteli& b);

Json to_json(const GLMorphism& m, const MorphismCheck& check);

// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace seamrep::io
