#include "seamrep/serialize.hpp"

#include "seamrep/errors.hpp"
#include "seamrep/pretty.hpp"

namespace seamrep::io {

namespace {

mpq_class rational_from(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
  mpq_class r;
  if (r.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad rational text " + j.get<std::string>());
  r.canonicalize();
  return r;
}

Json optional_int(const std::optional<int>& x) { return x ? Json(*x) : Json(nullptr); }

std::optional<int> optional_int_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, c.get_str()}));
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("Laurent polynomial must be an array of [exp, \"p/q\"]");
  std::map<int, mpq_class> t;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw ParseError("bad Laurent term");
    t[term[0].get<int>()] += rational_from(term[1]);
  }
  return LaurentPoly::from_terms(t);
}

Json to_json(const RationalFunction& x) {
  return Json{{"backend", "generic"}, {"num", to_json(x.num())}, {"den", to_json(x.den())}};
}

Json to_json(const Cyclotomic& x) {
  Json num = Json::array();
  for (size_t e = 0; e < x.coeffs().size(); ++e)
    if (x.coeffs()[e] != 0) num.push_back(Json::array({static_cast<int>(e), x.coeffs()[e].get_str()}));
  return Json{{"backend", "root"}, {"num", num}, {"den", Json::array({Json::array({0, "1"})})}, {"N", x.order()}};
}

RationalFunction ratfunc_from_json(const Json& j) {
  if (j.value("backend", "") != "generic") throw ParseError("expected a generic-q scalar");
  return RationalFunction(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.value("backend", "") != "root") throw ParseError("expected a root-of-unity scalar");
  const int N = j.at("N").get<int>();
  auto den = laurent_from_json(j.at("den"));
  if (!den.is_constant() || den.is_zero()) throw ParseError("root-of-unity scalar with non-constant denominator");
  std::vector<mpq_class> c;
  for (const auto& term : j.at("num")) {
    int e = term.at(0).get<int>();
    if (e < 0) throw ParseError("negative zeta exponent");
    if (static_cast<size_t>(e) >= c.size()) c.resize(static_cast<size_t>(e) + 1, 0);
    c[static_cast<size_t>(e)] += rational_from(term.at(1));
  }
  Cyclotomic x = N == 0 ? Cyclotomic(c.empty() ? mpq_class(0) : c[0]) : Cyclotomic::from_coeffs(N, c);
  return x * Cyclotomic(mpq_class(1) / den.coeff(0));
}

Json to_json(const Diagram& d) { return d.to_string(); }
Diagram diagram_from_json(const Json& j) { return Diagram::parse(j.get<std::string>()); }

ExactMatrix<RationalFunction> ratfunc_matrix_from_json(const Json& j) {
  const auto r = static_cast<Eigen::Index>(j.size()), c = r ? static_cast<Eigen::Index>(j[0].size()) : 0;
  ExactMatrix<RationalFunction> m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(j[static_cast<size_t>(i)].size()) != c) throw ParseError("ragged matrix");
    for (Eigen::Index k = 0; k < c; ++k) m(i, k) = ratfunc_from_json(j[static_cast<size_t>(i)][static_cast<size_t>(k)]);
  }
  return m;
}

ExactMatrix<Cyclotomic> cyclotomic_matrix_from_json(const Json& j) {
  const auto r = static_cast<Eigen::Index>(j.size()), c = r ? static_cast<Eigen::Index>(j[0].size()) : 0;
  ExactMatrix<Cyclotomic> m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(j[static_cast<size_t>(i)].size()) != c) throw ParseError("ragged matrix");
    for (Eigen::Index k = 0; k < c; ++k)
      m(i, k) = cyclotomic_from_json(j[static_cast<size_t>(i)][static_cast<size_t>(k)]);
  }
  return m;
}

Json to_json(const CellDatum& c) {
  Json bases = Json::object();
  for (const auto& [d, ws] : c.bases) {
    Json arr = Json::array();
    for (const auto& w : ws) arr.push_back(to_json(w));
    bases[std::to_string(d)] = arr;
  }
  return Json{{"n", c.n}, {"k", c.k}, {"delta", c.delta}, {"bases", bases}};
}

CellDatum cell_datum_from_json(const Json& j) {
  CellDatum c;
  c.n = j.at("n").get<int>();
  c.k = j.at("k").get<int>();
  c.delta = j.at("delta").get<std::vector<int>>();
  for (const auto& [key, arr] : j.at("bases").items()) {
    auto& ws = c.bases[std::stoi(key)];
    for (const auto& w : arr) ws.push_back(diagram_from_json(w));
  }
  return c;
}

Json to_json(const StructureReport& r) {
  Json cells = Json::array();
  for (const auto& c : r.cells)
    cells.push_back(Json{{"d", c.d},
                         {"critical", c.critical},
                         {"in_delta0", c.in_delta0},
                         {"dim_cell", c.dim_cell},
                         {"dim_rad", c.dim_rad},
                         {"dim_irre", c.dim_irre},
                         {"dim_proj", c.dim_proj},
                         {"d_minus", optional_int(c.d_minus)},
                         {"d_plus", optional_int(c.d_plus)},
                         {"cell_sequence", c.cell_sequence},
                         {"proj_sequence", c.proj_sequence}});
  return Json{{"n", r.n},
              {"k", r.k},
              {"order", r.order ? Json(r.order->N) : Json(nullptr)},
              {"delta", r.delta},
              {"delta0", r.delta0},
              {"orbits", r.orbit_classes},
              {"cells", cells},
              {"D", r.D},
              {"C", r.C},
              {"dim_algebra", r.dim_algebra}};
}

StructureReport structure_report_from_json(const Json& j) {
  StructureReport r;
  r.n = j.at("n").get<int>();
  r.k = j.at("k").get<int>();
  if (!j.at("order").is_null()) r.order = UnityOrder(j.at("order").get<int>());
  r.delta = j.at("delta").get<std::vector<int>>();
  r.delta0 = j.at("delta0").get<std::vector<int>>();
  r.orbit_classes = j.at("orbits").get<std::vector<std::vector<int>>>();
  for (const auto& c : j.at("cells")) {
    CellStructure cs;
    cs.d = c.at("d").get<int>();
    cs.critical = c.at("critical").get<bool>();
    cs.in_delta0 = c.at("in_delta0").get<bool>();
    cs.dim_cell = c.at("dim_cell").get<long long>();
    cs.dim_rad = c.at("dim_rad").get<long long>();
    cs.dim_irre = c.at("dim_irre").get<long long>();
    cs.dim_proj = c.at("dim_proj").get<long long>();
    cs.d_minus = optional_int_from(c.at("d_minus"));
    cs.d_plus = optional_int_from(c.at("d_plus"));
    cs.cell_sequence = c.at("cell_sequence").get<std::string>();
    cs.proj_sequence = c.at("proj_sequence").get<std::string>();
    r.cells.push_back(std::move(cs));
  }
  r.D = j.at("D").get<std::vector<std::vector<int>>>();
  r.C = j.at("C").get<std::vector<std::vector<int>>>();
  r.dim_algebra = j.at("dim_algebra").get<long long>();
  return r;
}

Json to_json(const Bratteli& b) {
  Json rows = Json::array();
  for (const auto& r : b.rows)
    rows.push_back(Json{{"n", r.n},
                        {"nodes", r.nodes},
                        {"excluded", r.excluded},
                        {"critical", r.critical},
                        {"classes", r.classes}});
  return Json{{"k", b.k},
              {"order", b.order ? Json(b.order->N) : Json(nullptr)},
              {"critical_columns", b.critical_columns},
              {"rows", rows}};
}

Json to_json(const GLMorphism& m, const MorphismCheck& check) {
  Json ws = Json::array();
  for (size_t i = 0; i < m.ws.size(); ++i)
    ws.push_back(Json{{"diagram", to_json(m.ws[i])},
                      {"H", to_json(m.H[i])},
                      {"H_text", pretty(RationalFunction(m.H[i]))},
                      {"sign", m.signs[i]},
                      {"contributes", static_cast<bool>(m.contributes[i])}});
  return Json{{"s", m.s},
              {"t", m.t},
              {"ws", ws},
              {"theta", to_json(m.theta)},
              {"check",
               Json{{"in_radical", check.in_radical},
                    {"rank", check.rank},
                    {"dim_rad", check.dim_rad},
                    {"rank_matches", check.rank_matches},
                    {"intertwines", check.intertwines},
                    {"nonzero", check.nonzero},
                    {"ok", check.ok()}}}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace seamrep::io
