#include "downup/json_io.hpp"

namespace downup {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::InvalidInput, "malformed JSON: " + msg); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("expected a rational string, got " + j.dump());
}

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const FieldElement& e) {
  if (e.field().is_rational()) return to_string(e.coords()[0]);
  Json out = Json::array();
  for (const auto& c : e.coords()) out.push_back(to_string(c));
  return out;
}

FieldElement field_element_from_json(const NumberField& field, const Json& j) {
  if (j.is_string() || j.is_number_integer()) return field.from_rational(rational_from_json(j));
  if (!j.is_array()) bad("field element must be a string or a list");
  if (static_cast<int>(j.size()) != field.degree())
    throw Error(ErrorKind::FieldMismatch, "field element has " + std::to_string(j.size()) +
                                              " coordinates, field degree is " + std::to_string(field.degree()));
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  return field.from_coords(std::move(coords));
}

Json to_json(const NumberField& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.minpoly().coeffs()) coeffs.push_back(to_string(c));
  return Json{{"minpoly", coeffs}, {"name", f.name()}};
}

NumberField number_field_from_json(const Json& j) {
  const Json& mp = field_of(j, "minpoly");
  if (!mp.is_array()) bad("minpoly must be a list");
  std::vector<Rational> coeffs;
  for (const auto& c : mp) coeffs.push_back(rational_from_json(c));
  std::string name = j.contains("name") ? j.at("name").get<std::string>() : "t";
  return NumberField::make(coeffs, name);
}

Json to_json(const Params& p) {
  return Json{{"field", to_json(p.field())},
              {"alpha", to_json(p.alpha())},
              {"beta", to_json(p.beta())},
              {"gamma", to_json(p.gamma())}};
}

Params params_from_json(const Json& j) {
  NumberField K = j.contains("field") ? number_field_from_json(j.at("field")) : NumberField();
  return Params::make(field_element_from_json(K, field_of(j, "alpha")), field_element_from_json(K, field_of(j, "beta")),
                      field_element_from_json(K, field_of(j, "gamma")));
}

Json to_json(const BivarPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e.first) + "," + std::to_string(e.second)] = to_json(c);
  return out;
}

Json to_json(const AlgebraElement& a) {
  Json out = Json::array();
  for (const auto& [n, p] : a.components()) out.push_back(Json{{"degree", n}, {"coeff", to_json(p)}});
  return out;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const NumberField& field, const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) bad("matrix must have " + std::to_string(rows) + " rows");
  Matrix m(field, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      bad("matrix row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c) m(i, c) = field_element_from_json(field, row[static_cast<size_t>(c)]);
  }
  return m;
}

Json to_json(const FDModule& m) {
  return Json{{"params", to_json(m.params)},
              {"dim", m.dim},
              {"D", to_json(m.D)},
              {"U", to_json(m.U)},
              {"label", to_string(m.label)}};
}

FDModule module_from_json(const Json& j) {
  Params p = params_from_json(field_of(j, "params"));
  const Json& dim = field_of(j, "dim");
  if (!dim.is_number_integer() || dim.get<long>() < 0) bad("dim must be a nonnegative integer");
  const int n = dim.get<int>();
  ModuleLabel label = j.contains("label") ? parse_module_label(j.at("label").get<std::string>()) : ModuleLabel::Raw;
  return make_module(p, matrix_from_json(p.field(), field_of(j, "D"), n, n),
                     matrix_from_json(p.field(), field_of(j, "U"), n, n), label);
}

Json to_json(const RelationReport& r) {
  return Json{{"ok", r.ok}, {"residual1", to_json(r.residual1)}, {"residual2", to_json(r.residual2)}};
}

Json to_json(const WeightData& w) {
  Json ws = Json::array();
  for (const auto& x : w.weights) {
    Json basis = Json::array();
    for (const auto& v : x.basis) {
      Json vec = Json::array();
      for (const auto& c : v) vec.push_back(to_json(c));
      basis.push_back(std::move(vec));
    }
    ws.push_back(Json{{"du", to_json(x.du)}, {"ud", to_json(x.ud)}, {"multiplicity", x.multiplicity}, {"basis", basis}});
  }
  return Json{{"weights", ws}, {"is_weight_module", w.is_weight_module}};
}

Json to_json(const FiltrationReport& f) {
  return Json{{"r", f.r},
              {"s", f.s},
              {"ker_d", f.ker_d},
              {"ker_u", f.ker_u},
              {"intersection", f.intersection},
              {"level_dims", f.level_dims},
              {"containments_ok", f.containments_ok}};
}

Json to_json(const SimplesOfDim& s) {
  Json ws = Json::array();
  for (const auto& w : s.weights) ws.push_back(to_json(w));
  Json out{{"weights", ws}};
  if (s.all_lambda) {
    Json ex = Json::array();
    for (const auto& e : s.excluded) ex.push_back(to_json(e));
    out["all_lambda"] = true;
    out["excluded"] = ex;
  }
  return out;
}

Json to_json(const IsoVerdict& v) {
  return Json{{"answer", v.answer}, {"branch", to_string(v.branch)}, {"details", v.details}};
}

Json to_json(const SemisimplicityVerdict& v) {
  Json w = v.witness ? Json::array({v.witness->first, v.witness->second}) : Json();
  return Json{{"answer", to_string(v.answer)}, {"witness", w}, {"bound", v.bound}};
}

Json to_json(const VermaStructure& v) {
  return Json{{"zeros", v.zeros}, {"length", v.length}, {"bound", v.bound}};
}

Json to_json(const ProbeReport& r) {
  auto simple = [&](int i) {
    const ProbeSimple& s = r.simples[static_cast<size_t>(i)];
    return Json{{"dim", s.dim}, {"lambda", to_json(s.lambda)}};
  };
  Json pairs = Json::array();
  for (const auto& p : r.pairs) pairs.push_back(Json{{"from", simple(p.from)}, {"to", simple(p.to)}, {"ext1", p.ext1}});
  Json simples = Json::array();
  for (int i = 0; i < static_cast<int>(r.simples.size()); ++i) simples.push_back(simple(i));
  Json out{{"pairs", pairs}, {"dim_bound", r.dim_bound}, {"simples", simples}, {"complete", r.complete}};
  if (r.verdict) out["verdict"] = to_json(*r.verdict);
  return out;
}

}  // namespace downup
