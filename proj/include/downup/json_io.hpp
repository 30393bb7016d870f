#pragma once

#include <json.hpp>

#include "downup/classify.hpp"
#include "downup/ext.hpp"
#include "downup/module.hpp"

namespace downup {

// Key order is insertion order so output is stable and readable.
using Json = nlohmann::ordered_json;

// Over Q a field element is a bare "p/q" string; over a larger field it is the
// list of its power-basis coordinates. Readers accept either form.
Json to_json(const FieldElement& e);
FieldElement field_element_from_json(const NumberField& field, const Json& j);

// {"minpoly": [...low degree first...], "name": "t"}
Json to_json(const NumberField& f);
NumberField number_field_from_json(const Json& j);

// {"field": ..., "alpha": ..., "beta": ..., "gamma": ...}
Json to_json(const Params& p);
Params params_from_json(const Json& j);

// {"i,j": coefficient, ...}
Json to_json(const BivarPoly& p);
// [{"degree": n, "coeff": {...}}, ...] by increasing degree.
Json to_json(const AlgebraElement& a);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const NumberField& field, const Json& j, int rows, int cols);

// {"params": ..., "dim": n, "D": [[...]], "U": [[...]], "label": ...}
Json to_json(const FDModule& m);
FDModule module_from_json(const Json& j);

Json to_json(const RelationReport& r);
Json to_json(const WeightData& w);
Json to_json(const FiltrationReport& f);
Json to_json(const SimplesOfDim& s);
Json to_json(const IsoVerdict& v);
Json to_json(const SemisimplicityVerdict& v);
Json to_json(const VermaStructure& v);
Json to_json(const ProbeReport& r);

}  // namespace downup
