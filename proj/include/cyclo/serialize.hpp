#pragma once

// JSON and CSV forms of the library types. JSON objects keep insertion
// order so output is byte-stable across runs.

#include <json.hpp>

#include <string>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/jacobi.hpp"
#include "cyclo/orbits.hpp"

namespace cyclo {

using Json = nlohmann::ordered_json;

/// {"p":..., "r":..., "q":..., "modulus":[...]}
Json to_json(const FieldSpec& spec);

/// A residue for prime fields, the coefficient list otherwise.
Json element_to_json(const Field& field, FieldElement a);
FieldElement element_from_json(const Field& field, const Json& j);

/// Machine integer when it fits, decimal string otherwise.
Json integer_to_json(const Integer& n);
Integer integer_from_json(const Json& j);

/// {"e":..., "coeffs":[c0, ..., c_{phi(e)-1}]}
Json to_json(const CycInt& a);
/// Throws std::invalid_argument on an order mismatch or a malformed value.
CycInt cycint_from_json(const Json& j, const RingPtr& ring);

/// {"rep":[a,b], "members":[[a,b],...], "signs":[...]}
Json to_json(const OrbitClass& orbit);

/// {"e":..., "q":..., "generator":..., "entries":[[...],...]}
Json to_json(const CycNumMatrix& m, const Field& field);
Json to_json(const JacobiMatrix& m, const Field& field);
CycNumMatrix cyc_matrix_from_json(const Json& j, const Field& field);
JacobiMatrix jacobi_matrix_from_json(const Json& j, const Field& field, const RingPtr& ring);

/// Row-major CSV with header "a,b,value".
std::string to_csv(const CycNumMatrix& m);
/// Row-major CSV with header "i,j,value", values in text form.
std::string to_csv(const JacobiMatrix& m);

}  // namespace cyclo
