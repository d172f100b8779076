#include "cyclo/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclo {

Json to_json(const FieldSpec& spec) {
  Json j;
  j["p"] = spec.p;
  j["r"] = spec.r;
  j["q"] = spec.q;
  j["modulus"] = spec.modulus;
  return j;
}

Json element_to_json(const Field& field, FieldElement a) {
  if (field.r() == 1) return a.code;
  return field.coeffs(a);
}

FieldElement element_from_json(const Field& field, const Json& j) {
  if (field.r() == 1) {
    const auto code = j.get<std::uint32_t>();
    if (code >= field.q()) throw std::invalid_argument("field element out of range");
    return {code};
  }
  return field.from_coeffs(j.get<std::vector<std::uint32_t>>());
}

Json integer_to_json(const Integer& n) {
  if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json to_json(const CycInt& a) {
  Json j;
  j["e"] = a.order();
  Json coeffs = Json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(integer_to_json(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

CycInt cycint_from_json(const Json& j, const RingPtr& ring) {
  if (j.at("e").get<std::uint32_t>() != ring->order()) {
    throw std::invalid_argument("cyclotomic integer order mismatch");
  }
  const Json& raw = j.at("coeffs");
  if (raw.size() != ring->rank()) {
    throw std::invalid_argument("expected " + std::to_string(ring->rank()) + " coefficients");
  }
  std::vector<Integer> coeffs;
  for (const auto& c : raw) coeffs.push_back(integer_from_json(c));
  return CycInt(ring, std::move(coeffs));
}

Json to_json(const OrbitClass& orbit) {
  Json j;
  j["rep"] = {orbit.representative.first, orbit.representative.second};
  Json members = Json::array();
  for (const auto& m : orbit.members) members.push_back({m.first, m.second});
  j["members"] = std::move(members);
  j["signs"] = orbit.signs;
  return j;
}

Json to_json(const CycNumMatrix& m, const Field& field) {
  Json j;
  j["e"] = m.e;
  j["q"] = m.q;
  j["generator"] = element_to_json(field, m.generator);
  Json rows = Json::array();
  for (std::uint32_t a = 0; a < m.e; ++a) {
    Json row = Json::array();
    for (std::uint32_t b = 0; b < m.e; ++b) row.push_back(m.at(a, b));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

Json to_json(const JacobiMatrix& m, const Field& field) {
  Json j;
  j["e"] = m.e;
  j["q"] = m.q;
  j["generator"] = element_to_json(field, m.generator);
  Json rows = Json::array();
  for (std::uint32_t i = 0; i < m.e; ++i) {
    Json row = Json::array();
    for (std::uint32_t k = 0; k < m.e; ++k) row.push_back(to_json(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

namespace {

template <typename Matrix, typename Cell>
Matrix read_matrix(const Json& j, const Field& field, Matrix m, Cell&& cell) {
  m.e = j.at("e").get<std::uint32_t>();
  m.q = j.at("q").get<std::uint32_t>();
  if (m.q != field.q()) throw std::invalid_argument("matrix field size does not match");
  m.generator = element_from_json(field, j.at("generator"));
  const Json& rows = j.at("entries");
  if (rows.size() != m.e) throw std::invalid_argument("matrix must have e rows");
  for (const auto& row : rows) {
    if (row.size() != m.e) throw std::invalid_argument("matrix must have e columns");
    for (const auto& value : row) m.entries.push_back(cell(value));
  }
  return m;
}

}  // namespace

CycNumMatrix cyc_matrix_from_json(const Json& j, const Field& field) {
  return read_matrix(j, field, CycNumMatrix{},
                     [](const Json& v) { return v.get<std::uint64_t>(); });
}

JacobiMatrix jacobi_matrix_from_json(const Json& j, const Field& field, const RingPtr& ring) {
  JacobiMatrix m;
  m.ring = ring;
  m = read_matrix(j, field, std::move(m),
                  [&](const Json& v) { return cycint_from_json(v, ring); });
  if (m.e != ring->order()) throw std::invalid_argument("matrix order does not match ring");
  return m;
}

std::string to_csv(const CycNumMatrix& m) {
  std::ostringstream out;
  out << "a,b,value\n";
  for (std::uint32_t a = 0; a < m.e; ++a) {
    for (std::uint32_t b = 0; b < m.e; ++b) out << a << ',' << b << ',' << m.at(a, b) << '\n';
  }
  return out.str();
}

std::string to_csv(const JacobiMatrix& m) {
  std::ostringstream out;
  out << "i,j,value\n";
  for (std::uint32_t i = 0; i < m.e; ++i) {
    for (std::uint32_t j = 0; j < m.e; ++j) out << i << ',' << j << ',' << m.at(i, j) << '\n';
  }
  return out.str();
}

}  // namespace cyclo
