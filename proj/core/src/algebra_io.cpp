#include "tessera/algebra_io.hpp"

#include <fstream>
#include <stdexcept>

namespace tessera {

Json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_float()) return parse_rational(value.dump());
  throw std::invalid_argument("expected a rational number, got " + value.dump());
}

Json vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_to_json(q));
  return out;
}

Json matrix_to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Json algebra_to_json(const TwistedAlgebra& algebra) {
  Json out;
  out["group"] = algebra.group().label();
  out["basis"] = std::string(convention_string(algebra.constant().convention()));
  out["ring"] = algebra.ring().label();
  out["C"] = matrix_to_json(algebra.constant().values());
  return out;
}

TwistedAlgebra algebra_from_json(const Json& spec) {
  if (!spec.is_object()) throw std::invalid_argument("algebra spec must be a JSON object");
  for (const char* key : {"group", "C"}) {
    if (!spec.contains(key)) throw std::invalid_argument(std::string("algebra spec is missing '") + key + "'");
  }
  FiniteGroup group = FiniteGroup::make(parse_group_name(spec.at("group").get<std::string>()));
  BasisConvention convention = parse_convention(spec.value("basis", std::string("left-standard")));
  std::string ring_text = spec.value("ring", std::string("rational"));
  ScalarRing ring = ScalarRing::rational();
  if (ring_text.rfind("modp:", 0) == 0) {
    ring = ScalarRing::mod_p(std::stol(ring_text.substr(5)));
  } else if (ring_text != "rational") {
    throw std::invalid_argument("unknown ring: " + ring_text);
  }
  const Json& rows = spec.at("C");
  if (!rows.is_array()) throw std::invalid_argument("'C' must be an array of rows");
  std::vector<std::vector<Rational>> values;
  for (const auto& row : rows) {
    if (!row.is_array()) throw std::invalid_argument("'C' rows must be arrays");
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(rational_from_json(v));
    values.push_back(std::move(r));
  }
  return TwistedAlgebra(StructureConstant::from_rows(std::move(group), values, convention), ring,
                        spec.value("name", std::string()));
}

TwistedAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open algebra spec " + path);
  Json spec;
  try {
    spec = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("malformed algebra JSON in " + path + ": " + e.what());
  }
  return algebra_from_json(spec);
}

}  // namespace tessera
