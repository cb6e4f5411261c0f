#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "tessera/algebra.hpp"

namespace tessera {

using Json = nlohmann::ordered_json;

// {"group": "Z4", "basis": "left-standard", "ring": "rational", "C": [[...], ...]}
Json algebra_to_json(const TwistedAlgebra& algebra);
TwistedAlgebra algebra_from_json(const Json& spec);
TwistedAlgebra load_algebra_file(const std::string& path);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& value);
Json vector_to_json(const RationalVector& v);
Json matrix_to_json(const RationalMatrix& m);

}  // namespace tessera
