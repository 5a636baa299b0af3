#ifndef QDRESS_SERIALIZE_HPP
#define QDRESS_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "qdress/calgebra.hpp"
#include "qdress/rational_function.hpp"
#include "qdress/repmod.hpp"
#include "qdress/scalar.hpp"

namespace qdress {

using Json = nlohmann::ordered_json;

// Scalar:
//   {"terms": [{"t_exp", "u_exp", "v_exp", "coeff": "p/r"}...],
//    "denom_power": k, "denom_power_qm1": m}
// terms ascending in (t_exp, u_exp, v_exp); value = sum / ((1+q)^k (q-1)^m).
// RationalFunction:
//   {"num": [{"t_exp", "coeff"}...], "den": [{"t_exp", "coeff"}...]}
// CElement / RVector: [{"monomial": [n1, n2, n3, n4], "coeff": ...}...]

Json to_json(const Scalar& s);
Json to_json(const RationalFunction& r);
Json to_json(const CElement& e);
Json to_json(const RVector& e);
Json to_json(const ModuleRealization& m);

Scalar scalar_from_json(const Json& j);
RationalFunction rational_function_from_json(const Json& j);
ModuleRealization module_from_json(const Json& j);

}  // namespace qdress

#endif
