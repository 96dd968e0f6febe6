#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qcert/polynomial.hpp"

namespace qcert {

// Wire format: complex numbers are [re, im] pairs.
//   coefficient form: {"coeffs": [[re, im], ...]}       (ascending powers)
//   quotient form:    {"a0": [re, im], "a1": [re, im], "q": [[re, im], ...]}

nlohmann::json complex_to_json(const Complex& z);
Complex complex_from_json(const nlohmann::json& j, std::string_view what);

/// Accepts either form; the quotient form is expanded with from_quotients.
/// Throws InputError on malformed JSON, a zero coefficient (naming its index)
/// or degree < 2.
ComplexPoly parse_poly(std::string_view text);
ComplexPoly poly_from_json(const nlohmann::json& j);

/// Quotient form only.
QuotientSeq parse_quotients(std::string_view text);
QuotientSeq quotients_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const ComplexPoly& p);
nlohmann::json quotients_to_json(const QuotientSeq& s);

std::string serialize_poly(const ComplexPoly& p);
std::string serialize_quotients(const QuotientSeq& s);

}  // namespace qcert
