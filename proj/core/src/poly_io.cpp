#include "qcert/poly_io.hpp"

#include <string>
#include <utility>
#include <vector>

#include "qcert/errors.hpp"

namespace qcert {
namespace {

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<Complex> complex_list(const nlohmann::json& j,
                                  std::string_view what) {
  if (!j.is_array()) {
    throw InputError(std::string(what) + " must be an array of [re, im] pairs");
  }
  std::vector<Complex> out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(
        complex_from_json(j[k], std::string(what) + "[" + std::to_string(k) + "]"));
  }
  return out;
}

}  // namespace

nlohmann::json complex_to_json(const Complex& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

Complex complex_from_json(const nlohmann::json& j, std::string_view what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw InputError(std::string(what) + " must be a [re, im] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw InputError("polynomial document must be a JSON object");
  }
  if (j.contains("coeffs")) {
    return ComplexPoly(complex_list(j.at("coeffs"), "coeffs"));
  }
  if (j.contains("q")) {
    return from_quotients(quotients_from_json(j));
  }
  throw InputError("polynomial document needs \"coeffs\" or \"a0\"/\"a1\"/\"q\"");
}

ComplexPoly parse_poly(std::string_view text) {
  return poly_from_json(parse_json(text));
}

QuotientSeq quotients_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("a0") || !j.contains("a1") ||
      !j.contains("q")) {
    throw InputError("quotient document needs \"a0\", \"a1\" and \"q\"");
  }
  QuotientSeq s{complex_from_json(j.at("a0"), "a0"),
                complex_from_json(j.at("a1"), "a1"),
                complex_list(j.at("q"), "q")};
  if (s.a0 == Complex{}) throw InputError("zero coefficient at index 0");
  if (s.a1 == Complex{}) throw InputError("zero coefficient at index 1");
  if (s.q.empty()) throw InputError("polynomial degree must be >= 2, got 1");
  for (std::size_t i = 0; i < s.q.size(); ++i) {
    if (s.q[i] == Complex{}) {
      throw InputError("zero quotient q_" + std::to_string(i + 2));
    }
  }
  return s;
}

QuotientSeq parse_quotients(std::string_view text) {
  return quotients_from_json(parse_json(text));
}

nlohmann::json poly_to_json(const ComplexPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& a : p.coeffs()) coeffs.push_back(complex_to_json(a));
  return {{"coeffs", std::move(coeffs)}};
}

nlohmann::json quotients_to_json(const QuotientSeq& s) {
  nlohmann::json q = nlohmann::json::array();
  for (const auto& v : s.q) q.push_back(complex_to_json(v));
  return {{"a0", complex_to_json(s.a0)},
          {"a1", complex_to_json(s.a1)},
          {"q", std::move(q)}};
}

std::string serialize_poly(const ComplexPoly& p) { return poly_to_json(p).dump(); }

std::string serialize_quotients(const QuotientSeq& s) {
  return quotients_to_json(s).dump();
}

}  // namespace qcert
