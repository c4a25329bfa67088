#include "k3enum/series_json.hpp"

#include <stdexcept>
#include <string>

namespace k3enum {

using nlohmann::json;

json rational_to_json(const Rational& x) {
  return json::array({x.numerator().get_str(), x.denominator().get_str()});
}

Rational rational_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
      throw std::invalid_argument("rational must be [num_string, den_string]");
    }
    const Rational num = Rational::parse(j[0].get<std::string>());
    const Rational den = Rational::parse(j[1].get<std::string>());
    if (!num.is_integer() || !den.is_integer()) throw std::invalid_argument("rational parts must be integers");
    if (den.sign() <= 0) throw std::invalid_argument("rational denominator must be positive");
    return num / den;
  }
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("cannot read a rational from " + j.dump());
}

json series_to_json(const LaurentSeries& s) {
  json coefficients = json::array();
  for (const auto& c : s.coefficients()) coefficients.push_back(rational_to_json(c));
  return json{{"variable", s.variable()},
              {"min_exponent", s.min_exponent()},
              {"truncation", s.truncation()},
              {"coefficients", std::move(coefficients)}};
}

LaurentSeries series_from_json(const json& j) {
  try {
    if (!j.is_object()) throw std::invalid_argument("series JSON must be an object");
    const auto& coefficients = j.at("coefficients");
    if (!coefficients.is_array()) throw std::invalid_argument("coefficients must be an array");
    std::vector<Rational> values;
    values.reserve(coefficients.size());
    for (const auto& c : coefficients) values.push_back(rational_from_json(c));
    return LaurentSeries(j.at("variable").get<std::string>(), j.at("min_exponent").get<int>(),
                         j.at("truncation").get<int>(), std::move(values));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed series JSON: ") + e.what());
  }
}

}  // namespace k3enum
