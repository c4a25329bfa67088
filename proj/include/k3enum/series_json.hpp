#ifndef K3ENUM_SERIES_JSON_HPP
#define K3ENUM_SERIES_JSON_HPP

#include <nlohmann/json.hpp>

#include "k3enum/rational.hpp"
#include "k3enum/series.hpp"

namespace k3enum {

/// [numerator, denominator] as decimal strings.
nlohmann::json rational_to_json(const Rational& x);
/// Accepts [num, den] string pairs, or a bare "a/b" string / JSON integer.
Rational rational_from_json(const nlohmann::json& j);

/// {"variable", "min_exponent", "truncation", "coefficients": [[num, den], ...]}
nlohmann::json series_to_json(const LaurentSeries& s);
/// Throws std::invalid_argument on malformed input.
LaurentSeries series_from_json(const nlohmann::json& j);

}  // namespace k3enum

#endif  // K3ENUM_SERIES_JSON_HPP
