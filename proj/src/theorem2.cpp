#include <set>
#include <stdexcept>
#include <tuple>

#include "k3enum/cli.hpp"
#include "k3enum/series_json.hpp"

namespace k3enum {

Rational divisible_genus_zero(const BpsTable& r0, std::int64_t m, std::int64_t h) {
  if (m < 1) throw std::invalid_argument("window mismatch: divisibility m must be at least 1");
  if (h < 0 || h > r0.h_max()) {
    throw std::invalid_argument("window mismatch: h = " + std::to_string(h) + " outside the genus 0 row 0.." +
                                std::to_string(r0.h_max()));
  }
  if ((2 * h - 2) % (2 * m * m) != 0) return Rational(0);
  return r0(0, static_cast<int>(h));
}

std::map<std::vector<std::int64_t>, Rational> theorem2_assemble(const BpsTable& r0, const std::vector<NLInput>& nl) {
  std::map<std::vector<std::int64_t>, Rational> out;
  std::set<std::tuple<std::int64_t, std::int64_t, std::vector<std::int64_t>>> seen;
  for (const NLInput& e : nl) {
    if (!nl.empty() && e.d.size() != nl.front().d.size()) {
      throw std::invalid_argument("window mismatch: NL inputs have d vectors of different lengths");
    }
    if (!seen.emplace(e.m, e.h, e.d).second) throw std::invalid_argument("window mismatch: duplicated NL input");
    out[e.d] += divisible_genus_zero(r0, e.m, e.h) * e.value;
  }
  return out;
}

std::vector<NLInput> nl_inputs_from_json(const nlohmann::json& j) {
  try {
    std::vector<NLInput> out;
    for (const auto& e : j.at("entries")) {
      out.push_back({e.at("m").get<std::int64_t>(), e.at("h").get<std::int64_t>(),
                     e.at("d").get<std::vector<std::int64_t>>(), rational_from_json(e.at("value"))});
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed NL input JSON: ") + e.what());
  }
}

nlohmann::json nl_inputs_to_json(const std::vector<NLInput>& nl) {
  nlohmann::json entries = nlohmann::json::array();
  for (const NLInput& e : nl) {
    entries.push_back({{"m", e.m}, {"h", e.h}, {"d", e.d}, {"value", e.value.to_string()}});
  }
  return {{"entries", std::move(entries)}};
}

}  // namespace k3enum
