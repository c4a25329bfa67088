#ifndef K3ENUM_CLI_HPP
#define K3ENUM_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "k3enum/curvecounts.hpp"
#include "k3enum/rational.hpp"

namespace k3enum {

enum class OutputFormat { json, tsv, human };

/// Parses "json", "tsv" or "human"; throws std::invalid_argument otherwise.
OutputFormat parse_output_format(const std::string& name);

struct Config {
  int q_trunc = 30;
  int g_max = 12;
  int h_max = 12;
  int harvey_moore_order = 12;
  /// Constant c in phi = c E4 E6. No value is assumed.
  std::optional<Rational> stu_nl_scale;
  OutputFormat format = OutputFormat::json;

  /// Throws std::invalid_argument if a bound is negative.
  void validate() const;

  /// Defaults, with q_trunc taken from K3ENUM_QTRUNC when set. Throws
  /// std::invalid_argument if the variable is not a nonnegative integer.
  static Config from_environment();
};

struct VerificationReport {
  std::string name;
  bool pass = false;
  /// First failing location (indices); empty when pass.
  std::vector<int> location;
  std::string expected;
  std::string actual;
  double runtime_seconds = 0;
};

/// Runtime is left out so that output is reproducible.
nlohmann::json report_to_json(const VerificationReport& r);

VerificationReport verify_gwpt(int h_max);
VerificationReport verify_harvey_moore(int order);
/// E4^3 - E6^2 = 1728 Delta and the three derivative identities for E2, E4, E6.
std::vector<VerificationReport> verify_modforms(int order);

/// NL_{m,h,(d)} for a finite set of (m, h, d).
struct NLInput {
  std::int64_t m = 1;
  std::int64_t h = 0;
  std::vector<std::int64_t> d;
  Rational value;
};

/// r_{0,m,h}: r_{0,h} when a class of divisibility m and square 2h - 2
/// exists, i.e. 2 m^2 divides 2h - 2, else 0. Throws std::invalid_argument
/// for h outside the genus 0 row or m < 1.
Rational divisible_genus_zero(const BpsTable& r0, std::int64_t m, std::int64_t h);

/// sum_h sum_m r_{0,m,h} NL_{m,h,(d)} for every d appearing in nl. Throws
/// std::invalid_argument on a window mismatch: h outside r0, m < 1, a
/// duplicated (m, h, d), or d vectors of different lengths.
std::map<std::vector<std::int64_t>, Rational> theorem2_assemble(const BpsTable& r0, const std::vector<NLInput>& nl);

/// {"entries": [{"m", "h", "d": [...], "value": "a/b"}, ...]}
std::vector<NLInput> nl_inputs_from_json(const nlohmann::json& j);
nlohmann::json nl_inputs_to_json(const std::vector<NLInput>& nl);

/// Runs one command line (without the program name). Returns 0 on success
/// or a passing check, 1 on a failing check or internal error, 2 on invalid
/// input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Config& config);

}  // namespace k3enum

#endif  // K3ENUM_CLI_HPP
