#include "k3enum/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "k3enum/lattice.hpp"
#include "k3enum/modforms.hpp"
#include "k3enum/series_json.hpp"
#include "k3enum/table_io.hpp"

namespace k3enum {

using nlohmann::json;

OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "tsv") return OutputFormat::tsv;
  if (name == "human") return OutputFormat::human;
  throw std::invalid_argument("unknown output format '" + name + "' (expected json, tsv or human)");
}

void Config::validate() const {
  if (q_trunc < 0 || g_max < 0 || h_max < 0 || harvey_moore_order < 0) {
    throw std::invalid_argument("configuration bounds must be nonnegative");
  }
}

Config Config::from_environment() {
  Config c;
  if (const char* raw = std::getenv("K3ENUM_QTRUNC")) {
    const std::string text(raw);
    int value = -1;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size() || value < 0) {
      throw std::invalid_argument("K3ENUM_QTRUNC must be a nonnegative integer, got '" + text + "'");
    }
    c.q_trunc = value;
  }
  return c;
}

json report_to_json(const VerificationReport& r) {
  json j{{"name", r.name}, {"pass", r.pass}};
  if (!r.pass) {
    j["location"] = r.location;
    j["expected"] = r.expected;
    j["actual"] = r.actual;
  }
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// First exponent below both truncations where the series differ.
VerificationReport compare_series(std::string name, const LaurentSeries& expected, const LaurentSeries& actual) {
  VerificationReport r{std::move(name), true, {}, {}, {}, 0};
  const int lo = std::min(expected.min_exponent(), actual.min_exponent());
  const int hi = std::min(expected.truncation(), actual.truncation());
  for (int n = lo; n < hi; ++n) {
    if (expected[n] != actual[n]) {
      r.pass = false;
      r.location = {n};
      r.expected = expected[n].to_string();
      r.actual = actual[n].to_string();
      break;
    }
  }
  return r;
}

}  // namespace

VerificationReport verify_gwpt(int h_max) {
  const auto start = Clock::now();
  const CorrespondenceReport c = gw_pairs_check(h_max);
  VerificationReport r{"gwpt", c.pass, {}, {}, {}, 0};
  if (!c.pass) {
    const std::size_t len = std::max(c.gw_side.size(), c.pairs_side.size());
    for (std::size_t g = 0; g < len; ++g) {
      const Rational gw = g < c.gw_side.size() ? c.gw_side[g] : Rational(0);
      const Rational pt = g < c.pairs_side.size() ? c.pairs_side[g] : Rational(0);
      if (gw != pt) {
        r.location = {*c.first_mismatch, static_cast<int>(g)};
        r.expected = pt.to_string();
        r.actual = gw.to_string();
        break;
      }
    }
    if (r.location.empty()) r.location = {*c.first_mismatch};
  }
  r.runtime_seconds = seconds_since(start);
  return r;
}

VerificationReport verify_harvey_moore(int order) {
  const auto start = Clock::now();
  const HarveyMooreReport h = harvey_moore_check(order);
  VerificationReport r{"harvey-moore", h.pass, {}, {}, {}, 0};
  if (h.first_discrepancy) {
    r.location = {h.first_discrepancy->q1_exponent, h.first_discrepancy->q2_exponent};
    r.expected = h.first_discrepancy->lhs.to_string();
    r.actual = h.first_discrepancy->rhs.to_string();
  }
  r.runtime_seconds = seconds_since(start);
  return r;
}

std::vector<VerificationReport> verify_modforms(int order) {
  const auto start = Clock::now();
  const auto e2 = eisenstein(2, order).series;
  const auto e4 = eisenstein(4, order).series;
  const auto e6 = eisenstein(6, order).series;
  std::vector<VerificationReport> out;
  out.push_back(compare_series("e4^3-e6^2=1728delta", delta_series(order).scaled(Rational(1728)),
                               pow(e4, 3) - pow(e6, 2)));
  out.push_back(compare_series("ramanujan-e2", (e2 * e2 - e4).scaled(Rational(Integer(1), Integer(12))), q_derivative(e2)));
  out.push_back(compare_series("ramanujan-e4", (e2 * e4 - e6).scaled(Rational(Integer(1), Integer(3))), q_derivative(e4)));
  out.push_back(compare_series("ramanujan-e6", (e2 * e6 - e4 * e4).scaled(Rational(Integer(1), Integer(2))), q_derivative(e6)));
  const double t = seconds_since(start);
  for (auto& r : out) r.runtime_seconds = t / static_cast<double>(out.size());
  return out;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

/// JSON if the first non-blank character opens an object, TSV otherwise.
BpsTable read_bps_table(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return bps_table_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
    }
  }
  return bps_table_from_tsv(text);
}

IntVector to_int_vector(const std::vector<std::int64_t>& v) {
  IntVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

std::vector<std::int64_t> to_std(const IntVector& v) { return std::vector<std::int64_t>(v.data(), v.data() + v.size()); }

/// Preset name, "<n>" for a rank one lattice, a JSON file, or a '+'-joined
/// direct sum of these.
GramLattice resolve_lattice(const std::string& spec) {
  const auto plus = spec.find('+');
  if (plus != std::string::npos) return direct_sum(resolve_lattice(spec.substr(0, plus)), resolve_lattice(spec.substr(plus + 1)));
  if (spec == "U") return make_U();
  if (spec == "E8neg") return make_E8neg();
  if (spec == "K3") return make_K3();
  if (spec.size() > 2 && spec.front() == '<' && spec.back() == '>') {
    std::int64_t value = 0;
    const char* b = spec.data() + 1;
    const char* e = spec.data() + spec.size() - 1;
    const auto [end, ec] = std::from_chars(b, e, value);
    if (ec != std::errc() || end != e) throw std::invalid_argument("malformed rank one lattice '" + spec + "'");
    return make_rank_one(value);
  }
  return lattice_from_json(read_json_file(spec));
}

void emit_series(std::ostream& out, const LaurentSeries& s, OutputFormat f) {
  if (f == OutputFormat::json) {
    out << series_to_json(s).dump(2) << '\n';
    return;
  }
  out << "n\tcoefficient\n";
  for (int n = s.min_exponent(); n < s.stored_end(); ++n) out << n << '\t' << s[n] << '\n';
  out << "# known below " << s.variable() << '^' << s.truncation() << '\n';
}

std::string generic_tsv(const GenusTable& t, const char* corner) {
  std::ostringstream out;
  out << corner;
  for (int c = t.first_column(); c <= t.last_column(); ++c) out << '\t' << c;
  out << '\n';
  for (int g = 0; g <= t.g_max(); ++g) {
    out << g;
    for (int c = t.first_column(); c <= t.last_column(); ++c) out << '\t' << t(g, c);
    out << '\n';
  }
  return out.str();
}

template <typename Table>
void emit_table(std::ostream& out, const Table& t, OutputFormat f) {
  if (f == OutputFormat::json) {
    out << table_to_json(t).dump(2) << '\n';
  } else if constexpr (std::is_same_v<Table, BpsTable>) {
    out << table_to_tsv(t);
  } else {
    out << generic_tsv(t, "g\\k");
  }
}

void emit_reports(std::ostream& out, std::ostream& err, const std::vector<VerificationReport>& reports, OutputFormat f) {
  if (f == OutputFormat::json) {
    json j = json::array();
    for (const auto& r : reports) j.push_back(report_to_json(r));
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << (r.pass ? "PASS" : "FAIL") << '\t' << r.name;
      if (!r.pass) {
        out << "\tat";
        for (std::size_t i = 0; i < r.location.size(); ++i) out << (i ? "," : " ") << r.location[i];
        out << "\texpected " << r.expected << "\tgot " << r.actual;
      }
      out << '\n';
    }
  }
  for (const auto& r : reports) err << r.name << ": " << r.runtime_seconds << " s\n";
}

int exit_code(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; }) ? 0 : 1;
}

json nl_datum_json(const NLDatum& n) {
  return json{{"h", n.h},
              {"d", to_std(n.d)},
              {"bordered", int_matrix_to_json(n.bordered)},
              {"discriminant", n.discriminant.get_str()},
              {"coset", n.coset}};
}

json borcherds_json(const BorcherdsIndex& b) {
  return json{{"coset", b.coset},
              {"discriminant", b.discriminant.get_str()},
              {"lattice_discriminant", b.lattice_discriminant.get_str()},
              {"exponent", b.exponent.to_string()},
              {"weight", b.weight.to_string()},
              {"hodge_bundle", b.hodge_bundle},
              {"vanishes", b.vanishes}};
}

LaurentSeries e4e6(int q_trunc) { return eisenstein(4, q_trunc).series * eisenstein(6, q_trunc).series; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Config& config) {
  CLI::App app{"Exact curve counts on K3 surfaces and K3-fibered threefolds", "k3enum"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name;
  app.add_option("--format", format_name, "Output format: json, tsv or human");

  // Each leaf registers the action to run once parsing succeeded.
  std::vector<std::pair<CLI::App*, std::function<int(OutputFormat)>>> actions;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& description) {
    CLI::App* sub = parent->add_subcommand(name, description);
    return sub;
  };
  auto format_flags = [](CLI::App* sub, bool& tsv, bool& as_json) {
    sub->add_flag("--tsv", tsv, "Emit TSV");
    sub->add_flag("--json", as_json, "Emit JSON");
  };

  int order = config.q_trunc;
  int weight = 0;
  int genus = 0;
  int g_max = config.g_max;
  int h_max = config.h_max;
  int n_max = 20;
  int hm_order = config.harvey_moore_order;
  std::int64_t h = 0;
  std::int64_t m = 0;
  std::vector<std::int64_t> d;
  std::string input, lattice_spec = "U", preset, file, overlattice_file, phi = "e4e6", scale, r0_file, nl_file;
  bool tsv = false, as_json = false;

  auto nonneg = CLI::NonNegativeNumber;

  // modform
  CLI::App* modform = app.add_subcommand("modform", "Modular form q-expansions");
  modform->require_subcommand(1);
  {
    auto* s = leaf(modform, "eisenstein", "Normalized Eisenstein series E_k");
    s->add_option("--weight", weight, "Even weight k >= 2")->required();
    s->add_option("--order", order, "Truncation order")->check(nonneg);
    format_flags(s, tsv, as_json);
    actions.emplace_back(s, [&](OutputFormat f) {
      emit_series(out, eisenstein(weight, order).series, f);
      return 0;
    });
    s = leaf(modform, "j", "Klein j with constant term 744");
    s->add_option("--order", order, "Truncation order")->check(nonneg);
    format_flags(s, tsv, as_json);
    actions.emplace_back(s, [&](OutputFormat f) {
      emit_series(out, j_series(order + 1).shifted(-1), f);
      return 0;
    });
    s = leaf(modform, "delta", "Discriminant form Delta");
    s->add_option("--order", order, "Truncation order")->check(nonneg);
    format_flags(s, tsv, as_json);
    actions.emplace_back(s, [&](OutputFormat f) {
      emit_series(out, delta_series(order), f);
      return 0;
    });
    s = leaf(modform, "f", "E4 E6 / Delta");
    s->add_option("--order", order, "Truncation order")->check(nonneg);
    format_flags(s, tsv, as_json);
    actions.emplace_back(s, [&](OutputFormat f) {
      emit_series(out, f_series(order), f);
      return 0;
    });
    s = leaf(modform, "harvey-moore", "Check the cleared Harvey-Moore identity");
    s->add_option("--order", hm_order, "Bidegree bound")->check(nonneg);
    format_flags(s, tsv, as_json);
    actions.emplace_back(s, [&](OutputFormat f) {
      const std::vector<VerificationReport> r{verify_harvey_moore(hm_order)};
      emit_reports(out, err, r, f);
      return exit_code(r);
    });
  }

  // count
  CLI::App* count = app.add_subcommand("count", "Curve counts");
  count->require_subcommand(1);
  {
    auto* s = leaf(count, "yz", "Genus 0 counts r_{0,h}");
    s->add_option("--hmax", h_max, "Largest h")->check(nonneg);
    format_flags(s, tsv, as_json);
    actions.emplace_back(s, [&](OutputFormat f) {
      emit_table(out, yau_zaslow(h_max), f);
      return 0;
    });
    s = leaf(count, "kkv", "BPS table r_{g,h}");
    s->add_option("--gmax", g_max, "Largest genus")->check(nonneg);
    s->add_option("--hmax", h_max, "Largest h")->check(nonneg);
    format_flags(s, tsv, as_json);
    actions.emplace_back(s, [&](OutputFormat f) {
      emit_table(out, kkv_table(g_max, h_max), f);
      return 0;
    });
    s = leaf(count, "bl", "Point-insertion potential F_{g,1}");
    s->add_option("--genus", genus, "Genus")->required()->check(nonneg);
    s->add_option("--order", order, "Truncation order")->check(nonneg);
    format_flags(s, tsv, as_json);
    actions.emplace_back(s, [&](OutputFormat f) {
      emit_series(out, bryan_leung(genus, order), f);
      return 0;
    });
    s = leaf(count, "ky", "Euler characteristics e(P_n(S,h))");
    s->add_option("--hmax", h_max, "Largest h")->check(nonneg);
    s->add_option("--nmax", n_max, "Largest n")->check(CLI::PositiveNumber);
    format_flags(s, tsv, as_json);
    actions.emplace_back(s, [&](OutputFormat f) {
      const PairsEulerTable t = kawai_yoshioka(h_max, n_max);
      if (f == OutputFormat::json) out << pairs_table_to_json(t).dump(2) << '\n';
      else out << pairs_table_to_tsv(t);
      return 0;
    });
    s = leaf(count, "gwpt", "Gromov-Witten/pairs correspondence check");
    s->add_option("--hmax", h_max, "Largest h")->check(nonneg);
    s->add_option("--input", input, "BPS table (JSON or TSV) to check instead of the computed one");
    format_flags(s, tsv, as_json);
    actions.emplace_back(s, [&](OutputFormat f) {
      std::vector<VerificationReport> r;
      if (input.empty()) {
        r.push_back(verify_gwpt(h_max));
      } else {
        const CorrespondenceReport c = gw_pairs_check(read_bps_table(input));
        VerificationReport v{"gwpt", c.pass, {}, {}, {}, 0};
        if (!c.pass) {
          v.location = {*c.first_mismatch};
          std::ostringstream gw, pt;
          for (const auto& x : c.gw_side) gw << x << ' ';
          for (const auto& x : c.pairs_side) pt << x << ' ';
          v.expected = pt.str();
          v.actual = gw.str();
        }
        r.push_back(v);
      }
      emit_reports(out, err, r, f);
      return exit_code(r);
    });
    s = leaf(count, "gv-invert", "BPS counts from a Gromov-Witten potential table");
    s->add_option("--input", input, "Potential table JSON")->required();
    format_flags(s, tsv, as_json);
    actions.emplace_back(s, [&](OutputFormat f) {
      emit_table(out, gv_invert(gw_table_from_json(read_json_file(input))), f);
      return 0;
    });
    s = leaf(count, "gv-forward", "Gromov-Witten potential table from BPS counts");
    s->add_option("--input", input, "Divisible BPS table JSON")->required();
    format_flags(s, tsv, as_json);
    actions.emplace_back(s, [&](OutputFormat f) {
      emit_table(out, gv_forward(divisible_table_from_json(read_json_file(input))), f);
      return 0;
    });
  }

  // nl
  CLI::App* nl = app.add_subcommand("nl", "Lattices and Noether-Lefschetz data");
  nl->require_subcommand(1);
  {
    auto add_hd = [&](CLI::App* s) {
      s->add_option("--h", h, "h with <beta, beta> = 2h - 2")->required();
      s->add_option("--d", d, "Comma-separated d_i = <beta, v_i>")->required()->delimiter(',');
    };
    auto* s = leaf(nl, "gram", "Lattice invariants");
    auto* group = s->add_option_group("source");
    group->add_option("--preset", preset, "U, E8neg or K3")->check(CLI::IsMember({"U", "E8neg", "K3"}));
    group->add_option("--file", file, "Gram JSON file");
    group->require_option(1);
    actions.emplace_back(s, [&](OutputFormat) {
      const GramLattice l = preset.empty() ? lattice_from_json(read_json_file(file)) : resolve_lattice(preset);
      const DiscriminantGroup g(l);
      json j = lattice_to_json(l);
      j["determinant"] = l.determinant().get_str();
      j["signature"] = {l.signature().positive, l.signature().negative};
      j["discriminant_group"] = {{"factor_orders", g.factor_orders()}, {"order", g.order().get_str()}};
      if (l.is_hyperbolic()) j["discriminant"] = discriminant(l).get_str();
      out << j.dump(2) << '\n';
      return 0;
    });
    s = leaf(nl, "delta", "Bordered lattice and discriminant Delta(h, d)");
    s->add_option("--lattice", lattice_spec, "Preset, <n>, JSON file or a '+'-joined sum");
    add_hd(s);
    actions.emplace_back(s, [&](OutputFormat) {
      out << nl_datum_json(extend_gram(resolve_lattice(lattice_spec), h, to_int_vector(d))).dump(2) << '\n';
      return 0;
    });
    s = leaf(nl, "mult", "Multiplicity of a Noether-Lefschetz divisor");
    s->add_option("--overlattice", overlattice_file, "Overlattice JSON")->required();
    s->add_option("--m", m, "Count only classes of divisibility m")->check(CLI::PositiveNumber);
    add_hd(s);
    actions.emplace_back(s, [&](OutputFormat) {
      const OverlatticeDatum o = overlattice_from_json(read_json_file(overlattice_file));
      const IntVector dv = to_int_vector(d);
      json reps = json::array();
      for (const auto& beta : nl_representations(o, h, dv)) reps.push_back(to_std(beta));
      json j{{"multiplicity", reps.size()}, {"representations", std::move(reps)}};
      if (m > 0) j["refined"] = {{"m", m}, {"multiplicity", refined_multiplicity(o, m, h, dv)}};
      out << j.dump(2) << '\n';
      return 0;
    });
    s = leaf(nl, "overlattices", "Even overlattices of the bordered lattice");
    s->add_option("--lattice", lattice_spec, "Preset, <n>, JSON file or a '+'-joined sum");
    add_hd(s);
    actions.emplace_back(s, [&](OutputFormat) {
      json j = json::array();
      for (const auto& o : overlattices(extend_gram(resolve_lattice(lattice_spec), h, to_int_vector(d)))) {
        j.push_back(overlattice_to_json(o));
      }
      out << j.dump(2) << '\n';
      return 0;
    });
    s = leaf(nl, "borcherds", "Component, weight and exponent of the Noether-Lefschetz form");
    s->add_option("--lattice", lattice_spec, "Preset, <n>, JSON file or a '+'-joined sum");
    add_hd(s);
    actions.emplace_back(s, [&](OutputFormat) {
      out << borcherds_json(borcherds_index(resolve_lattice(lattice_spec), h, to_int_vector(d))).dump(2) << '\n';
      return 0;
    });
    s = leaf(nl, "lookup", "Noether-Lefschetz number read off c E4 E6");
    s->add_option("--phi", phi, "Modular form")->check(CLI::IsMember({"e4e6"}));
    s->add_option("--scale", scale, "Constant c (defaults to the configured scale)");
    s->add_option("--lattice", lattice_spec, "Preset, <n>, JSON file or a '+'-joined sum");
    add_hd(s);
    actions.emplace_back(s, [&](OutputFormat) {
      Rational c;
      if (!scale.empty()) c = Rational::parse(scale);
      else if (config.stu_nl_scale) c = *config.stu_nl_scale;
      else throw std::invalid_argument("no scale given: pass --scale (no default constant is assumed)");
      const GramLattice base = resolve_lattice(lattice_spec);
      const IntVector dv = to_int_vector(d);
      const BorcherdsIndex b = borcherds_index(base, h, dv);
      const Integer need = b.exponent.numerator() / b.exponent.denominator() + 2;
      const int trunc = std::max<long>(config.q_trunc, need.fits_slong_p() ? need.get_si() : 0);
      const Rational value = nl_lookup(e4e6(trunc).scaled(c), base, h, dv);
      out << json{{"value", value.to_string()}, {"exponent", b.exponent.to_string()},
                  {"discriminant", b.discriminant.get_str()}}.dump(2)
          << '\n';
      return 0;
    });
  }

  // verify
  CLI::App* verify = app.add_subcommand("verify", "Consistency checks");
  verify->require_subcommand(1);
  {
    auto* s = leaf(verify, "gwpt", "Gromov-Witten/pairs correspondence");
    s->add_option("--hmax", h_max, "Largest h")->check(nonneg);
    format_flags(s, tsv, as_json);
    actions.emplace_back(s, [&](OutputFormat f) {
      const std::vector<VerificationReport> r{verify_gwpt(h_max)};
      emit_reports(out, err, r, f);
      return exit_code(r);
    });
    s = leaf(verify, "harvey-moore", "Harvey-Moore identity");
    s->add_option("--order", hm_order, "Bidegree bound")->check(nonneg);
    format_flags(s, tsv, as_json);
    actions.emplace_back(s, [&](OutputFormat f) {
      const std::vector<VerificationReport> r{verify_harvey_moore(hm_order)};
      emit_reports(out, err, r, f);
      return exit_code(r);
    });
    s = leaf(verify, "modforms", "Eisenstein identities");
    s->add_option("--order", order, "Truncation order")->check(nonneg);
    format_flags(s, tsv, as_json);
    actions.emplace_back(s, [&](OutputFormat f) {
      const auto r = verify_modforms(order);
      emit_reports(out, err, r, f);
      return exit_code(r);
    });
    s = leaf(verify, "all", "All checks");
    s->add_option("--hmax", h_max, "Largest h for the correspondence")->check(nonneg);
    s->add_option("--order", order, "Truncation order for the Eisenstein identities")->check(nonneg);
    s->add_option("--hm-order", hm_order, "Bidegree bound for Harvey-Moore")->check(nonneg);
    format_flags(s, tsv, as_json);
    actions.emplace_back(s, [&](OutputFormat f) {
      std::vector<VerificationReport> r{verify_gwpt(h_max), verify_harvey_moore(hm_order)};
      for (auto& x : verify_modforms(order)) r.push_back(std::move(x));
      emit_reports(out, err, r, f);
      return exit_code(r);
    });
  }

  // theorem2
  {
    auto* s = app.add_subcommand("theorem2", "Assemble sum_h sum_m r_{0,m,h} NL_{m,h,(d)}");
    s->add_option("--r0", r0_file, "BPS table (JSON or TSV); its genus 0 row is used")->required();
    s->add_option("--nl", nl_file, "NL input JSON")->required();
    actions.emplace_back(s, [&](OutputFormat) {
      const auto sums = theorem2_assemble(read_bps_table(r0_file), nl_inputs_from_json(read_json_file(nl_file)));
      json results = json::array();
      for (const auto& [key, value] : sums) results.push_back({{"d", key}, {"value", value.to_string()}});
      out << json{{"results", std::move(results)}}.dump(2) << '\n';
      return 0;
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    OutputFormat f = format_name.empty() ? config.format : parse_output_format(format_name);
    if (tsv && as_json) throw std::invalid_argument("--tsv and --json are exclusive");
    if (tsv) f = OutputFormat::tsv;
    if (as_json) f = OutputFormat::json;
    for (auto& [sub, action] : actions) {
      if (sub->parsed()) return action(f);
    }
    err << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace k3enum
