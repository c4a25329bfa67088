#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "k3enum/cli.hpp"
#include "k3enum/lattice.hpp"
#include "k3enum/modforms.hpp"
#include "k3enum/series_json.hpp"
#include "k3enum/table_io.hpp"
#include "oracles.hpp"

namespace k3enum {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args, const Config& config = Config{}) {
  std::ostringstream out, err;
  const int code = run(args, out, err, config);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto* info = testing::UnitTest::GetInstance()->current_test_info();
  const auto dir = std::filesystem::temp_directory_path() / "k3enum_cli_test";
  std::filesystem::create_directories(dir);
  return dir / (std::string(info->test_suite_name()) + "_" + info->name() + "_" + name);
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch(name);
  std::ofstream(path) << text;
  return path.string();
}

TEST(CliTest, KkvTsvReproducesPrintedTable) {
  const auto r = invoke({"count", "kkv", "--gmax", "4", "--hmax", "4", "--tsv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "g\\h\t0\t1\t2\t3\t4\n"
            "0\t1\t24\t324\t3200\t25650\n"
            "1\t\t-2\t-54\t-800\t-8550\n"
            "2\t\t\t3\t88\t1401\n"
            "3\t\t\t\t-4\t-126\n"
            "4\t\t\t\t\t5\n");
}

TEST(CliTest, InvalidInputExitsTwo) {
  EXPECT_EQ(invoke({"count", "yz", "--hmax", "-1"}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({"count", "bogus"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"count", "bl", "--order", "5"}).code, 2);
  EXPECT_EQ(invoke({"modform", "eisenstein", "--weight", "3"}).code, 2);
  EXPECT_EQ(invoke({"count", "gv-invert", "--input", scratch("missing.json").string()}).code, 2);
  EXPECT_EQ(invoke({"count", "gv-invert", "--input", write_file("bad.json", "{not json")}).code, 2);
  EXPECT_EQ(invoke({"--format", "xml", "count", "yz"}).code, 2);
  EXPECT_EQ(invoke({"count", "kkv", "--tsv", "--json"}).code, 2);
  const auto r = invoke({"frobnicate"});
  EXPECT_NE(r.err.find("Subcommands:"), std::string::npos);
}

TEST(CliTest, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(CliTest, OutputIsDeterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"count", "kkv", "--gmax", "5", "--hmax", "6"},
      {"count", "ky", "--hmax", "3", "--nmax", "6"},
      {"modform", "f", "--order", "8"},
      {"verify", "all", "--hmax", "6", "--order", "20", "--hm-order", "5"},
      {"nl", "overlattices", "--lattice", "<2>", "--h", "-2", "--d", "2"},
  };
  for (const auto& c : commands) {
    const auto a = invoke(c);
    const auto b = invoke(c);
    EXPECT_EQ(a.code, 0) << c[1];
    EXPECT_EQ(a.out, b.out) << c[1];
  }
}

TEST(CliTest, TablesRoundTrip) {
  const BpsTable kkv = kkv_table(7, 7);
  const auto tsv = invoke({"count", "kkv", "--gmax", "7", "--hmax", "7", "--tsv"});
  EXPECT_EQ(bps_table_from_tsv(tsv.out), kkv);
  const auto js = invoke({"count", "kkv", "--gmax", "7", "--hmax", "7", "--json"});
  EXPECT_EQ(bps_table_from_json(nlohmann::json::parse(js.out)), kkv);
  const auto yz = invoke({"count", "yz", "--hmax", "9"});
  EXPECT_EQ(bps_table_from_json(nlohmann::json::parse(yz.out)), yau_zaslow(9));

  const auto ky = invoke({"count", "ky", "--hmax", "3", "--nmax", "5"});
  const PairsEulerTable parsed = pairs_table_from_json(nlohmann::json::parse(ky.out));
  const PairsEulerTable direct = kawai_yoshioka(3, 5);
  for (int h = 0; h <= 3; ++h) {
    for (int n = 1 - h; n <= 5; ++n) EXPECT_EQ(parsed.at(n, h), direct.at(n, h));
  }
}

TEST(CliTest, RationalTablesRoundTripThroughFiles) {
  DivisibleBpsTable bps(2, 3);
  bps(0, 1) = Rational(1);
  bps(1, 2) = Rational(-3);
  bps(2, 3) = Rational(Integer(5), Integer(7));
  const GwPotentialTable gw = gv_forward(bps);
  const auto fwd = invoke({"count", "gv-forward", "--input", write_file("bps.json", table_to_json(bps).dump())});
  ASSERT_EQ(fwd.code, 0) << fwd.err;
  EXPECT_EQ(gw_table_from_json(nlohmann::json::parse(fwd.out)), gw);
  const auto inv = invoke({"count", "gv-invert", "--input", write_file("gw.json", fwd.out)});
  ASSERT_EQ(inv.code, 0) << inv.err;
  EXPECT_EQ(divisible_table_from_json(nlohmann::json::parse(inv.out)), bps);
  EXPECT_THROW(gw_table_from_json(table_to_json(bps)), std::invalid_argument);
}

TEST(CliTest, SeriesRoundTrip) {
  const auto j = invoke({"modform", "j", "--order", "6"});
  const LaurentSeries parsed = series_from_json(nlohmann::json::parse(j.out));
  EXPECT_EQ(parsed.min_exponent(), -1);
  EXPECT_EQ(parsed[-1], Rational(1));
  EXPECT_EQ(parsed[0], Rational(744));
  EXPECT_EQ(parsed[1], Rational(196884));
  const auto e = invoke({"modform", "eisenstein", "--weight", "4", "--order", "10"});
  EXPECT_EQ(series_from_json(nlohmann::json::parse(e.out)), eisenstein(4, 10).series);
  const auto bl = invoke({"count", "bl", "--genus", "1", "--order", "8"});
  EXPECT_EQ(series_from_json(nlohmann::json::parse(bl.out)), bryan_leung(1, 8));
}

TEST(CliTest, LatticeFilesRoundTrip) {
  const GramLattice k3 = make_K3();
  EXPECT_EQ(lattice_from_json(lattice_to_json(k3)), k3);
  const auto g = invoke({"nl", "gram", "--file", write_file("u.json", lattice_to_json(make_U()).dump())});
  ASSERT_EQ(g.code, 0);
  const auto j = nlohmann::json::parse(g.out);
  EXPECT_EQ(j.at("determinant"), "-1");
  EXPECT_EQ(j.at("discriminant_group").at("order"), "1");
  const auto preset = invoke({"nl", "gram", "--preset", "K3"});
  EXPECT_EQ(nlohmann::json::parse(preset.out).at("rank"), 22);
  EXPECT_EQ(invoke({"nl", "gram"}).code, 2);
  EXPECT_EQ(invoke({"nl", "gram", "--file", write_file("odd.json", R"({"gram": [[1]]})")}).code, 2);

  for (const auto& o : overlattices(extend_gram(make_rank_one(2), -2, IntVector::Constant(1, 2)))) {
    const OverlatticeDatum back = overlattice_from_json(overlattice_to_json(o));
    EXPECT_EQ(back.gram, o.gram);
    EXPECT_EQ(back.embedding, o.embedding);
    EXPECT_EQ(back.discriminant, o.discriminant);
  }
}

TEST(CliTest, MultiplicityFromOverlatticeFile) {
  IntMatrix base(1, 1);
  base << 2;
  IntMatrix gram(2, 2);
  gram << 2, 0, 0, -2;
  IntMatrix embedding(2, 1);
  embedding << 1, 0;
  const auto o = make_overlattice(GramLattice(base), gram, embedding);
  const std::string path = write_file("o.json", overlattice_to_json(o).dump());
  const auto r = invoke({"nl", "mult", "--overlattice", path, "--h", "1", "--d", "2", "--m", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("multiplicity"), 2);
  EXPECT_EQ(j.at("refined").at("multiplicity"), 2);
}

TEST(CliTest, VerificationExitCodes) {
  EXPECT_EQ(invoke({"verify", "all", "--hmax", "10"}).code, 0);
  EXPECT_EQ(invoke({"verify", "gwpt", "--hmax", "8"}).code, 0);
  EXPECT_EQ(invoke({"modform", "harvey-moore", "--order", "6"}).code, 0);
  EXPECT_EQ(invoke({"verify", "modforms", "--order", "40"}).code, 0);

  BpsTable table = kkv_table(6, 6);
  EXPECT_EQ(invoke({"count", "gwpt", "--input", write_file("good.tsv", table_to_tsv(table))}).code, 0);
  table(2, 5) += Rational(1);
  const auto bad = invoke({"count", "gwpt", "--input", write_file("bad.json", table_to_json(table).dump())});
  EXPECT_EQ(bad.code, 1);
  const auto report = nlohmann::json::parse(bad.out);
  EXPECT_FALSE(report.at(0).at("pass").get<bool>());
  EXPECT_EQ(report.at(0).at("location").at(0), 5);
}

TEST(CliTest, HumanReportFormat) {
  const auto r = invoke({"--format", "human", "verify", "gwpt", "--hmax", "3"});
  EXPECT_EQ(r.out, "PASS\tgwpt\n");
}

TEST(CliTest, LookupNeedsAScale) {
  const auto r = invoke({"nl", "lookup", "--phi", "e4e6", "--scale", "1", "--h", "0", "--d", "0,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out).at("value"), "-264");
  EXPECT_EQ(invoke({"nl", "lookup", "--h", "0", "--d", "0,0"}).code, 2);
  Config c;
  c.stu_nl_scale = Rational(-2);
  const auto scaled = invoke({"nl", "lookup", "--h", "0", "--d", "0,0"}, c);
  EXPECT_EQ(nlohmann::json::parse(scaled.out).at("value"), "528");
  const auto negative = invoke({"nl", "lookup", "--scale", "3/2", "--h", "5", "--d", "0,0"});
  EXPECT_EQ(nlohmann::json::parse(negative.out).at("value"), "0");
  EXPECT_EQ(invoke({"nl", "lookup", "--scale", "1", "--lattice", "<4>", "--h", "2", "--d", "2"}).code, 2);
  EXPECT_EQ(invoke({"nl", "lookup", "--phi", "e8", "--scale", "1", "--h", "0", "--d", "0,0"}).code, 2);
}

TEST(CliTest, BorcherdsOverRankOne) {
  const auto r = invoke({"nl", "borcherds", "--lattice", "<6>", "--h", "2", "--d", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("weight"), "21/2");
  EXPECT_EQ(j.at("lattice_discriminant"), "6");
}

TEST(ConfigTest, EnvironmentOverride) {
  ::unsetenv("K3ENUM_QTRUNC");
  EXPECT_EQ(Config::from_environment().q_trunc, Config{}.q_trunc);
  ::setenv("K3ENUM_QTRUNC", "17", 1);
  EXPECT_EQ(Config::from_environment().q_trunc, 17);
  for (const char* bad : {"", "x", "-3", "12abc"}) {
    ::setenv("K3ENUM_QTRUNC", bad, 1);
    EXPECT_THROW(Config::from_environment(), std::invalid_argument) << bad;
  }
  ::unsetenv("K3ENUM_QTRUNC");
  Config c;
  c.h_max = -1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  EXPECT_EQ(parse_output_format("tsv"), OutputFormat::tsv);
  EXPECT_THROW(parse_output_format("yaml"), std::invalid_argument);
}

TEST(ConfigTest, QTruncDrivesDefaultOrder) {
  Config c;
  c.q_trunc = 4;
  const auto r = invoke({"modform", "delta"}, c);
  EXPECT_EQ(series_from_json(nlohmann::json::parse(r.out)).truncation(), 4);
}

// r_{0,m,h} from the class structure: beta = m alpha with alpha^2 = 2h' - 2.
Rational divisible_oracle(const BpsTable& r0, long m, long h) {
  for (long hp = 0; hp <= r0.h_max(); ++hp) {
    if (m * m * (2 * hp - 2) == 2 * h - 2) return r0(0, static_cast<int>(h));
  }
  return Rational(0);
}

TEST(Theorem2Test, Examples) {
  const BpsTable r0 = yau_zaslow(8);
  std::vector<NLInput> zeros;
  for (int h = 0; h <= 8; ++h) zeros.push_back({1, h, {0, 1}, Rational(0)});
  EXPECT_EQ(theorem2_assemble(r0, zeros).at({0, 1}), Rational(0));
  EXPECT_EQ(theorem2_assemble(r0, {{1, 3, {2, 2}, Rational(1)}}).at({2, 2}), Rational(3200));
  // 2h - 2 = 0 admits every divisibility; 2h - 2 = 8 admits m = 2.
  EXPECT_EQ(divisible_genus_zero(r0, 3, 1), Rational(24));
  EXPECT_EQ(divisible_genus_zero(r0, 2, 5), r0(0, 5));
  EXPECT_EQ(divisible_genus_zero(r0, 2, 4), Rational(0));
  EXPECT_EQ(divisible_genus_zero(r0, 2, 0), Rational(0));
}

TEST(Theorem2Test, WindowMismatch) {
  const BpsTable r0 = yau_zaslow(4);
  EXPECT_THROW(theorem2_assemble(r0, {{1, 5, {0}, Rational(1)}}), std::invalid_argument);
  EXPECT_THROW(theorem2_assemble(r0, {{1, -1, {0}, Rational(1)}}), std::invalid_argument);
  EXPECT_THROW(theorem2_assemble(r0, {{0, 1, {0}, Rational(1)}}), std::invalid_argument);
  EXPECT_THROW(theorem2_assemble(r0, {{1, 1, {0}, Rational(1)}, {1, 2, {0, 1}, Rational(1)}}), std::invalid_argument);
  EXPECT_THROW(theorem2_assemble(r0, {{1, 1, {0}, Rational(1)}, {1, 1, {0}, Rational(2)}}), std::invalid_argument);
}

TEST(Theorem2Test, ReorderingInvariance) {
  const BpsTable r0 = yau_zaslow(20);
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 6);
  for (int trial = 0; trial < 10; ++trial) {
    // Dense window m <= 4, h <= 20, d in a few classes.
    std::vector<NLInput> nl;
    for (long d0 = -1; d0 <= 1; ++d0) {
      for (long m = 1; m <= 4; ++m) {
        for (long h = 0; h <= 20; ++h) nl.push_back({m, h, {d0, 3}, Rational(Integer(num(rng)), Integer(den(rng)))});
      }
    }
    // Independent order: m outer, h inner, per d.
    std::map<std::vector<std::int64_t>, Rational> expected;
    for (long d0 = -1; d0 <= 1; ++d0) {
      Rational sum(0);
      for (long m = 1; m <= 4; ++m) {
        for (const auto& e : nl) {
          if (e.m == m && e.d[0] == d0) sum += divisible_oracle(r0, m, e.h) * e.value;
        }
      }
      expected[{d0, 3}] = sum;
    }
    const auto forward = theorem2_assemble(r0, nl);
    std::shuffle(nl.begin(), nl.end(), rng);
    const auto shuffled = theorem2_assemble(r0, nl);
    EXPECT_EQ(forward, expected);
    EXPECT_EQ(shuffled, expected);
  }
}

TEST(Theorem2Test, CliAssembly) {
  const std::vector<NLInput> nl{{1, 2, {0, 0}, Rational(-264)}, {2, 1, {0, 0}, Rational(Integer(1), Integer(2))},
                                {1, 0, {1, 0}, Rational(7)}};
  const std::string r0 = write_file("r0.tsv", table_to_tsv(yau_zaslow(3)));
  const std::string inputs = write_file("nl.json", nl_inputs_to_json(nl).dump());
  const auto r = invoke({"theorem2", "--r0", r0, "--nl", inputs});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out).at("results");
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j.at(0).at("d"), (std::vector<int>{0, 0}));
  EXPECT_EQ(j.at(0).at("value"), Rational(324 * -264 + 12).to_string());
  EXPECT_EQ(j.at(1).at("value"), "7");
  const std::string outside = write_file("far.json", nl_inputs_to_json({{1, 9, {0, 0}, Rational(1)}}).dump());
  EXPECT_EQ(invoke({"theorem2", "--r0", r0, "--nl", outside}).code, 2);
}

}  // namespace
}  // namespace k3enum
