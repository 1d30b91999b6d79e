// Copyright 2026 The cavity-dj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cavitydj_cli/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace cavitydj;
using namespace cavitydj::cli;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string> &args,
              std::optional<std::string> env_seed = std::nullopt) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err, std::move(env_seed));
    return {code, out.str(), err.str()};
}

json invoke_json(const std::vector<std::string> &args) {
    auto r = invoke(args);
    EXPECT_EQ(r.code, kExitOk) << r.err;
    return json::parse(r.out);
}

std::string read_file(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class TempFile {
  public:
    explicit TempFile(const std::string &contents) {
        path_ = std::filesystem::temp_directory_path() /
                ("cavitydj_oracle_" + std::to_string(counter_++) + ".txt");
        std::ofstream(path_, std::ios::binary) << contents;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    [[nodiscard]] std::string path() const { return path_.string(); }

  private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

}  // namespace

TEST(OracleFile, Examples) {
    auto c = parse_oracle_text("1\n00\n");
    EXPECT_EQ(c.n(), 1u);
    EXPECT_EQ(c.oracle_class(), OracleClass::Constant);
    EXPECT_FALSE(c(0));

    auto b = parse_oracle_text("2\n0110\n");
    EXPECT_EQ(b.oracle_class(), OracleClass::Balanced);
    EXPECT_EQ(b.bits(), "0110");

    try {
        parse_oracle_text("2\n0100\n");
        FAIL() << "expected a class violation";
    } catch (const OracleError &e) {
        EXPECT_NE(std::string(e.what()).find("oracle class violation"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("1 ones"), std::string::npos);
    }
}

TEST(OracleFile, NewlineVariants) {
    EXPECT_EQ(parse_oracle_text("2\n0110").bits(), "0110");
    EXPECT_EQ(parse_oracle_text("2\r\n0110\r\n").bits(), "0110");
}

TEST(OracleFile, ErrorPositions) {
    struct Case {
        const char *text;
        std::size_t line;
        std::size_t column;
    };
    for (const Case &c : {Case{"", 1, 1}, Case{"x\n01\n", 1, 1}, Case{"1\n0a\n", 2, 2},
                          Case{"2\n011\n", 2, 4}, Case{"1\n010\n", 2, 3},
                          Case{"1\n01\nextra\n", 3, 1}, Case{"21\n0\n", 1, 1}}) {
        try {
            parse_oracle_text(c.text);
            ADD_FAILURE() << "no error for " << c.text;
        } catch (const OracleParseError &e) {
            EXPECT_EQ(e.line(), c.line) << c.text;
            EXPECT_EQ(e.column(), c.column) << c.text;
            EXPECT_NE(std::string(e.what()).find("line"), std::string::npos);
        }
    }
}

TEST(OracleFile, ReadsFromDisk) {
    TempFile f("3\n01101001\n");
    auto o = parse_oracle_file(f.path());
    EXPECT_EQ(o.n(), 3u);
    EXPECT_TRUE(o.is_affine_parity());
    EXPECT_THROW(parse_oracle_file("/nonexistent/oracle.txt"), OracleError);
}

TEST(Angle, Literals) {
    EXPECT_EQ(parse_angle("pi"), std::numbers::pi);
    EXPECT_EQ(parse_angle("2pi"), 2.0 * std::numbers::pi);
    EXPECT_EQ(parse_angle("-pi"), -std::numbers::pi);
    EXPECT_EQ(parse_angle("pi/2"), std::numbers::pi / 2.0);
    EXPECT_EQ(parse_angle("3pi/4"), 3.0 * std::numbers::pi / 4.0);
    EXPECT_EQ(parse_angle("1.5"), 1.5);
    EXPECT_THROW(parse_angle("tau"), std::invalid_argument);
    EXPECT_THROW(parse_angle(""), std::invalid_argument);
}

TEST(JsonWriter, Formatting) {
    nlohmann::ordered_json j;
    j["b"] = 1.0;
    j["a"] = 0.1;
    j["z"] = 1.0 - 1e-16;
    j["i"] = 3;
    j["s"] = "x\"y";
    j["n"] = nullptr;
    j["arr"] = nlohmann::ordered_json::array({true, 2.5});
    const std::string text = write_json(j);
    EXPECT_LT(text.find("\"b\""), text.find("\"a\""));
    EXPECT_NE(text.find("\"b\": 1.0"), std::string::npos);
    EXPECT_NE(text.find("\"a\": 0.10000000000000001"), std::string::npos);
    EXPECT_NE(text.find("\"z\": 1.0"), std::string::npos);
    EXPECT_NE(text.find("\"i\": 3"), std::string::npos);
    EXPECT_NE(text.find("\"s\": \"x\\\"y\""), std::string::npos);
    EXPECT_NE(text.find("\"n\": null"), std::string::npos);
    EXPECT_EQ(json::parse(text)["arr"][1], 2.5);
}

TEST(CsvWriter, DottedPaths) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["result"]["verdict"] = "feasible";
    const std::string text = write_csv(j);
    EXPECT_EQ(text.rfind("key,value\n", 0), 0u);
    EXPECT_NE(text.find("schema,1\n"), std::string::npos);
    EXPECT_NE(text.find("result.verdict,feasible\n"), std::string::npos);
}

TEST(SampleCounts, DeterministicAndConsistent) {
    std::vector<double> dist{0.25, 0.0, 0.75, 0.0};
    auto a = sample_counts(dist, 11, 4000);
    EXPECT_EQ(a, sample_counts(dist, 11, 4000));
    EXPECT_EQ(a[0] + a[2], 4000u);
    EXPECT_EQ(a[1], 0u);
    EXPECT_NEAR(static_cast<double>(a[2]) / 4000.0, 0.75, 0.03);
}

TEST(Cli, RunDjParityTwoLevel) {
    auto j = invoke_json({"run-dj", "--n", "3", "--oracle", "parity", "--mode", "two-level",
                          "--seed", "7"});
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["result"]["p_all_zeros"], 0.0);
    EXPECT_EQ(j["result"]["decision"], "balanced");
    EXPECT_EQ(j["config"]["mode"], "two_level_fock");
    EXPECT_EQ(j["config"]["n"], 3);
    EXPECT_EQ(j["config"]["seed"], 7);
    EXPECT_EQ(j["oracle"]["path"], "dispersive_schedule");
}

TEST(Cli, RunDjConstantIdeal) {
    auto r = invoke({"run-dj", "--n", "3", "--oracle", "constant0", "--mode", "ideal"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("\"p_all_zeros\": 1.0"), std::string::npos);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["result"]["decision"], "constant");
}

TEST(Cli, RunDeutschAndShots) {
    auto j = invoke_json({"run-deutsch", "--oracle", "parity", "--mode", "three-level",
                          "--shots", "100", "--seed", "3"});
    EXPECT_EQ(j["result"]["decision"], "balanced");
    EXPECT_EQ(j["config"]["alpha"], 2.0);
    EXPECT_EQ(j["config"]["fock_n_max"], 25);
    std::size_t total = 0;
    for (auto &[k, v] : j["counts"].items()) total += v.get<std::size_t>();
    EXPECT_EQ(total, 100u);
}

TEST(Cli, FeasibilityExample) {
    auto j = invoke_json({"feasibility", "--phi", "pi", "--n", "1"});
    EXPECT_NEAR(j["result"]["tau_per_atom"].get<double>(), 8.0e-5, 1e-18);
    EXPECT_EQ(j["result"]["verdict"], "feasible");
}

TEST(Cli, FeasibilityGolden) {
    auto r = invoke({"feasibility", "--phi", "pi", "--n", "1"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, read_file(std::filesystem::path(CAVITYDJ_GOLDEN_DIR) / "feasibility_pi_1.json"));
}

TEST(Cli, PrepareCavityAndCat) {
    auto p = invoke_json({"prepare-cavity"});
    EXPECT_NEAR(p["result"]["fidelity_vs_minus"].get<double>(), 1.0, 1e-12);
    auto c = invoke_json({"cat-prep", "--seed", "0", "--shots", "2000"});
    EXPECT_EQ(c["config"]["fock_n_max"], 25);
    EXPECT_NEAR(c["result"]["postselect_probability"].get<double>(), 0.5, 0.01);
    EXPECT_NEAR(c["sampling"]["empirical_rate"].get<double>(), 0.5, 0.04);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(invoke({}).code, kExitUsage);
    EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
    EXPECT_EQ(invoke({"run-dj", "--mode", "quantum"}).code, kExitUsage);
    EXPECT_EQ(invoke({"run-dj", "--n", "3", "--oracle", "random-balanced"}).code, kExitUsage);
    EXPECT_EQ(invoke({"run-dj", "--n", "11", "--oracle", "parity"}).code, kExitUsage);
    EXPECT_EQ(invoke({"feasibility", "--n", "0"}).code, kExitUsage);
    EXPECT_EQ(invoke({"run-deutsch", "--help"}).code, kExitOk);

    TempFile bad("2\n0100\n");
    auto r = invoke({"run-dj", "--oracle", bad.path()});
    EXPECT_EQ(r.code, kExitOracle);
    EXPECT_NE(r.err.find("oracle class violation"), std::string::npos);
    EXPECT_TRUE(r.out.empty());

    auto trunc = invoke({"cat-prep", "--fock-n-max", "10"});
    EXPECT_EQ(trunc.code, kExitNumeric);
    EXPECT_NE(trunc.err.find("insufficient Fock truncation"), std::string::npos);
    EXPECT_EQ(invoke({"run-deutsch", "--mode", "coherent", "--fock-n-max", "24"}).code,
              kExitNumeric);
    EXPECT_EQ(invoke({"run-deutsch", "--mode", "coherent", "--fock-n-max", "25"}).code, kExitOk);
}

TEST(Cli, OracleFileRun) {
    TempFile f("2\n1001\n");
    auto j = invoke_json({"run-dj", "--oracle", f.path(), "--mode", "two-level"});
    EXPECT_EQ(j["config"]["n"], 2);
    EXPECT_EQ(j["oracle"]["truth_table"], "1001");
    EXPECT_EQ(j["oracle"]["cavity_realizable"], true);
    EXPECT_EQ(j["result"]["decision"], "balanced");

    TempFile g("2\n0011\n");
    auto k = invoke_json({"run-dj", "--oracle", g.path(), "--mode", "two-level"});
    EXPECT_EQ(k["oracle"]["cavity_realizable"], false);
    EXPECT_EQ(k["oracle"]["path"], "ideal_fallback");
    EXPECT_TRUE(k["oracle"]["phi"].is_null());
}

TEST(Cli, ByteIdenticalRepeats) {
    const std::vector<std::vector<std::string>> commands{
        {"run-dj", "--n", "5", "--oracle", "random-balanced", "--seed", "99", "--shots", "50"},
        {"run-dj", "--n", "2", "--oracle", "parity", "--mode", "coherent", "--seed", "4"},
        {"cat-prep", "--seed", "12", "--shots", "100", "--format", "csv"},
        {"feasibility", "--phi", "2pi", "--n", "7", "--format", "csv"},
    };
    for (const auto &cmd : commands) {
        auto a = invoke(cmd);
        auto b = invoke(cmd);
        ASSERT_EQ(a.code, kExitOk) << a.err;
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, EnvironmentSeed) {
    const std::vector<std::string> cmd{"run-dj", "--n", "4", "--oracle", "random-balanced"};
    auto from_env = invoke(cmd, "42");
    ASSERT_EQ(from_env.code, kExitOk) << from_env.err;
    auto explicit_seed = invoke({"run-dj", "--n", "4", "--oracle", "random-balanced", "--seed", "42"});
    EXPECT_EQ(from_env.out, explicit_seed.out);
    EXPECT_EQ(json::parse(from_env.out)["config"]["seed"], 42);
    EXPECT_EQ(invoke(cmd, "not-a-number").code, kExitUsage);
}

TEST(Cli, CsvFormat) {
    auto r = invoke({"run-dj", "--n", "2", "--oracle", "constant1", "--format", "csv"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out.rfind("key,value\n", 0), 0u);
    EXPECT_NE(r.out.find("result.decision,constant\n"), std::string::npos);
    EXPECT_NE(r.out.find("config.mode,ideal_gate\n"), std::string::npos);
}
