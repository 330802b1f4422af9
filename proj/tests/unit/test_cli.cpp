// Copyright 2026 The gsswb Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gsswb/cli/cli.hpp"
#include "json.hpp"

using namespace gsswb;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "gsswb");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = cli::run(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("gsswb_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override {
        std::filesystem::remove_all(dir_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, bruteforce_prints_count) {
    auto r = run({"bruteforce"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.err, "0 / 8192 satisfying\n");
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["result"]["satisfying"], 0);
    EXPECT_EQ(j["command"], "bruteforce");
    EXPECT_TRUE(j.contains("version"));
    EXPECT_EQ(run({"nonlocality", "bruteforce"}).out, r.out);
    auto control = run({"bruteforce", "--variant", "no-constraint"});
    EXPECT_GT(nlohmann::json::parse(control.out)["result"]["satisfying"].get<uint64_t>(), 0u);
}

TEST_F(CliTest, solve_zero_instance_and_verify_tampering) {
    ASSERT_EQ(run({"generate", "--n", "40", "--degree", "3", "--seed", "2", "--out", path("g.json")}).code, 0);
    auto zero = run({"gss", "solve", "--graph", path("g.json"), "--seed", "3"});
    ASSERT_EQ(zero.code, 0);
    EXPECT_EQ(nlohmann::json::parse(zero.out)["result"]["z"], std::string(40, '0'));

    ASSERT_EQ(run({"instance", "--graph", path("g.json"), "--seed", "4", "--out", path("i.json")}).code, 0);
    ASSERT_EQ(run({"solve", "--instance", path("i.json"), "--seed", "5", "--out", path("s.json")}).code, 0);
    auto ok = run({"verify", "--instance", path("i.json"), "--output", path("s.json")});
    EXPECT_EQ(ok.code, cli::kExitOk);
    EXPECT_EQ(ok.err, "VALID\n");

    // The all-zero input has support {0}, so any set bit is a tampering.
    std::string z(40, '0');
    z[7] = '1';
    auto bad = run({"verify", "--graph", path("g.json"), "--z", z});
    EXPECT_EQ(bad.code, cli::kExitVerificationFailed);
    EXPECT_EQ(bad.err, "INVALID\n");
    EXPECT_EQ(nlohmann::json::parse(bad.out)["result"]["verdict"], "INVALID");
}

TEST_F(CliTest, input_errors_exit_2) {
    EXPECT_EQ(run({}).code, cli::kExitInputError);
    EXPECT_EQ(run({"no-such-command"}).code, cli::kExitInputError);
    EXPECT_EQ(run({"certify", "--graph", path("missing.json")}).code, cli::kExitInputError);
    EXPECT_EQ(run({"corrupt", "--n", "64", "--degree", "3", "--strategy", "sideways"}).code, cli::kExitInputError);
    EXPECT_EQ(run({"generate", "--n", "5", "--degree", "3"}).code, cli::kExitInputError);
    {
        std::ofstream f(path("junk.json"));
        f << "{not json";
    }
    EXPECT_EQ(run({"minor", "--graph", path("junk.json")}).code, cli::kExitInputError);
    EXPECT_EQ(run({"verify", "--graph", path("junk.json"), "--z", "0"}).code, cli::kExitInputError);
    EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST_F(CliTest, reports_echo_config_and_seeds) {
    auto r = run({"corrupt", "--n", "256", "--degree", "4", "--epsilon", "0.02", "--seed", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["config"]["epsilon"], "0.02");
    EXPECT_EQ(j["config"]["n"], "256");
    EXPECT_EQ(j["config"]["strategy"], "random");
    EXPECT_EQ(j["seeds"]["root"], 7);
    EXPECT_TRUE(j["seeds"].contains("corruption"));
    EXPECT_EQ(j["result"]["removed"].size(), 5u);
    EXPECT_TRUE(j["result"]["giant_ok"].get<bool>());
}

TEST_F(CliTest, lightcone_pipeline) {
    ASSERT_EQ(run({"generate", "--product", "--n", "1024", "--seed", "3", "--out", path("s.json")}).code, 0);
    ASSERT_EQ(run({"lightcone", "make-circuit", "--graph", path("s.json"), "--family", "zeros", "--out",
                   path("c.json")})
                  .code,
              0);
    auto cls = run({"lightcone", "classify", "--circuit", path("c.json"), "--graph", path("s.json")});
    ASSERT_EQ(cls.code, 0) << cls.err;
    EXPECT_EQ(nlohmann::json::parse(cls.out)["result"]["sweep"].size(), 3u);
    auto fal = run({"lightcone", "falsify", "--circuit", path("c.json"), "--graph", path("s.json"), "--seed", "1"});
    ASSERT_EQ(fal.code, 0) << fal.err;
    auto j = nlohmann::json::parse(fal.out);
    EXPECT_EQ(j["result"]["status"], "violation");
    EXPECT_TRUE(j["result"]["witness"]["re_verified"].get<bool>());
    // Without a pairing the host is rejected.
    ASSERT_EQ(run({"generate", "--n", "64", "--degree", "3", "--out", path("plain.json")}).code, 0);
    EXPECT_EQ(run({"falsify", "--oracle", "--graph", path("plain.json")}).code, cli::kExitInputError);
    // A tiny host cannot hold three boxes.
    ASSERT_EQ(run({"generate", "--product", "--n", "16", "--degree", "3", "--epsilon", "0", "--out",
                   path("tiny.json")})
                  .code,
              0);
    auto tiny = run({"falsify", "--oracle", "--graph", path("tiny.json")});
    EXPECT_EQ(tiny.code, cli::kExitStageFailure);
    EXPECT_EQ(nlohmann::json::parse(tiny.out)["result"]["status"], "instance too small");
}

TEST_F(CliTest, identical_seeds_give_identical_bytes) {
    std::vector<std::vector<std::string>> commands = {
        {"generate", "--n", "128", "--degree", "4", "--seed", "11"},
        {"certify", "--n", "128", "--degree", "4", "--seed", "11"},
        {"corrupt", "--n", "512", "--strategy", "greedy-boundary-min", "--seed", "11"},
        {"minor", "--n", "512", "--seed", "11"},
        {"triangle", "--m", "12", "--trials", "4", "--seed", "11"},
        {"scaling", "--sizes", "128,256", "--trials", "2", "--depth-sizes", "100", "--threads", "2", "--seed", "11"},
    };
    for (const auto &c : commands) {
        auto a = run(c);
        auto b = run(c);
        EXPECT_EQ(a.code, 0) << c[0] << ": " << a.err;
        EXPECT_EQ(a.out, b.out) << c[0];
        EXPECT_EQ(a.err, b.err) << c[0];
    }
}

TEST_F(CliTest, scaling_writes_tables) {
    auto r = run({"scaling", "--sizes", "128,256", "--trials", "2", "--depth-sizes", "100", "--out", path("sc")});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream csv(path("sc/scaling.csv"));
    std::string header;
    std::getline(csv, header);
    EXPECT_EQ(header, "strategy,n,trials,giant_ok_rate,t_median,t_min,t_max");
    EXPECT_TRUE(std::filesystem::exists(path("sc/scaling.md")));
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["result"]["trials"].size(), 12u);
    EXPECT_TRUE(j["result"]["trials"][0]["runtime_ms"].is_null());
}
