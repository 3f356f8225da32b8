// Copyright 2026 The chanwit Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gtest/gtest.h"
#include "json.hpp"

using namespace chanwit;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::filesystem::path tmp(const std::string &name) { return std::filesystem::path(CHANWIT_TEST_TMPDIR) / name; }

}  // namespace

TEST(cli, witness_text) {
    auto r = run({"witness", "--gate", "cnot", "--restarts", "20"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("gate CNOT\n"), std::string::npos);
    EXPECT_NE(r.out.find("beta 0.500000000000\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("terms 16\n"), std::string::npos);
    EXPECT_NE(r.out.find("28/64 IIII"), std::string::npos);
    EXPECT_NE(r.out.find("-4/64 IXIX"), std::string::npos);
    EXPECT_NE(r.out.find("settings 9\n"), std::string::npos);
}

TEST(cli, witness_json_with_fixed_beta) {
    auto r = run({"witness", "--gate", "CZ", "--beta", "0.5", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["gate"], "CZ");
    EXPECT_EQ(doc["beta"], 0.5);
    EXPECT_EQ(doc["terms"].size(), 16u);
    EXPECT_EQ(doc["settings"].size(), 9u);
}

TEST(cli, beta) {
    auto r = run({"beta", "--gate", "cz", "--restarts", "20", "--seed", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "0.500000000000\n");
}

TEST(cli, expect_high_noise_window) {
    auto r = run({"expect", "--gate", "cz", "--noise", "dephasing", "--q1", "0.9", "--q2", "0.9"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("closed_form -0.17"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("numeric -0.17"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("difference "), std::string::npos);
    EXPECT_NE(r.out.find("detected true"), std::string::npos);
}

TEST(cli, expect_json_and_gamma_alias) {
    auto r = run({"expect", "--gate", "cnot", "--noise", "amplitude_damping", "--gamma1", "0.6", "--gamma2", "0",
                  "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["detected"], false);
    EXPECT_NEAR(doc["closed_form"].get<double>(), doc["numeric"].get<double>(), 1e-10);
    EXPECT_LT(std::abs(doc["difference"].get<double>()), 1e-10);
}

TEST(cli, threshold) {
    auto r = run({"threshold", "--gate", "cnot", "--noise", "depolarising", "--mode", "before"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "0.390524291751\n");

    auto two = run({"threshold", "--gate", "cz", "--noise", "dephasing", "--mode", "equal", "--format", "json"});
    ASSERT_EQ(two.code, 0) << two.err;
    EXPECT_EQ(nlohmann::json::parse(two.out)["roots"].size(), 2u);
}

TEST(cli, sweep_writes_identical_files) {
    auto a = tmp("cli_sweep_a.csv");
    auto b = tmp("cli_sweep_b.csv");
    std::vector<std::string> base{"sweep", "--gate", "cz", "--noise", "bitflip", "--grid", "11", "--out"};
    auto args_a = base;
    args_a.push_back(a.string());
    auto args_b = base;
    args_b.push_back(b.string());
    ASSERT_EQ(run(args_a).code, 0);
    ASSERT_EQ(run(args_b).code, 0);
    auto text = slurp(a);
    EXPECT_EQ(text, slurp(b));
    EXPECT_EQ(text.substr(0, 21), "q1,q2,value,detected\n");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 122);
}

TEST(cli, sweep_json_to_stdout) {
    auto r = run({"sweep", "--gate", "cnot", "--noise", "dephasing", "--grid", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out).size(), 9u);
}

TEST(cli, simulate_is_deterministic) {
    std::vector<std::string> args{"simulate", "--gate",  "cnot", "--noise", "depolarising", "--q1",
                                  "0.1",      "--q2",    "0.1",  "--shots", "2000",         "--seed",
                                  "11"};
    auto a = run(args);
    auto b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    auto doc = nlohmann::json::parse(a.out);
    EXPECT_EQ(doc["seed"], 11);
    EXPECT_EQ(doc["shots_per_setting"], 2000);
    EXPECT_GT(doc["std_error"].get<double>(), 0);

    args.back() = "12";
    EXPECT_NE(run(args).out, a.out);
}

TEST(cli, selftest) {
    auto r = run({"selftest"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("selftest passed"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(cli, invalid_input_exits_one) {
    std::vector<std::vector<std::string>> cases{
        {},
        {"frobnicate"},
        {"beta", "--gate", "swap"},
        {"beta"},
        {"expect", "--gate", "cnot", "--noise", "erasure"},
        {"expect", "--gate", "cnot", "--noise", "dephasing", "--q1", "1.5"},
        {"threshold", "--gate", "cnot", "--noise", "dephasing", "--mode", "sideways"},
        {"sweep", "--gate", "cnot", "--noise", "dephasing", "--grid", "1"},
        {"simulate", "--gate", "cnot", "--noise", "dephasing", "--shots", "0"},
        {"witness", "--gate", "cnot", "--bogus"},
        {"witness", "--gate", "cnot", "--beta", "0"},
        {"sweep", "--gate", "cnot", "--noise", "dephasing", "--out", "/nonexistent-dir/x.csv"},
    };
    for (const auto &args : cases) {
        auto r = run(args);
        std::string joined;
        for (const auto &a : args) {
            joined += a + " ";
        }
        EXPECT_EQ(r.code, cli::kExitInvalidInput) << joined;
        EXPECT_FALSE(r.err.empty()) << joined;
        EXPECT_TRUE(r.out.empty()) << joined;
    }
}

TEST(cli, diagnostic_names_offending_flag) {
    auto r = run({"expect", "--gate", "cnot", "--noise", "dephasing", "--q2", "7"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("--q2"), std::string::npos) << r.err;
}

TEST(cli, help) {
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("simulate"), std::string::npos);
}
