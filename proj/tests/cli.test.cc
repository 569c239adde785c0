// Copyright 2026 The noclick Authors
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

#include "noclick/cli.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace noclick;
using namespace noclick::cli;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "noclick");
    std::vector<const char *> argv;
    for (const std::string &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Result r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("noclick_cli_test_" + name)).string();
}

}  // namespace

TEST(cli, expand_axes_order) {
    RunConfig cfg;
    cfg.gammas = {0.5, 1.0};
    cfg.hs = {0.1, 0.2, 0.3};
    cfg.Ls = {16};
    std::vector<ModelParams> ps = expand_axes(cfg);
    ASSERT_EQ(ps.size(), 6u);
    EXPECT_EQ(ps[0].gamma, 0.5);
    EXPECT_EQ(ps[1].gamma, 1.0);
    EXPECT_EQ(ps[1].h, 0.1);
    EXPECT_EQ(ps[2].h, 0.2);
}

TEST(cli, spectrum_table) {
    Result r = run({"spectrum", "--L", "8", "--gamma", "1,4"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::vector<std::string> ls = lines(r.out);
    ASSERT_EQ(ls.size(), 2u + 2 * 8);
    EXPECT_EQ(ls[0].rfind("# noclick", 0), 0u);
    EXPECT_NE(ls[1].find("re_lambda"), std::string::npos);
    EXPECT_NE(ls[1].find("gamma_c"), std::string::npos);
}

TEST(cli, entropy_scan_and_fit_file) {
    std::string fit = temp_path("fit.csv");
    Result r = run({"entropy-scan", "--L", "64", "--LA", "4,8,16", "--state", "steady", "--phi", "0.5",
                    "--fit-out", fit});
    ASSERT_EQ(r.code, 0) << r.err;
    std::vector<std::string> ls = lines(r.out);
    EXPECT_EQ(ls.size(), 2u + 3);
    EXPECT_NE(ls[1].find("deltaS"), std::string::npos);
    std::ifstream in(fit);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_NE(text.find("c_fit"), std::string::npos);
    EXPECT_EQ(lines(text).size(), 3u);
    std::remove(fit.c_str());
}

TEST(cli, output_is_deterministic) {
    std::vector<std::string> args = {"trajectories", "--L", "32", "--LA", "2,4,8", "--n-traj", "3",
                                     "--n-jumps", "2", "--seed", "5"};
    Result a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    args.push_back("--threads");
    args.push_back("3");
    EXPECT_EQ(run(args).out, a.out);
}

TEST(cli, trajectories_warn_above_threshold) {
    Result r = run({"trajectories", "--L", "32", "--LA", "2,4,8", "--gamma", "4", "--n-traj", "2", "--n-jumps", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_FALSE(r.err.empty());
    EXPECT_NE(r.out.find("pinned"), std::string::npos);
}

TEST(cli, validity_rows) {
    Result r = run({"validity", "--L", "16,32"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out).size(), 2u + 2);
}

TEST(cli, oracle_check_small) {
    Result r = run({"oracle-check", "--L", "6", "--samples", "2"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"spectrum", "--L", "7"}).code, 2);
    EXPECT_EQ(run({"spectrum", "--L", ""}).code, 2);
    EXPECT_EQ(run({"spectrum", "--model", "potts"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    Result help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE((help.out + help.err).find("entropy-scan"), std::string::npos);
}

TEST(cli, error_exit_codes) {
    EXPECT_EQ(run({"entropy-scan", "--L", "16", "--LA", "2,3,17"}).code, 2);
    EXPECT_EQ(run({"trajectories", "--L", "16", "--LA", "2,3,4", "--dt", "0"}).code, 2);
    Result r = run({"oracle-check", "--L", "14", "--samples", "1"});
    EXPECT_EQ(r.code, 3);
    EXPECT_FALSE(r.err.empty());
}

TEST(cli, config_file) {
    std::string cfg = temp_path("cfg.toml");
    {
        std::ofstream f(cfg);
        f << "L = [8]\ngamma = [0.5]\n";
    }
    Result a = run({"--config", cfg, "spectrum"});
    Result b = run({"spectrum", "--L", "8", "--gamma", "0.5"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    std::remove(cfg.c_str());
}
