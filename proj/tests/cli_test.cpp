// Copyright 2026 The xsstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "support.hpp"
#include "xsstab/cli.hpp"

using namespace xsstab;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string &name) {
    return std::string(XSSTAB_DATA_DIR) + "/" + name;
}

std::string temp_file(const std::string &name, const std::string &content) {
    auto p = std::filesystem::temp_directory_path() / ("xsstab_cli_" + name);
    std::ofstream(p) << content;
    return p.string();
}

}  // namespace

TEST(Cli, CheckSix) {
    auto r = run({"check", data("six.xsg")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "admissible yes\nregular yes\nYES (witness 000000)\n");
}

TEST(Cli, CheckUnsatisfiable) {
    auto r = run({"check", data("unsat4.xsg")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("NO (no stabilized state)"), std::string::npos);
}

TEST(Cli, Basis) {
    auto r = run({"basis", data("six.xsg")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "t=3 d=1 f=(-1)^{x1 x2 x3}\nperm=1 2 3 4 5 6\nW 110\nW 011\nW 101\nmu 0 000 lambda=000000\n");
}

TEST(Cli, AmplitudesAndDegeneracy) {
    EXPECT_EQ(run({"amplitudes", data("six.xsg")}).out, "(-1)^{x1 x2 x3}\n");
    EXPECT_EQ(run({"degeneracy", data("six.xsg")}).out, "1\n");
}

TEST(Cli, Entropy) {
    auto r = run({"entropy", data("six.xsg"), "--cut", "1,2,4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, Expect) {
    EXPECT_EQ(run({"expect", data("six.xsg"), "--pauli", "s=0 x=000000 z=110100"}).out, "1\n");
    EXPECT_EQ(run({"expect", data("six.xsg"), "--pauli", "s=0 x=000000 z=100000"}).out, "0\n");
}

TEST(Cli, CircuitFile) {
    auto path = (std::filesystem::temp_directory_path() / "xsstab_cli_six.circ").string();
    auto r = run({"circuit", data("six.xsg"), "--out", path});
    EXPECT_EQ(r.code, 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), run({"circuit", data("six.xsg")}).out);
    EXPECT_NE(ss.str().find("CCZ 1 2 3"), std::string::npos);
}

TEST(Cli, Hamiltonian) {
    auto r = run({"hamiltonian", data("six.xsg")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 9);
    EXPECT_EQ(run({"hamiltonian", data("six.xsg"), "--local"}).out, r.out);
}

TEST(Cli, Json) {
    auto r = run({"--json", "degeneracy", data("six.xsg")});
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["d"], 1);
    EXPECT_EQ(j["exit_code"], 0);
}

TEST(Cli, OracleVerify) {
    auto r = run({"oracle-verify", data("six.xsg")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, SatEncodeRoundTrip) {
    auto r = run({"sat", "encode", data("unsat4.clauses")});
    ASSERT_EQ(r.code, 0);
    std::ifstream in(data("unsat4.xsg"));
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(parse_generating_set(r.out), parse_generating_set(ss.str()));
    auto sat = run({"sat", "encode", data("sat1.clauses")});
    auto f = temp_file("sat1.xsg", sat.out);
    EXPECT_EQ(run({"check", f}).code, 0);
}

TEST(Cli, ModelRoundTrip) {
    auto six = run({"model", "six-qubit"});
    ASSERT_EQ(six.code, 0);
    EXPECT_EQ(parse_generating_set(six.out), six_qubit());
    auto semion = run({"model", "semion", "--lx", "2", "--ly", "2", "--torus"});
    ASSERT_EQ(semion.code, 0);
    auto f = temp_file("semion.xsg", semion.out);
    EXPECT_EQ(run({"degeneracy", f}).out, "4\n");
    auto tqd = run({"model", "tqd", "--k", "3", "--cocycle", "123", "--open"});
    ASSERT_EQ(tqd.code, 0);
    auto g = temp_file("tqd.xsg", tqd.out);
    auto c = run({"check", g});
    EXPECT_EQ(c.code, 0);
    EXPECT_NE(c.out.find("regular yes"), std::string::npos);
    EXPECT_EQ(run({"model", "rm15"}).code, 0);
}

TEST(Cli, MalformedInput) {
    EXPECT_EQ(run({"check", temp_file("bad.xsg", "n=2\ng s=0 a=1 b=00\n")}).code, 2);
    EXPECT_EQ(run({"check", data("missing.xsg")}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"entropy", data("six.xsg"), "--cut", "9"}).code, 2);
    EXPECT_EQ(run({"basis", data("six.xsg"), "--mu", "5"}).code, 2);
    EXPECT_EQ(run({"model", "tqd", "--k", "2", "--cocycle", "123"}).code, 2);
    auto r = run({"check", temp_file("bad2.xsg", "n=2\ng s=9 a=10 b=00\n")});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, DenseLimit) {
    auto rm = run({"model", "rm15"});
    auto f = temp_file("rm15.xsg", rm.out);
    EXPECT_EQ(run({"oracle-verify", f, "--limit", "10"}).code, 3);
}
