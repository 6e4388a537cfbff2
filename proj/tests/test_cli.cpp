// Copyright 2026 The symhsp Authors
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

#include "json.hpp"
#include "symhsp/cli.hpp"

using namespace symhsp;

namespace {

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string &name) : path(std::filesystem::temp_directory_path() / name) {
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

std::string slurp(const std::filesystem::path &p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

int run(std::vector<std::string> args, const TempDir &dir, std::string *out = nullptr) {
    args.push_back("--out");
    args.push_back(dir.path.string());
    std::ostringstream o;
    std::ostringstream e;
    const int code = run_cli(args, o, e);
    if (out) {
        *out = o.str() + e.str();
    }
    return code;
}

std::vector<std::string> data_lines(const std::string &csv) {
    std::vector<std::string> lines;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') {
            lines.push_back(line);
        }
    }
    return lines;
}

}  // namespace

TEST(Cli, CharacterTable) {
    TempDir dir("symhsp_cli_chartable");
    ASSERT_EQ(run({"chartable", "4"}, dir), kExitOk);
    const std::string csv = slurp(dir.path / "chartable_4.csv");
    EXPECT_NE(csv.find("# seed: 0"), std::string::npos);
    const auto lines = data_lines(csv);
    ASSERT_EQ(lines.size(), 6u);
    EXPECT_EQ(lines[2], "\"3,1\",-1,0,-1,1,3");
    EXPECT_TRUE(std::filesystem::exists(dir.path / "chartable_4.csv.log"));
}

TEST(Cli, ReciprocalSum) {
    TempDir dir("symhsp_cli_recip");
    ASSERT_EQ(run({"recip-sum", "12"}, dir), kExitOk);
    const auto lines = data_lines(slurp(dir.path / "recip-sum_12.csv"));
    ASSERT_EQ(lines.size(), 13u);
    EXPECT_EQ(lines[4].rfind("4,43/24,", 0), 0u);
}

TEST(Cli, OracleCheck) {
    TempDir dir("symhsp_cli_oracle");
    std::string out;
    ASSERT_EQ(run({"oracle-check", "4", "2"}, dir, &out), kExitOk);
    EXPECT_EQ(out.rfind("PASS max|Δ| ≤ 1e-9", 0), 0u);
    EXPECT_EQ(run({"oracle-check", "7", "1"}, dir), kExitCap);
}

TEST(Cli, TvScanIsDeterministic) {
    TempDir a("symhsp_cli_tv_a");
    TempDir b("symhsp_cli_tv_b");
    ASSERT_EQ(run({"tv-scan", "6", "2", "--seed", "7"}, a), kExitOk);
    ASSERT_EQ(run({"tv-scan", "6", "2", "--seed", "7", "--threads", "3"}, b), kExitOk);
    EXPECT_EQ(slurp(a.path / "tv-scan_6_2.csv"), slurp(b.path / "tv-scan_6_2.csv"));
    EXPECT_EQ(slurp(a.path / "tv-scan_6_2.json"), slurp(b.path / "tv-scan_6_2.json"));
    const auto j = nlohmann::json::parse(slurp(a.path / "tv-scan_6_2.json"));
    EXPECT_EQ(j["meta"]["seed"], 7);
    EXPECT_EQ(j["meta"]["n"], 6);
    EXPECT_EQ(j["meta"]["k"], 2);
    EXPECT_EQ(data_lines(slurp(a.path / "tv-scan_6_2.csv"))[0], "n,k,lambda_tuple,m_index,tv,rank");
}

TEST(Cli, TvScanWithFrame) {
    TempDir dir("symhsp_cli_frame");
    {
        std::ofstream f(dir.path / "frame.json");
        f << R"({"dim": 2, "vectors": [[1, 0], [0, 1], [1, 1], [1, -1]]})";
    }
    const std::string frame = (dir.path / "frame.json").string();
    EXPECT_EQ(run({"tv-scan", "4", "1", "--tuples", "2,2", "--frame", frame, "--emit-distributions"}, dir),
              kExitOk);
    const auto j = nlohmann::json::parse(slurp(dir.path / "tv-scan_4_1.json"));
    EXPECT_EQ(j["tuples"][0]["distributions"].size(), 3u);
    EXPECT_EQ(run({"tv-scan", "4", "1", "--tuples", "3,1", "--frame", frame}, dir), kExitValidation);
    EXPECT_EQ(run({"tv-scan", "4", "1", "--frame", frame}, dir), kExitValidation);
}

TEST(Cli, OtherCommands) {
    TempDir dir("symhsp_cli_misc");
    EXPECT_EQ(run({"plancherel", "5"}, dir), kExitOk);
    EXPECT_EQ(run({"plancherel", "12", "--sample", "50", "--seed", "3"}, dir), kExitOk);
    EXPECT_EQ(run({"kron", "3,1", "2,2"}, dir), kExitOk);
    EXPECT_EQ(run({"weak-dist", "4", "--matching", "2"}, dir), kExitOk);
    EXPECT_EQ(run({"roichman", "6", "--b", "0.2", "--q", "0.8"}, dir), kExitOk);
    {
        std::ofstream f(dir.path / "pair.txt");
        f << "3\n0 1\n1 2\n\n3\n1 2\n0 2\n";
    }
    std::string out;
    EXPECT_EQ(run({"graph-reduce", (dir.path / "pair.txt").string()}, dir, &out), kExitOk);
    EXPECT_NE(out.find("isomorphic"), std::string::npos);
}

TEST(Cli, ErrorsMapToExitCodes) {
    TempDir dir("symhsp_cli_errors");
    std::string out;
    EXPECT_EQ(run({"bogus"}, dir, &out), kExitValidation);
    EXPECT_NE(out.find("Usage"), std::string::npos);
    EXPECT_EQ(run({"kron", "3,1", "2,1"}, dir), kExitValidation);
    EXPECT_EQ(run({"weak-dist", "5"}, dir), kExitValidation);
    EXPECT_EQ(run({"weak-dist", "4", "--matching", "3"}, dir), kExitValidation);
    EXPECT_EQ(run({"tv-scan", "8", "2", "--tuples", "4,2,1,1|4,2,1,1;4,4|4,4", "--threads", "2"}, dir), kExitOk);
    EXPECT_EQ(run({"tv-scan", "10", "2", "--tuples", "4,3,2,1|4,3,2,1"}, dir), kExitCap);
    EXPECT_EQ(run({"roichman", "6", "--q", "2"}, dir), kExitValidation);
}
