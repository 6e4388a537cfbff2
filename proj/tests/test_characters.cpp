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

#include <cstdlib>
#include <filesystem>

#include "oracles.hpp"
#include "symhsp/characters.hpp"

using namespace symhsp;

namespace {

Partition P(const char *s) { return Partition::parse(s); }

}  // namespace

TEST(Dimensions, HookLengthExamples) {
    EXPECT_EQ(dimension(P("4")), 1);
    EXPECT_EQ(dimension(P("3,1")), 3);
    EXPECT_EQ(dimension(P("2,2")), 2);
}

TEST(Dimensions, MatchTableauxCount) {
    for (int n = 1; n <= 12; ++n) {
        for (const auto &p : enumerate_partitions(n)) {
            EXPECT_EQ(dimension(p), oracle::count_tableaux(p.parts())) << p;
        }
    }
}

TEST(Dimensions, SquaresSumToGroupOrder) {
    for (int n = 1; n <= 10; ++n) {
        BigInt total = 0;
        for (const auto &p : enumerate_partitions(n)) {
            total += dimension(p) * dimension(p);
        }
        EXPECT_EQ(total, factorial(n));
    }
}

TEST(Characters, Examples) {
    EXPECT_EQ(character(P("1,1,1,1"), P("2,2")), 1);
    EXPECT_EQ(character(P("3,1"), P("2,2")), -1);
    EXPECT_EQ(character(P("2,2"), P("2,2")), 2);
    EXPECT_THROW(character(P("3,1"), P("2,2,1")), ValidationError);
}

TEST(Characters, MatchDeterminantalExpansion) {
    for (int n = 1; n <= 7; ++n) {
        for (const auto &lambda : enumerate_partitions(n)) {
            for (const auto &mu : enumerate_partitions(n)) {
                EXPECT_EQ(character(lambda, mu), oracle::character(lambda.parts(), mu.parts()))
                    << lambda << " " << mu;
            }
        }
    }
}

TEST(Characters, SignTwistAndIdentity) {
    for (int n = 1; n <= 8; ++n) {
        for (const auto &lambda : enumerate_partitions(n)) {
            EXPECT_EQ(character(lambda, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))),
                      dimension(lambda));
            for (const auto &mu : enumerate_partitions(n)) {
                const int sign = (n - mu.length()) % 2 == 0 ? 1 : -1;
                EXPECT_EQ(character(lambda, mu), sign * character(lambda.conjugate(), mu));
            }
        }
    }
}

TEST(CharacterTable, RowAndColumnOrthogonality) {
    for (int n = 1; n <= 8; ++n) {
        const CharacterTable &t = character_table(n);
        const std::size_t r = t.size();
        for (std::size_t a = 0; a < r; ++a) {
            for (std::size_t b = 0; b < r; ++b) {
                BigInt rows = 0;
                BigInt cols = 0;
                for (std::size_t c = 0; c < r; ++c) {
                    rows += t.class_size(c) * t.at(a, c) * t.at(b, c);
                    cols += t.at(c, a) * t.at(c, b);
                }
                EXPECT_EQ(rows, a == b ? factorial(n) : BigInt(0));
                EXPECT_EQ(cols * t.class_size(a), a == b ? factorial(n) : BigInt(0));
            }
        }
    }
}

TEST(CharacterTable, CsvRoundTrip) {
    const CharacterTable &t = character_table(5);
    const std::string csv = t.to_csv();
    const CharacterTable back = CharacterTable::from_csv("# comment\n" + csv);
    EXPECT_EQ(back.to_csv(), csv);
}

TEST(CharacterTable, CacheDirectoryIsUsed) {
    const auto dir = std::filesystem::temp_directory_path() / "symhsp_cache_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    ::setenv("HSP_CACHE_DIR", dir.c_str(), 1);
    const CharacterTable &t = character_table(9);
    ::unsetenv("HSP_CACHE_DIR");
    EXPECT_TRUE(std::filesystem::exists(dir / "chartable_9.csv"));
    EXPECT_EQ(t.at(P("8,1"), P("9")), -1);
    std::filesystem::remove_all(dir);
}

TEST(NormalizedCharacters, OnMatchings) {
    EXPECT_EQ(normalized_character_on_M(P("4")), 1);
    EXPECT_EQ(normalized_character_on_M(P("3,1")), Rational(-1, 3));
    EXPECT_EQ(normalized_character_on_M(P("2,2")), 1);
    EXPECT_THROW(normalized_character_on_M(P("3,2")), ValidationError);
}

TEST(Roichman, SixByElevenTable) {
    const RoichmanReport r = roichman_ratio_report(6, 0.9, 0.1);
    EXPECT_EQ(r.rows.size(), 121u);
    EXPECT_FALSE(r.below_hypothesis);
    for (const auto &row : r.rows) {
        if (row.lambda == Partition::row(6) || row.lambda == Partition::column(6)) {
            EXPECT_DOUBLE_EQ(row.abs_ratio, 1.0);
            EXPECT_DOUBLE_EQ(row.bound, 1.0);
            EXPECT_TRUE(row.holds);
        }
    }
    EXPECT_TRUE(roichman_ratio_report(4, 0.9, 0.1).below_hypothesis);
    EXPECT_THROW(roichman_ratio_report(6, 1.5, 0.1), ValidationError);
    EXPECT_THROW(roichman_ratio_report(6, 0.5, 0.0), ValidationError);
}
