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

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "symhsp/spectral.hpp"

using namespace symhsp;

namespace {

Partition P(const char *s) { return Partition::parse(s); }

}  // namespace

TEST(Plancherel, SmallCases) {
    const auto one = plancherel(1);
    ASSERT_EQ(one.weights.size(), 1u);
    EXPECT_EQ(one.weights[0].second, 1);

    const auto four = plancherel(4);
    EXPECT_EQ(four.probability(P("4")), Rational(1, 24));
    EXPECT_EQ(four.probability(P("3,1")), Rational(9, 24));
    EXPECT_EQ(four.probability(P("2,2")), Rational(4, 24));
    EXPECT_EQ(four.probability(P("2,1,1")), Rational(9, 24));
    EXPECT_EQ(four.probability(P("1,1,1,1")), Rational(1, 24));
    EXPECT_EQ(four.total(), 1);
}

TEST(Plancherel, MatchesTableauxCounts) {
    for (int n = 1; n <= 10; ++n) {
        const auto dist = plancherel(n);
        for (const auto &[lambda, p] : dist.weights) {
            const oracle::Int d = oracle::count_tableaux(lambda.parts());
            EXPECT_EQ(p, Rational(d * d, oracle::factorial(n)));
        }
    }
}

TEST(WeakSampling, TrivialSubgroupIsPlancherel) {
    for (int n = 1; n <= 10; ++n) {
        const auto a = weak_sampling_distribution(n, std::nullopt);
        const auto b = plancherel(n);
        EXPECT_EQ(a.weights, b.weights);
    }
}

TEST(WeakSampling, FourPointMatching) {
    // Ranks (d + chi(m)) / 2 are 1, 1, 2, 1, 1; weights 2 d rank / 24.
    for (const auto &m : enumerate_matchings(4)) {
        const auto w = weak_sampling_distribution(4, m);
        EXPECT_EQ(w.probability(P("4")), Rational(1, 12));
        EXPECT_EQ(w.probability(P("3,1")), Rational(1, 4));
        EXPECT_EQ(w.probability(P("2,2")), Rational(1, 3));
        EXPECT_EQ(w.probability(P("2,1,1")), Rational(1, 4));
        EXPECT_EQ(w.probability(P("1,1,1,1")), Rational(1, 12));
        EXPECT_EQ(w.total(), 1);
    }
}

TEST(WeakSampling, WeightsFromIndependentCharacters) {
    for (int n : {4, 5, 6, 7, 8}) {
        for (int t = 1; 2 * t <= n; ++t) {
            const Permutation m = enumerate_involutions(n, t).front();
            const auto w = weak_sampling_distribution(n, m);
            EXPECT_EQ(w.total(), 1);
            for (const auto &[lambda, p] : w.weights) {
                const oracle::Int d = oracle::count_tableaux(lambda.parts());
                const oracle::Int chi = oracle::character(lambda.parts(), m.cycle_type().parts());
                EXPECT_EQ(p, Rational(d * (d + chi), oracle::factorial(n)));
            }
        }
    }
}

TEST(WeakSampling, RejectsNonInvolutions) {
    EXPECT_THROW(weak_sampling_distribution(3, Permutation({1, 2, 0})), ValidationError);
}

TEST(TotalVariation, ExactValue) {
    const auto m = enumerate_matchings(4)[0];
    // |1/12-1/24| + |1/4-3/8| + |1/3-1/6| + |1/4-3/8| + |1/12-1/24|, halved.
    EXPECT_EQ(total_variation(weak_sampling_distribution(4, m), plancherel(4)), Rational(1, 4));
}

TEST(Sampling, ExactSamplerFollowsPlancherel) {
    Rng rng(3);
    std::map<Partition, int> counts;
    const int trials = 24000;
    for (int i = 0; i < trials; ++i) {
        ++counts[sample_plancherel(4, rng)];
    }
    for (const auto &[lambda, p] : plancherel(4).weights) {
        const double expected = to_double(p) * trials;
        EXPECT_NEAR(counts[lambda], expected, 5 * std::sqrt(expected));
    }
}

TEST(Sampling, RskAndExactSamplersAgree) {
    // Chi-squared statistic of the RSK sampler against exact weights, n = 8.
    Rng rng(11);
    const int trials = 20000;
    std::map<Partition, int> counts;
    for (int i = 0; i < trials; ++i) {
        ++counts[sample_plancherel_rsk(8, rng)];
    }
    double chi2 = 0.0;
    const auto dist = plancherel(8);
    for (const auto &[lambda, p] : dist.weights) {
        const double e = to_double(p) * trials;
        chi2 += (counts[lambda] - e) * (counts[lambda] - e) / e;
    }
    // 21 degrees of freedom; the 0.999 quantile is about 46.8.
    EXPECT_LT(chi2, 46.8);
}

TEST(Sampling, RskShapeOfSmallPermutations) {
    EXPECT_EQ(rsk_shape(Permutation::identity(4)), P("4"));
    EXPECT_EQ(rsk_shape(Permutation({3, 2, 1, 0})), P("1,1,1,1"));
    EXPECT_EQ(rsk_shape(Permutation({1, 0, 2})), P("2,1"));
}

TEST(Cutoff, SqrtLogExample) {
    // Choose c so that the width bound is n - 1 at n = 8.
    const double c = std::log(8.0) / std::sqrt(8.0);
    const CutoffSet s = cutoff_set(8, c, CutoffStyle::sqrt_log);
    std::vector<Partition> expected{P("8"), P("7,1"), P("2,1,1,1,1,1,1"), P("1,1,1,1,1,1,1,1")};
    EXPECT_EQ(s.members, expected);
    // The reported 2 x p(x) bound is loose only for larger x: here x = 1 and
    // the exact count is 2 (p(0) + p(1)) = 4.
    EXPECT_NEAR(s.slack, 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(s.size_bound, 2.0);
}

TEST(Cutoff, CountIsTwiceTheSmallPartitionsBelowTheSlack) {
    for (int n : {10, 16, 24}) {
        const CutoffSet s = cutoff_set(n, 0.2, CutoffStyle::linear);
        const int x = static_cast<int>(std::floor(s.slack + 1e-9));
        BigInt small = 0;
        for (int j = 0; j <= x; ++j) {
            small += oracle::partition_count(j);
        }
        EXPECT_LE(BigInt(s.members.size()), 2 * small) << n;
    }
}

TEST(Cutoff, LinearNearZero) {
    const CutoffSet s = cutoff_set(9, 1e-6, CutoffStyle::linear);
    EXPECT_EQ(s.members, (std::vector<Partition>{Partition::row(9), Partition::column(9)}));
    EXPECT_THROW(cutoff_set(9, 0.3, CutoffStyle::linear), ValidationError);
    EXPECT_THROW(cutoff_set(9, 0.0, CutoffStyle::linear), ValidationError);
}

TEST(Cutoff, PlancherelMassDecreases) {
    Rational last = 2;
    for (int n = 8; n <= 24; n += 2) {
        const CutoffSet s = cutoff_set(n, 0.2, CutoffStyle::linear);
        EXPECT_LT(s.plancherel_mass, last) << n;
        last = s.plancherel_mass;
        for (const auto &p : s.members) {
            EXPECT_LE(dimension(p), s.max_dimension);
        }
    }
}

TEST(VershikKerov, ExactSmallCase) {
    const auto r = vershik_kerov_report(4, 100, 1);
    EXPECT_EQ(r.max_dimension, 3);
    EXPECT_NEAR(r.max_dimension_exponent, std::log(3.0 / std::sqrt(24.0)) / 2.0, 1e-12);
    const auto one = vershik_kerov_report(1, 5, 1);
    EXPECT_EQ(one.max_dimension, 1);
    for (double e : one.exponents) {
        EXPECT_EQ(e, 0.0);
    }
}

TEST(VershikKerov, SampledDimensionsStayBelowMaximum) {
    const auto r = vershik_kerov_report(20, 1000, 7);
    EXPECT_TRUE(r.consistent);
    EXPECT_EQ(r.quantiles.size(), 7u);
    EXPECT_LE(r.quantiles.back().second, r.max_dimension_exponent + 1e-12);
}
