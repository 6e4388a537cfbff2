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

#include "symhsp/measurement.hpp"
#include "symhsp/oracle.hpp"

using namespace symhsp;

namespace {

Partition P(const char *s) { return Partition::parse(s); }

std::vector<Permutation> trivial_group(int n) { return {Permutation::identity(n)}; }

}  // namespace

TEST(CosetState, TrivialSubgroupIsPointMass) {
    const Permutation g({2, 0, 1, 3});
    const auto v = coset_state(4, trivial_group(4), g);
    EXPECT_NEAR(v.amplitudes.norm(), 1.0, 1e-12);
    EXPECT_EQ(v.amplitudes(static_cast<Eigen::Index>(permutation_rank(g))), 1.0);
}

TEST(CosetState, TwoElementSubgroup) {
    const Permutation m = enumerate_matchings(4)[0].to_permutation();
    const auto v = coset_state(4, two_element_subgroup(m), Permutation::identity(4));
    EXPECT_NEAR(v.amplitudes(0).real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(v.amplitudes(static_cast<Eigen::Index>(permutation_rank(m))).real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(v.amplitudes.norm(), 1.0, 1e-12);
}

TEST(CosetState, RejectsNonSubgroups) {
    const Permutation c({1, 2, 0});
    EXPECT_THROW(coset_state(3, {Permutation::identity(3), c}, c), ValidationError);
    EXPECT_THROW(coset_state(3, {c, c * c}, c), ValidationError);
    EXPECT_THROW(two_element_subgroup(c), ValidationError);
}

TEST(Qft, SmallCases) {
    EXPECT_NEAR((qft_matrix(1) - Eigen::MatrixXcd::Ones(1, 1)).norm(), 0.0, 1e-15);
    for (int n = 2; n <= 5; ++n) {
        const Eigen::MatrixXcd f = qft_matrix(n);
        const auto size = f.rows();
        EXPECT_EQ(fourier_layout(n).size(), size);
        EXPECT_LT((f * f.adjoint() - Eigen::MatrixXcd::Identity(size, size)).cwiseAbs().maxCoeff(), 1e-10);
        for (Eigen::Index r = 0; r < size; ++r) {
            EXPECT_NEAR(f.row(r).norm(), 1.0, 1e-10);
        }
    }
    EXPECT_THROW(qft_matrix(7), CapExceeded);
}

TEST(MixedState, TraceOneAndPositive) {
    for (const auto &m : enumerate_matchings(4)) {
        const Eigen::MatrixXcd rho = coset_mixed_state(4, two_element_subgroup(m.to_permutation()));
        EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
        EXPECT_GE(es.eigenvalues().minCoeff(), -1e-10);
    }
}

TEST(Simulation, TrivialSubgroupIsPlancherelTimesNatural) {
    for (int k : {1, 2}) {
        for (int n = 1; n <= 4; ++n) {
            const auto dist = simulate_standard_method(n, trivial_group(n), k);
            EXPECT_NEAR(dist.total(), 1.0, 1e-9);
            const auto planch = plancherel(n);
            for (const auto &o : dist.outcomes) {
                double weight = 1.0;
                int dim = 1;
                for (const auto &lambda : o.lambdas) {
                    weight *= to_double(planch.probability(lambda));
                    dim *= static_cast<int>(to_double(dimension(lambda)));
                }
                EXPECT_NEAR(o.marginal, weight, 1e-9);
                for (double p : o.joint) {
                    EXPECT_NEAR(p, weight / dim, 1e-9);
                }
            }
        }
    }
}

TEST(Simulation, NameMarginalReconstructsWeakSampling) {
    for (int n : {4, 5, 6}) {
        for (const auto &m : enumerate_involutions(n, n / 2)) {
            const auto dist = simulate_standard_method(n, two_element_subgroup(m), 1);
            const auto weak = weak_sampling_distribution(n, m);
            const BigInt denom = factorial(n);
            for (const auto &o : dist.outcomes) {
                // Weights are multiples of 1/n!; round and compare exactly.
                const auto numer = static_cast<long long>(std::llround(o.marginal * to_double(denom)));
                EXPECT_EQ(Rational(BigInt(numer), denom), weak.probability(o.lambdas[0]));
            }
            if (n == 6) {
                break;  // one member of the class suffices for the largest case
            }
        }
    }
}

TEST(Simulation, TwoRegisterStandardExample) {
    const Permutation m({1, 0, 3, 2});
    const auto dist = simulate_standard_method(4, two_element_subgroup(m), 2);
    const RegisterContext ctx(4, {P("3,1"), P("3,1")});
    const auto analytic = observation_distribution(ctx, m);
    const auto weak = weak_sampling_distribution(4, m);
    const double w = std::pow(to_double(weak.probability(P("3,1"))), 2);
    bool found = false;
    for (const auto &o : dist.outcomes) {
        if (o.lambdas == std::vector<Partition>{P("3,1"), P("3,1")}) {
            found = true;
            ASSERT_EQ(o.joint.size(), 9u);
            for (std::size_t b = 0; b < 9; ++b) {
                EXPECT_NEAR(o.joint[b] / w, analytic.probabilities[b], 1e-9);
            }
        }
    }
    EXPECT_TRUE(found);
}

TEST(Simulation, ConjugationLeavesNameMarginalInvariant) {
    const auto ms = enumerate_matchings(4);
    const auto first = simulate_standard_method(4, two_element_subgroup(ms[0].to_permutation()), 1);
    for (const auto &m : ms) {
        const auto other = simulate_standard_method(4, two_element_subgroup(m.to_permutation()), 1);
        for (std::size_t i = 0; i < first.outcomes.size(); ++i) {
            EXPECT_NEAR(first.outcomes[i].marginal, other.outcomes[i].marginal, 1e-12);
        }
    }
}

TEST(Simulation, CustomFrames) {
    Rng rng(3);
    const Permutation m({1, 0, 3, 2});
    const FrameProvider frames = [&](const std::vector<Partition> &lambdas) {
        int d = 1;
        for (const auto &l : lambdas) {
            d *= static_cast<int>(to_double(dimension(l)));
        }
        Eigen::MatrixXd v(d, 2 * d);
        v << random_orthogonal(d, rng), random_orthogonal(d, rng);
        return fit_frame(v);
    };
    const auto dist = simulate_standard_method(4, two_element_subgroup(m), 1, frames);
    EXPECT_NEAR(dist.total(), 1.0, 1e-9);
}

TEST(Simulation, CapsAndChecks) {
    EXPECT_THROW(simulate_standard_method(6, trivial_group(6), 2), CapExceeded);
    EXPECT_THROW(simulate_standard_method(4, trivial_group(4), 0), ValidationError);
    const auto check = oracle_check(4, 2);
    EXPECT_TRUE(check.pass());
    EXPECT_EQ(check.involutions, 3);
}
