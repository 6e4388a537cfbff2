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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "symhsp/cli.hpp"
#include "symhsp/measurement.hpp"
#include "symhsp/oracle.hpp"
#include "symhsp/tensor.hpp"

using namespace symhsp;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// 1. Sum of squared dimensions equals the group order, n = 1..10.
Outcome dimension_identity() {
    for (int n = 1; n <= 10; ++n) {
        BigInt total = 0;
        for (const auto &p : enumerate_partitions(n)) {
            total += dimension(p) * dimension(p);
        }
        if (total != factorial(n)) {
            return {false, "sum of d^2 differs from n! at n = " + std::to_string(n)};
        }
    }
    return {true, "sum of d^2 = n! for n = 1..10"};
}

// 2. Exact orthogonality to n = 8, traces of explicit matrices to n = 6.
Outcome character_checks() {
    for (int n = 1; n <= 8; ++n) {
        const CharacterTable &t = character_table(n);
        for (std::size_t a = 0; a < t.size(); ++a) {
            for (std::size_t b = 0; b < t.size(); ++b) {
                BigInt rows = 0;
                BigInt cols = 0;
                for (std::size_t c = 0; c < t.size(); ++c) {
                    rows += t.class_size(c) * t.at(a, c) * t.at(b, c);
                    cols += t.at(c, a) * t.at(c, b);
                }
                if (rows != (a == b ? factorial(n) : BigInt(0)) ||
                    cols * t.class_size(a) != (a == b ? factorial(n) : BigInt(0))) {
                    return {false, "orthogonality fails at n = " + std::to_string(n)};
                }
            }
        }
    }
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
        for (const auto &lambda : enumerate_partitions(n)) {
            const Irrep r(lambda);
            for (const auto &mu : enumerate_partitions(n)) {
                const double trace = r.matrix_of(ConjugacyClass{mu}.representative()).trace();
                worst = std::max(worst, std::abs(trace - to_double(character(lambda, mu))));
            }
        }
    }
    std::ostringstream os;
    os << "orthogonality exact for n <= 8; max |trace - chi| = " << worst << " for n <= 6";
    return {worst <= 1e-9, os.str()};
}

// 3. Numerical projector rank equals the character formula.
Outcome rank_formula() {
    int checked = 0;
    for (int n : {4, 6}) {
        for (const auto &lambda : enumerate_partitions(n)) {
            const std::vector<Irrep> irreps{Irrep(lambda)};
            const std::vector<Partition> factors{lambda};
            const BigInt expected = projector_rank_formula(factors, matching_cycle_type(n));
            for (const auto &m : enumerate_matchings(n)) {
                ++checked;
                if (BigInt(involution_projector(irreps, m).numerical_rank()) != expected) {
                    return {false, "rank mismatch for " + lambda.to_string() + " at " + m.to_string()};
                }
            }
        }
    }
    return {true, std::to_string(checked) + " (irrep, matching) pairs at n = 4, 6"};
}

// 4. Formula moments against exhaustive moments, one and two registers.
Outcome moment_formulas() {
    Rng rng(2024);
    double worst = 0.0;
    int vectors = 0;
    for (int n : {4, 6}) {
        const auto cls = matching_class(n);
        const auto parts = enumerate_partitions(n);
        std::vector<std::vector<Partition>> tuples;
        for (const auto &a : parts) {
            tuples.push_back({a});
        }
        for (const auto &a : parts) {
            for (const auto &b : parts) {
                tuples.push_back({a, b});
            }
        }
        for (const auto &t : tuples) {
            const RegisterContext ctx(n, t);
            for (int s = 0; s < 20; ++s) {
                const Eigen::VectorXd b = random_unit_vector(ctx.dim(), rng);
                const MomentReport r = projector_moments(ctx, cls, b);
                worst = std::max({worst, std::abs(r.expectation_formula - r.expectation_exhaustive),
                                  std::abs(r.variance_formula - r.variance_exhaustive)});
                ++vectors;
            }
        }
    }
    std::ostringstream os;
    os << vectors << " vectors, max deviation " << worst;
    return {worst <= 1e-8, os.str()};
}

// 5. Brute-force simulator against the analytic pipeline.
Outcome oracle_equivalence() {
    double worst = 0.0;
    int runs = 0;
    auto compare = [&](int n, int k, const std::optional<Permutation> &m) {
        const std::vector<Permutation> h =
            m ? two_element_subgroup(*m) : std::vector<Permutation>{Permutation::identity(n)};
        const OracleDistribution sim = simulate_standard_method(n, h, k);
        const IrrepDistribution names = weak_sampling_distribution(n, m);
        for (const auto &o : sim.outcomes) {
            double weight = 1.0;
            for (const auto &lambda : o.lambdas) {
                weight *= to_double(names.probability(lambda));
            }
            worst = std::max(worst, std::abs(weight - o.marginal));
            const RegisterContext ctx(n, o.lambdas);
            const std::vector<double> analytic =
                weight == 0.0 ? std::vector<double>(o.joint.size(), 0.0)
                : m           ? observation_distribution(ctx, *m).probabilities
                              : natural_distribution(ctx).probabilities;
            for (std::size_t b = 0; b < o.joint.size(); ++b) {
                worst = std::max(worst, std::abs(weight * analytic[b] - o.joint[b]));
            }
        }
        ++runs;
    };
    for (auto [n, k] : {std::pair{4, 1}, std::pair{4, 2}, std::pair{5, 1}}) {
        compare(n, k, std::nullopt);
        // n = 5 has no fixed-point-free involutions; use the class with two
        // transpositions, which is the largest involution class there.
        for (const auto &m : enumerate_involutions(n, n / 2)) {
            compare(n, k, m);
        }
    }
    std::ostringstream os;
    os << runs << " simulations, max |delta| = " << worst;
    return {worst <= 1e-9, os.str()};
}

// 6. Closed-form average multiplicity against exhaustive Plancherel averages.
Outcome average_multiplicity_check() {
    int checked = 0;
    for (int n = 1; n <= 5; ++n) {
        for (const auto &tau : enumerate_partitions(n)) {
            for (auto [k, l] : {std::pair{1, 0}, std::pair{2, 0}, std::pair{1, 1}, std::pair{0, 1}, std::pair{0, 2}}) {
                ++checked;
                if (average_multiplicity(tau, k, l) != oracle::plancherel_average_multiplicity(tau.parts(), k, l)) {
                    return {false, "mismatch at tau = " + tau.to_string() + ", (k, l) = (" + std::to_string(k) +
                                       ", " + std::to_string(l) + ")"};
                }
            }
        }
    }
    return {true, std::to_string(checked) + " exact rational comparisons, n <= 5"};
}

// 7. Reciprocal class-size sums: exact values and strict decrease.
Outcome reciprocal_sums() {
    Rational previous;
    for (int n = 1; n <= 60; ++n) {
        const Rational v = conjugacy_reciprocal_sum(n);
        if (v != oracle::reciprocal_class_sum(n)) {
            return {false, "value differs from the generating function at n = " + std::to_string(n)};
        }
        if (n > 20 && !(v < previous)) {
            return {false, "not strictly decreasing at n = " + std::to_string(n)};
        }
        previous = v;
    }
    std::ostringstream os;
    os << "exact for n <= 60, strictly decreasing on 20..60, value at 60 = " << to_double(previous);
    return {true, os.str()};
}

// 8. Transverse projection bound on random instances.
Outcome transverse_projection() {
    Rng rng(8);
    double worst_slack = -1e300;
    for (int i = 0; i < 200; ++i) {
        const int du = 1 + static_cast<int>(uniform_below(rng, 6));
        const int dy = 1 + static_cast<int>(uniform_below(rng, 6));
        const int dw = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(du * du) + 1));
        const auto r = transverse_projection_check(du, dy, dw, 1, 1000 + static_cast<std::uint64_t>(i));
        worst_slack = std::max(worst_slack, r.max_sum - r.bound);
        if (!r.holds) {
            return {false, "bound exceeded at instance " + std::to_string(i)};
        }
    }
    std::ostringstream os;
    os << "200 instances, max (sum - dimY dimW) = " << worst_slack;
    return {true, os.str()};
}

// 9. Median distance from uniform decreases with n for two registers.
Outcome two_register_trend() {
    std::vector<double> medians;
    std::ostringstream os;
    for (int n : {4, 6, 8}) {
        TvExperimentConfig config;
        config.n = n;
        config.registers = 2;
        config.samples = 20;
        config.seed = 7;
        const auto r = tv_experiment(config);
        medians.push_back(r.median_tv);
        os << "n=" << n << ": " << r.median_tv << "  ";
    }
    return {medians[0] > medians[1] && medians[1] > medians[2], os.str()};
}

// 10. Byte-identical reports from repeated runs.
Outcome determinism() {
    const auto base = std::filesystem::temp_directory_path() / "symhsp_acceptance";
    std::filesystem::remove_all(base);
    std::vector<std::string> bodies;
    for (const char *run : {"a", "b"}) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli({"tv-scan", "6", "2", "--seed", "7", "--out", (base / run).string()}, out, err);
        if (code != kExitOk) {
            return {false, "tv-scan exited with " + std::to_string(code) + ": " + err.str()};
        }
        for (const char *file : {"tv-scan_6_2.csv", "tv-scan_6_2.json"}) {
            std::ifstream f(base / run / file, std::ios::binary);
            std::stringstream s;
            s << f.rdbuf();
            bodies.push_back(s.str());
        }
    }
    std::filesystem::remove_all(base);
    const bool same = bodies[0] == bodies[2] && bodies[1] == bodies[3] && !bodies[0].empty();
    return {same, same ? "CSV and JSON reports identical across runs" : "reports differ"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"dimension identity", dimension_identity},
        {"character orthogonality and matrix traces", character_checks},
        {"projector rank formula", rank_formula},
        {"expectation and variance formulas", moment_formulas},
        {"oracle equivalence", oracle_equivalence},
        {"average multiplicity", average_multiplicity_check},
        {"conjugacy reciprocal sum", reciprocal_sums},
        {"transverse projection bound", transverse_projection},
        {"two-register trend", two_register_trend},
        {"determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail
                  << " (" << secs << " s)" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
