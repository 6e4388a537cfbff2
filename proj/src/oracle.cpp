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

#include "symhsp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "symhsp/measurement.hpp"
#include "symhsp/spectral.hpp"

namespace symhsp {

long oracle_order_cap(int registers) { return registers <= 1 ? 720 : 120; }

void check_subgroup(int n, const std::vector<Permutation> &subgroup) {
    if (subgroup.empty()) {
        throw ValidationError("subgroup is empty");
    }
    std::set<Permutation> members;
    for (const auto &h : subgroup) {
        if (h.n() != n) {
            throw ValidationError("subgroup element " + h.to_cycle_string() + " is not in S_" + std::to_string(n));
        }
        if (!members.insert(h).second) {
            throw ValidationError("subgroup lists " + h.to_cycle_string() + " twice");
        }
    }
    if (!members.contains(Permutation::identity(n))) {
        throw ValidationError("subgroup does not contain the identity");
    }
    for (const auto &a : subgroup) {
        if (!members.contains(a.inverse())) {
            throw ValidationError("subgroup is not closed under inverses at " + a.to_cycle_string());
        }
        for (const auto &b : subgroup) {
            if (!members.contains(a * b)) {
                throw ValidationError("subgroup is not closed under products at " + a.to_cycle_string() + " * " +
                                      b.to_cycle_string());
            }
        }
    }
}

std::vector<Permutation> two_element_subgroup(const Permutation &m) {
    if (m.is_identity() || !(m * m).is_identity()) {
        throw ValidationError(m.to_cycle_string() + " is not an involution");
    }
    return {Permutation::identity(m.n()), m};
}

GroupAlgebraVector coset_state(int n, const std::vector<Permutation> &subgroup, const Permutation &c) {
    check_subgroup(n, subgroup);
    if (c.n() != n) {
        throw ValidationError("coset representative is not in S_" + std::to_string(n));
    }
    GroupAlgebraVector v;
    v.n = n;
    v.amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(to_double(factorial(n))));
    const double amp = 1.0 / std::sqrt(static_cast<double>(subgroup.size()));
    for (const auto &h : subgroup) {
        v.amplitudes(static_cast<Eigen::Index>(permutation_rank(c * h))) = amp;
    }
    return v;
}

int FourierLayout::size() const {
    int s = 0;
    for (const auto &b : blocks) {
        s += b.dim * b.dim;
    }
    return s;
}

FourierLayout fourier_layout(int n) {
    FourierLayout layout;
    layout.n = n;
    int offset = 0;
    for (const auto &lambda : enumerate_partitions(n)) {
        const int d = static_cast<int>(to_double(dimension(lambda)));
        layout.blocks.push_back({lambda, d, offset});
        offset += d * d;
    }
    return layout;
}

namespace {

void check_order(int n, int registers) {
    if (n < 1) {
        throw ValidationError("n must be positive");
    }
    const double order = std::tgamma(n + 1.0);
    if (order > static_cast<double>(oracle_order_cap(registers))) {
        throw CapExceeded("dense group-algebra simulation of S_" + std::to_string(n) + " with " +
                          std::to_string(registers) + " register(s) exceeds the cap of order " +
                          std::to_string(oracle_order_cap(registers)));
    }
}

}  // namespace

Eigen::MatrixXcd qft_matrix(int n) {
    check_order(n, 1);
    const FourierLayout layout = fourier_layout(n);
    const auto elements = enumerate_permutations(n);
    const double order = static_cast<double>(elements.size());
    Eigen::MatrixXcd f(layout.size(), static_cast<Eigen::Index>(elements.size()));
    for (const auto &block : layout.blocks) {
        const Irrep irrep(block.lambda);
        const double scale = std::sqrt(block.dim / order);
        for (std::size_t g = 0; g < elements.size(); ++g) {
            const Eigen::MatrixXd rho = irrep.matrix_of(elements[g]);
            for (int i = 0; i < block.dim; ++i) {
                for (int j = 0; j < block.dim; ++j) {
                    f(block.offset + i * block.dim + j, static_cast<Eigen::Index>(g)) = scale * rho(i, j);
                }
            }
        }
    }
    return f;
}

Eigen::MatrixXcd coset_mixed_state(int n, const std::vector<Permutation> &subgroup) {
    check_subgroup(n, subgroup);
    const auto elements = enumerate_permutations(n);
    const auto size = static_cast<Eigen::Index>(elements.size());
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(size, size);
    const double weight = 1.0 / (static_cast<double>(elements.size()) * static_cast<double>(subgroup.size()));
    for (const auto &c : elements) {
        std::vector<Eigen::Index> support;
        for (const auto &h : subgroup) {
            support.push_back(static_cast<Eigen::Index>(permutation_rank(c * h)));
        }
        for (auto a : support) {
            for (auto b : support) {
                rho(a, b) += weight;
            }
        }
    }
    return rho;
}

double OracleDistribution::total() const {
    double t = 0.0;
    for (const auto &o : outcomes) {
        for (double p : o.joint) {
            t += p;
        }
    }
    return t;
}

OracleDistribution simulate_standard_method(int n, const std::vector<Permutation> &subgroup, int registers,
                                            const FrameProvider &frames) {
    if (registers < 1) {
        throw ValidationError("need at least one register");
    }
    check_order(n, registers);
    const FourierLayout layout = fourier_layout(n);
    const Eigen::MatrixXcd f = qft_matrix(n);
    const Eigen::MatrixXcd state = f * coset_mixed_state(n, subgroup) * f.adjoint();

    // Right-index operator of each block: R(j, j') = sum_i state((i,j), (i,j')).
    std::vector<Eigen::MatrixXcd> reduced;
    for (const auto &block : layout.blocks) {
        Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(block.dim, block.dim);
        for (int i = 0; i < block.dim; ++i) {
            for (int j = 0; j < block.dim; ++j) {
                for (int jp = 0; jp < block.dim; ++jp) {
                    r(j, jp) += state(block.offset + i * block.dim + j, block.offset + i * block.dim + jp);
                }
            }
        }
        reduced.push_back(std::move(r));
    }

    OracleDistribution out;
    out.n = n;
    out.registers = registers;
    const std::size_t blocks = layout.blocks.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(registers), 0);
    while (true) {
        OracleOutcome outcome;
        Eigen::MatrixXcd joint = Eigen::MatrixXcd::Ones(1, 1);
        for (std::size_t r : idx) {
            outcome.lambdas.push_back(layout.blocks[r].lambda);
            const Eigen::MatrixXcd prev = joint;
            const Eigen::MatrixXcd &next = reduced[r];
            joint.resize(prev.rows() * next.rows(), prev.cols() * next.cols());
            for (Eigen::Index a = 0; a < prev.rows(); ++a) {
                for (Eigen::Index b = 0; b < prev.cols(); ++b) {
                    joint.block(a * next.rows(), b * next.cols(), next.rows(), next.cols()) = prev(a, b) * next;
                }
            }
        }
        outcome.marginal = joint.trace().real();
        const MeasurementFrame frame =
            frames ? frames(outcome.lambdas) : standard_frame(static_cast<int>(joint.rows()));
        if (frame.dim() != joint.rows()) {
            throw ValidationError("frame dimension does not match the observed irreps");
        }
        for (int b = 0; b < frame.size(); ++b) {
            const Eigen::VectorXcd v = frame.vectors.col(b).cast<std::complex<double>>();
            outcome.joint.push_back(frame.weights(b) * v.dot(joint * v).real());
        }
        out.outcomes.push_back(std::move(outcome));

        int r = registers - 1;
        while (r >= 0 && ++idx[static_cast<std::size_t>(r)] == blocks) {
            idx[static_cast<std::size_t>(r)] = 0;
            --r;
        }
        if (r < 0) {
            break;
        }
    }
    return out;
}

OracleCheck oracle_check(int n, int registers) {
    if (n < 2) {
        throw ValidationError("oracle-check needs n >= 2");
    }
    check_order(n, registers);
    OracleCheck check;
    check.n = n;
    check.registers = registers;
    for (const auto &m : enumerate_involutions(n, n / 2)) {
        ++check.involutions;
        const OracleDistribution oracle = simulate_standard_method(n, two_element_subgroup(m), registers);
        const IrrepDistribution names = weak_sampling_distribution(n, m);
        for (const auto &outcome : oracle.outcomes) {
            ++check.outcomes;
            double weight = 1.0;
            for (const auto &lambda : outcome.lambdas) {
                weight *= to_double(names.probability(lambda));
            }
            check.max_difference = std::max(check.max_difference, std::abs(weight - outcome.marginal));
            const RegisterContext ctx(n, outcome.lambdas);
            std::vector<double> analytic(outcome.joint.size(), 0.0);
            if (weight != 0.0) {
                analytic = observation_distribution(ctx, m).probabilities;
            }
            for (std::size_t b = 0; b < outcome.joint.size(); ++b) {
                check.max_difference =
                    std::max(check.max_difference, std::abs(weight * analytic[b] - outcome.joint[b]));
            }
        }
    }
    return check;
}

}  // namespace symhsp
