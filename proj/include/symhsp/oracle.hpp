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

#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "symhsp/rep_matrices.hpp"

namespace symhsp {

/// Largest group order for which the dense Fourier transform is built, by
/// register count: 720 for one register, 120 per register otherwise.
long oracle_order_cap(int registers);

/// Vector in C[S_n], indexed by enumerate_permutations(n).
struct GroupAlgebraVector {
    int n = 0;
    Eigen::VectorXcd amplitudes;
};

/// |cH> = |H|^{-1/2} sum_h |ch>. Throws ValidationError unless H is a
/// subgroup of S_n (closed, contains the identity, no duplicates).
GroupAlgebraVector coset_state(int n, const std::vector<Permutation> &subgroup, const Permutation &c);

/// Verifies the subgroup axioms; throws ValidationError naming the failure.
void check_subgroup(int n, const std::vector<Permutation> &subgroup);

/// Subgroup {1, m}.
std::vector<Permutation> two_element_subgroup(const Permutation &m);

struct FourierBlock {
    Partition lambda;
    int dim = 0;
    /// First row of the block; rows are offset + i * dim + j.
    int offset = 0;
};

/// Row layout of the Fourier transform: one block per irrep, in the
/// reverse-lexicographic order of partitions, entries (i, j) row-major.
struct FourierLayout {
    int n = 0;
    std::vector<FourierBlock> blocks;
    int size() const;
};

FourierLayout fourier_layout(int n);

/// Dense n! x n! matrix with rows (lambda, i, j) and entries
/// sqrt(d_lambda / n!) rho_lambda(g)_{ij}. Throws CapExceeded above the
/// one-register cap.
Eigen::MatrixXcd qft_matrix(int n);

/// (1/n!) sum_c |cH><cH|.
Eigen::MatrixXcd coset_mixed_state(int n, const std::vector<Permutation> &subgroup);

/// Supplies the frame used on the product of the observed irreps.
using FrameProvider = std::function<MeasurementFrame(const std::vector<Partition> &)>;

struct OracleOutcome {
    std::vector<Partition> lambdas;
    /// Probability of observing this tuple of names.
    double marginal = 0.0;
    /// Joint probability of (names, frame vector).
    std::vector<double> joint;
};

struct OracleDistribution {
    int n = 0;
    int registers = 0;
    std::vector<OracleOutcome> outcomes;
    double total() const;
};

/// Runs the standard method on k copies of the coset mixed state: Fourier
/// transform every register, observe the irrep names, trace out the left
/// (coset-representative) index and measure the right index of each
/// register with the frame on the product space. Tuples enumerate the
/// irreps of every register in layout order, register 0 slowest.
OracleDistribution simulate_standard_method(int n, const std::vector<Permutation> &subgroup, int registers,
                                            const FrameProvider &frames = {});

struct OracleCheck {
    int n = 0;
    int registers = 0;
    int involutions = 0;
    int outcomes = 0;
    double max_difference = 0.0;
    bool pass() const { return max_difference <= 1e-9; }
};

/// Compares the simulator against the analytic pipeline
/// P(names) * a_b |Pi^{(x)k} b|^2 / rank for every involution with
/// floor(n/2) transpositions and the standard frame.
OracleCheck oracle_check(int n, int registers);

}  // namespace symhsp
