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

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "symhsp/characters.hpp"

namespace symhsp {

/// A factor of a tensor product of irreps. S_n characters are real, so the
/// conjugated flag only changes the label, never the decomposition.
struct TensorFactor {
    Partition lambda;
    bool conjugated = false;
};

struct KroneckerDecomposition {
    std::vector<TensorFactor> factors;
    /// Nonzero multiplicities in reverse-lexicographic order of nu.
    std::vector<std::pair<Partition, BigInt>> multiplicities;

    BigInt multiplicity(const Partition &nu) const;
    /// prod of factor dimensions.
    BigInt dimension() const;
};

/// <chi^nu, prod_f chi^f>, exact. Throws ValidationError on mixed n or an
/// empty factor list.
BigInt kronecker_multiplicity(const Partition &nu, const std::vector<Partition> &factors);

KroneckerDecomposition decompose(const std::vector<TensorFactor> &factors);
KroneckerDecomposition decompose(const std::vector<Partition> &factors);

enum class CombinatorialRep { regular, conjugation };

/// chi_R(g) = n! at the identity and 0 elsewhere; chi_C(g) = n! / |[g]|.
BigInt combinatorial_character(CombinatorialRep kind, const ConjugacyClass &c);

/// Plancherel average of <chi_tau, chi_V> / dim V for
/// V = rho_1 x ... x rho_k x (sigma_1 x sigma_1*) x ... x (sigma_l x sigma_l*),
/// evaluated in closed form as <chi_tau, chi_R^k chi_C^l> / (n!)^(k+l).
/// Throws ValidationError when k = l = 0 (empty tensor product).
Rational average_multiplicity(const Partition &tau, int k, int l);

/// sum over cycle types lambda of 1 / |C_lambda|.
Rational conjugacy_reciprocal_sum(int n);

struct TransverseProjectionReport {
    int dim_u = 0;
    int dim_y = 0;
    int dim_w = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    /// Per-trial value of sum_b |(Pi_W x 1)(b x b*)|^2.
    std::vector<double> sums;
    double bound = 0.0;  // dim_y * dim_w
    double max_sum = 0.0;
    bool holds = true;
};

/// Value of sum_b |(Pi_W x 1_{Y x Y*})(b x b*)|^2 for an orthonormal basis
/// (columns of `basis`, each a vector of U x Y with U the slow index) and an
/// orthonormal basis of W inside U x U* (columns of `w_basis`).
double transverse_projection_sum(int dim_u, int dim_y, const Eigen::MatrixXcd &basis,
                                 const Eigen::MatrixXcd &w_basis);

/// Random orthonormal basis B of U x Y and random W of the given dimension,
/// repeated `trials` times; each sum is checked against dim_y * dim_w + 1e-9.
TransverseProjectionReport transverse_projection_check(int dim_u, int dim_y, int dim_w, int trials,
                                                       std::uint64_t seed);

/// Haar-ish random unitary (QR of a complex Gaussian matrix).
Eigen::MatrixXcd random_unitary(int dim, Rng &rng);
/// First `cols` columns of a random unitary.
Eigen::MatrixXcd random_isometry(int dim, int cols, Rng &rng);

}  // namespace symhsp
