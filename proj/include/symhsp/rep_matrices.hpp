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

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "symhsp/characters.hpp"

namespace symhsp {

inline constexpr int kIrrepDimCap = 5000;
inline constexpr long kProductDimCap = 20000;
/// Largest explicit (dense, eigen-decomposed) tensor projector we build.
inline constexpr long kDenseProjectorCap = 4096;

/// Irreducible representation of S_n in Young's orthogonal form. The basis is
/// the standard Young tableaux of shape lambda, ordered lexicographically by
/// their row words; generator k is the matrix of the adjacent transposition
/// (k, k+1) on the zero-based points.
class Irrep {
  public:
    /// Throws CapExceeded if the dimension is above `dim_cap`.
    explicit Irrep(const Partition &lambda, int dim_cap = kIrrepDimCap);

    const Partition &partition() const { return lambda_; }
    int n() const { return lambda_.n(); }
    int dim() const { return dim_; }
    /// Row word of basis tableau t: rows[t][k] is the row holding entry k.
    const std::vector<std::vector<int>> &tableaux() const { return rows_; }

    /// Dense d x d matrix of the transposition (k, k+1).
    Eigen::MatrixXd generator_matrix(int k) const;
    /// m <- G_k * m, using the two-nonzeros-per-row structure of G_k.
    void apply_generator_left(int k, Eigen::MatrixXd &m) const;
    /// Matrix of an arbitrary permutation (bubble-sort word in generators).
    Eigen::MatrixXd matrix_of(const Permutation &g) const;

  private:
    Partition lambda_;
    int dim_ = 0;
    std::vector<std::vector<int>> rows_;
    // Per generator and basis vector: diagonal entry, partner index (-1 when
    // none) and the off-diagonal entry.
    std::vector<std::vector<double>> diag_;
    std::vector<std::vector<int>> partner_;
    std::vector<std::vector<double>> off_;
};

Irrep build_irrep(const Partition &lambda, int dim_cap = kIrrepDimCap);

/// Orthogonal projector with its provenance.
struct Projector {
    Eigen::MatrixXd matrix;
    std::vector<Partition> factors;
    std::string involution;

    /// Number of eigenvalues above 1/2.
    int numerical_rank() const;
    /// max(|P^2 - P|, |P - P^T|), entrywise.
    double idempotency_residual() const;
};

/// (I + rho(m)) / 2 for one irrep, and its tensor power over several irreps.
/// Throws ValidationError on mixed n, CapExceeded above kDenseProjectorCap.
Projector involution_projector(std::span<const Irrep> irreps, const Permutation &m);
Projector involution_projector(std::span<const Irrep> irreps, const Involution &m);

/// (d/2)(1 + chi(class of m)/d), summed into a product over the factors.
BigInt projector_rank_formula(std::span<const Partition> factors, const Partition &involution_class);

/// Weighted family of unit vectors (columns of `vectors`).
struct MeasurementFrame {
    Eigen::MatrixXd vectors;
    Eigen::VectorXd weights;

    int dim() const { return static_cast<int>(vectors.rows()); }
    int size() const { return static_cast<int>(vectors.cols()); }
};

/// The standard orthonormal basis with unit weights.
MeasurementFrame standard_frame(int dim);

/// Operator norm of sum_b a_b pi_b - I. Throws ValidationError on a zero
/// vector, a non-positive weight or a dimension mismatch.
double validate_frame(const MeasurementFrame &frame, int dim);

/// max over `trials` random x of | sum_b a_b |<b,x>|^2 - |x|^2 | / |x|^2.
double frame_energy_residual(const MeasurementFrame &frame, Rng &rng, int trials = 20);

/// Normalises the given vectors and fits non-negative weights to the
/// completeness condition by non-negative least squares. Throws
/// ValidationError if the fitted residual exceeds `tolerance`.
MeasurementFrame fit_frame(const Eigen::MatrixXd &vectors, double tolerance = 1e-8);

/// Lawson-Hanson non-negative least squares: argmin |A x - b| with x >= 0.
Eigen::VectorXd nnls(const Eigen::MatrixXd &a, const Eigen::VectorXd &b, int max_iterations = 0);

/// Parses {"dim": d, "vectors": [[...], ...], "weights": [...]}. Vectors are
/// normalised; weights are fitted when absent. Frames whose completeness
/// residual exceeds 1e-8 are rejected.
MeasurementFrame frame_from_json(const std::string &text);

/// Random real orthogonal matrix (QR of a Gaussian matrix).
Eigen::MatrixXd random_orthogonal(int dim, Rng &rng);
/// Random real unit vector.
Eigen::VectorXd random_unit_vector(int dim, Rng &rng);

}  // namespace symhsp
