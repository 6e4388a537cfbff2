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

#include "symhsp/rep_matrices.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "json.hpp"

namespace symhsp {

namespace {

void tableaux_rec(const Partition &shape, std::vector<int> &fill, std::vector<int> &word,
                  std::vector<std::vector<int>> &out) {
    if (static_cast<int>(word.size()) == shape.n()) {
        out.push_back(word);
        return;
    }
    for (int r = 0; r < shape.length(); ++r) {
        const auto ru = static_cast<std::size_t>(r);
        if (fill[ru] < shape[r] && (r == 0 || fill[ru] < fill[ru - 1])) {
            ++fill[ru];
            word.push_back(r);
            tableaux_rec(shape, fill, word, out);
            word.pop_back();
            --fill[ru];
        }
    }
}

// Content (column - row) of every entry of the tableau with this row word.
std::vector<int> contents(const std::vector<int> &word) {
    std::vector<int> fill(word.size(), 0);
    std::vector<int> c(word.size());
    for (std::size_t e = 0; e < word.size(); ++e) {
        const auto r = static_cast<std::size_t>(word[e]);
        c[e] = fill[r] - word[e];
        ++fill[r];
    }
    return c;
}

}  // namespace

Irrep::Irrep(const Partition &lambda, int dim_cap) : lambda_(lambda) {
    const BigInt d = dimension(lambda);
    if (d > dim_cap) {
        throw CapExceeded("irrep (" + lambda.to_string() + ") has dimension " + d.str() + " above the cap " +
                          std::to_string(dim_cap));
    }
    dim_ = d.convert_to<int>();
    std::vector<int> fill(static_cast<std::size_t>(lambda.length()), 0);
    std::vector<int> word;
    tableaux_rec(lambda, fill, word, rows_);

    std::map<std::vector<int>, int> index;
    for (int t = 0; t < dim_; ++t) {
        index.emplace(rows_[static_cast<std::size_t>(t)], t);
    }

    const int gens = std::max(n() - 1, 0);
    diag_.assign(static_cast<std::size_t>(gens), std::vector<double>(static_cast<std::size_t>(dim_)));
    partner_.assign(static_cast<std::size_t>(gens), std::vector<int>(static_cast<std::size_t>(dim_), -1));
    off_.assign(static_cast<std::size_t>(gens), std::vector<double>(static_cast<std::size_t>(dim_), 0.0));
    for (int t = 0; t < dim_; ++t) {
        const auto &w = rows_[static_cast<std::size_t>(t)];
        const std::vector<int> c = contents(w);
        for (int k = 0; k < gens; ++k) {
            const auto ku = static_cast<std::size_t>(k);
            const int axial = c[ku + 1] - c[ku];
            diag_[ku][static_cast<std::size_t>(t)] = 1.0 / axial;
            if (axial == 1 || axial == -1) {
                continue;  // same row or same column: G acts by +-1
            }
            std::vector<int> swapped = w;
            std::swap(swapped[ku], swapped[ku + 1]);
            partner_[ku][static_cast<std::size_t>(t)] = index.at(swapped);
            off_[ku][static_cast<std::size_t>(t)] = std::sqrt(1.0 - 1.0 / (static_cast<double>(axial) * axial));
        }
    }
}

Eigen::MatrixXd Irrep::generator_matrix(int k) const {
    if (k < 0 || k >= n() - 1) {
        throw ValidationError("generator index out of range");
    }
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim_, dim_);
    const auto ku = static_cast<std::size_t>(k);
    for (int t = 0; t < dim_; ++t) {
        const auto tu = static_cast<std::size_t>(t);
        g(t, t) = diag_[ku][tu];
        if (partner_[ku][tu] >= 0) {
            g(t, partner_[ku][tu]) = off_[ku][tu];
        }
    }
    return g;
}

void Irrep::apply_generator_left(int k, Eigen::MatrixXd &m) const {
    const auto ku = static_cast<std::size_t>(k);
    for (int t = 0; t < dim_; ++t) {
        const auto tu = static_cast<std::size_t>(t);
        const int p = partner_[ku][tu];
        if (p < 0) {
            if (diag_[ku][tu] < 0) {
                m.row(t) *= -1.0;
            }
            continue;
        }
        if (p < t) {
            continue;  // handled with its partner
        }
        const auto pu = static_cast<std::size_t>(p);
        const Eigen::RowVectorXd a = m.row(t);
        const Eigen::RowVectorXd b = m.row(p);
        m.row(t) = diag_[ku][tu] * a + off_[ku][tu] * b;
        m.row(p) = off_[ku][pu] * a + diag_[ku][pu] * b;
    }
}

Eigen::MatrixXd Irrep::matrix_of(const Permutation &g) const {
    if (g.n() != n()) {
        throw ValidationError("permutation degree does not match the irrep");
    }
    // Bubble-sorting the image array w applies w <- w * s_j per swap, so
    // g = s_jr ... s_j1 and each swap multiplies on the left.
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim_, dim_);
    std::vector<int> w = g.images();
    const int len = static_cast<int>(w.size());
    for (int pass = 0; pass < len; ++pass) {
        bool swapped = false;
        for (int j = 0; j + 1 < len - pass; ++j) {
            if (w[static_cast<std::size_t>(j)] > w[static_cast<std::size_t>(j) + 1]) {
                std::swap(w[static_cast<std::size_t>(j)], w[static_cast<std::size_t>(j) + 1]);
                apply_generator_left(j, m);
                swapped = true;
            }
        }
        if (!swapped) {
            break;
        }
    }
    return m;
}

Irrep build_irrep(const Partition &lambda, int dim_cap) {
    return Irrep(lambda, dim_cap);
}

// ---------------------------------------------------------------- Projector

int Projector::numerical_rank() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix, Eigen::EigenvaluesOnly);
    return static_cast<int>((solver.eigenvalues().array() > 0.5).count());
}

double Projector::idempotency_residual() const {
    const double idem = (matrix * matrix - matrix).cwiseAbs().maxCoeff();
    const double sym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
    return std::max(idem, sym);
}

Projector involution_projector(std::span<const Irrep> irreps, const Permutation &m) {
    if (irreps.empty()) {
        throw ValidationError("involution_projector needs at least one irrep");
    }
    if (!(m * m).is_identity()) {
        throw ValidationError("projector generator is not an involution");
    }
    long total = 1;
    for (const auto &irrep : irreps) {
        if (irrep.n() != m.n()) {
            throw ValidationError("irreps and involution over different n");
        }
        total *= irrep.dim();
        if (total > kDenseProjectorCap) {
            throw CapExceeded("tensor projector dimension exceeds " + std::to_string(kDenseProjectorCap));
        }
    }
    Projector p;
    p.involution = m.to_cycle_string();
    p.matrix = Eigen::MatrixXd::Identity(1, 1);
    for (const auto &irrep : irreps) {
        const Eigen::MatrixXd single =
            0.5 * (Eigen::MatrixXd::Identity(irrep.dim(), irrep.dim()) + irrep.matrix_of(m));
        Eigen::MatrixXd next(p.matrix.rows() * single.rows(), p.matrix.cols() * single.cols());
        for (Eigen::Index i = 0; i < p.matrix.rows(); ++i) {
            for (Eigen::Index j = 0; j < p.matrix.cols(); ++j) {
                next.block(i * single.rows(), j * single.cols(), single.rows(), single.cols()) = p.matrix(i, j) * single;
            }
        }
        p.matrix = std::move(next);
        p.factors.push_back(irrep.partition());
    }
    return p;
}

Projector involution_projector(std::span<const Irrep> irreps, const Involution &m) {
    return involution_projector(irreps, m.to_permutation());
}

BigInt projector_rank_formula(std::span<const Partition> factors, const Partition &involution_class) {
    BigInt rank = 1;
    for (const auto &f : factors) {
        const BigInt twice = dimension(f) + character(f, involution_class);
        rank *= twice / 2;
    }
    return rank;
}

// -------------------------------------------------------------------- Frames

MeasurementFrame standard_frame(int dim) {
    if (dim < 1) {
        throw ValidationError("frame dimension must be positive");
    }
    return {Eigen::MatrixXd::Identity(dim, dim), Eigen::VectorXd::Ones(dim)};
}

double validate_frame(const MeasurementFrame &frame, int dim) {
    if (frame.dim() != dim) {
        throw ValidationError("frame vectors have dimension " + std::to_string(frame.dim()) + ", expected " +
                              std::to_string(dim));
    }
    if (frame.weights.size() != frame.vectors.cols()) {
        throw ValidationError("frame has " + std::to_string(frame.vectors.cols()) + " vectors but " +
                              std::to_string(frame.weights.size()) + " weights");
    }
    Eigen::MatrixXd sum = -Eigen::MatrixXd::Identity(dim, dim);
    for (int b = 0; b < frame.size(); ++b) {
        const double norm2 = frame.vectors.col(b).squaredNorm();
        if (norm2 == 0.0) {
            throw ValidationError("frame vector " + std::to_string(b) + " has zero length");
        }
        if (!(frame.weights(b) > 0.0)) {
            throw ValidationError("frame weight " + std::to_string(b) + " is not positive");
        }
        sum += frame.weights(b) * frame.vectors.col(b) * frame.vectors.col(b).transpose() / norm2;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sum, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double frame_energy_residual(const MeasurementFrame &frame, Rng &rng, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        Eigen::VectorXd x(frame.dim());
        for (int i = 0; i < frame.dim(); ++i) {
            x(i) = standard_normal(rng);
        }
        const Eigen::VectorXd overlaps = frame.vectors.transpose() * x;
        const double energy = frame.weights.dot(overlaps.cwiseAbs2());
        worst = std::max(worst, std::abs(energy - x.squaredNorm()) / x.squaredNorm());
    }
    return worst;
}

Eigen::VectorXd nnls(const Eigen::MatrixXd &a, const Eigen::VectorXd &b, int max_iterations) {
    const Eigen::Index cols = a.cols();
    if (max_iterations <= 0) {
        max_iterations = static_cast<int>(3 * cols) + 10;
    }
    Eigen::VectorXd x = Eigen::VectorXd::Zero(cols);
    std::vector<bool> passive(static_cast<std::size_t>(cols), false);
    const double tol = 1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff()) * static_cast<double>(std::max(a.rows(), cols));

    auto solve_passive = [&](Eigen::VectorXd &z) {
        std::vector<Eigen::Index> idx;
        for (Eigen::Index j = 0; j < cols; ++j) {
            if (passive[static_cast<std::size_t>(j)]) {
                idx.push_back(j);
            }
        }
        z = Eigen::VectorXd::Zero(cols);
        if (idx.empty()) {
            return;
        }
        Eigen::MatrixXd sub(a.rows(), static_cast<Eigen::Index>(idx.size()));
        for (std::size_t k = 0; k < idx.size(); ++k) {
            sub.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);
        }
        const Eigen::VectorXd zs = sub.completeOrthogonalDecomposition().solve(b);
        for (std::size_t k = 0; k < idx.size(); ++k) {
            z(idx[k]) = zs(static_cast<Eigen::Index>(k));
        }
    };

    for (int iter = 0; iter < max_iterations; ++iter) {
        const Eigen::VectorXd grad = a.transpose() * (b - a * x);
        Eigen::Index best = -1;
        double best_val = tol;
        for (Eigen::Index j = 0; j < cols; ++j) {
            if (!passive[static_cast<std::size_t>(j)] && grad(j) > best_val) {
                best_val = grad(j);
                best = j;
            }
        }
        if (best < 0) {
            break;
        }
        passive[static_cast<std::size_t>(best)] = true;
        for (;;) {
            Eigen::VectorXd z;
            solve_passive(z);
            bool feasible = true;
            for (Eigen::Index j = 0; j < cols; ++j) {
                if (passive[static_cast<std::size_t>(j)] && z(j) <= 0.0) {
                    feasible = false;
                }
            }
            if (feasible) {
                x = z;
                break;
            }
            double alpha = 1.0;
            for (Eigen::Index j = 0; j < cols; ++j) {
                if (passive[static_cast<std::size_t>(j)] && z(j) <= 0.0) {
                    alpha = std::min(alpha, x(j) / (x(j) - z(j)));
                }
            }
            x += alpha * (z - x);
            for (Eigen::Index j = 0; j < cols; ++j) {
                if (passive[static_cast<std::size_t>(j)] && std::abs(x(j)) <= tol) {
                    passive[static_cast<std::size_t>(j)] = false;
                    x(j) = 0.0;
                }
            }
        }
    }
    return x;
}

MeasurementFrame fit_frame(const Eigen::MatrixXd &vectors, double tolerance) {
    const auto dim = vectors.rows();
    const auto count = vectors.cols();
    if (dim < 1 || count < 1) {
        throw ValidationError("frame needs at least one vector of positive dimension");
    }
    MeasurementFrame frame;
    frame.vectors = vectors;
    for (Eigen::Index b = 0; b < count; ++b) {
        const double norm = frame.vectors.col(b).norm();
        if (norm == 0.0) {
            throw ValidationError("frame vector " + std::to_string(b) + " has zero length");
        }
        frame.vectors.col(b) /= norm;
    }
    // Columns are vec(b b^T); target is vec(I).
    Eigen::MatrixXd design(dim * dim, count);
    for (Eigen::Index b = 0; b < count; ++b) {
        const Eigen::MatrixXd outer = frame.vectors.col(b) * frame.vectors.col(b).transpose();
        design.col(b) = Eigen::Map<const Eigen::VectorXd>(outer.data(), dim * dim);
    }
    const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(dim, dim);
    const Eigen::VectorXd target = Eigen::Map<const Eigen::VectorXd>(identity.data(), dim * dim);
    frame.weights = nnls(design, target);

    // Drop vectors that received no weight; they do not take part in the POVM.
    std::vector<Eigen::Index> keep;
    for (Eigen::Index b = 0; b < count; ++b) {
        if (frame.weights(b) > 0.0) {
            keep.push_back(b);
        }
    }
    if (keep.empty()) {
        throw ValidationError("no non-negative weights satisfy the completeness condition");
    }
    MeasurementFrame kept;
    kept.vectors.resize(dim, static_cast<Eigen::Index>(keep.size()));
    kept.weights.resize(static_cast<Eigen::Index>(keep.size()));
    for (std::size_t k = 0; k < keep.size(); ++k) {
        kept.vectors.col(static_cast<Eigen::Index>(k)) = frame.vectors.col(keep[k]);
        kept.weights(static_cast<Eigen::Index>(k)) = frame.weights(keep[k]);
    }
    const double residual = validate_frame(kept, static_cast<int>(dim));
    if (residual > tolerance) {
        throw ValidationError("fitted frame completeness residual " + std::to_string(residual) + " exceeds " +
                              std::to_string(tolerance));
    }
    return kept;
}

MeasurementFrame frame_from_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("frame JSON: ") + e.what());
    }
    if (!doc.contains("dim") || !doc.contains("vectors")) {
        throw ValidationError("frame JSON needs 'dim' and 'vectors'");
    }
    const int dim = doc.at("dim").get<int>();
    const auto &vecs = doc.at("vectors");
    if (dim < 1 || !vecs.is_array() || vecs.empty()) {
        throw ValidationError("frame JSON: bad 'dim' or empty 'vectors'");
    }
    Eigen::MatrixXd vectors(dim, static_cast<Eigen::Index>(vecs.size()));
    for (std::size_t b = 0; b < vecs.size(); ++b) {
        if (!vecs[b].is_array() || static_cast<int>(vecs[b].size()) != dim) {
            throw ValidationError("frame vector " + std::to_string(b) + " does not have dimension " +
                                  std::to_string(dim));
        }
        for (int i = 0; i < dim; ++i) {
            vectors(i, static_cast<Eigen::Index>(b)) = vecs[b][static_cast<std::size_t>(i)].get<double>();
        }
    }
    if (!doc.contains("weights")) {
        return fit_frame(vectors);
    }
    const auto &w = doc.at("weights");
    if (!w.is_array() || w.size() != vecs.size()) {
        throw ValidationError("frame JSON: 'weights' must match 'vectors' in length");
    }
    MeasurementFrame frame;
    frame.vectors = vectors;
    frame.weights.resize(static_cast<Eigen::Index>(w.size()));
    for (std::size_t b = 0; b < w.size(); ++b) {
        frame.weights(static_cast<Eigen::Index>(b)) = w[b].get<double>();
    }
    for (Eigen::Index b = 0; b < frame.vectors.cols(); ++b) {
        const double norm = frame.vectors.col(b).norm();
        if (norm == 0.0) {
            throw ValidationError("frame vector " + std::to_string(b) + " has zero length");
        }
        frame.vectors.col(b) /= norm;
    }
    const double residual = validate_frame(frame, dim);
    if (residual > 1e-8) {
        throw ValidationError("frame completeness residual " + std::to_string(residual) + " exceeds 1e-8");
    }
    return frame;
}

Eigen::MatrixXd random_orthogonal(int dim, Rng &rng) {
    Eigen::MatrixXd g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = standard_normal(rng);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    return qr.householderQ() * Eigen::MatrixXd::Identity(dim, dim);
}

Eigen::VectorXd random_unit_vector(int dim, Rng &rng) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) {
        v(i) = standard_normal(rng);
    }
    return v / v.norm();
}

}  // namespace symhsp
