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

#include "symhsp/tensor.hpp"

#include <algorithm>

namespace symhsp {

BigInt KroneckerDecomposition::multiplicity(const Partition &nu) const {
    for (const auto &[p, m] : multiplicities) {
        if (p == nu) {
            return m;
        }
    }
    return 0;
}

BigInt KroneckerDecomposition::dimension() const {
    BigInt d = 1;
    for (const auto &f : factors) {
        d *= symhsp::dimension(f.lambda);
    }
    return d;
}

namespace {

int common_degree(const Partition &nu, const std::vector<Partition> &factors) {
    if (factors.empty()) {
        throw ValidationError("empty tensor product");
    }
    for (const auto &f : factors) {
        if (f.n() != nu.n()) {
            throw ValidationError("partitions of different sizes in tensor product");
        }
    }
    return nu.n();
}

}  // namespace

BigInt kronecker_multiplicity(const Partition &nu, const std::vector<Partition> &factors) {
    const int n = common_degree(nu, factors);
    const CharacterTable &table = character_table(n);
    const std::size_t row = table.index_of(nu);
    std::vector<std::size_t> rows;
    rows.reserve(factors.size());
    for (const auto &f : factors) {
        rows.push_back(table.index_of(f));
    }
    BigInt sum = 0;
    for (std::size_t mu = 0; mu < table.size(); ++mu) {
        BigInt term = table.class_size(mu) * table.at(row, mu);
        for (std::size_t r : rows) {
            if (term == 0) {
                break;
            }
            term *= table.at(r, mu);
        }
        sum += term;
    }
    const BigInt order = factorial(n);
    if (sum % order != 0 || sum < 0) {
        throw std::logic_error("character inner product is not a non-negative integer");
    }
    return sum / order;
}

KroneckerDecomposition decompose(const std::vector<TensorFactor> &factors) {
    if (factors.empty()) {
        throw ValidationError("empty tensor product");
    }
    std::vector<Partition> plain;
    plain.reserve(factors.size());
    for (const auto &f : factors) {
        plain.push_back(f.lambda);
    }
    KroneckerDecomposition out;
    out.factors = factors;
    for (const auto &nu : character_table(plain.front().n()).partitions()) {
        BigInt m = kronecker_multiplicity(nu, plain);
        if (m != 0) {
            out.multiplicities.emplace_back(nu, std::move(m));
        }
    }
    return out;
}

KroneckerDecomposition decompose(const std::vector<Partition> &factors) {
    std::vector<TensorFactor> tagged;
    tagged.reserve(factors.size());
    for (const auto &f : factors) {
        tagged.push_back({f, false});
    }
    return decompose(tagged);
}

BigInt combinatorial_character(CombinatorialRep kind, const ConjugacyClass &c) {
    const BigInt order = factorial(c.n());
    if (kind == CombinatorialRep::regular) {
        return c.support() == 0 ? order : BigInt(0);
    }
    return order / class_size(c);
}

Rational average_multiplicity(const Partition &tau, int k, int l) {
    if (k < 0 || l < 0) {
        throw ValidationError("tensor exponents must be non-negative");
    }
    if (k == 0 && l == 0) {
        throw ValidationError("empty tensor product");
    }
    const int n = tau.n();
    const CharacterTable &table = character_table(n);
    const std::size_t row = table.index_of(tau);
    const BigInt order = factorial(n);
    // <a, b> = (1/n!) sum_mu |C_mu| a(mu) b(mu)
    BigInt inner = 0;
    for (std::size_t mu = 0; mu < table.size(); ++mu) {
        const ConjugacyClass cls{table.partitions()[mu]};
        const BigInt r = combinatorial_character(CombinatorialRep::regular, cls);
        const BigInt c = combinatorial_character(CombinatorialRep::conjugation, cls);
        inner += table.class_size(mu) * table.at(row, mu) * boost::multiprecision::pow(r, static_cast<unsigned>(k)) *
                 boost::multiprecision::pow(c, static_cast<unsigned>(l));
    }
    return Rational(inner, order * boost::multiprecision::pow(order, static_cast<unsigned>(k + l)));
}

Rational conjugacy_reciprocal_sum(int n) {
    if (n < 1) {
        throw ValidationError("conjugacy_reciprocal_sum needs n >= 1");
    }
    // 1/|C_lambda| = (prod tau_i!)(prod lambda_i) / n!; accumulate numerators.
    std::vector<BigInt> fact(static_cast<std::size_t>(n) + 1);
    fact[0] = 1;
    for (int i = 1; i <= n; ++i) {
        fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;
    }
    BigInt numerator = 0;
    for_each_partition(n, [&](const std::vector<int> &parts) {
        BigInt term = 1;
        std::size_t i = 0;
        while (i < parts.size()) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) {
                term *= parts[j];
                ++j;
            }
            term *= fact[j - i];
            i = j;
        }
        numerator += term;
    });
    return Rational(numerator, fact[static_cast<std::size_t>(n)]);
}

// ------------------------------------------------------ transverse projection

Eigen::MatrixXcd random_unitary(int dim, Rng &rng) {
    Eigen::MatrixXcd g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const double re = standard_normal(rng);
            const double im = standard_normal(rng);
            g(i, j) = {re, im};
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
}

Eigen::MatrixXcd random_isometry(int dim, int cols, Rng &rng) {
    return random_unitary(dim, rng).leftCols(cols);
}

double transverse_projection_sum(int dim_u, int dim_y, const Eigen::MatrixXcd &basis, const Eigen::MatrixXcd &w_basis) {
    const int dim = dim_u * dim_y;
    if (basis.rows() != dim || w_basis.rows() != dim_u * dim_u) {
        throw ValidationError("transverse_projection_sum: dimension mismatch");
    }
    double total = 0.0;
    for (int col = 0; col < basis.cols(); ++col) {
        // b as a dim_u x dim_y matrix: b(i, k) = <u_i x z_k, b>.
        Eigen::MatrixXcd b(dim_u, dim_y);
        for (int i = 0; i < dim_u; ++i) {
            for (int k = 0; k < dim_y; ++k) {
                b(i, k) = basis(i * dim_y + k, col);
            }
        }
        // <w x (z_k x z_l*), b x b*> = sum_ij conj(w_ij) b_ik conj(b_jl)
        //                            = (b^T conj(W) conj(b))_kl
        for (int r = 0; r < w_basis.cols(); ++r) {
            Eigen::MatrixXcd w(dim_u, dim_u);
            for (int i = 0; i < dim_u; ++i) {
                for (int j = 0; j < dim_u; ++j) {
                    w(i, j) = w_basis(i * dim_u + j, r);
                }
            }
            total += (b.transpose() * w.conjugate() * b.conjugate()).squaredNorm();
        }
    }
    return total;
}

TransverseProjectionReport transverse_projection_check(int dim_u, int dim_y, int dim_w, int trials,
                                                       std::uint64_t seed) {
    if (dim_u < 1 || dim_y < 1 || dim_w < 0 || dim_w > dim_u * dim_u || trials < 1) {
        throw ValidationError("transverse_projection_check: need dims >= 1 and dim W <= dim U^2");
    }
    TransverseProjectionReport report;
    report.dim_u = dim_u;
    report.dim_y = dim_y;
    report.dim_w = dim_w;
    report.trials = trials;
    report.seed = seed;
    report.bound = static_cast<double>(dim_y) * dim_w;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const Eigen::MatrixXcd basis = random_unitary(dim_u * dim_y, rng);
        const Eigen::MatrixXcd w = random_isometry(dim_u * dim_u, dim_w, rng);
        const double s = transverse_projection_sum(dim_u, dim_y, basis, w);
        report.sums.push_back(s);
        report.max_sum = std::max(report.max_sum, s);
        report.holds = report.holds && s <= report.bound + 1e-9;
    }
    return report;
}

}  // namespace symhsp
