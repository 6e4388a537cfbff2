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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symhsp/characters.hpp"

namespace symhsp {

/// Exact probability distribution over the irreps of S_n, in
/// reverse-lexicographic partition order.
struct IrrepDistribution {
    int n = 0;
    /// "plancherel" or "weak_sampling".
    std::string kind;
    /// Hidden involution for weak sampling, in one-based cycle notation.
    std::string subgroup;
    std::vector<std::pair<Partition, Rational>> weights;

    Rational probability(const Partition &lambda) const;
    Rational total() const;
};

/// Weight d_lambda^2 / n! on each irrep.
IrrepDistribution plancherel(int n);

/// Irrep-name marginal of weak Fourier sampling with hidden subgroup
/// H = {1, m}: weight (d |H| / n!) rk Pi_H with rk Pi_m = (d + chi(m)) / 2.
/// A null m gives the trivial subgroup, which reproduces plancherel(n).
/// m must be an involution (any number of fixed points).
IrrepDistribution weak_sampling_distribution(int n, const std::optional<Permutation> &m);
IrrepDistribution weak_sampling_distribution(int n, const Involution &m);

/// Total variation distance (1/2) sum |p - q| between two distributions on
/// the same irreps.
Rational total_variation(const IrrepDistribution &p, const IrrepDistribution &q);

/// Draws from the distribution with one uniform big-integer draw against the
/// exact cumulative weights.
Partition sample(const IrrepDistribution &dist, Rng &rng);

/// Shape of the RSK insertion tableau of a permutation.
Partition rsk_shape(const Permutation &p);

/// Uniform random permutation (Fisher-Yates over uniform_below).
Permutation random_permutation(int n, Rng &rng);

/// Plancherel sample: exact enumeration up to kExactPlancherelCap, RSK of a
/// uniform permutation beyond.
inline constexpr int kExactPlancherelCap = 30;
Partition sample_plancherel(int n, Rng &rng);
Partition sample_plancherel_rsk(int n, Rng &rng);

enum class CutoffStyle {
    /// max(lambda_1, lambda'_1) >= (1 - c) n, with 0 < c < 1/4.
    linear,
    /// max(lambda_1, lambda'_1) >= n - c sqrt(n) / ln n, with c > 0.
    sqrt_log,
};

struct CutoffSet {
    int n = 0;
    CutoffStyle style = CutoffStyle::linear;
    double c = 0.0;
    /// Minimum required width max(lambda_1, lambda'_1).
    double width_bound = 0.0;
    /// Width slack x = n - width_bound (c n or c sqrt(n)/ln n).
    double slack = 0.0;
    std::vector<Partition> members;
    BigInt max_dimension = 0;
    /// 2 x p(floor x): the cardinality bound for the set.
    double size_bound = 0.0;
    /// Plancherel mass of the set.
    Rational plancherel_mass;

    bool contains(const Partition &p) const;
};

CutoffSet cutoff_set(int n, double c, CutoffStyle style);

struct VershikKerovReport {
    int n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    bool exact_sampler = true;
    /// Largest dimension over all partitions of n.
    BigInt max_dimension = 0;
    /// ln(max d / sqrt(n!)) / sqrt(n); minus this is an empirical c-hat.
    double max_dimension_exponent = 0.0;
    /// Sorted samples of ln(d / sqrt(n!)) / sqrt(n).
    std::vector<double> exponents;
    /// 0, 5, 25, 50, 75, 95, 100 percent quantiles of the exponents.
    std::vector<std::pair<double, double>> quantiles;
    /// Every sampled dimension is at most max_dimension.
    bool consistent = true;
};

/// Samples irreps under Plancherel and reports the normalised log-dimension
/// spread. Observational only.
VershikKerovReport vershik_kerov_report(int n, int trials, std::uint64_t seed);

}  // namespace symhsp
