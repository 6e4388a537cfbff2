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

#include "symhsp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace symhsp {

Rational IrrepDistribution::probability(const Partition &lambda) const {
    for (const auto &[p, w] : weights) {
        if (p == lambda) {
            return w;
        }
    }
    return 0;
}

Rational IrrepDistribution::total() const {
    Rational sum = 0;
    for (const auto &entry : weights) {
        sum += entry.second;
    }
    return sum;
}

IrrepDistribution plancherel(int n) {
    if (n < 1) {
        throw ValidationError("plancherel needs n >= 1");
    }
    IrrepDistribution dist;
    dist.n = n;
    dist.kind = "plancherel";
    const BigInt order = factorial(n);
    for (auto &lambda : enumerate_partitions(n)) {
        const BigInt d = dimension(lambda);
        dist.weights.emplace_back(std::move(lambda), Rational(d * d, order));
    }
    return dist;
}

IrrepDistribution weak_sampling_distribution(int n, const std::optional<Permutation> &m) {
    if (!m) {
        IrrepDistribution dist = plancherel(n);
        dist.kind = "weak_sampling";
        dist.subgroup = "trivial";
        return dist;
    }
    if (m->n() != n || m->is_identity() || !(*m * *m).is_identity()) {
        throw ValidationError("hidden subgroup generator must be an involution of S_" + std::to_string(n));
    }
    IrrepDistribution dist;
    dist.n = n;
    dist.kind = "weak_sampling";
    dist.subgroup = m->to_cycle_string();
    const Partition cls = m->cycle_type();
    const CharacterTable &table = character_table(n);
    const BigInt order = factorial(n);
    const std::size_t j = table.index_of(cls);
    for (std::size_t i = 0; i < table.size(); ++i) {
        const BigInt &d = table.dimension(i);
        // rank of Pi_m is (d + chi(m)) / 2, and |H| = 2.
        const BigInt rank2 = d + table.at(i, j);
        dist.weights.emplace_back(table.partitions()[i], Rational(d * rank2, order));
    }
    return dist;
}

IrrepDistribution weak_sampling_distribution(int n, const Involution &m) {
    return weak_sampling_distribution(n, std::optional<Permutation>(m.to_permutation()));
}

Rational total_variation(const IrrepDistribution &p, const IrrepDistribution &q) {
    if (p.n != q.n) {
        throw ValidationError("distributions over different S_n");
    }
    Rational sum = 0;
    for (const auto &[lambda, w] : p.weights) {
        sum += abs(w - q.probability(lambda));
    }
    for (const auto &[lambda, w] : q.weights) {
        if (p.probability(lambda) == 0) {
            sum += abs(w);
        }
    }
    return sum / 2;
}

Partition sample(const IrrepDistribution &dist, Rng &rng) {
    BigInt common = 1;
    for (const auto &entry : dist.weights) {
        common = boost::multiprecision::lcm(common, boost::multiprecision::denominator(entry.second));
    }
    std::vector<BigInt> cumulative;
    BigInt running = 0;
    for (const auto &entry : dist.weights) {
        running += boost::multiprecision::numerator(entry.second) * (common / boost::multiprecision::denominator(entry.second));
        cumulative.push_back(running);
    }
    if (running != common) {
        throw ValidationError("distribution does not sum to 1");
    }
    const BigInt r = uniform_below(rng, common);
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    return dist.weights[static_cast<std::size_t>(it - cumulative.begin())].first;
}

Partition rsk_shape(const Permutation &p) {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < p.n(); ++i) {
        int x = p(i);
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({x});
                break;
            }
            auto &row = rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                break;
            }
            std::swap(x, *it);
        }
    }
    std::vector<int> shape;
    shape.reserve(rows.size());
    for (const auto &row : rows) {
        shape.push_back(static_cast<int>(row.size()));
    }
    return Partition(std::move(shape));
}

Permutation random_permutation(int n, Rng &rng) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const auto j = uniform_below(rng, static_cast<std::uint64_t>(i) + 1);
        std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
    }
    return Permutation(std::move(images));
}

Partition sample_plancherel_rsk(int n, Rng &rng) {
    return rsk_shape(random_permutation(n, rng));
}

Partition sample_plancherel(int n, Rng &rng) {
    if (n > kExactPlancherelCap) {
        return sample_plancherel_rsk(n, rng);
    }
    return sample(plancherel(n), rng);
}

// --------------------------------------------------------------- CutoffSet

bool CutoffSet::contains(const Partition &p) const {
    return std::find(members.begin(), members.end(), p) != members.end();
}

CutoffSet cutoff_set(int n, double c, CutoffStyle style) {
    if (n < 2) {
        throw ValidationError("cutoff sets need n >= 2");
    }
    CutoffSet set;
    set.n = n;
    set.style = style;
    set.c = c;
    if (style == CutoffStyle::linear) {
        if (!(c > 0.0 && c < 0.25)) {
            throw ValidationError("linear cutoff needs 0 < c < 1/4");
        }
        set.slack = c * n;
    } else {
        if (!(c > 0.0)) {
            throw ValidationError("sqrt cutoff needs c > 0");
        }
        set.slack = c * std::sqrt(static_cast<double>(n)) / std::log(static_cast<double>(n));
    }
    set.width_bound = n - set.slack;
    const auto x = static_cast<int>(std::floor(set.slack + 1e-9));
    set.size_bound = 2.0 * set.slack * to_double(partition_count(std::max(x, 0)));
    set.plancherel_mass = 0;
    const BigInt order = factorial(n);
    for (auto &lambda : enumerate_partitions(n)) {
        const int width = std::max(lambda.first_row(), lambda.first_column());
        // Tolerance keeps integral bounds such as exactly n - 1 from slipping
        // past a member through rounding in the slack.
        if (width >= set.width_bound - 1e-9) {
            const BigInt d = dimension(lambda);
            set.max_dimension = std::max(set.max_dimension, d);
            set.plancherel_mass += Rational(d * d, order);
            set.members.push_back(std::move(lambda));
        }
    }
    return set;
}

// ----------------------------------------------------------- Vershik-Kerov

VershikKerovReport vershik_kerov_report(int n, int trials, std::uint64_t seed) {
    if (n < 1 || trials < 1) {
        throw ValidationError("vershik_kerov_report needs n >= 1 and trials >= 1");
    }
    VershikKerovReport report;
    report.n = n;
    report.trials = trials;
    report.seed = seed;
    report.exact_sampler = n <= kExactPlancherelCap;

    const double log_sqrt_order = 0.5 * std::lgamma(n + 1.0);
    const double root_n = std::sqrt(static_cast<double>(n));
    auto exponent = [&](const BigInt &d) { return (log_big(d) - log_sqrt_order) / root_n; };

    if (n <= 40) {
        for_each_partition(n, [&](const std::vector<int> &parts) {
            report.max_dimension = std::max(report.max_dimension, dimension(Partition(parts)));
        });
    }

    Rng rng(seed);
    std::optional<IrrepDistribution> exact;
    if (report.exact_sampler) {
        exact = plancherel(n);
    }
    BigInt sampled_max = 0;
    for (int t = 0; t < trials; ++t) {
        const Partition lambda = exact ? sample(*exact, rng) : sample_plancherel_rsk(n, rng);
        const BigInt d = dimension(lambda);
        sampled_max = std::max(sampled_max, d);
        report.exponents.push_back(exponent(d));
    }
    if (report.max_dimension == 0) {
        report.max_dimension = sampled_max;  // no exhaustive maximum available
    }
    report.consistent = sampled_max <= report.max_dimension;
    report.max_dimension_exponent = exponent(report.max_dimension);

    std::sort(report.exponents.begin(), report.exponents.end());
    for (double q : {0.0, 0.05, 0.25, 0.5, 0.75, 0.95, 1.0}) {
        const auto idx = static_cast<std::size_t>(std::llround(q * static_cast<double>(report.exponents.size() - 1)));
        report.quantiles.emplace_back(q, report.exponents[idx]);
    }
    return report;
}

}  // namespace symhsp
