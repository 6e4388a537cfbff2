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

#include "symhsp/measurement.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

#include "symhsp/tensor.hpp"

namespace symhsp {

// ---------------------------------------------------------- involution classes

InvolutionClass matching_class(int n) {
    InvolutionClass cls;
    cls.cycle_type = matching_cycle_type(n);
    for (const auto &m : enumerate_matchings(n)) {
        cls.members.push_back(m.to_permutation());
    }
    return cls;
}

InvolutionClass involution_class(int n, int transpositions) {
    if (transpositions < 1) {
        throw ValidationError("an involution class needs at least one transposition");
    }
    InvolutionClass cls;
    cls.members = enumerate_involutions(n, transpositions);
    cls.cycle_type = cls.members.front().cycle_type();
    return cls;
}

// ----------------------------------------------------------- group data cache

namespace {

struct GroupData {
    std::vector<Permutation> elements;
    std::vector<std::size_t> class_of;  // index into character_table(n).partitions()
};

const GroupData &group_data(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GroupData>> cache;
    std::lock_guard lock(mutex);
    auto &slot = cache[n];
    if (!slot) {
        auto data = std::make_unique<GroupData>();
        data->elements = enumerate_permutations(n);
        const CharacterTable &table = character_table(n);
        data->class_of.reserve(data->elements.size());
        for (const auto &g : data->elements) {
            data->class_of.push_back(table.index_of(g.cycle_type()));
        }
        slot = std::move(data);
    }
    return *slot;
}

constexpr double kGroupMatrixCap = 2e7;  // doubles held per irrep

}  // namespace

// ------------------------------------------------------------ RegisterContext

RegisterContext::RegisterContext(int n, std::vector<Partition> lambdas)
    : RegisterContext(n, std::move(lambdas), MeasurementFrame{}) {}

RegisterContext::RegisterContext(int n, std::vector<Partition> lambdas, MeasurementFrame frame)
    : n_(n), lambdas_(std::move(lambdas)) {
    if (lambdas_.empty()) {
        throw ValidationError("a register context needs at least one register");
    }
    if (lambdas_.size() > 8 * sizeof(RegisterSet) - 1) {
        throw ValidationError("too many registers");
    }
    long total = 1;
    for (const auto &lambda : lambdas_) {
        if (lambda.n() != n) {
            throw ValidationError("(" + lambda.to_string() + ") is not a partition of " + std::to_string(n));
        }
        irreps_.emplace_back(lambda);
        total *= irreps_.back().dim();
        if (total > kProductDimCap) {
            throw CapExceeded("product dimension of " + label() + " exceeds " + std::to_string(kProductDimCap));
        }
    }
    dim_ = static_cast<int>(total);
    if (frame.vectors.size() == 0) {
        frame_ = symhsp::standard_frame(dim_);
        standard_ = true;
    } else {
        if (frame.dim() != dim_) {
            throw ValidationError("frame dimension " + std::to_string(frame.dim()) + " does not match " + label() +
                                  " (dimension " + std::to_string(dim_) + ")");
        }
        frame_ = std::move(frame);
        standard_ = false;
    }
}

std::vector<int> RegisterContext::dims() const {
    std::vector<int> d;
    for (const auto &irrep : irreps_) {
        d.push_back(irrep.dim());
    }
    return d;
}

std::string RegisterContext::label() const {
    std::string out;
    for (std::size_t i = 0; i < lambdas_.size(); ++i) {
        if (i) {
            out += '|';
        }
        out += lambdas_[i].to_string();
    }
    return out;
}

const std::vector<Eigen::MatrixXd> &RegisterContext::group_matrices(int reg) const {
    std::lock_guard lock(*cache_mutex_);
    auto &slot = group_cache_[reg];
    if (!slot) {
        const Irrep &irrep = irreps_.at(static_cast<std::size_t>(reg));
        const double order = std::tgamma(n_ + 1.0);
        if (order * irrep.dim() * irrep.dim() > kGroupMatrixCap) {
            throw CapExceeded("all-group matrices for (" + irrep.partition().to_string() + ") exceed the memory cap");
        }
        auto mats = std::make_shared<std::vector<Eigen::MatrixXd>>();
        for (const auto &g : group_data(n_).elements) {
            mats->push_back(irrep.matrix_of(g));
        }
        slot = std::move(mats);
    }
    return *slot;
}

// --------------------------------------------------------- tensor arithmetic

Eigen::VectorXd apply_on_registers(const RegisterContext &ctx, const std::vector<const Eigen::MatrixXd *> &mats,
                                   const Eigen::VectorXd &v) {
    using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const std::vector<int> dims = ctx.dims();
    Eigen::VectorXd cur = v;
    Eigen::VectorXd next(v.size());
    long left = 1;
    for (std::size_t r = 0; r < dims.size(); ++r) {
        const long d = dims[r];
        const long right = ctx.dim() / (left * d);
        if (mats[r] != nullptr) {
            for (long l = 0; l < left; ++l) {
                Eigen::Map<const RowMajor> in(cur.data() + l * d * right, d, right);
                Eigen::Map<RowMajor> out(next.data() + l * d * right, d, right);
                out.noalias() = *mats[r] * in;
            }
            std::swap(cur, next);
        }
        left *= d;
    }
    return cur;
}

Eigen::VectorXd act_on_subset(const RegisterContext &ctx, const Permutation &g, RegisterSet subset,
                              const Eigen::VectorXd &b) {
    std::vector<Eigen::MatrixXd> store(static_cast<std::size_t>(ctx.registers()));
    std::vector<const Eigen::MatrixXd *> mats(static_cast<std::size_t>(ctx.registers()), nullptr);
    for (int r = 0; r < ctx.registers(); ++r) {
        if (subset & (1u << r)) {
            store[static_cast<std::size_t>(r)] = ctx.irreps()[static_cast<std::size_t>(r)].matrix_of(g);
            mats[static_cast<std::size_t>(r)] = &store[static_cast<std::size_t>(r)];
        }
    }
    return apply_on_registers(ctx, mats, b);
}

namespace {

std::vector<Eigen::MatrixXd> single_projectors(const RegisterContext &ctx, const Permutation &m) {
    std::vector<Eigen::MatrixXd> out;
    for (const auto &irrep : ctx.irreps()) {
        out.push_back(0.5 * (Eigen::MatrixXd::Identity(irrep.dim(), irrep.dim()) + irrep.matrix_of(m)));
    }
    return out;
}

std::vector<const Eigen::MatrixXd *> pointers(const std::vector<Eigen::MatrixXd> &mats) {
    std::vector<const Eigen::MatrixXd *> out;
    for (const auto &m : mats) {
        out.push_back(&m);
    }
    return out;
}

void check_involution(const RegisterContext &ctx, const Permutation &m) {
    if (m.n() != ctx.n() || m.is_identity() || !(m * m).is_identity()) {
        throw ValidationError("hidden subgroup generator must be an involution of S_" + std::to_string(ctx.n()));
    }
}

// Neumaier summation.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + carry; }
};

// |Pi^{(x)k} b|^2 for every frame vector.
std::vector<double> frame_projected_norms(const RegisterContext &ctx, const std::vector<Eigen::MatrixXd> &proj) {
    std::vector<double> out(static_cast<std::size_t>(ctx.frame().size()));
    if (ctx.standard_frame()) {
        // |Pi e_(i_1..i_k)|^2 = prod_r (P_r)_{i_r i_r}
        std::vector<double> acc{1.0};
        for (const auto &p : proj) {
            std::vector<double> next;
            next.reserve(acc.size() * static_cast<std::size_t>(p.rows()));
            for (double a : acc) {
                for (Eigen::Index i = 0; i < p.rows(); ++i) {
                    next.push_back(a * p(i, i));
                }
            }
            acc = std::move(next);
        }
        return acc;
    }
    const auto ptrs = pointers(proj);
    for (int b = 0; b < ctx.frame().size(); ++b) {
        const Eigen::VectorXd v = ctx.frame().vectors.col(b);
        out[static_cast<std::size_t>(b)] = apply_on_registers(ctx, ptrs, v).squaredNorm();
    }
    return out;
}

std::vector<double> natural_probabilities(const RegisterContext &ctx) {
    std::vector<double> nat(static_cast<std::size_t>(ctx.frame().size()));
    for (int b = 0; b < ctx.frame().size(); ++b) {
        nat[static_cast<std::size_t>(b)] = ctx.frame().weights(b) / ctx.dim();
    }
    return nat;
}

void finish_report(DistributionReport &report, std::vector<double> raw) {
    report.min_raw_probability = 0.0;
    for (double &p : raw) {
        report.min_raw_probability = std::min(report.min_raw_probability, p);
        p = std::max(p, 0.0);
    }
    report.probabilities = std::move(raw);
    report.tv_to_natural = tv_distance(report.probabilities, report.natural);
}

DistributionReport base_report(const RegisterContext &ctx) {
    DistributionReport report;
    report.n = ctx.n();
    report.lambdas = ctx.label();
    report.registers = ctx.registers();
    report.natural = natural_probabilities(ctx);
    return report;
}

}  // namespace

double projected_norm2(const RegisterContext &ctx, const Permutation &m, const Eigen::VectorXd &b) {
    const auto proj = single_projectors(ctx, m);
    return apply_on_registers(ctx, pointers(proj), b).squaredNorm();
}

long tensor_projector_rank(const RegisterContext &ctx, const Permutation &m) {
    long rank = 1;
    for (const auto &p : single_projectors(ctx, m)) {
        rank *= std::lround(p.trace());
    }
    return rank;
}

double DistributionReport::sum() const {
    CompensatedSum s;
    for (double p : probabilities) {
        s.add(p);
    }
    return s.value();
}

double tv_distance(const std::vector<double> &p, const std::vector<double> &q) {
    if (p.size() != q.size()) {
        throw ValidationError("tv_distance: distributions of different length");
    }
    CompensatedSum s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        s.add(std::abs(p[i] - q[i]));
    }
    return 0.5 * s.value();
}

DistributionReport observation_distribution(const RegisterContext &ctx, const Permutation &m) {
    check_involution(ctx, m);
    const auto proj = single_projectors(ctx, m);
    long rank = 1;
    for (const auto &p : proj) {
        rank *= std::lround(p.trace());
    }
    if (rank <= 0) {
        throw ValidationError(ctx.label() + " is never observed under " + m.to_cycle_string() +
                              " (projector rank 0)");
    }
    DistributionReport report = base_report(ctx);
    report.involution = m.to_cycle_string();
    report.rank = rank;
    std::vector<double> raw = frame_projected_norms(ctx, proj);
    for (std::size_t b = 0; b < raw.size(); ++b) {
        raw[b] *= ctx.frame().weights(static_cast<Eigen::Index>(b)) / static_cast<double>(rank);
    }
    finish_report(report, std::move(raw));
    return report;
}

DistributionReport observation_distribution(const RegisterContext &ctx, const Involution &m) {
    return observation_distribution(ctx, m.to_permutation());
}

DistributionReport natural_distribution(const RegisterContext &ctx) {
    DistributionReport report = base_report(ctx);
    report.involution = "trivial";
    report.rank = ctx.dim();
    finish_report(report, report.natural);
    return report;
}

DistributionReport averaged_distribution(const RegisterContext &ctx, const InvolutionClass &cls) {
    if (cls.members.empty()) {
        throw ValidationError("empty involution class");
    }
    DistributionReport report = base_report(ctx);
    report.involution = "averaged";
    std::vector<double> acc(static_cast<std::size_t>(ctx.frame().size()), 0.0);
    for (const auto &m : cls.members) {
        const DistributionReport single = observation_distribution(ctx, m);
        report.rank = single.rank;
        for (std::size_t b = 0; b < acc.size(); ++b) {
            acc[b] += single.probabilities[b];
        }
    }
    for (double &p : acc) {
        p /= static_cast<double>(cls.members.size());
    }
    finish_report(report, std::move(acc));
    return report;
}

// ----------------------------------------------------------- functionals

namespace {

void check_subset(const RegisterContext &ctx, RegisterSet s) {
    if (s >> ctx.registers()) {
        throw ValidationError("register subset is not contained in {1.." + std::to_string(ctx.registers()) + "}");
    }
}

std::vector<Partition> subset_factors(const RegisterContext &ctx, RegisterSet s) {
    std::vector<Partition> out;
    for (int r = 0; r < ctx.registers(); ++r) {
        if (s & (1u << r)) {
            out.push_back(ctx.lambdas()[static_cast<std::size_t>(r)]);
        }
    }
    return out;
}

// f[mask][g] = <b, g^mask b> over all of S_n for every subset mask.
std::vector<std::vector<double>> group_overlaps(const RegisterContext &ctx, const Eigen::VectorXd &b) {
    const auto &elements = group_data(ctx.n()).elements;
    const RegisterSet full = (1u << ctx.registers()) - 1;
    std::vector<std::vector<double>> f(static_cast<std::size_t>(full) + 1, std::vector<double>(elements.size()));
    std::vector<const std::vector<Eigen::MatrixXd> *> mats;
    for (int r = 0; r < ctx.registers(); ++r) {
        mats.push_back(&ctx.group_matrices(r));
    }
    const double norm2 = b.squaredNorm();
    for (std::size_t g = 0; g < elements.size(); ++g) {
        f[0][g] = norm2;
        for (RegisterSet s = 1; s <= full; ++s) {
            std::vector<const Eigen::MatrixXd *> act(static_cast<std::size_t>(ctx.registers()), nullptr);
            for (int r = 0; r < ctx.registers(); ++r) {
                if (s & (1u << r)) {
                    act[static_cast<std::size_t>(r)] = &(*mats[static_cast<std::size_t>(r)])[g];
                }
            }
            f[s][g] = b.dot(apply_on_registers(ctx, act, b));
        }
    }
    return f;
}

// <b, m^mask b> averaged over the class, for every mask.
std::vector<double> class_overlaps(const RegisterContext &ctx, const InvolutionClass &cls, const Eigen::VectorXd &b) {
    const RegisterSet full = (1u << ctx.registers()) - 1;
    std::vector<double> avg(static_cast<std::size_t>(full) + 1, 0.0);
    for (const auto &m : cls.members) {
        for (RegisterSet s = 0; s <= full; ++s) {
            avg[s] += b.dot(act_on_subset(ctx, m, s, b));
        }
    }
    for (double &v : avg) {
        v /= static_cast<double>(cls.members.size());
    }
    return avg;
}

// <b, m^mask b> for each class member and every mask.
std::vector<std::vector<double>> member_overlaps(const RegisterContext &ctx, const InvolutionClass &cls,
                                                 const Eigen::VectorXd &b) {
    const RegisterSet full = (1u << ctx.registers()) - 1;
    std::vector<std::vector<double>> rows;
    rows.reserve(cls.members.size());
    for (const auto &m : cls.members) {
        std::vector<double> row(static_cast<std::size_t>(full) + 1);
        for (RegisterSet s = 0; s <= full; ++s) {
            row[s] = b.dot(act_on_subset(ctx, m, s, b));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// Given class sums F[C] = sum_{g in C} <x, tau(g) x>, returns the isotypic
// norms |Pi_sigma x|^2 = (d_sigma/n!) sum_C chi^sigma(C) F[C] for sigma in
// tau (multiplicity from the factor list) and the weighted sum
// sum_sigma chi^sigma(M)/d_sigma |Pi_sigma x|^2.
FunctionalValue spectral_from_class_sums(int n, const std::vector<double> &class_sums,
                                         const std::vector<Partition> &factors, const Partition &involution_class) {
    const CharacterTable &table = character_table(n);
    const double order = to_double(factorial(n));
    const std::size_t m_col = table.index_of(involution_class);
    FunctionalValue out;
    for (std::size_t s = 0; s < table.size(); ++s) {
        const Partition &sigma = table.partitions()[s];
        if (kronecker_multiplicity(sigma, factors) == 0) {
            continue;
        }
        const double d = to_double(table.dimension(s));
        double acc = 0.0;
        for (std::size_t c = 0; c < table.size(); ++c) {
            acc += table.value(s, c) * class_sums[c];
        }
        const double norm2 = d / order * acc;
        out.components.emplace_back(sigma, norm2);
        out.spectral += table.value(s, m_col) / d * norm2;
    }
    return out;
}

std::vector<double> class_sums_of(int n, const std::vector<double> &per_element) {
    const GroupData &data = group_data(n);
    std::vector<double> sums(character_table(n).size(), 0.0);
    for (std::size_t g = 0; g < per_element.size(); ++g) {
        sums[data.class_of[g]] += per_element[g];
    }
    return sums;
}

std::vector<double> class_sums_of_product(int n, const std::vector<double> &a, const std::vector<double> &b) {
    std::vector<double> prod(a.size());
    for (std::size_t g = 0; g < a.size(); ++g) {
        prod[g] = a[g] * b[g];
    }
    return class_sums_of(n, prod);
}

}  // namespace

FunctionalValue subset_functional(const RegisterContext &ctx, const InvolutionClass &cls, const Eigen::VectorXd &b,
                                  RegisterSet subset) {
    check_subset(ctx, subset);
    if (subset == 0) {
        const double v = b.squaredNorm();
        return {v, v, {}};
    }
    const auto f = group_overlaps(ctx, b);
    FunctionalValue out = spectral_from_class_sums(ctx.n(), class_sums_of(ctx.n(), f[subset]),
                                                   subset_factors(ctx, subset), cls.cycle_type);
    out.direct = class_overlaps(ctx, cls, b)[subset];
    return out;
}

FunctionalValue subset_functional_pair(const RegisterContext &ctx, const InvolutionClass &cls,
                                       const Eigen::VectorXd &b, RegisterSet first, RegisterSet second) {
    check_subset(ctx, first);
    check_subset(ctx, second);
    if (first == 0 && second == 0) {
        const double v = b.squaredNorm() * b.squaredNorm();
        return {v, v, {}};
    }
    const auto f = group_overlaps(ctx, b);
    std::vector<Partition> factors = subset_factors(ctx, first);
    for (auto &p : subset_factors(ctx, second)) {
        factors.push_back(std::move(p));
    }
    FunctionalValue out = spectral_from_class_sums(ctx.n(), class_sums_of_product(ctx.n(), f[first], f[second]),
                                                   factors, cls.cycle_type);
    out.direct = 0.0;
    for (const auto &row : member_overlaps(ctx, cls, b)) {
        out.direct += row[first] * row[second];
    }
    out.direct /= static_cast<double>(cls.members.size());
    return out;
}

MomentReport projector_moments(const RegisterContext &ctx, const InvolutionClass &cls, const Eigen::VectorXd &b) {
    const int n = ctx.n();
    const RegisterSet full = (1u << ctx.registers()) - 1;
    const auto f = group_overlaps(ctx, b);
    const auto rows = member_overlaps(ctx, cls, b);
    const double count = static_cast<double>(cls.members.size());
    MomentReport report;

    std::vector<double> single(static_cast<std::size_t>(full) + 1, 0.0);
    single[0] = b.squaredNorm();
    for (RegisterSet s = 1; s <= full; ++s) {
        const FunctionalValue v = spectral_from_class_sums(n, class_sums_of(n, f[s]), subset_factors(ctx, s),
                                                           cls.cycle_type);
        double direct = 0.0;
        for (const auto &row : rows) {
            direct += row[s];
        }
        direct /= count;
        single[s] = v.spectral;
        report.functional_gap = std::max(report.functional_gap, std::abs(v.spectral - direct));
    }
    for (RegisterSet s = 0; s <= full; ++s) {
        report.expectation_formula += single[s];
    }
    report.expectation_formula /= static_cast<double>(1u << ctx.registers());

    for (RegisterSet s1 = 1; s1 <= full; ++s1) {
        for (RegisterSet s2 = 1; s2 <= full; ++s2) {
            std::vector<Partition> factors = subset_factors(ctx, s1);
            for (auto &p : subset_factors(ctx, s2)) {
                factors.push_back(std::move(p));
            }
            const FunctionalValue v =
                spectral_from_class_sums(n, class_sums_of_product(n, f[s1], f[s2]), factors, cls.cycle_type);
            double direct = 0.0;
            for (const auto &row : rows) {
                direct += row[s1] * row[s2];
            }
            direct /= count;
            report.functional_gap = std::max(report.functional_gap, std::abs(v.spectral - direct));
            report.variance_formula += v.spectral - single[s1] * single[s2];
        }
    }
    report.variance_formula /= static_cast<double>(1u << (2 * ctx.registers()));

    double mean = 0.0;
    double mean_sq = 0.0;
    for (const auto &m : cls.members) {
        const double v = projected_norm2(ctx, m, b);
        mean += v;
        mean_sq += v * v;
    }
    mean /= count;
    mean_sq /= count;
    report.expectation_exhaustive = mean;
    report.variance_exhaustive = mean_sq - mean * mean;
    return report;
}

double low_dimensional_weight(const RegisterContext &ctx, const InvolutionClass &cls, const Eigen::VectorXd &b,
                              const CutoffSet &cutoff) {
    const int n = ctx.n();
    const RegisterSet full = (1u << ctx.registers()) - 1;
    const auto f = group_overlaps(ctx, b);
    double worst = 0.0;
    for (RegisterSet s1 = 1; s1 <= full; ++s1) {
        for (RegisterSet s2 = 1; s2 <= full; ++s2) {
            std::vector<Partition> factors = subset_factors(ctx, s1);
            for (auto &p : subset_factors(ctx, s2)) {
                factors.push_back(std::move(p));
            }
            const FunctionalValue v =
                spectral_from_class_sums(n, class_sums_of_product(n, f[s1], f[s2]), factors, cls.cycle_type);
            double weight = 0.0;
            for (const auto &[sigma, norm2] : v.components) {
                if (cutoff.contains(sigma)) {
                    weight += norm2;
                }
            }
            worst = std::max(worst, weight);
        }
    }
    return worst;
}

// ------------------------------------------------------------- experiments

double median(std::vector<double> values) {
    if (values.empty()) {
        return 0.0;
    }
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
    const double upper = values[mid];
    if (values.size() % 2 == 1) {
        return upper;
    }
    const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

namespace {

std::vector<std::vector<Partition>> select_tuples(const TvExperimentConfig &config) {
    std::vector<std::vector<Partition>> tuples;
    switch (config.selection) {
    case LambdaSelection::explicit_list:
        tuples = config.explicit_tuples;
        if (tuples.empty()) {
            throw ValidationError("no lambda tuples given");
        }
        for (const auto &t : tuples) {
            if (static_cast<int>(t.size()) != config.registers) {
                throw ValidationError("lambda tuple has " + std::to_string(t.size()) + " entries, expected " +
                                      std::to_string(config.registers));
            }
        }
        break;
    case LambdaSelection::plancherel_sample: {
        if (config.samples < 1) {
            throw ValidationError("need at least one sample");
        }
        Rng rng(config.seed);
        for (int s = 0; s < config.samples; ++s) {
            std::vector<Partition> t;
            for (int r = 0; r < config.registers; ++r) {
                t.push_back(sample_plancherel(config.n, rng));
            }
            tuples.push_back(std::move(t));
        }
        break;
    }
    case LambdaSelection::exhaustive: {
        const auto parts = enumerate_partitions(config.n);
        std::vector<std::size_t> idx(static_cast<std::size_t>(config.registers), 0);
        while (true) {
            std::vector<Partition> t;
            for (std::size_t i : idx) {
                t.push_back(parts[i]);
            }
            tuples.push_back(std::move(t));
            int r = config.registers - 1;
            while (r >= 0 && ++idx[static_cast<std::size_t>(r)] == parts.size()) {
                idx[static_cast<std::size_t>(r)] = 0;
                --r;
            }
            if (r < 0) {
                break;
            }
        }
        break;
    }
    }
    return tuples;
}

std::string tuple_label(const std::vector<Partition> &t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) {
            out += '|';
        }
        out += t[i].to_string();
    }
    return out;
}

struct TupleOutcome {
    TvTupleSummary summary;
    std::vector<TvRow> rows;
};

TupleOutcome run_tuple(const TvExperimentConfig &config, const std::vector<Partition> &tuple,
                       const std::vector<Permutation> &ms, const InvolutionClass *full_class,
                       const std::optional<CutoffSet> &cutoff) {
    TupleOutcome out;
    const RegisterContext ctx = config.frame ? RegisterContext(config.n, tuple, *config.frame)
                                             : RegisterContext(config.n, tuple);
    TvTupleSummary &sum = out.summary;
    sum.lambdas = ctx.label();
    sum.dim = ctx.dim();
    sum.plancherel_weight = 1;
    const Rational order(factorial(config.n));
    for (const auto &lambda : tuple) {
        const BigInt d = dimension(lambda);
        sum.plancherel_weight *= Rational(d * d) / order;
        sum.max_character_ratio = std::max(
            sum.max_character_ratio, std::abs(to_double(normalized_character(lambda, ms.front().cycle_type()))));
    }
    if (tensor_projector_rank(ctx, ms.front()) == 0) {
        sum.observable = false;
        return out;
    }
    std::vector<double> tvs;
    std::vector<double> avg(static_cast<std::size_t>(ctx.frame().size()), 0.0);
    std::vector<double> natural;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        DistributionReport report = observation_distribution(ctx, ms[i]);
        report.seed = config.seed;
        const auto stop = std::chrono::steady_clock::now();
        TvRow row;
        row.n = config.n;
        row.registers = config.registers;
        row.lambdas = sum.lambdas;
        row.m_index = static_cast<int>(i);
        row.tv = report.tv_to_natural;
        row.rank = report.rank;
        row.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        out.rows.push_back(row);
        tvs.push_back(report.tv_to_natural);
        for (std::size_t b = 0; b < avg.size(); ++b) {
            avg[b] += report.probabilities[b];
        }
        natural = report.natural;
        if (config.emit_distributions) {
            sum.distributions.push_back(std::move(report));
        }
    }
    for (double &p : avg) {
        p /= static_cast<double>(ms.size());
    }
    sum.averaged_tv = tv_distance(avg, natural);
    sum.median_tv = median(tvs);
    sum.max_tv = *std::max_element(tvs.begin(), tvs.end());
    if (cutoff && full_class != nullptr) {
        sum.flagged_vectors = 0;
        for (int b = 0; b < ctx.frame().size(); ++b) {
            const Eigen::VectorXd v = ctx.frame().vectors.col(b);
            if (low_dimensional_weight(ctx, *full_class, v, *cutoff) > *config.low_dim_threshold) {
                ++sum.flagged_vectors;
            }
        }
    }
    return out;
}

}  // namespace

TvExperimentResult tv_experiment(const TvExperimentConfig &config) {
    if (config.n < 2 || config.n % 2 != 0) {
        throw ValidationError("tv experiments need an even n >= 2 (the matching class is empty otherwise)");
    }
    if (config.registers < 1) {
        throw ValidationError("need at least one register");
    }
    if (config.threads < 1) {
        throw ValidationError("threads must be positive");
    }
    const auto tuples = select_tuples(config);
    for (const auto &t : tuples) {
        long d = 1;
        for (const auto &lambda : t) {
            if (lambda.n() != config.n) {
                throw ValidationError("(" + lambda.to_string() + ") is not a partition of " +
                                      std::to_string(config.n));
            }
            d *= static_cast<long>(to_double(dimension(lambda)));
            if (d > config.product_dim_cap) {
                throw CapExceeded("product dimension of " + tuple_label(t) + " exceeds the cap " +
                                  std::to_string(config.product_dim_cap));
            }
        }
    }

    TvExperimentResult result;
    result.config = config;
    result.involution_class = matching_cycle_type(config.n);
    result.class_size = static_cast<int>(to_double(class_size(ConjugacyClass{result.involution_class})));

    // Involutions to scan: the whole class, or uniform conjugates of a fixed matching.
    std::vector<Permutation> ms;
    std::optional<InvolutionClass> full;
    if (config.exhaustive_m || config.n <= 10) {
        full = matching_class(config.n);
        ms = full->members;
    } else {
        Rng rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
        const Permutation base = ConjugacyClass{result.involution_class}.representative();
        for (int i = 0; i < config.m_samples; ++i) {
            const Permutation s = random_permutation(config.n, rng);
            ms.push_back(s * base * s.inverse());
        }
    }
    std::optional<CutoffSet> cutoff;
    if (config.low_dim_threshold) {
        if (config.n > 7 || !full) {
            throw CapExceeded("low-dimensional weight screening needs n <= 7");
        }
        cutoff = cutoff_set(config.n, config.cutoff_c, CutoffStyle::sqrt_log);
    }

    std::vector<std::optional<TupleOutcome>> outcomes(tuples.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tuples.size()) {
                return;
            }
            try {
                outcomes[i] = run_tuple(config, tuples[i], ms, full ? &*full : nullptr, cutoff);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(tuples.size());
            }
        }
    };
    const int threads = std::min<int>(config.threads, static_cast<int>(tuples.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::vector<double> all;
    double weighted = 0.0;
    double total_weight = 0.0;
    for (auto &o : outcomes) {
        if (!o->summary.observable) {
            result.tuples.push_back(std::move(o->summary));
            continue;
        }
        for (const auto &row : o->rows) {
            all.push_back(row.tv);
            result.rows.push_back(row);
        }
        double mean = 0.0;
        for (const auto &row : o->rows) {
            mean += row.tv;
        }
        mean /= static_cast<double>(o->rows.size());
        const double w = to_double(o->summary.plancherel_weight);
        weighted += w * mean;
        total_weight += w;
        result.tuples.push_back(std::move(o->summary));
    }
    result.median_tv = median(all);
    result.max_tv = all.empty() ? 0.0 : *std::max_element(all.begin(), all.end());
    result.plancherel_weighted_tv = total_weight > 0 ? weighted / total_weight : 0.0;
    return result;
}

}  // namespace symhsp
