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
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "symhsp/rep_matrices.hpp"
#include "symhsp/spectral.hpp"

namespace symhsp {

/// A conjugacy class of involutions, listed exhaustively. The hidden
/// subgroups of interest are H = {1, m} with m drawn uniformly from it.
struct InvolutionClass {
    Partition cycle_type;
    std::vector<Permutation> members;

    int n() const { return cycle_type.n(); }
};

/// M_n: fixed-point-free involutions, in enumerate_matchings order.
InvolutionClass matching_class(int n);
/// Involutions of S_n with `transpositions` disjoint 2-cycles.
InvolutionClass involution_class(int n, int transpositions);

/// k registers whose irrep names have been observed, plus the measurement
/// frame on the tensor product S^lambda_1 x ... x S^lambda_k. Vectors of
/// the product space are indexed row-major, register 0 slowest.
class RegisterContext {
  public:
    /// Standard frame on the product space.
    RegisterContext(int n, std::vector<Partition> lambdas);
    RegisterContext(int n, std::vector<Partition> lambdas, MeasurementFrame frame);

    int n() const { return n_; }
    int registers() const { return static_cast<int>(lambdas_.size()); }
    const std::vector<Partition> &lambdas() const { return lambdas_; }
    const std::vector<Irrep> &irreps() const { return irreps_; }
    const MeasurementFrame &frame() const { return frame_; }
    bool standard_frame() const { return standard_; }
    std::vector<int> dims() const;
    int dim() const { return dim_; }
    /// "3,1|2,2"
    std::string label() const;

    /// rho_i(g) for every g of S_n, indexed by lexicographic rank. Built on
    /// first use; throws CapExceeded when n! * sum d_i^2 is too large.
    const std::vector<Eigen::MatrixXd> &group_matrices(int reg) const;

  private:
    int n_;
    std::vector<Partition> lambdas_;
    std::vector<Irrep> irreps_;
    MeasurementFrame frame_;
    bool standard_ = true;
    int dim_ = 1;
    mutable std::map<int, std::shared_ptr<const std::vector<Eigen::MatrixXd>>> group_cache_;
    mutable std::shared_ptr<std::mutex> cache_mutex_ = std::make_shared<std::mutex>();
};

/// Registers are subsets of {0..k-1} encoded as bit masks.
using RegisterSet = unsigned;

/// Applies mats[r] along register r (identity where mats[r] is null).
Eigen::VectorXd apply_on_registers(const RegisterContext &ctx, const std::vector<const Eigen::MatrixXd *> &mats,
                                   const Eigen::VectorXd &v);

/// m^I b: m acts on the registers in I and the identity elsewhere.
Eigen::VectorXd act_on_subset(const RegisterContext &ctx, const Permutation &g, RegisterSet subset,
                              const Eigen::VectorXd &b);

/// |Pi_m^{(x)k} b|^2.
double projected_norm2(const RegisterContext &ctx, const Permutation &m, const Eigen::VectorXd &b);

/// rank of Pi_m^{(x)k}, as the product of per-register traces (rounded).
long tensor_projector_rank(const RegisterContext &ctx, const Permutation &m);

struct DistributionReport {
    int n = 0;
    std::string lambdas;
    int registers = 0;
    /// Cycle notation of m, "trivial", or "averaged".
    std::string involution;
    std::uint64_t seed = 0;
    /// Probability of each frame vector, clamped at zero for emission.
    std::vector<double> probabilities;
    /// Natural distribution a_b / dim on the same frame.
    std::vector<double> natural;
    double tv_to_natural = 0.0;
    /// Most negative pre-clamp value (0 if none).
    double min_raw_probability = 0.0;
    long rank = 0;
    double sum() const;
};

/// P_m(b) = a_b |Pi_m^{(x)k} b|^2 / rk Pi_m^{(x)k}.
DistributionReport observation_distribution(const RegisterContext &ctx, const Permutation &m);
DistributionReport observation_distribution(const RegisterContext &ctx, const Involution &m);
/// Trivial hidden subgroup: the natural distribution.
DistributionReport natural_distribution(const RegisterContext &ctx);
/// P-bar = average of P_m over the class.
DistributionReport averaged_distribution(const RegisterContext &ctx, const InvolutionClass &cls);

/// (1/2) sum |p - q| with compensated summation.
double tv_distance(const std::vector<double> &p, const std::vector<double> &q);

/// Both evaluations of a subset functional. Spectral goes through the
/// isotypic decomposition of the factor product (Kronecker multiplicities,
/// character-weighted group averages); direct averages matrix elements of
/// the class members.
struct FunctionalValue {
    double spectral = 0.0;
    double direct = 0.0;
    /// |Pi_sigma x|^2 for every sigma with nonzero multiplicity.
    std::vector<std::pair<Partition, double>> components;
};

/// E^I(b) = sum_sigma (chi^sigma(M)/d_sigma) |Pi^I_sigma b|^2, with
/// E^{} = |b|^2. Throws ValidationError if I has bits beyond k.
FunctionalValue subset_functional(const RegisterContext &ctx, const InvolutionClass &cls, const Eigen::VectorXd &b,
                                  RegisterSet subset);

/// E^{I1,I2}(b) on b (x) b*, with E^{{},{}} = |b|^4.
FunctionalValue subset_functional_pair(const RegisterContext &ctx, const InvolutionClass &cls,
                                       const Eigen::VectorXd &b, RegisterSet first, RegisterSet second);

struct MomentReport {
    double expectation_formula = 0.0;
    double variance_formula = 0.0;
    double expectation_exhaustive = 0.0;
    double variance_exhaustive = 0.0;
    /// Largest spectral/direct disagreement among the functionals used.
    double functional_gap = 0.0;
};

/// Expectation (1/2^k) sum_I E^I(b) and variance
/// (1/4^k) sum_{I1,I2 nonempty} (E^{I1,I2} - E^{I1} E^{I2}) of
/// |Pi_m^{(x)k} b|^2, next to the same moments taken exhaustively over m.
MomentReport projector_moments(const RegisterContext &ctx, const InvolutionClass &cls, const Eigen::VectorXd &b);

/// max over nonempty (I1, I2) of sum_{sigma in cutoff} |Pi^{I1,I2}_sigma (b x b*)|^2.
double low_dimensional_weight(const RegisterContext &ctx, const InvolutionClass &cls, const Eigen::VectorXd &b,
                              const CutoffSet &cutoff);

enum class LambdaSelection { plancherel_sample, explicit_list, exhaustive };

struct TvExperimentConfig {
    int n = 4;
    int registers = 2;
    LambdaSelection selection = LambdaSelection::plancherel_sample;
    /// Number of sampled tuples for plancherel_sample.
    int samples = 20;
    std::vector<std::vector<Partition>> explicit_tuples;
    /// Frame for explicit tuples; standard frame when empty.
    std::optional<MeasurementFrame> frame;
    std::uint64_t seed = 7;
    /// Iterate over the whole class (forced for n <= 10) or sample m.
    bool exhaustive_m = false;
    int m_samples = 64;
    long product_dim_cap = kProductDimCap;
    int threads = 1;
    bool emit_distributions = false;
    /// Vectors with low_dimensional_weight above this are flagged (needs n <= 7).
    std::optional<double> low_dim_threshold;
    double cutoff_c = 1.0;
};

struct TvRow {
    int n = 0;
    int registers = 0;
    std::string lambdas;
    int m_index = 0;
    double tv = 0.0;
    long rank = 0;
    double runtime_ms = 0.0;
};

struct TvTupleSummary {
    std::string lambdas;
    int dim = 0;
    Rational plancherel_weight;
    double median_tv = 0.0;
    double max_tv = 0.0;
    /// |P-bar - natural|.
    double averaged_tv = 0.0;
    /// max_i |chi^lambda_i(M) / d^lambda_i|.
    double max_character_ratio = 0.0;
    /// Number of frame vectors with large low-dimensional weight (-1: not run).
    long flagged_vectors = -1;
    /// False when some factor's projector has rank zero (zero weak-sampling
    /// weight); such tuples contribute no rows.
    bool observable = true;
    std::vector<DistributionReport> distributions;
};

struct TvExperimentResult {
    TvExperimentConfig config;
    Partition involution_class;
    int class_size = 0;
    std::vector<TvRow> rows;
    std::vector<TvTupleSummary> tuples;
    /// Median over all (tuple, m) rows.
    double median_tv = 0.0;
    double max_tv = 0.0;
    /// Sum over tuples of weight * mean tv, normalised by the total weight.
    double plancherel_weighted_tv = 0.0;
};

/// Runs the experiment. Throws CapExceeded naming the first tuple whose
/// product dimension exceeds the cap.
TvExperimentResult tv_experiment(const TvExperimentConfig &config);

/// Median of a copy of the values (mean of the middle pair for even size).
double median(std::vector<double> values);

}  // namespace symhsp
