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

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "symhsp/combinatorics.hpp"

namespace symhsp {

/// Dimension of the Specht module S^lambda by the hook length formula.
BigInt dimension(const Partition &lambda);

/// chi^lambda evaluated on the class with cycle type mu (Murnaghan-Nakayama).
/// Results are memoised process-wide on (remaining shape, remaining cycle
/// type). Throws ValidationError if |lambda| != |mu|.
BigInt character(const Partition &lambda, const Partition &mu);

/// chi^lambda(C) / d^lambda as an exact rational.
Rational normalized_character(const Partition &lambda, const Partition &cycle_type);

/// The cycle type (2,2,...,2) of the matching class M_n. Throws for odd n.
Partition matching_cycle_type(int n);

/// chi^lambda(M_n) / d^lambda. Throws ValidationError for odd n.
Rational normalized_character_on_M(const Partition &lambda);

/// Character table of S_n. Rows are irreps and columns are classes, both in
/// reverse-lexicographic partition order. Entries are computed on first
/// access and cached; reads are safe from several threads.
class CharacterTable {
  public:
    explicit CharacterTable(int n);

    int n() const { return n_; }
    const std::vector<Partition> &partitions() const { return partitions_; }
    std::size_t size() const { return partitions_.size(); }
    /// Index of a partition of n in partitions(). Throws if absent.
    std::size_t index_of(const Partition &p) const;

    BigInt at(const Partition &lambda, const Partition &mu) const;
    BigInt at(std::size_t lambda_index, std::size_t mu_index) const;
    const BigInt &class_size(std::size_t mu_index) const { return class_sizes_[mu_index]; }
    const BigInt &dimension(std::size_t lambda_index) const { return dimensions_[lambda_index]; }
    /// Entry as a double; for numerical loops.
    double value(std::size_t lambda_index, std::size_t mu_index) const;

    /// Fills every entry.
    void build_full() const;

    /// Rows lambda, columns mu, integer entries. Partition keys are quoted
    /// because they contain commas.
    std::string to_csv() const;
    /// Inverse of to_csv (comment lines starting with '#' are skipped).
    static CharacterTable from_csv(const std::string &text);

  private:
    int n_;
    std::vector<Partition> partitions_;
    std::map<Partition, std::size_t> index_;
    std::vector<BigInt> class_sizes_;
    std::vector<BigInt> dimensions_;
    std::unique_ptr<std::mutex> mutex_ = std::make_unique<std::mutex>();
    mutable std::vector<std::vector<std::optional<BigInt>>> entries_;
};

/// Shared, lazily built table for S_n. When HSP_CACHE_DIR is set the table is
/// loaded from / saved to $HSP_CACHE_DIR/chartable_<n>.csv.
const CharacterTable &character_table(int n);

struct RoichmanRow {
    Partition lambda;
    Partition cycle_type;
    int support = 0;
    Rational ratio;   // chi^lambda(C) / d^lambda
    double abs_ratio = 0.0;
    double bound = 0.0;  // max(q, lambda_1/n, lambda'_1/n)^(b * supp C)
    bool holds = false;
};

struct RoichmanReport {
    int n = 0;
    double q = 0.9;
    double b = 0.1;
    /// True when n <= 4, outside the hypothesis of the character bound.
    bool below_hypothesis = false;
    std::vector<RoichmanRow> rows;
    std::size_t violations = 0;
};

/// Tabulates |chi^lambda(C)/d^lambda| against the Roichman-type bound for
/// every irrep and class of S_n. Observational: nothing is asserted.
RoichmanReport roichman_ratio_report(int n, double q, double b);

}  // namespace symhsp
