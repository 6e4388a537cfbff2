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

#include "symhsp/characters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <shared_mutex>
#include <sstream>

namespace symhsp {

BigInt dimension(const Partition &lambda) {
    const Partition conj = lambda.conjugate();
    BigInt hooks = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            const int arm = lambda[i] - j - 1;
            const int leg = conj[j] - i - 1;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(lambda.n()) / hooks;
}

namespace {

using MnKey = std::pair<std::vector<int>, std::vector<int>>;

struct MnCache {
    std::shared_mutex mutex;
    std::map<MnKey, BigInt> values;
};

MnCache &mn_cache() {
    static MnCache cache;
    return cache;
}

// Removing a border strip of length r from lambda is the same as lowering
// one beta-number by r onto a free position; the strip's height is the
// number of beta-numbers jumped over.
BigInt mn(const std::vector<int> &shape, const std::vector<int> &cycles, std::size_t next) {
    if (next == cycles.size()) {
        return 1;  // shape is empty here since sizes agree
    }
    const std::vector<int> rest(cycles.begin() + static_cast<std::ptrdiff_t>(next), cycles.end());
    MnKey key{shape, rest};
    {
        std::shared_lock lock(mn_cache().mutex);
        auto it = mn_cache().values.find(key);
        if (it != mn_cache().values.end()) {
            return it->second;
        }
    }

    const int r = cycles[next];
    const int len = static_cast<int>(shape.size());
    std::vector<int> beta(shape.size());
    for (int i = 0; i < len; ++i) {
        beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (len - 1 - i);
    }

    BigInt total = 0;
    for (int i = 0; i < len; ++i) {
        const int from = beta[static_cast<std::size_t>(i)];
        const int to = from - r;
        if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) {
            continue;
        }
        int jumped = 0;
        for (int b : beta) {
            jumped += (b > to && b < from);
        }
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = to;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> smaller;
        for (int j = 0; j < len; ++j) {
            const int part = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
            if (part > 0) {
                smaller.push_back(part);
            }
        }
        BigInt sub = mn(smaller, cycles, next + 1);
        if (jumped % 2) {
            total -= sub;
        } else {
            total += sub;
        }
    }

    std::unique_lock lock(mn_cache().mutex);
    mn_cache().values.emplace(std::move(key), total);
    return total;
}

}  // namespace

BigInt character(const Partition &lambda, const Partition &mu) {
    if (lambda.n() != mu.n()) {
        throw ValidationError("character: |lambda| = " + std::to_string(lambda.n()) + " but |mu| = " +
                              std::to_string(mu.n()));
    }
    return mn(lambda.parts(), mu.parts(), 0);
}

Rational normalized_character(const Partition &lambda, const Partition &cycle_type) {
    return Rational(character(lambda, cycle_type), dimension(lambda));
}

Partition matching_cycle_type(int n) {
    if (n <= 0 || n % 2 != 0) {
        throw ValidationError("matching class undefined for odd n");
    }
    return Partition(std::vector<int>(static_cast<std::size_t>(n / 2), 2));
}

Rational normalized_character_on_M(const Partition &lambda) {
    return normalized_character(lambda, matching_cycle_type(lambda.n()));
}

// ------------------------------------------------------------ CharacterTable

CharacterTable::CharacterTable(int n) : n_(n), partitions_(enumerate_partitions(n)) {
    if (n < 1) {
        throw ValidationError("character table needs n >= 1");
    }
    for (std::size_t i = 0; i < partitions_.size(); ++i) {
        index_.emplace(partitions_[i], i);
        class_sizes_.push_back(symhsp::class_size(partitions_[i]));
        dimensions_.push_back(symhsp::dimension(partitions_[i]));
    }
    entries_.assign(partitions_.size(), std::vector<std::optional<BigInt>>(partitions_.size()));
}

std::size_t CharacterTable::index_of(const Partition &p) const {
    auto it = index_.find(p);
    if (it == index_.end()) {
        throw ValidationError("(" + p.to_string() + ") is not a partition of " + std::to_string(n_));
    }
    return it->second;
}

BigInt CharacterTable::at(std::size_t lambda_index, std::size_t mu_index) const {
    {
        std::lock_guard lock(*mutex_);
        const auto &slot = entries_.at(lambda_index).at(mu_index);
        if (slot) {
            return *slot;
        }
    }
    BigInt v = character(partitions_[lambda_index], partitions_[mu_index]);
    std::lock_guard lock(*mutex_);
    entries_[lambda_index][mu_index] = v;
    return v;
}

BigInt CharacterTable::at(const Partition &lambda, const Partition &mu) const {
    return at(index_of(lambda), index_of(mu));
}

double CharacterTable::value(std::size_t lambda_index, std::size_t mu_index) const {
    return to_double(at(lambda_index, mu_index));
}

void CharacterTable::build_full() const {
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) {
            (void)at(i, j);
        }
    }
}

std::string CharacterTable::to_csv() const {
    std::ostringstream out;
    out << "\"lambda\\mu\"";
    for (const auto &mu : partitions_) {
        out << ",\"" << mu.to_string() << '"';
    }
    out << '\n';
    for (std::size_t i = 0; i < size(); ++i) {
        out << '"' << partitions_[i].to_string() << '"';
        for (std::size_t j = 0; j < size(); ++j) {
            out << ',' << at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

CharacterTable CharacterTable::from_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        rows.push_back(split_csv_line(line));
    }
    if (rows.size() < 2) {
        throw ValidationError("character table CSV has no rows");
    }
    std::vector<Partition> columns;
    for (std::size_t j = 1; j < rows[0].size(); ++j) {
        columns.push_back(Partition::parse(rows[0][j]));
    }
    const int n = columns.front().n();
    CharacterTable table(n);
    if (columns != table.partitions_ || rows.size() - 1 != table.size()) {
        throw ValidationError("character table CSV does not match S_" + std::to_string(n));
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (Partition::parse(rows[i][0]) != table.partitions_[i - 1] || rows[i].size() != columns.size() + 1) {
            throw ValidationError("character table CSV row " + std::to_string(i) + " is malformed");
        }
        for (std::size_t j = 1; j < rows[i].size(); ++j) {
            table.entries_[i - 1][j - 1] = BigInt(rows[i][j]);
        }
    }
    return table;
}

const CharacterTable &character_table(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CharacterTable>> tables;
    std::lock_guard lock(mutex);
    auto it = tables.find(n);
    if (it != tables.end()) {
        return *it->second;
    }
    std::unique_ptr<CharacterTable> table;
    const char *dir = std::getenv("HSP_CACHE_DIR");
    std::filesystem::path cache_file;
    if (dir && *dir) {
        cache_file = std::filesystem::path(dir) / ("chartable_" + std::to_string(n) + ".csv");
        std::ifstream in(cache_file);
        if (in) {
            std::stringstream buf;
            buf << in.rdbuf();
            try {
                table = std::make_unique<CharacterTable>(CharacterTable::from_csv(buf.str()));
            } catch (const ValidationError &) {
                table.reset();  // stale or corrupt cache: rebuild below
            }
        }
    }
    if (!table) {
        table = std::make_unique<CharacterTable>(n);
        table->build_full();
        if (!cache_file.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(cache_file.parent_path(), ec);
            std::ofstream out(cache_file);
            if (out) {
                out << table->to_csv();
            }
        }
    }
    return *tables.emplace(n, std::move(table)).first->second;
}

// ------------------------------------------------------------------ Roichman

RoichmanReport roichman_ratio_report(int n, double q, double b) {
    if (!(q > 0.0 && q < 1.0)) {
        throw ValidationError("q must lie in (0, 1)");
    }
    if (!(b > 0.0)) {
        throw ValidationError("b must be positive");
    }
    RoichmanReport report;
    report.n = n;
    report.q = q;
    report.b = b;
    report.below_hypothesis = n <= 4;
    const CharacterTable &table = character_table(n);
    for (std::size_t i = 0; i < table.size(); ++i) {
        const Partition &lambda = table.partitions()[i];
        const double base = std::max({q, static_cast<double>(lambda.first_row()) / n,
                                      static_cast<double>(lambda.first_column()) / n});
        for (std::size_t j = 0; j < table.size(); ++j) {
            RoichmanRow row;
            row.lambda = lambda;
            row.cycle_type = table.partitions()[j];
            row.support = ConjugacyClass{row.cycle_type}.support();
            row.ratio = Rational(table.at(i, j), table.dimension(i));
            row.abs_ratio = std::abs(to_double(row.ratio));
            row.bound = std::pow(base, b * row.support);
            // Small slack so exact ties (ratio 1, bound 1) are not lost to rounding.
            row.holds = row.abs_ratio <= row.bound + 1e-12;
            report.violations += !row.holds;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

}  // namespace symhsp
