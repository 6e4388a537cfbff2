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

#include "symhsp/combinatorics.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace symhsp {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw ValidationError("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw ValidationError("partition parts must be non-increasing");
        }
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](char c) { return c == ' ' || c == '(' || c == ')' || c == '"'; }),
            s.end());
    std::vector<int> parts;
    if (s.empty()) {
        return Partition{};
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            throw ValidationError("malformed partition '" + std::string(text) + "'");
        }
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception &) {
            throw ValidationError("malformed partition '" + std::string(text) + "'");
        }
        if (used != item.size()) {
            throw ValidationError("malformed partition '" + std::string(text) + "'");
        }
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

Partition Partition::row(int n) {
    return n == 0 ? Partition{} : Partition({n});
}

Partition Partition::column(int n) {
    return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Partition Partition::conjugate() const {
    std::vector<int> out(static_cast<std::size_t>(first_row()), 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) {
            ++out[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(out));
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> tau(static_cast<std::size_t>(first_row()) + 1, 0);
    for (int p : parts_) {
        ++tau[static_cast<std::size_t>(p)];
    }
    return tau;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const Partition &p) {
    return os << '(' << p.to_string() << ')';
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int> &prefix,
                    const std::function<void(const std::vector<int> &)> &visit) {
    if (remaining == 0) {
        visit(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, visit);
        prefix.pop_back();
    }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const std::vector<int> &)> &visit) {
    if (n < 0) {
        throw ValidationError("partitions of a negative number");
    }
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    partitions_rec(n, n, prefix, visit);
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const std::vector<int> &parts) { out.emplace_back(parts); });
    return out;
}

BigInt partition_count(int n) {
    if (n < 0) {
        throw ValidationError("partitions of a negative number");
    }
    // ways[m] = partitions of m into parts <= current part bound.
    std::vector<BigInt> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part) {
        for (int m = part; m <= n; ++m) {
            ways[static_cast<std::size_t>(m)] += ways[static_cast<std::size_t>(m - part)];
        }
    }
    return ways[static_cast<std::size_t>(n)];
}

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= n() || seen[static_cast<std::size_t>(v)]) {
            throw ValidationError("permutation images are not a bijection");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation t = identity(n);
    std::swap(t.images_.at(static_cast<std::size_t>(a)), t.images_.at(static_cast<std::size_t>(b)));
    return t;
}

Permutation Permutation::operator*(const Permutation &other) const {
    if (n() != other.n()) {
        throw ValidationError("composing permutations of different degree");
    }
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = images_[static_cast<std::size_t>(other.images_[i])];
    }
    Permutation p;
    p.images_ = std::move(out);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    }
    Permutation p;
    p.images_ = std::move(out);
    return p;
}

Partition Permutation::cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> lengths;
    for (int start = 0; start < n(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) {
            continue;
        }
        int len = 0;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = images_[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return Partition(std::move(lengths));
}

int Permutation::support() const {
    int moved = 0;
    for (int i = 0; i < n(); ++i) {
        moved += images_[static_cast<std::size_t>(i)] != i;
    }
    return moved;
}

int Permutation::sign() const {
    const Partition ct = cycle_type();
    // Each k-cycle contributes k - 1 transpositions.
    return ((n() - ct.length()) % 2 == 0) ? 1 : -1;
}

bool Permutation::is_identity() const {
    return support() == 0;
}

std::string Permutation::to_cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 0; start < n(); ++start) {
        if (seen[static_cast<std::size_t>(start)] || images_[static_cast<std::size_t>(start)] == start) {
            continue;
        }
        out += '(';
        bool first = true;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = images_[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            if (!first) {
                out += ' ';
            }
            out += std::to_string(x + 1);
            first = false;
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

std::vector<Permutation> enumerate_permutations(int n) {
    std::vector<Permutation> out;
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::size_t permutation_rank(const Permutation &p) {
    // Lehmer code.
    const int n = p.n();
    std::size_t rank = 0;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int v = 0; v < p(i); ++v) {
            smaller += !used[static_cast<std::size_t>(v)];
        }
        used[static_cast<std::size_t>(p(i))] = true;
        rank = rank * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller);
    }
    return rank;
}

// ----------------------------------------------------------- ConjugacyClass

int ConjugacyClass::support() const {
    int fixed = 0;
    for (int p : cycle_type.parts()) {
        fixed += p == 1;
    }
    return n() - fixed;
}

Permutation ConjugacyClass::representative() const {
    std::vector<int> images(static_cast<std::size_t>(n()));
    int start = 0;
    for (int len : cycle_type.parts()) {
        for (int j = 0; j < len; ++j) {
            images[static_cast<std::size_t>(start + j)] = start + (j + 1) % len;
        }
        start += len;
    }
    return Permutation(std::move(images));
}

BigInt class_size(const Partition &cycle_type) {
    BigInt denom = 1;
    for (int p : cycle_type.parts()) {
        denom *= p;
    }
    const std::vector<int> tau = cycle_type.multiplicities();
    for (std::size_t i = 1; i < tau.size(); ++i) {
        denom *= factorial(tau[i]);
    }
    return factorial(cycle_type.n()) / denom;
}

BigInt class_size(const ConjugacyClass &c) {
    return class_size(c.cycle_type);
}

// --------------------------------------------------------------- Involution

Involution::Involution(int n, std::vector<std::pair<int, int>> pairs) : n_(n), pairs_(std::move(pairs)) {
    if (n <= 0 || n % 2 != 0) {
        throw ValidationError("matching class undefined for odd n");
    }
    if (static_cast<int>(pairs_.size()) * 2 != n) {
        throw ValidationError("a perfect matching of n points needs n/2 pairs");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (auto &[a, b] : pairs_) {
        if (a > b) {
            std::swap(a, b);
        }
        if (a < 0 || b >= n || a == b || seen[static_cast<std::size_t>(a)] || seen[static_cast<std::size_t>(b)]) {
            throw ValidationError("pairs do not form a perfect matching");
        }
        seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = true;
    }
    std::sort(pairs_.begin(), pairs_.end());
}

Permutation Involution::to_permutation() const {
    std::vector<int> images(static_cast<std::size_t>(n_));
    for (auto [a, b] : pairs_) {
        images[static_cast<std::size_t>(a)] = b;
        images[static_cast<std::size_t>(b)] = a;
    }
    return Permutation(std::move(images));
}

Involution Involution::conjugate_by(const Permutation &sigma) const {
    std::vector<std::pair<int, int>> out;
    out.reserve(pairs_.size());
    for (auto [a, b] : pairs_) {
        out.emplace_back(sigma(a), sigma(b));
    }
    return Involution(n_, std::move(out));
}

Involution Involution::from_permutation(const Permutation &p) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < p.n(); ++i) {
        if (p(p(i)) != i || p(i) == i) {
            throw ValidationError("permutation is not a fixed-point-free involution");
        }
        if (i < p(i)) {
            pairs.emplace_back(i, p(i));
        }
    }
    return Involution(p.n(), std::move(pairs));
}

std::string Involution::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += '(' + std::to_string(pairs_[i].first) + ',' + std::to_string(pairs_[i].second) + ')';
    }
    return out + "}";
}

namespace {

void matchings_rec(std::vector<bool> &used, std::vector<std::pair<int, int>> &pairs, int n,
                   std::vector<Involution> &out) {
    int first = 0;
    while (first < n && used[static_cast<std::size_t>(first)]) {
        ++first;
    }
    if (first == n) {
        out.emplace_back(n, pairs);
        return;
    }
    used[static_cast<std::size_t>(first)] = true;
    for (int partner = first + 1; partner < n; ++partner) {
        if (used[static_cast<std::size_t>(partner)]) {
            continue;
        }
        used[static_cast<std::size_t>(partner)] = true;
        pairs.emplace_back(first, partner);
        matchings_rec(used, pairs, n, out);
        pairs.pop_back();
        used[static_cast<std::size_t>(partner)] = false;
    }
    used[static_cast<std::size_t>(first)] = false;
}

void involutions_rec(std::vector<int> &images, int next, int remaining, std::vector<Permutation> &out) {
    const int n = static_cast<int>(images.size());
    if (remaining == 0) {
        out.emplace_back(images);
        return;
    }
    for (int a = next; a < n; ++a) {
        if (images[static_cast<std::size_t>(a)] != a) {
            continue;
        }
        for (int b = a + 1; b < n; ++b) {
            if (images[static_cast<std::size_t>(b)] != b) {
                continue;
            }
            images[static_cast<std::size_t>(a)] = b;
            images[static_cast<std::size_t>(b)] = a;
            involutions_rec(images, a + 1, remaining - 1, out);
            images[static_cast<std::size_t>(a)] = a;
            images[static_cast<std::size_t>(b)] = b;
        }
    }
}

}  // namespace

std::vector<Involution> enumerate_matchings(int n) {
    if (n <= 0 || n % 2 != 0) {
        throw ValidationError("matching class undefined for odd n");
    }
    std::vector<Involution> out;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<std::pair<int, int>> pairs;
    matchings_rec(used, pairs, n, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> enumerate_involutions(int n, int transpositions) {
    if (transpositions < 0 || 2 * transpositions > n) {
        throw ValidationError("no involutions with that many transpositions");
    }
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> out;
    involutions_rec(images, 0, transpositions, out);
    std::sort(out.begin(), out.end());
    return out;
}

// ------------------------------------------------------------------- Graphs

std::vector<std::vector<bool>> Graph::adjacency() const {
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(vertices),
                                       std::vector<bool>(static_cast<std::size_t>(vertices), false));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    }
    return adj;
}

namespace {

Graph parse_one_graph(const std::vector<std::string> &lines) {
    if (lines.empty()) {
        throw ValidationError("graph block is empty");
    }
    Graph g;
    {
        std::istringstream head(lines.front());
        if (!(head >> g.vertices) || g.vertices < 0) {
            throw ValidationError("graph block must start with a vertex count");
        }
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream row(lines[i]);
        int u = 0;
        int v = 0;
        if (!(row >> u >> v)) {
            throw ValidationError("malformed edge line '" + lines[i] + "'");
        }
        if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices || u == v) {
            throw ValidationError("edge endpoint out of range in '" + lines[i] + "'");
        }
        g.edges.emplace_back(u, v);
    }
    return g;
}

bool blank(const std::string &s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

std::pair<Graph, Graph> parse_graph_pair(std::istream &in) {
    std::vector<std::vector<std::string>> blocks(1);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (blank(line)) {
            if (!blocks.back().empty()) {
                blocks.emplace_back();
            }
            continue;
        }
        blocks.back().push_back(line);
    }
    if (blocks.back().empty()) {
        blocks.pop_back();
    }
    if (blocks.size() != 2) {
        throw ValidationError("expected exactly two graphs separated by a blank line");
    }
    return {parse_one_graph(blocks[0]), parse_one_graph(blocks[1])};
}

namespace {

struct IsoSearch {
    const std::vector<std::vector<bool>> &a;
    const std::vector<std::vector<bool>> &b;
    std::vector<int> degree_a;
    std::vector<int> degree_b;
    std::vector<int> map;
    std::vector<bool> used;

    bool extend(int v) {
        const int n = static_cast<int>(a.size());
        if (v == n) {
            return true;
        }
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] ||
                degree_a[static_cast<std::size_t>(v)] != degree_b[static_cast<std::size_t>(w)]) {
                continue;
            }
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                ok = a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] ==
                     b[static_cast<std::size_t>(map[static_cast<std::size_t>(u)])][static_cast<std::size_t>(w)];
            }
            if (!ok) {
                continue;
            }
            map[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = true;
            if (extend(v + 1)) {
                return true;
            }
            used[static_cast<std::size_t>(w)] = false;
        }
        return false;
    }
};

std::vector<int> degrees(const std::vector<std::vector<bool>> &adj) {
    std::vector<int> d;
    d.reserve(adj.size());
    for (const auto &row : adj) {
        d.push_back(static_cast<int>(std::count(row.begin(), row.end(), true)));
    }
    return d;
}

}  // namespace

std::optional<Involution> involution_from_graph_pair(const Graph &g1, const Graph &g2) {
    if (g1.vertices != g2.vertices) {
        throw ValidationError("graph sizes differ: " + std::to_string(g1.vertices) + " vs " +
                              std::to_string(g2.vertices));
    }
    if (g1.vertices > kGraphOracleCap) {
        throw CapExceeded("oracle scale exceeded: graphs have more than " + std::to_string(kGraphOracleCap) +
                          " vertices");
    }
    if (g1.vertices == 0) {
        throw ValidationError("graphs must have at least one vertex");
    }
    const auto a = g1.adjacency();
    const auto b = g2.adjacency();
    IsoSearch search{a, b, degrees(a), degrees(b), std::vector<int>(a.size(), -1), std::vector<bool>(a.size(), false)};
    {
        auto da = search.degree_a;
        auto db = search.degree_b;
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db) {
            return std::nullopt;
        }
    }
    if (!search.extend(0)) {
        return std::nullopt;
    }
    const int h = g1.vertices;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < h; ++i) {
        pairs.emplace_back(i, h + search.map[static_cast<std::size_t>(i)]);
    }
    return Involution(2 * h, std::move(pairs));
}

}  // namespace symhsp
