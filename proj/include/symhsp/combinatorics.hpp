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

#include <compare>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symhsp/common.hpp"

namespace symhsp {

/// Integer partition / Young diagram. Parts are kept non-increasing and
/// strictly positive; the empty partition is the unique partition of 0.
class Partition {
  public:
    Partition() = default;
    /// Throws ValidationError unless parts are positive and non-increasing.
    explicit Partition(std::vector<int> parts);

    /// Parses "3,1,1" (also accepts "()" and "" for the empty partition).
    static Partition parse(std::string_view text);
    /// The one-row partition (n).
    static Partition row(int n);
    /// The one-column partition (1^n).
    static Partition column(int n);

    int n() const { return n_; }
    const std::vector<int> &parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    /// First row (lambda_1); 0 for the empty partition.
    int first_row() const { return parts_.empty() ? 0 : parts_.front(); }
    /// First column (lambda'_1).
    int first_column() const { return length(); }

    Partition conjugate() const;
    /// multiplicities()[i] is the number of parts equal to i (index 0 unused).
    std::vector<int> multiplicities() const;
    /// Comma-joined parts, e.g. "3,1". Empty partition prints as "".
    std::string to_string() const;

    /// Lexicographic on parts. Descending order of this comparison is the
    /// reverse-lexicographic enumeration order.
    auto operator<=>(const Partition &) const = default;
    bool operator==(const Partition &) const = default;

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

std::ostream &operator<<(std::ostream &os, const Partition &p);

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ...
std::vector<Partition> enumerate_partitions(int n);

/// Streams partitions of n in the same order without materialising them.
void for_each_partition(int n, const std::function<void(const std::vector<int> &)> &visit);

/// Number of partitions p(n), via dynamic programming over largest part.
BigInt partition_count(int n);

/// Bijection on {0..n-1}; images()[i] is the image of i.
/// Product convention: (g * h)(i) = g(h(i)).
class Permutation {
  public:
    Permutation() = default;
    /// Throws ValidationError if images is not a bijection of {0..n-1}.
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    /// The transposition swapping a and b in S_n.
    static Permutation transposition(int n, int a, int b);

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int> &images() const { return images_; }

    Permutation operator*(const Permutation &other) const;
    Permutation inverse() const;
    Partition cycle_type() const;
    /// Number of moved points.
    int support() const;
    int sign() const;
    bool is_identity() const;
    /// One-based cycle notation, e.g. "(1 2)(3 4)"; identity prints as "()".
    std::string to_cycle_string() const;

    auto operator<=>(const Permutation &) const = default;
    bool operator==(const Permutation &) const = default;

  private:
    std::vector<int> images_;
};

/// All of S_n in lexicographic order of image arrays. Index i in this list is
/// the fixed group-element index used by the group-algebra simulator.
std::vector<Permutation> enumerate_permutations(int n);

/// Lexicographic rank of a permutation within enumerate_permutations(n).
std::size_t permutation_rank(const Permutation &p);

/// A conjugacy class of S_n, named by its cycle type.
struct ConjugacyClass {
    Partition cycle_type;

    int n() const { return cycle_type.n(); }
    /// Number of moved points of any member.
    int support() const;
    /// A canonical member: consecutive cycles (0 1 .. l1-1)(l1 ..)...
    Permutation representative() const;
};

/// |C_lambda| = n! / (prod_i tau_i! * prod_i lambda_i).
BigInt class_size(const ConjugacyClass &c);
BigInt class_size(const Partition &cycle_type);

/// Fixed-point-free involution stored as a perfect matching.
class Involution {
  public:
    Involution() = default;
    /// Pairs are normalised (a < b, sorted). Throws unless they form a
    /// perfect matching of {0..n-1}.
    Involution(int n, std::vector<std::pair<int, int>> pairs);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>> &pairs() const { return pairs_; }
    Permutation to_permutation() const;
    /// sigma * m * sigma^-1
    Involution conjugate_by(const Permutation &sigma) const;
    static Involution from_permutation(const Permutation &p);
    std::string to_string() const;

    auto operator<=>(const Involution &) const = default;
    bool operator==(const Involution &) const = default;

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> pairs_;
};

/// All (n-1)!! perfect matchings of {0..n-1}, sorted lexicographically.
/// Throws ValidationError for odd or non-positive n.
std::vector<Involution> enumerate_matchings(int n);

/// All involutions of S_n with exactly `transpositions` disjoint 2-cycles,
/// in lexicographic order of image arrays.
std::vector<Permutation> enumerate_involutions(int n, int transpositions);

/// Simple undirected graph on vertices {0..n-1}.
struct Graph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;

    std::vector<std::vector<bool>> adjacency() const;
};

/// Reads two graphs in edge-list form: a vertex-count line, then one "u v"
/// line per edge; the graphs are separated by a blank line.
std::pair<Graph, Graph> parse_graph_pair(std::istream &in);

/// Vertex-count cap for brute-force isomorphism search.
inline constexpr int kGraphOracleCap = 10;

/// Searches for an isomorphism sigma: g1 -> g2. If found, returns the
/// involution on the disjoint union (g1 on {0..h-1}, g2 on {h..2h-1}) that
/// swaps i with h + sigma(i). Returns nullopt when the graphs are not
/// isomorphic.
std::optional<Involution> involution_from_graph_pair(const Graph &g1, const Graph &g2);

}  // namespace symhsp
