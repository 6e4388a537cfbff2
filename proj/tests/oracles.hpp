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

// Independent reference computations used only by the tests. Nothing here
// calls into the library's combinatorics or character code.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Frac = boost::multiprecision::cpp_rational;
using Shape = std::vector<int>;

/// p(n) by Euler's pentagonal-number recurrence.
Int partition_count(int n);

/// Partitions of n, largest part first, in any order.
std::vector<Shape> partitions(int n);

/// Number of standard Young tableaux, by removing corners recursively.
Int count_tableaux(const Shape &lambda);

/// Permutation character of the Young subgroup S_alpha on a class: the
/// number of ways to distribute the cycles into boxes of sizes alpha.
Int young_permutation_character(const Shape &alpha, const Shape &cycle_type);

/// Irreducible character via the determinantal (Jacobi-Trudi) expansion
/// into Young permutation characters.
Int character(const Shape &lambda, const Shape &cycle_type);

/// n! / |centraliser| by counting permutations of {0..n-1} (n <= 8).
Int class_size_by_count(const Shape &cycle_type);

Int factorial(int n);

/// sum over cycle types of 1/|class| via the generating function
/// prod_i sum_m i^m m! x^(im) for the centraliser orders.
Frac reciprocal_class_sum(int n);

/// Plancherel expectation of <chi_tau, chi_V> / dim V with
/// V = rho_1 x ... x rho_k x (sigma_1 x sigma_1*) x ... x (sigma_l x sigma_l*),
/// enumerated over every tuple of irreps.
Frac plancherel_average_multiplicity(const Shape &tau, int k, int l);

}  // namespace oracle
