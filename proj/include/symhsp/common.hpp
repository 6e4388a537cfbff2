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
#include <random>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace symhsp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Seedable PRNG used everywhere randomness enters. mt19937_64 output is
/// fixed by the standard, so seeded runs are reproducible across platforms.
using Rng = std::mt19937_64;

/// Bad input: malformed arguments, violated preconditions. Maps to CLI exit 2.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A requested computation exceeds a configured dimension or memory cap.
/// Maps to CLI exit 3.
class CapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Uniform integer in [0, bound). Rejection sampling on raw engine output,
/// so the result does not depend on the standard library's distributions.
std::uint64_t uniform_below(Rng &rng, std::uint64_t bound);

/// Uniform big integer in [0, bound).
BigInt uniform_below(Rng &rng, const BigInt &bound);

/// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng &rng);

/// Standard normal via Box-Muller on uniform_unit.
double standard_normal(Rng &rng);

BigInt factorial(int n);

double to_double(const Rational &r);
double to_double(const BigInt &x);

/// Natural log of a positive big integer, accurate for values beyond double range.
double log_big(const BigInt &x);

std::string to_string(const Rational &r);

}  // namespace symhsp
