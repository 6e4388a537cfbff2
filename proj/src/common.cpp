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

#include "symhsp/common.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace symhsp {

std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
    if (bound == 0) {
        throw ValidationError("uniform_below: empty range");
    }
    // Largest multiple of bound that fits; values at or above it are rejected.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit) {
            return x % bound;
        }
    }
}

BigInt uniform_below(Rng &rng, const BigInt &bound) {
    if (bound <= 0) {
        throw ValidationError("uniform_below: empty range");
    }
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
    const unsigned words = (bits + 63) / 64;
    const unsigned top_bits = bits - 64 * (words - 1);
    for (;;) {
        BigInt x = 0;
        for (unsigned w = 0; w < words; ++w) {
            std::uint64_t word = rng();
            if (w == 0 && top_bits < 64) {
                word &= (std::uint64_t{1} << top_bits) - 1;
            }
            x <<= 64;
            x += word;
        }
        if (x < bound) {
            return x;
        }
    }
}

double uniform_unit(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double standard_normal(Rng &rng) {
    double u1 = uniform_unit(rng);
    while (u1 <= 0.0) {
        u1 = uniform_unit(rng);
    }
    const double u2 = uniform_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

BigInt factorial(int n) {
    if (n < 0) {
        throw ValidationError("factorial of negative number");
    }
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

double to_double(const Rational &r) {
    return r.convert_to<double>();
}

double to_double(const BigInt &x) {
    return x.convert_to<double>();
}

double log_big(const BigInt &x) {
    if (x <= 0) {
        throw ValidationError("log of non-positive integer");
    }
    const auto top = static_cast<long>(boost::multiprecision::msb(x));
    if (top < 1000) {
        return std::log(x.convert_to<double>());
    }
    // Keep the leading 64 bits and add the shifted exponent back.
    const long shift = top - 63;
    const BigInt head = x >> shift;
    return std::log(head.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

std::string to_string(const Rational &r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

}  // namespace symhsp
