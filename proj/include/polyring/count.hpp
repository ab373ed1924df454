// Copyright 2026 The polyring Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLYRING_COUNT_HPP_
#define POLYRING_COUNT_HPP_

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace polyring {

// Exact nonnegative count. Matching counts grow exponentially with the
// number of faces, so everything is carried in arbitrary precision.
using Count = mpz_class;

// The nine-component maximal matching vector of a graph with respect to an
// edge xy, in the order
//   Psi(G), Psi(G-x), Psi(G-y), Psi(G-x-y), Psi(G|x,y),
//   Psi(G-x|y), Psi(G-y|x), Psi(G|x), Psi(G|y).
using MMVector = std::array<Count, 9>;

inline constexpr std::size_t kVectorSize = 9;

std::string to_decimal(const Count& value);

// Parses a decimal string of digits. Throws std::invalid_argument on
// anything else (signs, whitespace, empty input).
Count parse_count(std::string_view text);

std::size_t decimal_digits(const Count& value);

MMVector make_vector(const std::array<unsigned long, 9>& values);

}  // namespace polyring

#endif  // POLYRING_COUNT_HPP_
