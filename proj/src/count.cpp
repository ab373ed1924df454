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

#include "polyring/count.hpp"

#include <stdexcept>

namespace polyring {

std::string to_decimal(const Count& value) { return value.get_str(10); }

Count parse_count(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty count");
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("count must be a decimal digit string: " +
                                  std::string(text));
    }
  }
  return Count(std::string(text), 10);
}

std::size_t decimal_digits(const Count& value) {
  if (value == 0) return 1;
  // mpz_sizeinbase may overshoot by one for base 10.
  return to_decimal(value).size();
}

MMVector make_vector(const std::array<unsigned long, 9>& values) {
  MMVector out;
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i];
  return out;
}

}  // namespace polyring
