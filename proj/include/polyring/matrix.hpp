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

#ifndef POLYRING_MATRIX_HPP_
#define POLYRING_MATRIX_HPP_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "polyring/count.hpp"

namespace polyring {

// 9x9 matrix of exact counts. Row x corresponds to component x of Psi_ab of
// the extended graph, column y to component y of Psi_dc of the attached
// graph. Accessors are 0-based; documentation and messages use M[1..9,1..9].
class TransferMatrix {
 public:
  static constexpr std::size_t kDim = 9;
  using Rows = std::array<std::array<unsigned long, kDim>, kDim>;

  TransferMatrix();
  static TransferMatrix identity();
  static TransferMatrix from_rows(const Rows& rows);

  Count& operator()(std::size_t row, std::size_t col) {
    return entries_[row * kDim + col];
  }
  const Count& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * kDim + col];
  }

  friend bool operator==(const TransferMatrix& a, const TransferMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::array<Count, kDim * kDim> entries_;
};

TransferMatrix mat_mul(const TransferMatrix& a, const TransferMatrix& b);
Count mat_trace(const TransferMatrix& a);

// Row vector times matrix, and matrix times column vector.
MMVector row_times(const MMVector& row, const TransferMatrix& m);
MMVector times_column(const TransferMatrix& m, const MMVector& column);
Count dot(const MMVector& row, const MMVector& column);

// Plain text: 9 lines of 9 space-separated decimal integers.
std::string format_matrix_plain(const TransferMatrix& m);
TransferMatrix parse_matrix_plain(std::istream& in);

// {"size":m,"offset":i,"rows":[[...],...]}. Entries are JSON integers when
// they fit in 64 bits and decimal strings otherwise.
std::string format_matrix_json(const TransferMatrix& m, int size, int offset);
struct LabeledMatrix {
  TransferMatrix matrix;
  std::optional<int> size;
  std::optional<int> offset;
};
LabeledMatrix parse_matrix_json(const std::string& text);

}  // namespace polyring

#endif  // POLYRING_MATRIX_HPP_
