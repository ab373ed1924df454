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

#ifndef POLYRING_MATGEN_HPP_
#define POLYRING_MATGEN_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polyring/matrix.hpp"
#include "polyring/polygraph.hpp"

namespace polyring {

// Which of a, b are deleted (R) or must be covered (C) when counting row x of
// T_{m,i}.
struct RowCondition {
  int index;  // 1..9
  bool remove_a, remove_b;
  bool cover_a, cover_b;
};

const std::array<RowCondition, 9>& row_conditions();

class ClassificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Coverage of the gadget marks in V' (covered vertices of J' - R, plus R).
struct MarkCoverage {
  bool k1, e, k2, f;
};

// Column 1..9 for one matching: the first case that fires, in order. Throws
// ClassificationError unless exactly one of the nine cases holds.
int classify(const MarkCoverage& coverage);

// Diagnostics gathered while generating a matrix.
struct GenerationTrace {
  // Matchings seen per row.
  std::array<std::size_t, 9> row_totals{};
  // Matchings in which k1 was uncovered but e was not covered.
  std::size_t pendant_violations = 0;
};

// Builds T_{m,i} by enumerating maximal matchings of the gadget J' under each
// row condition and classifying each one by which of k1, e, k2, f it covers.
// Throws NotationError (range) unless m >= 4 and 1 <= i <= m-3.
TransferMatrix transition_matrix(int m, int i, GenerationTrace* trace = nullptr);

// Memoized transition matrices keyed by (m, i). Safe for concurrent use;
// concurrent misses may both generate, and the first insert is kept.
class MatrixCache {
 public:
  const TransferMatrix& get(int m, int i);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::pair<int, int>, std::unique_ptr<TransferMatrix>> entries_;
};

MatrixCache& shared_matrix_cache();

}  // namespace polyring

#endif  // POLYRING_MATGEN_HPP_
