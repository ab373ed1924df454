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

#include "polyring/matgen.hpp"

#include "polyring/oracle.hpp"

namespace polyring {

const std::array<RowCondition, 9>& row_conditions() {
  // index, remove a, remove b, cover a, cover b
  static const std::array<RowCondition, 9> kRows = {{
      {1, false, false, false, false},
      {2, true, false, false, false},
      {3, false, true, false, false},
      {4, true, true, false, false},
      {5, false, false, true, true},
      {6, true, false, false, true},
      {7, false, true, true, false},
      {8, false, false, true, false},
      {9, false, false, false, true},
  }};
  return kRows;
}

int classify(const MarkCoverage& in) {
  const bool cases[9] = {
      in.k1 && in.e && in.k2 && in.f,  // Psi(K)
      in.k2 && in.f && !in.k1,         // Psi(K-d)
      in.k1 && in.e && !in.k2,         // Psi(K-c)
      !in.k1 && !in.k2,                // Psi(K-d-c)
      !in.e && !in.f,                  // Psi(K|d,c)
      !in.k1 && !in.f,                 // Psi(K-d|c)
      !in.k2 && !in.e,                 // Psi(K-c|d)
      in.k2 && in.f && !in.e,          // Psi(K|d)
      in.k1 && in.e && !in.f,          // Psi(K|c)
  };
  int first = 0;
  int fired = 0;
  for (int y = 0; y < 9; ++y) {
    if (!cases[y]) continue;
    if (first == 0) first = y + 1;
    ++fired;
  }
  if (fired != 1) {
    throw ClassificationError(
        "matching coverage (k1,e,k2,f)=(" + std::to_string(in.k1) + "," +
        std::to_string(in.e) + "," + std::to_string(in.k2) + "," +
        std::to_string(in.f) + ") satisfies " + std::to_string(fired) +
        " cases");
  }
  return first;
}

TransferMatrix transition_matrix(int m, int i, GenerationTrace* trace) {
  const MarkedGraph gadget = build_gadget(m, i);
  const GadgetMarks& mark = *gadget.gadget;

  TransferMatrix out;
  GenerationTrace local;
  for (const RowCondition& row : row_conditions()) {
    ConstraintSet constraints;
    if (row.remove_a) constraints.removed.push_back(mark.a);
    if (row.remove_b) constraints.removed.push_back(mark.b);
    if (row.cover_a) constraints.require_covered.push_back(mark.a);
    if (row.cover_b) constraints.require_covered.push_back(mark.b);

    const std::size_t x = static_cast<std::size_t>(row.index) - 1;
    enumerate_maximal(gadget.graph, constraints,
                      [&](std::span<const Vertex> mate) {
                        // V' = covered vertices plus the removed ones.
                        auto in_v = [&](Vertex v) {
                          return mate[v] >= 0 ||
                                 (row.remove_a && v == mark.a) ||
                                 (row.remove_b && v == mark.b);
                        };
                        const MarkCoverage cov{in_v(mark.k1), in_v(mark.e),
                                               in_v(mark.k2), in_v(mark.f)};
                        if (!cov.k1 && !cov.e) ++local.pendant_violations;
                        const int y = classify(cov);
                        out(x, static_cast<std::size_t>(y) - 1) += 1;
                        ++local.row_totals[x];
                      });
  }
  if (trace) *trace = local;
  return out;
}

const TransferMatrix& MatrixCache::get(int m, int i) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = entries_.find({m, i});
    if (it != entries_.end()) return *it->second;
  }
  auto fresh = std::make_unique<TransferMatrix>(transition_matrix(m, i));
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = entries_.try_emplace({m, i}, std::move(fresh));
  return *it->second;
}

std::size_t MatrixCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_.size();
}

MatrixCache& shared_matrix_cache() {
  static MatrixCache cache;
  return cache;
}

}  // namespace polyring
