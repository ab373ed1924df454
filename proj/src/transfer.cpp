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

#include "polyring/transfer.hpp"

#include <vector>

namespace polyring {

const TransferMatrix& matrix_S() {
  static const TransferMatrix kS = TransferMatrix::from_rows({{
      {1, 1, 1, 1, 1, 1, 1, 0, 0},
      {0, 1, 0, 1, 0, 0, 1, 1, 0},
      {0, 0, 1, 1, 0, 1, 0, 0, 1},
      {0, 0, 0, 1, 1, 1, 1, 0, 0},
      {1, 0, 0, 1, 1, 1, 1, 0, 0},
      {0, 1, 0, 0, 0, 0, 0, 1, 0},
      {0, 0, 1, 0, 0, 0, 0, 0, 1},
      {1, 0, 1, 1, 1, 1, 1, 0, 0},
      {1, 1, 0, 1, 1, 1, 1, 0, 0},
  }});
  return kS;
}

const TransferMatrix& matrix_L() {
  static const TransferMatrix kL = TransferMatrix::from_rows({{
      {1, 1, 1, 1, 1, 1, 1, 0, 0},
      {1, 0, 1, 0, 0, 0, 0, 0, 1},
      {0, 1, 0, 1, 0, 0, 1, 1, 0},
      {1, 0, 1, 0, 0, 0, 0, 0, 0},
      {1, 0, 1, 1, 0, 1, 0, 0, 0},
      {0, 0, 1, 0, 0, 0, 0, 0, 1},
      {0, 1, 0, 1, 0, 0, 0, 0, 0},
      {1, 1, 1, 1, 0, 1, 0, 0, 0},
      {1, 0, 1, 1, 1, 1, 1, 0, 0},
  }});
  return kL;
}

const TransferMatrix& matrix_R() {
  static const TransferMatrix kR = TransferMatrix::from_rows({{
      {1, 1, 1, 1, 1, 1, 1, 0, 0},
      {0, 0, 1, 1, 0, 1, 0, 0, 1},
      {1, 1, 0, 0, 0, 0, 0, 1, 0},
      {1, 1, 0, 0, 0, 0, 0, 0, 0},
      {1, 1, 0, 1, 0, 0, 1, 0, 0},
      {0, 0, 1, 1, 0, 0, 0, 0, 0},
      {0, 1, 0, 0, 0, 0, 0, 1, 0},
      {1, 1, 0, 1, 1, 1, 1, 0, 0},
      {1, 1, 1, 1, 0, 0, 1, 0, 0},
  }});
  return kR;
}

const MMVector& boundary_X() {
  static const MMVector kX = make_vector({1, 0, 0, 0, 0, 0, 0, 0, 0});
  return kX;
}

const MMVector& boundary_Y() {
  static const MMVector kY = make_vector({1, 1, 1, 1, 1, 0, 0, 1, 1});
  return kY;
}

const TransferMatrix& matrix_for(const FaceSpec& face, MatrixCache& cache) {
  if (!face.offset) {
    throw NotationError(NotationError::Kind::kStructure, 0,
                        "matrix_for needs a resolved offset");
  }
  if (face.size == 6) {
    switch (*face.offset) {
      case 1:
        return matrix_L();
      case 2:
        return matrix_S();
      case 3:
        return matrix_R();
      default:
        break;
    }
  }
  return cache.get(face.size, *face.offset);
}

namespace {

// Face matrices of a chain in order; the terminal wildcards become offset 1.
std::vector<const TransferMatrix*> chain_matrices(const ChainSpec& spec,
                                                  MatrixCache& cache) {
  validate_chain(spec);
  std::vector<const TransferMatrix*> out;
  out.reserve(spec.faces.size());
  for (const FaceSpec& face : spec.faces) {
    out.push_back(&matrix_for(FaceSpec{face.size, face.offset.value_or(1)}, cache));
  }
  return out;
}

}  // namespace

Count count_chain(const ChainSpec& spec, MatrixCache& cache) {
  MMVector row = boundary_X();
  for (const TransferMatrix* m : chain_matrices(spec, cache)) {
    row = row_times(row, *m);
  }
  return dot(row, boundary_Y());
}

TransferMatrix chain_product(const ChainSpec& spec, MatrixCache& cache) {
  TransferMatrix out = TransferMatrix::identity();
  for (const TransferMatrix* m : chain_matrices(spec, cache)) {
    out = mat_mul(out, *m);
  }
  return out;
}

MMVector chain_vector(const ChainSpec& spec, MatrixCache& cache) {
  const auto matrices = chain_matrices(spec, cache);
  MMVector column = boundary_Y();
  for (auto it = matrices.rbegin(); it != matrices.rend(); ++it) {
    column = times_column(**it, column);
  }
  return column;
}

TransferMatrix ring_product(const RingSpec& spec, MatrixCache& cache) {
  validate_ring(spec);
  TransferMatrix out = TransferMatrix::identity();
  for (const FaceSpec& face : spec.faces) {
    out = mat_mul(out, matrix_for(face, cache));
  }
  return out;
}

Count count_ring(const RingSpec& spec, MatrixCache& cache) {
  return mat_trace(ring_product(spec, cache));
}

}  // namespace polyring
