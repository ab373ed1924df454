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

#ifndef POLYRING_TRANSFER_HPP_
#define POLYRING_TRANSFER_HPP_

#include "polyring/count.hpp"
#include "polyring/matgen.hpp"
#include "polyring/matrix.hpp"
#include "polyring/notation.hpp"

namespace polyring {

// The hexagonal transition matrices: S for linear attachment t(6,2), L for
// t(6,1), R for t(6,3).
const TransferMatrix& matrix_S();
const TransferMatrix& matrix_L();
const TransferMatrix& matrix_R();

// X = (1,0,...,0) selects Psi(G); Y = (1,1,1,1,1,0,0,1,1) is the maximal
// matching vector of a single edge.
const MMVector& boundary_X();
const MMVector& boundary_Y();

// Transition matrix of one face. Hexagons with offsets 1..3 use the constant
// L/S/R; everything else comes from `cache`. The offset must be resolved.
const TransferMatrix& matrix_for(const FaceSpec& face,
                                 MatrixCache& cache = shared_matrix_cache());

// X * T_{s1,1} * (interior faces) * T_{sn,1} * Y, folded left to right as a
// row vector. A single-face chain gives X * T_{m,1} * Y = Psi(C_m).
Count count_chain(const ChainSpec& spec,
                  MatrixCache& cache = shared_matrix_cache());

// Ordered product of the face matrices of a ring.
TransferMatrix ring_product(const RingSpec& spec,
                            MatrixCache& cache = shared_matrix_cache());

// Trace of ring_product.
Count count_ring(const RingSpec& spec,
                 MatrixCache& cache = shared_matrix_cache());

// Product of the chain's face matrices (terminals at offset 1).
TransferMatrix chain_product(const ChainSpec& spec,
                             MatrixCache& cache = shared_matrix_cache());

// Psi_ab of the chain graph: chain_product * Y, folded right to left.
MMVector chain_vector(const ChainSpec& spec,
                      MatrixCache& cache = shared_matrix_cache());

}  // namespace polyring

#endif  // POLYRING_TRANSFER_HPP_
