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

#ifndef POLYRING_VERIFY_HPP_
#define POLYRING_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polyring/notation.hpp"
#include "polyring/polygraph.hpp"

namespace polyring {

struct VerifyOptions {
  int max_faces = 4;
  int min_size = 4;
  int max_size = 7;
  std::uint64_t seed = 0;
  // Random polygon specs per sampled sweep.
  std::size_t samples = 200;
  // Flips S[1,1] in the reference copy the regeneration suite compares
  // against. Only for checking that a broken constant is caught.
  bool corrupt_reference_s = false;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  // First failure, with a spec that reproduces it.
  std::string failure;
  double seconds = 0.0;
};

// Runs every suite (concurrently) and returns results sorted by name:
//   chain-oracle, gluing, regeneration, ring-oracle, rotation,
//   single-face, trace-decomposition
std::vector<SuiteResult> run_verify(const VerifyOptions& options);

// Individual suites, also used by the acceptance tests.
SuiteResult verify_regeneration(const VerifyOptions& options);
SuiteResult verify_ring_oracle(const VerifyOptions& options);
SuiteResult verify_chain_oracle(const VerifyOptions& options);
SuiteResult verify_rotation(const VerifyOptions& options);
SuiteResult verify_gluing(const VerifyOptions& options);
SuiteResult verify_trace_decomposition(const VerifyOptions& options);
SuiteResult verify_single_face(const VerifyOptions& options);

// Every hexagonal ring with n faces (3^n specs, lexicographic in offsets).
std::vector<RingSpec> all_hexagonal_rings(std::size_t n);
// Every hexagonal chain with n faces (3^(n-2) interior choices).
std::vector<ChainSpec> all_hexagonal_chains(std::size_t n);

// Small graphs with a marked edge (d, c) used as the attached part K.
struct AttachedGraph {
  std::string name;
  Graph graph;
  DirectedEdge dc;
};
std::vector<AttachedGraph> attached_graphs();

}  // namespace polyring

#endif  // POLYRING_VERIFY_HPP_
