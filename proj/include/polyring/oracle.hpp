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

#ifndef POLYRING_ORACLE_HPP_
#define POLYRING_ORACLE_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "polyring/count.hpp"
#include "polyring/polygraph.hpp"

namespace polyring {

// Constraints on the maximal matchings being counted.
//
// `removed` vertices are deleted before anything else. Maximality is then
// judged in the remaining graph with forbidden edges still present: a
// forbidden edge can never be used, yet it still has to be dominated by a
// covered endpoint. require_uncovered is a filter, not a deletion.
struct ConstraintSet {
  std::vector<Vertex> removed;
  std::vector<Vertex> require_covered;
  std::vector<Vertex> require_uncovered;
  std::vector<Edge> require_edges;
  std::vector<Edge> forbid_edges;
};

class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void validate_constraints(const Graph& graph, const ConstraintSet& constraints);

// Number of matchings of (graph - removed) that are maximal there and satisfy
// the constraints. Backtracking over vertices in label order; `threads` > 1
// splits the top of the branch tree across workers (same result).
Count count_maximal(const Graph& graph, const ConstraintSet& constraints = {},
                    unsigned threads = 1);

// Reference tier: filters all 2^|E| edge subsets of (graph - removed).
inline constexpr std::size_t kNaiveEdgeLimit = 24;
Count count_maximal_naive(const Graph& graph,
                          const ConstraintSet& constraints = {});

// Receives mate[v] for every vertex of the input graph: the partner of v, or
// -1 when v is unmatched or removed.
using MatchingVisitor = std::function<void(std::span<const Vertex> mate)>;

// Streams every counted matching, in a deterministic order.
void enumerate_maximal(const Graph& graph, const ConstraintSet& constraints,
                       const MatchingVisitor& visit);

MMVector mm_vector(const Graph& graph, Vertex x, Vertex y,
                   unsigned threads = 1);

// True iff `matching` is a matching of `graph` and every edge of `graph` has
// a covered endpoint.
bool is_maximal(const Graph& graph, std::span<const Edge> matching);

}  // namespace polyring

#endif  // POLYRING_ORACLE_HPP_
