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

#include <random>
#include <sstream>

#include "doctest.h"
#include "polyring/oracle.hpp"
#include "polyring/transfer.hpp"
#include "support/brute.hpp"

using namespace polyring;

namespace {

ChainSpec hex_chain(const std::vector<int>& interior) {
  ChainSpec spec;
  spec.faces.push_back({6, std::nullopt});
  for (int k : interior) spec.faces.push_back({6, k});
  spec.faces.push_back({6, std::nullopt});
  return spec;
}

RingSpec random_ring(std::mt19937_64& rng, int n, int lo, int hi) {
  RingSpec ring;
  for (int j = 0; j < n; ++j) {
    const int size = std::uniform_int_distribution<int>(lo, hi)(rng);
    ring.faces.push_back({size, std::uniform_int_distribution<int>(1, size - 3)(rng)});
  }
  return ring;
}

}  // namespace

TEST_CASE("matrix basics") {
  const TransferMatrix& S = matrix_S();
  CHECK(mat_mul(S, TransferMatrix::identity()) == S);
  CHECK(mat_mul(TransferMatrix::identity(), S) == S);
  CHECK(mat_trace(TransferMatrix::identity()) == 9);
  CHECK(mat_trace(S) == 5);
  CHECK(mat_trace(matrix_L()) == 1);
  CHECK(row_times(boundary_X(), S) == make_vector({1, 1, 1, 1, 1, 1, 1, 0, 0}));
  CHECK(times_column(S, boundary_Y()) == make_vector({5, 3, 3, 2, 3, 2, 2, 4, 4}));
  CHECK(dot(boundary_X(), boundary_Y()) == 1);
}

TEST_CASE("boundary vectors") {
  CHECK(boundary_X() == make_vector({1, 0, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(boundary_Y() == make_vector({1, 1, 1, 1, 1, 0, 0, 1, 1}));
  CHECK(boundary_Y() == mm_vector(testing::path_graph(2), 0, 1));
}

TEST_CASE("matrix_for picks the hexagonal constants") {
  CHECK(&matrix_for({6, 1}) == &matrix_L());
  CHECK(&matrix_for({6, 2}) == &matrix_S());
  CHECK(&matrix_for({6, 3}) == &matrix_R());
  MatrixCache cache;
  CHECK(matrix_for({7, 3}, cache) == transition_matrix(7, 3));
  CHECK(cache.size() == 1);
}

TEST_CASE("chain counts") {
  CHECK(count_chain(parse_chain("t(6,*)t(6,*)")) == 20);
  CHECK(count_chain(ChainSpec{{{6, std::nullopt}}}) == 5);
  CHECK(count_chain(ChainSpec{{{7, std::nullopt}}}) ==
        count_maximal(testing::cycle_graph(7)));
  CHECK(count_chain(parse_chain("t(2)")) == count_chain(hex_chain({2})));
}

TEST_CASE("chain counts match the oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 4)(rng);
    RingSpec faces = random_ring(rng, n, 4, 8);
    ChainSpec chain{faces.faces};
    chain.faces.front().offset.reset();
    chain.faces.back().offset.reset();
    const MarkedGraph g = build_chain(chain);
    CHECK(count_chain(chain) == count_maximal(g.graph));
    const MMVector vec = chain_vector(chain);
    CHECK(vec[0] == count_chain(chain));
    CHECK(vec == mm_vector(g.graph, g.terminal_ab->from, g.terminal_ab->to));
  }
}

TEST_CASE("chain_vector of one polygon is independent of the offset") {
  for (int m = 4; m <= 8; ++m) {
    const MMVector want = times_column(transition_matrix(m, 1), boundary_Y());
    for (int i = 1; i <= m - 3; ++i) {
      CHECK(times_column(transition_matrix(m, i), boundary_Y()) == want);
    }
    CHECK(want[0] == count_maximal(testing::cycle_graph(m)));
  }
  CHECK(chain_vector(ChainSpec{{{6, std::nullopt}}}) ==
        make_vector({5, 3, 3, 2, 3, 2, 2, 4, 4}));
}

TEST_CASE("ring counts") {
  const RingSpec three = parse_ring("t(6,2)t(6,2)t(6,2)");
  const Count c = count_ring(three);
  CHECK(c == mat_trace(mat_mul(mat_mul(matrix_S(), matrix_S()), matrix_S())));
  CHECK(c.get_ui() == testing::brute_count(build_ring(three).graph));
  CHECK(count_ring(parse_ring("t(2)t(3)t(3)t(1)t(3)t(3)t(3)t(2)t(2)t(3)t(3)")) ==
        2804280);
  CHECK(count_ring(parse_ring(
            "t(7,3)t(5,2)t(8,4)t(6,3)t(5,2)t(6,2)t(8,3)t(6,3)t(6,3)")) == 481614);
}

TEST_CASE("ring counts match the oracle and are rotation invariant") {
  std::mt19937_64 rng(41);
  int compared = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 4)(rng);
    const RingSpec ring = random_ring(rng, n, 4, 7);
    MarkedGraph g;
    try {
      g = build_ring(ring);
    } catch (const GluingError&) {
      continue;
    }
    const Count c = count_ring(ring);
    CHECK(c == count_maximal(g.graph));
    for (int j = 1; j < n; ++j) CHECK(count_ring(rotate(ring, j)) == c);
    ++compared;
  }
  CHECK(compared > 40);
}

TEST_CASE("matrix text formats round trip") {
  const TransferMatrix T = transition_matrix(8, 4);
  std::istringstream plain(format_matrix_plain(T));
  CHECK(parse_matrix_plain(plain) == T);

  const LabeledMatrix labeled = parse_matrix_json(format_matrix_json(T, 8, 4));
  CHECK(labeled.matrix == T);
  CHECK(labeled.size == 8);
  CHECK(labeled.offset == 4);

  // Entries past 64 bits travel as strings.
  TransferMatrix big = ring_product(
      parse_ring("t(2)t(3)t(3)t(1)t(3)t(3)t(3)t(2)t(2)t(3)t(3)"));
  for (int k = 0; k < 4; ++k) big = mat_mul(big, big);
  CHECK(decimal_digits(big(0, 0)) > 20);
  CHECK(parse_matrix_json(format_matrix_json(big, 6, 2)).matrix == big);

  std::istringstream short_input("1 2 3\n");
  CHECK_THROWS(parse_matrix_plain(short_input));
  CHECK_THROWS(parse_matrix_json("{\"rows\": [[1]]}"));
}

TEST_CASE("matrix_for requires a resolved offset") {
  CHECK_THROWS(matrix_for({6, std::nullopt}));
  CHECK_THROWS(matrix_for({6, 4}));
}
