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

#include "doctest.h"
#include "polyring/oracle.hpp"
#include "support/brute.hpp"

using namespace polyring;
using testing::brute_count;
using testing::BruteQuery;

namespace {

std::uint64_t as_u64(const Count& c) { return c.get_ui(); }

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g;
  for (std::size_t v = 0; v < a.num_vertices() + b.num_vertices(); ++v) g.add_vertex();
  const int shift = static_cast<int>(a.num_vertices());
  for (const Edge& e : a.edges()) g.add_edge(e.first, e.second);
  for (const Edge& e : b.edges()) g.add_edge(e.first + shift, e.second + shift);
  return g;
}

}  // namespace

TEST_CASE("small graphs") {
  CHECK(count_maximal(testing::cycle_graph(6)) == 5);
  CHECK(count_maximal(testing::path_graph(2)) == 1);
  CHECK(count_maximal(Graph{}) == 1);
  CHECK(count_maximal(testing::cycle_graph(5)) == 5);
  CHECK(count_maximal(testing::path_graph(4)) == 2);
}

TEST_CASE("base vectors") {
  const MMVector k2 = mm_vector(testing::path_graph(2), 0, 1);
  CHECK(k2 == make_vector({1, 1, 1, 1, 1, 0, 0, 1, 1}));

  // Path x - y - z with x = 0, y = 1.
  const MMVector p3 = mm_vector(testing::path_graph(3), 0, 1);
  CHECK(p3 == make_vector({2, 1, 1, 1, 1, 1, 0, 1, 2}));
}

TEST_CASE("mm_vector matches brute force component by component") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = testing::random_graph(rng, 7, 12);
    if (g.num_edges() == 0) continue;
    const Edge xy = g.edges()[rng() % g.num_edges()];
    const int x = xy.first, y = xy.second;
    const MMVector v = mm_vector(g, x, y);
    CHECK(as_u64(v[0]) == brute_count(g));
    CHECK(as_u64(v[1]) == brute_count(g, {.removed = {x}}));
    CHECK(as_u64(v[2]) == brute_count(g, {.removed = {y}}));
    CHECK(as_u64(v[3]) == brute_count(g, {.removed = {x, y}}));
    CHECK(as_u64(v[4]) == brute_count(g, {.covered = {x, y}}));
    CHECK(as_u64(v[5]) == brute_count(g, {.removed = {x}, .covered = {y}}));
    CHECK(as_u64(v[6]) == brute_count(g, {.removed = {y}, .covered = {x}}));
    CHECK(as_u64(v[7]) == brute_count(g, {.covered = {x}}));
    CHECK(as_u64(v[8]) == brute_count(g, {.covered = {y}}));
  }
}

TEST_CASE("is_maximal") {
  const Graph c6 = testing::cycle_graph(6);  // vertices 0..5 stand for 1..6
  const std::vector<Edge> perfect{{0, 1}, {2, 3}, {4, 5}};
  const std::vector<Edge> short_one{{0, 1}, {2, 3}};
  const std::vector<Edge> spread{{1, 2}, {4, 5}};
  const std::vector<Edge> clash{{0, 1}, {1, 2}, {3, 4}};
  const std::vector<Edge> missing{{0, 3}, {1, 2}, {4, 5}};
  CHECK(is_maximal(c6, perfect));
  CHECK_FALSE(is_maximal(c6, short_one));
  CHECK(is_maximal(c6, spread));
  CHECK_FALSE(is_maximal(c6, clash));
  CHECK_FALSE(is_maximal(c6, missing));
}

TEST_CASE("production and naive tiers agree with brute force on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const Graph g = testing::random_graph(rng, n, 16);
    const std::uint64_t want = brute_count(g);
    CHECK(as_u64(count_maximal(g)) == want);
    CHECK(as_u64(count_maximal_naive(g)) == want);
  }
}

TEST_CASE("constrained counts agree with brute force") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 9)(rng);
    const Graph g = testing::random_graph(rng, n, 14);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    ConstraintSet cs;
    BruteQuery q;
    cs.removed = {order[0]};
    q.removed = {order[0]};
    cs.require_covered = {order[1]};
    q.covered = {order[1]};
    cs.require_uncovered = {order[2]};
    q.uncovered = {order[2]};
    for (const Edge& e : g.edges()) {
      if (q.removed.count(e.first) || q.removed.count(e.second)) continue;
      const int pick = static_cast<int>(rng() % 6);
      if (pick == 0) {
        cs.require_edges.push_back(e);
        q.required.insert({e.first, e.second});
      } else if (pick == 1) {
        cs.forbid_edges.push_back(e);
        q.forbidden.insert({e.first, e.second});
      }
    }
    const std::uint64_t want = brute_count(g, q);
    CHECK(as_u64(count_maximal(g, cs)) == want);
    CHECK(as_u64(count_maximal_naive(g, cs)) == want);
    std::uint64_t streamed = 0;
    enumerate_maximal(g, cs, [&](std::span<const Vertex> mate) {
      std::vector<Edge> m;
      for (int v = 0; v < n; ++v) {
        if (mate[v] > v) m.emplace_back(v, mate[v]);
      }
      CHECK(mate[order[0]] == -1);
      CHECK(mate[order[1]] != -1);
      CHECK(mate[order[2]] == -1);
      ++streamed;
    });
    CHECK(streamed == want);
  }
}

TEST_CASE("enumerated matchings are maximal") {
  const Graph g = testing::cycle_graph(8);
  std::uint64_t seen = 0;
  enumerate_maximal(g, {}, [&](std::span<const Vertex> mate) {
    std::vector<Edge> m;
    for (int v = 0; v < 8; ++v) {
      if (mate[v] > v) m.emplace_back(v, mate[v]);
    }
    CHECK(is_maximal(g, m));
    ++seen;
  });
  CHECK(seen == brute_count(g));
}

TEST_CASE("identities on random graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    const Graph g = testing::random_graph(rng, n, 18);
    const Count total = count_maximal(g);
    for (Vertex a = 0; a < n; ++a) {
      const Count covered = count_maximal(g, {.require_covered = {a}});
      Count expanded = 0;
      for (Vertex y : g.neighbors(a)) expanded += count_maximal(g, {.removed = {a, y}});
      CHECK(covered == expanded);
      CHECK(total == covered + count_maximal(g, {.require_uncovered = {a}}));
    }
    for (const Edge& e : g.edges()) {
      CHECK(count_maximal(g, {.require_edges = {e}}) ==
            count_maximal(g, {.removed = {e.first, e.second}}));
    }
  }
}

TEST_CASE("disjoint union multiplies") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph a = testing::random_graph(rng, 6, 9);
    const Graph b = testing::random_graph(rng, 5, 7);
    CHECK(count_maximal(disjoint_union(a, b)) == count_maximal(a) * count_maximal(b));
  }
}

TEST_CASE("threaded count matches single-threaded") {
  const MarkedGraph ring = build_ring(parse_ring("t(2)t(3)t(3)t(1)t(3)t(3)"));
  const Count one = count_maximal(ring.graph);
  CHECK(count_maximal(ring.graph, {}, 4) == one);
  CHECK(count_maximal(ring.graph, {.require_covered = {0}}, 3) ==
        count_maximal(ring.graph, {.require_covered = {0}}));
}

TEST_CASE("constraint validation") {
  const Graph g = testing::path_graph(3);
  CHECK_THROWS_AS(count_maximal(g, {.removed = {7}}), ConstraintError);
  CHECK_THROWS_AS(count_maximal(g, {.removed = {0}, .require_covered = {0}}),
                  ConstraintError);
  CHECK_THROWS_AS(count_maximal(g, {.require_covered = {1}, .require_uncovered = {1}}),
                  ConstraintError);
  CHECK_THROWS_AS(count_maximal(g, {.require_edges = {{0, 2}}}), ConstraintError);
  CHECK_THROWS_AS(
      count_maximal(g, {.require_edges = {{0, 1}}, .forbid_edges = {{0, 1}}}),
      ConstraintError);
  CHECK_THROWS_AS(count_maximal_naive(testing::cycle_graph(30)), std::exception);
}
