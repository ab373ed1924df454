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

#include <set>
#include <thread>

#include "doctest.h"
#include "polyring/matgen.hpp"
#include "polyring/oracle.hpp"
#include "polyring/transfer.hpp"
#include "support/brute.hpp"

using namespace polyring;

namespace {

// The nine cases written out independently of the library.
std::vector<int> firing_cases(const MarkCoverage& m) {
  const bool k1 = m.k1, e = m.e, k2 = m.k2, f = m.f;
  const bool fires[9] = {
      k1 && e && k2 && f, k2 && f && !k1, k1 && e && !k2,
      !k1 && !k2,         !e && !f,       !k1 && !f,
      !k2 && !e,          k2 && f && !e,  k1 && e && !f,
  };
  std::vector<int> out;
  for (int y = 0; y < 9; ++y) {
    if (fires[y]) out.push_back(y + 1);
  }
  return out;
}

ConstraintSet row_constraints(const RowCondition& row, const GadgetMarks& g) {
  ConstraintSet cs;
  if (row.remove_a) cs.removed.push_back(g.a);
  if (row.remove_b) cs.removed.push_back(g.b);
  if (row.cover_a) cs.require_covered.push_back(g.a);
  if (row.cover_b) cs.require_covered.push_back(g.b);
  return cs;
}

// The m-cycle of the gadget with dc restored and the pendants dropped.
Graph polygon_of(const MarkedGraph& gadget) {
  const GadgetMarks& g = *gadget.gadget;
  Graph out;
  for (std::size_t v = 0; v < gadget.graph.num_vertices(); ++v) out.add_vertex();
  for (const Edge& e : gadget.graph.edges()) {
    if (e.first == g.k1 || e.second == g.k1 || e.first == g.k2 || e.second == g.k2) continue;
    out.add_edge(e.first, e.second);
  }
  out.add_edge(g.d, g.c);
  return out;
}

}  // namespace

TEST_CASE("row condition table") {
  const auto& rows = row_conditions();
  const bool want[9][4] = {
      {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1},
      {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
  };
  for (int x = 0; x < 9; ++x) {
    CHECK(rows[x].index == x + 1);
    CHECK(rows[x].remove_a == want[x][0]);
    CHECK(rows[x].remove_b == want[x][1]);
    CHECK(rows[x].cover_a == want[x][2]);
    CHECK(rows[x].cover_b == want[x][3]);
  }
}

TEST_CASE("regeneration of the hexagonal matrices") {
  CHECK(transition_matrix(6, 1) == matrix_L());
  CHECK(transition_matrix(6, 2) == matrix_S());
  CHECK(transition_matrix(6, 3) == matrix_R());
}

TEST_CASE("classify examples") {
  CHECK(classify({.k1 = true, .e = true, .k2 = true, .f = true}) == 1);
  CHECK(classify({.k1 = false, .e = true, .k2 = true, .f = true}) == 2);
  CHECK(classify({.k1 = false, .e = true, .k2 = false, .f = true}) == 4);
}

TEST_CASE("classify on all sixteen patterns") {
  for (int bits = 0; bits < 16; ++bits) {
    const MarkCoverage m{(bits & 1) != 0, (bits >> 1 & 1) != 0, (bits >> 2 & 1) != 0,
                         (bits >> 3 & 1) != 0};
    const std::vector<int> fired = firing_cases(m);
    if (fired.size() == 1) {
      CHECK(classify(m) == fired.front());
    } else {
      CHECK_THROWS_AS(classify(m), ClassificationError);
    }
  }
}

TEST_CASE("every enumerated matching fires exactly one case") {
  for (int m = 4; m <= 8; ++m) {
    for (int i = 1; i <= m - 3; ++i) {
      const MarkedGraph gadget = build_gadget(m, i);
      const GadgetMarks& g = *gadget.gadget;
      for (const RowCondition& row : row_conditions()) {
        const ConstraintSet cs = row_constraints(row, g);
        const std::set<Vertex> removed(cs.removed.begin(), cs.removed.end());
        enumerate_maximal(gadget.graph, cs, [&](std::span<const Vertex> mate) {
          auto in_v = [&](Vertex v) { return mate[v] != -1 || removed.count(v) > 0; };
          const MarkCoverage cov{in_v(g.k1), in_v(g.e), in_v(g.k2), in_v(g.f)};
          CHECK(firing_cases(cov).size() == 1);
          if (!cov.k1) {
            CHECK(mate[g.d] == g.e);
          }
          if (!cov.k2) {
            CHECK(mate[g.c] == g.f);
          }
        });
      }
      GenerationTrace trace;
      transition_matrix(m, i, &trace);
      CHECK(trace.pendant_violations == 0);
    }
  }
}

TEST_CASE("row sums equal constrained gadget counts") {
  for (int m = 4; m <= 9; ++m) {
    for (int i = 1; i <= m - 3; ++i) {
      const MarkedGraph gadget = build_gadget(m, i);
      const TransferMatrix T = transition_matrix(m, i);
      for (int x = 0; x < 9; ++x) {
        Count sum = 0;
        for (int y = 0; y < 9; ++y) sum += T(x, y);
        CHECK(sum == count_maximal(gadget.graph,
                                   row_constraints(row_conditions()[x], *gadget.gadget)));
      }
    }
  }
  const MarkedGraph g51 = build_gadget(5, 1);
  const TransferMatrix T51 = transition_matrix(5, 1);
  Count first = 0;
  for (int y = 0; y < 9; ++y) first += T51(0, y);
  CHECK(first.get_ui() == testing::brute_count(g51.graph));
}

TEST_CASE("attaching a polygon multiplies by its matrix") {
  const Graph k2 = testing::path_graph(2);
  const Graph c4 = testing::cycle_graph(4);
  const Graph p3 = testing::path_graph(3);
  for (int m = 4; m <= 7; ++m) {
    for (int i = 1; i <= m - 3; ++i) {
      const MarkedGraph gadget = build_gadget(m, i);
      const GadgetMarks& g = *gadget.gadget;
      const Graph polygon = polygon_of(gadget);
      const TransferMatrix T = transition_matrix(m, i);
      for (const Graph* K : {&k2, &c4, &p3}) {
        const GluedGraph z = glue_on_edge(polygon, {g.d, g.c}, *K, {0, 1});
        const MMVector lhs = mm_vector(z.graph, z.base_map[g.a], z.base_map[g.b]);
        CHECK(lhs == times_column(T, mm_vector(*K, 0, 1)));
      }
    }
  }
}

TEST_CASE("boundary products do not depend on the offset") {
  for (int m = 4; m <= 8; ++m) {
    const TransferMatrix first = transition_matrix(m, 1);
    const MMVector row = row_times(boundary_X(), first);
    const MMVector col = times_column(first, boundary_Y());
    for (int i = 2; i <= m - 3; ++i) {
      const TransferMatrix T = transition_matrix(m, i);
      CHECK(row_times(boundary_X(), T) == row);
      CHECK(times_column(T, boundary_Y()) == col);
    }
    for (int i = 1; i <= m - 3; ++i) {
      CHECK(dot(row_times(boundary_X(), transition_matrix(m, i)), boundary_Y()) ==
            count_maximal(testing::cycle_graph(m)));
    }
    CHECK(col == mm_vector(testing::cycle_graph(m), 1, 0));
  }
}

TEST_CASE("range errors") {
  CHECK_THROWS_AS(transition_matrix(3, 1), NotationError);
  CHECK_THROWS_AS(transition_matrix(6, 0), NotationError);
  CHECK_THROWS_AS(transition_matrix(6, 4), NotationError);
}

TEST_CASE("matrix cache under concurrent use") {
  MatrixCache cache;
  std::vector<std::thread> workers;
  std::vector<const TransferMatrix*> seen(16);
  for (int t = 0; t < 16; ++t) {
    workers.emplace_back([&, t] { seen[t] = &cache.get(7 + t % 2, 2); });
  }
  for (auto& w : workers) w.join();
  CHECK(cache.size() == 2);
  for (int t = 0; t < 16; ++t) {
    CHECK(*seen[t] == transition_matrix(7 + t % 2, 2));
    CHECK(seen[t] == &cache.get(7 + t % 2, 2));
  }
}
