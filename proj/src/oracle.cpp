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

#include "polyring/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <set>
#include <thread>

namespace polyring {

namespace {

enum class State : std::uint8_t { kFree, kMatched, kUnmatched, kRemoved };

struct Arc {
  Vertex to;
  bool usable;  // false for forbidden edges
};

// Snapshot of a partially decided branch.
struct Frame {
  std::vector<State> state;
  std::vector<int> need;  // > 0: the vertex must end up matched
  std::vector<Vertex> mate;
  Vertex start = 0;
};

class Search {
 public:
  Search(const Graph& graph, const ConstraintSet& constraints) {
    const auto n = static_cast<Vertex>(graph.num_vertices());
    frame_.state.assign(n, State::kFree);
    frame_.need.assign(n, 0);
    frame_.mate.assign(n, -1);
    for (Vertex v : constraints.removed) frame_.state[v] = State::kRemoved;

    const std::set<Edge> forbidden(constraints.forbid_edges.begin(),
                                   constraints.forbid_edges.end());
    adjacency_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      if (frame_.state[v] == State::kRemoved) continue;
      for (Vertex u : graph.neighbors(v)) {
        if (frame_.state[u] == State::kRemoved) continue;
        adjacency_[v].push_back({u, !forbidden.contains(Edge(u, v))});
      }
    }

    feasible_ = seed(constraints);
  }

  explicit Search(const Search& shape, Frame frame)
      : adjacency_(shape.adjacency_), frame_(std::move(frame)) {}

  std::uint64_t count() {
    if (!feasible_) return 0;
    std::uint64_t total = 0;
    visit_ = [&total](std::span<const Vertex>) { ++total; };
    explore(frame_.start, 0);
    return total;
  }

  void enumerate(const MatchingVisitor& visit) {
    if (!feasible_) return;
    visit_ = visit;
    explore(frame_.start, 0);
  }

  // Stops `depth` decisions down and returns the open branches in order.
  std::vector<Frame> split(int depth) {
    std::vector<Frame> out;
    if (!feasible_) return out;
    frontier_ = &out;
    split_depth_ = depth;
    visit_ = [this](std::span<const Vertex>) { frontier_->push_back(frame_); };
    explore(frame_.start, 0);
    frontier_ = nullptr;
    split_depth_ = -1;
    return out;
  }

 private:
  bool seed(const ConstraintSet& c) {
    auto& state = frame_.state;
    for (const Edge& e : c.require_edges) {
      if (state[e.first] != State::kFree || state[e.second] != State::kFree) {
        return false;
      }
      match(e.first, e.second);
    }
    for (Vertex v : c.require_uncovered) {
      if (state[v] == State::kMatched) return false;
      if (state[v] == State::kUnmatched) continue;
      if (!can_leave_unmatched(v)) return false;
      leave_unmatched(v);
    }
    for (Vertex v : c.require_covered) ++frame_.need[v];
    for (Vertex v = 0; v < static_cast<Vertex>(state.size()); ++v) {
      if (state[v] == State::kUnmatched && frame_.need[v] > 0) return false;
      if (!satisfiable(v)) return false;
    }
    return true;
  }

  void match(Vertex u, Vertex v) {
    frame_.state[u] = frame_.state[v] = State::kMatched;
    frame_.mate[u] = v;
    frame_.mate[v] = u;
  }

  void unmatch(Vertex u, Vertex v) {
    frame_.state[u] = frame_.state[v] = State::kFree;
    frame_.mate[u] = frame_.mate[v] = -1;
  }

  bool can_leave_unmatched(Vertex v) const {
    if (frame_.need[v] > 0) return false;
    for (const Arc& arc : adjacency_[v]) {
      if (frame_.state[arc.to] == State::kUnmatched) return false;
    }
    return true;
  }

  void leave_unmatched(Vertex v) {
    frame_.state[v] = State::kUnmatched;
    for (const Arc& arc : adjacency_[v]) ++frame_.need[arc.to];
  }

  void undo_unmatched(Vertex v) {
    frame_.state[v] = State::kFree;
    for (const Arc& arc : adjacency_[v]) --frame_.need[arc.to];
  }

  // A free vertex that must be covered needs a free partner over a usable
  // edge.
  bool satisfiable(Vertex w) const {
    if (frame_.state[w] != State::kFree || frame_.need[w] == 0) return true;
    for (const Arc& arc : adjacency_[w]) {
      if (arc.usable && frame_.state[arc.to] == State::kFree) return true;
    }
    return false;
  }

  bool neighbors_satisfiable(Vertex v) const {
    for (const Arc& arc : adjacency_[v]) {
      if (!satisfiable(arc.to)) return false;
    }
    return true;
  }

  void explore(Vertex start, int depth) {
    const auto n = static_cast<Vertex>(frame_.state.size());
    Vertex v = start;
    while (v < n && frame_.state[v] != State::kFree) ++v;
    if (v == n || depth == split_depth_) {
      frame_.start = v;
      visit_(frame_.mate);
      return;
    }

    for (const Arc& arc : adjacency_[v]) {
      const Vertex u = arc.to;
      if (!arc.usable || frame_.state[u] != State::kFree) continue;
      match(v, u);
      if (neighbors_satisfiable(v) && neighbors_satisfiable(u)) {
        explore(v + 1, depth + 1);
      }
      unmatch(v, u);
    }

    if (can_leave_unmatched(v)) {
      leave_unmatched(v);
      if (neighbors_satisfiable(v)) explore(v + 1, depth + 1);
      undo_unmatched(v);
    }
  }

  std::vector<std::vector<Arc>> adjacency_;
  Frame frame_;
  bool feasible_ = true;
  MatchingVisitor visit_;
  std::vector<Frame>* frontier_ = nullptr;
  int split_depth_ = -1;
};

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));

Count to_count(std::uint64_t value) {
  return Count(static_cast<unsigned long>(value));
}

void check_vertex(const Graph& graph, Vertex v) {
  if (v < 0 || v >= static_cast<Vertex>(graph.num_vertices())) {
    throw ConstraintError("vertex " + std::to_string(v) + " not in graph");
  }
}

}  // namespace

void validate_constraints(const Graph& graph, const ConstraintSet& c) {
  for (const auto* list : {&c.removed, &c.require_covered, &c.require_uncovered}) {
    for (Vertex v : *list) check_vertex(graph, v);
  }
  for (const auto* list : {&c.require_edges, &c.forbid_edges}) {
    for (const Edge& e : *list) {
      check_vertex(graph, e.first);
      check_vertex(graph, e.second);
      if (!graph.has_edge(e.first, e.second)) {
        throw ConstraintError("constraint names a non-edge " +
                              std::to_string(e.first) + "-" +
                              std::to_string(e.second));
      }
    }
  }

  const std::set<Vertex> removed(c.removed.begin(), c.removed.end());
  auto clash = [&removed](Vertex v) { return removed.contains(v); };
  for (Vertex v : c.require_covered) {
    if (clash(v)) throw ConstraintError("removed vertex required covered");
  }
  for (Vertex v : c.require_uncovered) {
    if (clash(v)) throw ConstraintError("removed vertex required uncovered");
  }
  for (const auto* list : {&c.require_edges, &c.forbid_edges}) {
    for (const Edge& e : *list) {
      if (clash(e.first) || clash(e.second)) {
        throw ConstraintError("edge constraint touches a removed vertex");
      }
    }
  }
  const std::set<Vertex> covered(c.require_covered.begin(),
                                 c.require_covered.end());
  for (Vertex v : c.require_uncovered) {
    if (covered.contains(v)) {
      throw ConstraintError("vertex both required covered and uncovered");
    }
  }
  const std::set<Edge> forbidden(c.forbid_edges.begin(), c.forbid_edges.end());
  for (const Edge& e : c.require_edges) {
    if (forbidden.contains(e)) {
      throw ConstraintError("edge both required and forbidden");
    }
  }
}

Count count_maximal(const Graph& graph, const ConstraintSet& constraints,
                    unsigned threads) {
  validate_constraints(graph, constraints);
  Search root(graph, constraints);
  if (threads <= 1) {
    return to_count(root.count());
  }

  std::vector<Frame> branches = root.split(12);
  std::vector<std::uint64_t> partial(branches.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < branches.size(); k = next++) {
      Search sub(root, std::move(branches[k]));
      partial[k] = sub.count();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  Count total = 0;
  for (std::uint64_t p : partial) total += to_count(p);
  return total;
}

Count count_maximal_naive(const Graph& graph, const ConstraintSet& c) {
  validate_constraints(graph, c);
  const std::set<Vertex> removed(c.removed.begin(), c.removed.end());
  std::vector<Edge> edges;
  for (const Edge& e : graph.edges()) {
    if (!removed.contains(e.first) && !removed.contains(e.second)) {
      edges.push_back(e);
    }
  }
  if (edges.size() > kNaiveEdgeLimit) {
    throw std::invalid_argument("naive oracle limited to " +
                                std::to_string(kNaiveEdgeLimit) + " edges");
  }
  const std::set<Edge> required(c.require_edges.begin(), c.require_edges.end());
  const std::set<Edge> forbidden(c.forbid_edges.begin(), c.forbid_edges.end());

  std::uint64_t total = 0;
  std::vector<char> covered(graph.num_vertices());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size());
       ++mask) {
    std::fill(covered.begin(), covered.end(), 0);
    bool ok = true;
    std::size_t chosen_required = 0;
    for (std::size_t k = 0; k < edges.size() && ok; ++k) {
      if (!(mask >> k & 1)) continue;
      const Edge& e = edges[k];
      if (covered[e.first] || covered[e.second] || forbidden.contains(e)) {
        ok = false;
      }
      covered[e.first] = covered[e.second] = 1;
      if (required.contains(e)) ++chosen_required;
    }
    if (!ok || chosen_required != required.size()) continue;
    for (const Edge& e : edges) {
      if (!covered[e.first] && !covered[e.second]) ok = false;
    }
    for (Vertex v : c.require_covered) ok = ok && covered[v];
    for (Vertex v : c.require_uncovered) ok = ok && !covered[v];
    if (ok) ++total;
  }
  return to_count(total);
}

void enumerate_maximal(const Graph& graph, const ConstraintSet& constraints,
                       const MatchingVisitor& visit) {
  validate_constraints(graph, constraints);
  Search search(graph, constraints);
  search.enumerate(visit);
}

MMVector mm_vector(const Graph& graph, Vertex x, Vertex y, unsigned threads) {
  check_vertex(graph, x);
  check_vertex(graph, y);
  if (!graph.has_edge(x, y)) {
    throw std::invalid_argument("mm_vector needs an edge, got " +
                                graph.label(x) + "-" + graph.label(y));
  }
  const ConstraintSet rows[9] = {
      {},
      {.removed = {x}},
      {.removed = {y}},
      {.removed = {x, y}},
      {.require_covered = {x, y}},
      {.removed = {x}, .require_covered = {y}},
      {.removed = {y}, .require_covered = {x}},
      {.require_covered = {x}},
      {.require_covered = {y}},
  };
  MMVector out;
  for (std::size_t k = 0; k < kVectorSize; ++k) {
    out[k] = count_maximal(graph, rows[k], threads);
  }
  return out;
}

bool is_maximal(const Graph& graph, std::span<const Edge> matching) {
  std::vector<char> covered(graph.num_vertices(), 0);
  for (const Edge& e : matching) {
    if (!graph.has_edge(e.first, e.second)) return false;
    if (covered[e.first] || covered[e.second]) return false;
    covered[e.first] = covered[e.second] = 1;
  }
  for (const Edge& e : graph.edges()) {
    if (!covered[e.first] && !covered[e.second]) return false;
  }
  return true;
}

}  // namespace polyring
