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

#ifndef POLYRING_POLYGRAPH_HPP_
#define POLYRING_POLYGRAPH_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyring/notation.hpp"

namespace polyring {

using Vertex = int;

// Unordered edge, stored with first < second.
struct Edge {
  Vertex first = 0;
  Vertex second = 0;

  Edge() = default;
  Edge(Vertex u, Vertex v) : first(u < v ? u : v), second(u < v ? v : u) {}
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Edge with a direction; (x, y) names the roles in Psi_xy.
struct DirectedEdge {
  Vertex from = 0;
  Vertex to = 0;

  Edge undirected() const { return Edge(from, to); }
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

class GluingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertices 0..n-1. Neighbor lists stay sorted so
// every traversal is in label order.
class Graph {
 public:
  Vertex add_vertex(std::string label = {});
  // Throws GluingError on a loop or a parallel edge.
  void add_edge(Vertex u, Vertex v);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;
  const std::string& label(Vertex v) const { return labels_[v]; }
  std::optional<Vertex> find(const std::string& label) const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

// One face in transfer orientation. Walking `cycle` clockwise reads
// b, a, (offset edges), d, c, ...; entry = (a, b) is the shared edge with the
// previous face (or the free terminal edge ab of a chain), exit = (d, c) the
// shared edge with the next face (or the free terminal edge dc).
struct FaceRecord {
  std::vector<Vertex> cycle;
  DirectedEdge entry;
  DirectedEdge exit;
  int offset = 0;
};

// Vertices of the matrix-generation gadget. e is the neighbor of d on the
// polygon other than c, f the neighbor of c other than d; e may coincide
// with a and f with b.
struct GadgetMarks {
  Vertex a, b, c, d, e, f, k1, k2;
};

struct MarkedGraph {
  Graph graph;
  std::vector<FaceRecord> faces;
  // Shared edges e_1..e_n for a ring, e_2..e_n for a chain.
  std::vector<Edge> shared_edges;
  bool is_ring = false;
  // Chains: the free edges ab on the first face and dc on the last face.
  std::optional<DirectedEdge> terminal_ab;
  std::optional<DirectedEdge> terminal_dc;
  std::optional<GadgetMarks> gadget;
};

MarkedGraph build_chain(const ChainSpec& spec);
MarkedGraph build_ring(const RingSpec& spec);

// The Algorithm-1 gadget J': an m-cycle whose edge dc (offset i clockwise
// from ab) is removed, with pendant k1 on d and k2 on c.
MarkedGraph build_gadget(int m, int i);

// Where a ring was closed: the adhesive edge e_1 = dc with d = a_1, c = b_1,
// and the last face's neighbors e of d and f of c.
struct RingSeam {
  Vertex d, c, e, f;
};
RingSeam ring_seam(const MarkedGraph& ring);

struct GluedGraph {
  Graph graph;
  // Image of each vertex of the two inputs in the result.
  std::vector<Vertex> base_map;
  std::vector<Vertex> other_map;
};

// Disjoint union of `base` and `other` with other_edge identified onto
// base_edge (from with from, to with to). Both must be edges; they become a
// single edge in the result.
GluedGraph glue_on_edge(const Graph& base, DirectedEdge base_edge,
                        const Graph& other, DirectedEdge other_edge);

// Edge-list dump: '#' header lines describing marks, then "u v" per edge.
void write_edge_list(std::ostream& out, const MarkedGraph& g);
void write_edge_list(std::ostream& out, const Graph& g);
// Reads the edge-list format back; '#' lines other than "# vertices N" are
// ignored.
Graph read_edge_list(std::istream& in);

}  // namespace polyring

#endif  // POLYRING_POLYGRAPH_HPP_
