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

#include "polyring/polygraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace polyring {

Vertex Graph::add_vertex(std::string label) {
  const auto v = static_cast<Vertex>(adjacency_.size());
  if (label.empty()) label = std::to_string(v);
  adjacency_.emplace_back();
  labels_.push_back(std::move(label));
  return v;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw GluingError("loop at vertex " + label(u));
  if (has_edge(u, v)) {
    throw GluingError("parallel edge " + label(u) + "-" + label(v));
  }
  auto insert = [](std::vector<Vertex>& list, Vertex x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert(adjacency_[u], v);
  insert(adjacency_[v], u);
  edges_.emplace_back(u, v);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::optional<Vertex> Graph::find(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

namespace {

struct Identified {
  Graph graph;
  std::vector<Vertex> map;
};

// Merges drop.from into keep.from and drop.to into keep.to. The edge `drop`
// collapses onto `keep`; any other coincidence is a gluing conflict.
Identified identify(const Graph& g, DirectedEdge keep, DirectedEdge drop) {
  if (!g.has_edge(keep.from, keep.to) || !g.has_edge(drop.from, drop.to)) {
    throw GluingError("identified pairs must both be edges");
  }
  const Vertex ends[] = {keep.from, keep.to, drop.from, drop.to};
  for (int x = 0; x < 4; ++x) {
    for (int y = x + 1; y < 4; ++y) {
      if (ends[x] == ends[y]) {
        throw GluingError("identified edges share a vertex");
      }
    }
  }

  Identified out;
  out.map.assign(g.num_vertices(), -1);
  for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v) {
    if (v == drop.from || v == drop.to) continue;
    out.map[v] = out.graph.add_vertex(g.label(v));
  }
  out.map[drop.from] = out.map[keep.from];
  out.map[drop.to] = out.map[keep.to];

  const Edge dropped = drop.undirected();
  for (const Edge& edge : g.edges()) {
    if (edge == dropped) continue;
    out.graph.add_edge(out.map[edge.first], out.map[edge.second]);
  }
  return out;
}

DirectedEdge remap(DirectedEdge e, const std::vector<Vertex>& map) {
  return {map[e.from], map[e.to]};
}

// Lays out faces in order. Face j walks clockwise b, a, p..., d, c, q...
// where (a, b) is the previous face's (d, c). offsets[j] is the arc length
// from a to d on face j, including the first and last face, whose free edges
// are placed by it.
MarkedGraph build_open(const std::vector<int>& sizes,
                       const std::vector<int>& offsets) {
  MarkedGraph out;
  Graph& g = out.graph;
  DirectedEdge previous_exit{};
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    const int size = sizes[j];
    const int offset = offsets[j];
    const std::string prefix = "f" + std::to_string(j + 1) + ".";
    int position = 0;
    auto fresh = [&]() { return g.add_vertex(prefix + std::to_string(position++)); };

    FaceRecord face;
    face.offset = offset;
    Vertex a, b;
    if (j == 0) {
      b = fresh();
      a = fresh();
    } else {
      a = previous_exit.from;
      b = previous_exit.to;
      position = 2;
    }
    face.cycle = {b, a};
    for (int p = 1; p < offset; ++p) face.cycle.push_back(fresh());
    const Vertex d = fresh();
    const Vertex c = fresh();
    face.cycle.push_back(d);
    face.cycle.push_back(c);
    for (int q = 0; q < size - offset - 3; ++q) face.cycle.push_back(fresh());

    for (std::size_t t = 0; t < face.cycle.size(); ++t) {
      const Vertex u = face.cycle[t];
      const Vertex v = face.cycle[(t + 1) % face.cycle.size()];
      if (j > 0 && t == 0) continue;  // edge b-a already exists
      g.add_edge(u, v);
    }
    face.entry = {a, b};
    face.exit = {d, c};
    if (j > 0) out.shared_edges.push_back(face.entry.undirected());
    previous_exit = face.exit;
    out.faces.push_back(std::move(face));
  }
  return out;
}

}  // namespace

MarkedGraph build_chain(const ChainSpec& spec) {
  validate_chain(spec);
  std::vector<int> sizes, offsets;
  for (std::size_t j = 0; j < spec.faces.size(); ++j) {
    sizes.push_back(spec.faces[j].size);
    // Terminal wildcards resolve to offset 1; a cycle is vertex transitive,
    // so this only fixes where the labels ab and dc sit.
    offsets.push_back(spec.faces[j].offset.value_or(1));
  }
  MarkedGraph out = build_open(sizes, offsets);
  out.terminal_ab = out.faces.front().entry;
  out.terminal_dc = out.faces.back().exit;
  return out;
}

MarkedGraph build_ring(const RingSpec& spec) {
  validate_ring(spec);
  std::vector<int> sizes, offsets;
  for (const FaceSpec& face : spec.faces) {
    sizes.push_back(face.size);
    offsets.push_back(*face.offset);
  }
  MarkedGraph open = build_open(sizes, offsets);

  // Glue the last face's free edge dc onto the first face's free edge ab,
  // d onto a and c onto b, so the two faces traverse it in opposite
  // directions.
  const DirectedEdge keep = open.faces.front().entry;
  const DirectedEdge drop = open.faces.back().exit;
  Identified merged = identify(open.graph, keep, drop);

  MarkedGraph out;
  out.graph = std::move(merged.graph);
  out.is_ring = true;
  for (FaceRecord face : open.faces) {
    for (Vertex& v : face.cycle) v = merged.map[v];
    face.entry = remap(face.entry, merged.map);
    face.exit = remap(face.exit, merged.map);
    out.faces.push_back(std::move(face));
  }
  out.shared_edges.push_back(out.faces.front().entry.undirected());
  for (std::size_t j = 1; j < out.faces.size(); ++j) {
    out.shared_edges.push_back(out.faces[j].entry.undirected());
  }
  return out;
}

MarkedGraph build_gadget(int m, int i) {
  if (m < kMinFaceSize || i < 1 || i > m - 3) {
    throw NotationError(NotationError::Kind::kRange, 0,
                        "gadget needs m >= 4 and 1 <= i <= m-3, got m=" +
                            std::to_string(m) + " i=" + std::to_string(i));
  }
  MarkedGraph out;
  Graph& g = out.graph;
  for (int v = 0; v < m; ++v) g.add_vertex("v" + std::to_string(v));

  GadgetMarks marks{};
  marks.b = 0;
  marks.a = 1;
  marks.d = i + 1;
  marks.c = i + 2;
  marks.e = i;
  marks.f = (i + 3) % m;
  for (int v = 0; v < m; ++v) {
    const int w = (v + 1) % m;
    if (v == marks.d && w == marks.c) continue;
    g.add_edge(v, w);
  }
  marks.k1 = g.add_vertex("k1");
  marks.k2 = g.add_vertex("k2");
  g.add_edge(marks.d, marks.k1);
  g.add_edge(marks.c, marks.k2);

  FaceRecord face;
  for (int v = 0; v < m; ++v) face.cycle.push_back(v);
  face.entry = {marks.a, marks.b};
  face.exit = {marks.d, marks.c};
  face.offset = i;
  out.faces.push_back(std::move(face));
  out.terminal_ab = DirectedEdge{marks.a, marks.b};
  out.terminal_dc = DirectedEdge{marks.d, marks.c};
  out.gadget = marks;
  return out;
}

RingSeam ring_seam(const MarkedGraph& ring) {
  if (!ring.is_ring) throw std::invalid_argument("ring_seam needs a ring");
  const FaceRecord& last = ring.faces.back();
  const auto& cycle = last.cycle;
  const std::size_t s = cycle.size();
  const std::size_t at_d = 2 + static_cast<std::size_t>(last.offset) - 1;
  RingSeam seam{};
  seam.d = cycle[at_d];
  seam.c = cycle[at_d + 1];
  seam.e = cycle[at_d - 1];
  seam.f = cycle[(at_d + 2) % s];
  return seam;
}

GluedGraph glue_on_edge(const Graph& base, DirectedEdge base_edge,
                        const Graph& other, DirectedEdge other_edge) {
  Graph joined;
  for (Vertex v = 0; v < static_cast<Vertex>(base.num_vertices()); ++v) {
    joined.add_vertex(base.label(v));
  }
  const auto shift = static_cast<Vertex>(base.num_vertices());
  for (Vertex v = 0; v < static_cast<Vertex>(other.num_vertices()); ++v) {
    joined.add_vertex("K." + other.label(v));
  }
  for (const Edge& e : base.edges()) joined.add_edge(e.first, e.second);
  for (const Edge& e : other.edges()) {
    joined.add_edge(e.first + shift, e.second + shift);
  }
  const DirectedEdge drop{other_edge.from + shift, other_edge.to + shift};
  Identified merged = identify(joined, base_edge, drop);

  GluedGraph out;
  out.graph = std::move(merged.graph);
  out.base_map.assign(merged.map.begin(), merged.map.begin() + shift);
  out.other_map.assign(merged.map.begin() + shift, merged.map.end());
  return out;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# vertices " << g.num_vertices() << "\n";
  out << "# edges " << g.num_edges() << "\n";
  for (const Edge& e : g.edges()) out << e.first << " " << e.second << "\n";
}

void write_edge_list(std::ostream& out, const MarkedGraph& g) {
  out << "# polyring graph (" << (g.is_ring ? "ring" : "chain") << ")\n";
  for (std::size_t j = 0; j < g.faces.size(); ++j) {
    out << "# face " << j + 1 << ":";
    for (Vertex v : g.faces[j].cycle) out << " " << v;
    out << "\n";
  }
  const std::size_t first_index = g.is_ring ? 1 : 2;
  for (std::size_t j = 0; j < g.shared_edges.size(); ++j) {
    out << "# shared e" << j + first_index << ": " << g.shared_edges[j].first
        << " " << g.shared_edges[j].second << "\n";
  }
  if (g.terminal_ab) {
    out << "# terminal ab: " << g.terminal_ab->from << " " << g.terminal_ab->to
        << "\n";
  }
  if (g.terminal_dc) {
    out << "# terminal dc: " << g.terminal_dc->from << " " << g.terminal_dc->to
        << "\n";
  }
  if (g.gadget) {
    const GadgetMarks& k = *g.gadget;
    out << "# gadget a=" << k.a << " b=" << k.b << " c=" << k.c
        << " d=" << k.d << " e=" << k.e << " f=" << k.f << " k1=" << k.k1
        << " k2=" << k.k2 << "\n";
  }
  write_edge_list(out, g.graph);
}

Graph read_edge_list(std::istream& in) {
  Graph g;
  std::string line;
  auto ensure = [&g](long v) {
    if (v < 0) throw std::invalid_argument("negative vertex id");
    while (static_cast<long>(g.num_vertices()) <= v) g.add_vertex();
  };
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    if (line[0] == '#') {
      std::string hash, key;
      long count = 0;
      fields >> hash >> key;
      if (key == "vertices" && (fields >> count)) ensure(count - 1);
      continue;
    }
    long u = 0, v = 0;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest)) {
      throw std::invalid_argument("malformed edge on line " +
                                  std::to_string(line_no));
    }
    ensure(std::max(u, v));
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

}  // namespace polyring
