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

#include "polyring/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <random>

#include "polyring/oracle.hpp"
#include "polyring/transfer.hpp"

namespace polyring {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checks;
    if (ok || !result_.passed) {
      if (!ok) result_.passed = false;
      return;
    }
    result_.passed = false;
    result_.failure = describe();
  }

  SuiteResult finish() {
    result_.seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
    return result_;
  }

 private:
  SuiteResult result_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string show(const MMVector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += to_decimal(v[k]);
  }
  return out + ")";
}

bool hexagons_in_range(const VerifyOptions& o) {
  return o.min_size <= 6 && 6 <= o.max_size;
}

bool polygons_in_range(const VerifyOptions& o) {
  return o.min_size != 6 || o.max_size != 6;
}

FaceSpec random_face(std::mt19937_64& rng, const VerifyOptions& o) {
  const int lo = std::max(o.min_size, kMinFaceSize);
  std::uniform_int_distribution<int> size_dist(lo, std::max(lo, o.max_size));
  const int size = size_dist(rng);
  std::uniform_int_distribution<int> offset_dist(1, size - 3);
  return FaceSpec{size, offset_dist(rng)};
}

RingSpec random_ring(std::mt19937_64& rng, const VerifyOptions& o, int min_n,
                     int max_n) {
  std::uniform_int_distribution<int> n_dist(min_n, max_n);
  RingSpec spec;
  for (int n = n_dist(rng); n > 0; --n) spec.faces.push_back(random_face(rng, o));
  return spec;
}

ChainSpec random_chain(std::mt19937_64& rng, const VerifyOptions& o, int min_n,
                       int max_n) {
  std::uniform_int_distribution<int> n_dist(min_n, max_n);
  ChainSpec spec;
  const int n = n_dist(rng);
  for (int j = 0; j < n; ++j) {
    FaceSpec face = random_face(rng, o);
    if (j == 0 || j == n - 1) face.offset.reset();
    spec.faces.push_back(face);
  }
  return spec;
}

// Hexagonal rings for n in [3, max_n] plus sampled polygon rings.
std::vector<RingSpec> ring_corpus(const VerifyOptions& o, int max_n,
                                  std::size_t samples, std::uint64_t salt) {
  std::vector<RingSpec> out;
  if (hexagons_in_range(o)) {
    for (int n = 3; n <= max_n; ++n) {
      for (RingSpec& spec : all_hexagonal_rings(n)) out.push_back(std::move(spec));
    }
  }
  if (polygons_in_range(o) && max_n >= 3) {
    std::mt19937_64 rng(o.seed ^ salt);
    for (std::size_t k = 0; k < samples; ++k) {
      out.push_back(random_ring(rng, o, 3, max_n));
    }
  }
  return out;
}

std::vector<ChainSpec> chain_corpus(const VerifyOptions& o, int max_n,
                                    std::size_t samples, std::uint64_t salt) {
  std::vector<ChainSpec> out;
  if (hexagons_in_range(o)) {
    for (int n = 2; n <= max_n; ++n) {
      for (ChainSpec& spec : all_hexagonal_chains(n)) {
        out.push_back(std::move(spec));
      }
    }
  }
  if (polygons_in_range(o) && max_n >= 2) {
    std::mt19937_64 rng(o.seed ^ salt);
    for (std::size_t k = 0; k < samples; ++k) {
      out.push_back(random_chain(rng, o, 2, max_n));
    }
  }
  return out;
}

}  // namespace

namespace {

// All offset tuples in {1,2,3}^n, lexicographic.
std::vector<std::vector<int>> hexagonal_offsets(std::size_t n) {
  std::vector<std::vector<int>> out;
  std::vector<int> digits(n, 1);
  while (true) {
    out.push_back(digits);
    std::size_t pos = n;
    while (pos > 0 && digits[pos - 1] == 3) digits[--pos] = 1;
    if (pos == 0) break;
    ++digits[pos - 1];
  }
  return out;
}

}  // namespace

std::vector<RingSpec> all_hexagonal_rings(std::size_t n) {
  std::vector<RingSpec> out;
  for (const auto& offsets : hexagonal_offsets(n)) {
    RingSpec spec;
    for (int k : offsets) spec.faces.push_back(FaceSpec{6, k});
    out.push_back(std::move(spec));
  }
  return out;
}

std::vector<ChainSpec> all_hexagonal_chains(std::size_t n) {
  std::vector<ChainSpec> out;
  if (n < 2) return out;
  for (const auto& offsets : hexagonal_offsets(n - 2)) {
    ChainSpec spec;
    spec.faces.push_back(FaceSpec{6, std::nullopt});
    for (int k : offsets) spec.faces.push_back(FaceSpec{6, k});
    spec.faces.push_back(FaceSpec{6, std::nullopt});
    out.push_back(std::move(spec));
  }
  return out;
}

std::vector<AttachedGraph> attached_graphs() {
  std::vector<AttachedGraph> out;
  auto path_or_cycle = [](const std::string& name, int n, bool cycle) {
    AttachedGraph k;
    k.name = name;
    for (int v = 0; v < n; ++v) k.graph.add_vertex(name + "." + std::to_string(v));
    for (int v = 0; v + 1 < n; ++v) k.graph.add_edge(v, v + 1);
    if (cycle) k.graph.add_edge(n - 1, 0);
    k.dc = DirectedEdge{0, 1};
    return k;
  };
  out.push_back(path_or_cycle("K2", 2, false));
  out.push_back(path_or_cycle("P3", 3, false));
  out.push_back(path_or_cycle("C4", 4, true));
  out.push_back(path_or_cycle("C5", 5, true));
  return out;
}

SuiteResult verify_regeneration(const VerifyOptions& options) {
  Recorder rec("regeneration");
  TransferMatrix reference_s = matrix_S();
  if (options.corrupt_reference_s) reference_s(0, 0) = reference_s(0, 0) == 0 ? 1 : 0;
  const std::pair<int, const TransferMatrix*> expected[] = {
      {1, &matrix_L()}, {2, &reference_s}, {3, &matrix_R()}};
  for (const auto& [offset, reference] : expected) {
    const TransferMatrix generated = transition_matrix(6, offset);
    for (std::size_t r = 0; r < TransferMatrix::kDim; ++r) {
      for (std::size_t c = 0; c < TransferMatrix::kDim; ++c) {
        rec.check(generated(r, c) == (*reference)(r, c), [&, offset = offset] {
          return "gen-matrix --size 6 --offset " + std::to_string(offset) +
                 ": entry [" + std::to_string(r + 1) + "," +
                 std::to_string(c + 1) + "] generated " +
                 to_decimal(generated(r, c)) + ", printed " +
                 to_decimal((*reference)(r, c));
        });
      }
    }
  }
  return rec.finish();
}

SuiteResult verify_ring_oracle(const VerifyOptions& options) {
  Recorder rec("ring-oracle");
  for (const RingSpec& spec :
       ring_corpus(options, options.max_faces, options.samples, 0x51)) {
    const Count transfer = count_ring(spec);
    const Count oracle = count_maximal(build_ring(spec).graph);
    rec.check(transfer == oracle, [&] {
      return "ring " + format_spec(spec) + ": transfer " + to_decimal(transfer) +
             " != oracle " + to_decimal(oracle);
    });
  }
  return rec.finish();
}

SuiteResult verify_chain_oracle(const VerifyOptions& options) {
  Recorder rec("chain-oracle");
  for (const ChainSpec& spec :
       chain_corpus(options, options.max_faces, options.samples, 0xc4)) {
    const MarkedGraph g = build_chain(spec);
    const MMVector transfer = chain_vector(spec);
    const MMVector oracle =
        mm_vector(g.graph, g.terminal_ab->from, g.terminal_ab->to);
    const Count total = count_chain(spec);
    rec.check(transfer == oracle && total == oracle[0], [&] {
      return "chain " + format_spec(spec) + ": transfer " + show(transfer) +
             " (count " + to_decimal(total) + ") != oracle " + show(oracle);
    });
  }
  return rec.finish();
}

SuiteResult verify_rotation(const VerifyOptions& options) {
  Recorder rec("rotation");
  const int max_n = std::max(options.max_faces, 8);
  for (const RingSpec& spec :
       ring_corpus(options, options.max_faces, options.samples, 0x7a)) {
    const Count base = count_ring(spec);
    for (std::size_t j = 1; j < spec.faces.size(); ++j) {
      const RingSpec turned = rotate(spec, j);
      const Count value = count_ring(turned);
      rec.check(value == base, [&] {
        return "ring " + format_spec(spec) + " = " + to_decimal(base) +
               " but rotation " + format_spec(turned) + " = " + to_decimal(value);
      });
    }
  }
  std::mt19937_64 rng(options.seed ^ 0x7b);
  for (std::size_t k = 0; k < options.samples; ++k) {
    const RingSpec spec = random_ring(rng, options, 3, max_n);
    const Count base = count_ring(spec);
    for (std::size_t j = 1; j < spec.faces.size(); ++j) {
      const RingSpec turned = rotate(spec, j);
      const Count value = count_ring(turned);
      rec.check(value == base, [&] {
        return "ring " + format_spec(spec) + " = " + to_decimal(base) +
               " but rotation " + format_spec(turned) + " = " + to_decimal(value);
      });
    }
  }
  return rec.finish();
}

SuiteResult verify_gluing(const VerifyOptions& options) {
  Recorder rec("gluing");
  const int max_n = std::min(options.max_faces, 4);
  const auto attached = attached_graphs();
  std::vector<MMVector> attached_vectors;
  for (const AttachedGraph& k : attached) {
    attached_vectors.push_back(mm_vector(k.graph, k.dc.from, k.dc.to));
  }
  for (const ChainSpec& spec :
       chain_corpus(options, max_n, options.samples / 4, 0x91)) {
    const MarkedGraph chain = build_chain(spec);
    const TransferMatrix product = chain_product(spec);
    for (std::size_t k = 0; k < attached.size(); ++k) {
      const GluedGraph glued = glue_on_edge(chain.graph, *chain.terminal_dc,
                                            attached[k].graph, attached[k].dc);
      const MMVector oracle =
          mm_vector(glued.graph, glued.base_map[chain.terminal_ab->from],
                    glued.base_map[chain.terminal_ab->to]);
      const MMVector formula = times_column(product, attached_vectors[k]);
      rec.check(oracle == formula, [&] {
        return "chain " + format_spec(spec) + " + " + attached[k].name +
               ": oracle " + show(oracle) + " != M x Psi_dc(K) " + show(formula);
      });
    }
  }
  return rec.finish();
}

SuiteResult verify_trace_decomposition(const VerifyOptions& options) {
  Recorder rec("trace-decomposition");
  const int max_n = std::min(options.max_faces, 4);
  for (const RingSpec& spec :
       ring_corpus(options, max_n, options.samples / 4, 0xd3)) {
    const MarkedGraph ring = build_ring(spec);
    const RingSeam seam = ring_seam(ring);
    const Edge ed(seam.e, seam.d);
    const Edge fc(seam.f, seam.c);
    // Diagonal entry M[k,k] paired with the constrained count it equals.
    const std::pair<std::size_t, ConstraintSet> cases[] = {
        {4, {.require_edges = {ed, fc}}},
        {2, {.require_covered = {seam.f}, .require_edges = {ed}, .forbid_edges = {fc}}},
        {6, {.require_uncovered = {seam.f}, .require_edges = {ed}, .forbid_edges = {fc}}},
        {3, {.require_covered = {seam.e}, .require_edges = {fc}, .forbid_edges = {ed}}},
        {7, {.require_uncovered = {seam.e}, .require_edges = {fc}, .forbid_edges = {ed}}},
        {1, {.require_covered = {seam.e, seam.f}, .forbid_edges = {ed, fc}}},
        {9, {.require_covered = {seam.e}, .require_uncovered = {seam.f}, .forbid_edges = {ed, fc}}},
        {8, {.require_covered = {seam.f}, .require_uncovered = {seam.e}, .forbid_edges = {ed, fc}}},
        {5, {.require_uncovered = {seam.e, seam.f}, .forbid_edges = {ed, fc}}},
    };
    const TransferMatrix product = ring_product(spec);
    Count sum = 0;
    for (const auto& [k, constraints] : cases) {
      const Count oracle = count_maximal(ring.graph, constraints);
      const Count& diagonal = product(k - 1, k - 1);
      sum += oracle;
      rec.check(oracle == diagonal, [&, k = k] {
        return "ring " + format_spec(spec) + ": case for M[" + std::to_string(k) +
               "," + std::to_string(k) + "] oracle " + to_decimal(oracle) +
               " != " + to_decimal(diagonal);
      });
    }
    const Count total = count_maximal(ring.graph);
    rec.check(sum == total && total == mat_trace(product), [&] {
      return "ring " + format_spec(spec) + ": nine cases sum to " +
             to_decimal(sum) + ", oracle " + to_decimal(total) + ", trace " +
             to_decimal(mat_trace(product));
    });
  }
  return rec.finish();
}

SuiteResult verify_single_face(const VerifyOptions& options) {
  Recorder rec("single-face");
  const int top = std::min(options.max_size, 8);
  for (int m = std::max(options.min_size, kMinFaceSize); m <= top; ++m) {
    const ChainSpec polygon{{FaceSpec{m, std::nullopt}}};
    const MarkedGraph cycle = build_chain(polygon);
    const MMVector oracle_vector =
        mm_vector(cycle.graph, cycle.terminal_ab->from, cycle.terminal_ab->to);
    const MMVector first_row = row_times(boundary_X(), transition_matrix(m, 1));
    for (int i = 1; i <= m - 3; ++i) {
      const std::string where =
          "T(" + std::to_string(m) + "," + std::to_string(i) + ")";
      GenerationTrace trace;
      const TransferMatrix t = transition_matrix(m, i, &trace);
      const MMVector row = row_times(boundary_X(), t);
      const MMVector column = times_column(t, boundary_Y());
      rec.check(row == first_row, [&] {
        return "X x " + where + " = " + show(row) + " differs from offset 1 " +
               show(first_row);
      });
      rec.check(column == oracle_vector, [&] {
        return where + " x Y = " + show(column) + " but Psi_ab(C_" +
               std::to_string(m) + ") = " + show(oracle_vector);
      });
      rec.check(dot(row, boundary_Y()) == oracle_vector[0], [&] {
        return "X x " + where + " x Y != Psi(C_" + std::to_string(m) + ")";
      });
      rec.check(trace.pendant_violations == 0, [&] {
        return where + ": a matching left k1 uncovered without covering e";
      });

      const MarkedGraph gadget = build_gadget(m, i);
      const GadgetMarks& mark = *gadget.gadget;
      for (const RowCondition& cond : row_conditions()) {
        ConstraintSet c;
        if (cond.remove_a) c.removed.push_back(mark.a);
        if (cond.remove_b) c.removed.push_back(mark.b);
        if (cond.cover_a) c.require_covered.push_back(mark.a);
        if (cond.cover_b) c.require_covered.push_back(mark.b);
        const Count expected = count_maximal_naive(gadget.graph, c);
        Count row_sum = 0;
        for (std::size_t y = 0; y < TransferMatrix::kDim; ++y) {
          row_sum += t(cond.index - 1, y);
        }
        rec.check(row_sum == expected, [&] {
          return where + " row " + std::to_string(cond.index) + " sums to " +
                 to_decimal(row_sum) + ", gadget has " + to_decimal(expected);
        });
      }
    }
  }
  return rec.finish();
}

std::vector<SuiteResult> run_verify(const VerifyOptions& options) {
  using Suite = SuiteResult (*)(const VerifyOptions&);
  const Suite suites[] = {verify_chain_oracle, verify_gluing,
                          verify_regeneration, verify_ring_oracle,
                          verify_rotation, verify_single_face,
                          verify_trace_decomposition};
  std::vector<std::future<SuiteResult>> pending;
  for (Suite suite : suites) {
    pending.push_back(std::async(std::launch::async, suite, std::cref(options)));
  }
  std::vector<SuiteResult> out;
  for (auto& f : pending) out.push_back(f.get());
  std::sort(out.begin(), out.end(),
            [](const SuiteResult& a, const SuiteResult& b) { return a.name < b.name; });
  return out;
}

}  // namespace polyring
