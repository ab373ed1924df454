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

#ifndef POLYRING_NOTATION_HPP_
#define POLYRING_NOTATION_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyring {

// One face of a polygon chain or ring, written t(size,offset).
//
// `size` is the cycle length. `offset` is the number of edges, walking
// clockwise around this face, from the end of the shared edge with the
// previous face to the start of the shared edge with the next face. An empty
// offset is the terminal wildcard `*` that a chain uses on its end faces.
struct FaceSpec {
  int size = 6;
  std::optional<int> offset;

  bool is_terminal() const { return !offset.has_value(); }
  friend bool operator==(const FaceSpec&, const FaceSpec&) = default;
};

struct ChainSpec {
  std::vector<FaceSpec> faces;
  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

struct RingSpec {
  std::vector<FaceSpec> faces;
  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

class NotationError : public std::runtime_error {
 public:
  enum class Kind { kSyntax, kRange, kStructure };

  NotationError(Kind kind, std::size_t position, const std::string& message);

  Kind kind() const { return kind_; }
  // Byte offset into the parsed text where the problem was detected.
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

const char* to_string(NotationError::Kind kind);

inline constexpr int kMinFaceSize = 4;
inline constexpr std::size_t kMinChainFaces = 2;
inline constexpr std::size_t kMinRingFaces = 3;

// Grammar:  spec  := token+
//           token := "t(" int ("," (int | "*"))? ")"
// A one-argument token t(j) is the hexagonal shorthand for t(6,j). When every
// token of a chain is a shorthand token, the text lists only the interior
// faces and t(6,*) terminals are added on both ends.
ChainSpec parse_chain(std::string_view text);
RingSpec parse_ring(std::string_view text);

std::string format_spec(const ChainSpec& spec);
std::string format_spec(const RingSpec& spec);

// Validation used by the parsers; also usable on hand-built specs.
// validate_chain accepts a single face (a lone polygon) because the counting
// formulas extend to it; the parser itself requires kMinChainFaces.
void validate_chain(const ChainSpec& spec);
void validate_ring(const RingSpec& spec);

// Cyclic rotation: face j of the result is face (j + shift) mod n of `spec`.
RingSpec rotate(const RingSpec& spec, std::size_t shift);

}  // namespace polyring

#endif  // POLYRING_NOTATION_HPP_
