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

#include "polyring/notation.hpp"

#include <cctype>
#include <limits>

namespace polyring {

NotationError::NotationError(Kind kind, std::size_t position,
                             const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + " error at " +
                         std::to_string(position) + ": " + message),
      kind_(kind),
      position_(position) {}

const char* to_string(NotationError::Kind kind) {
  switch (kind) {
    case NotationError::Kind::kSyntax:
      return "syntax";
    case NotationError::Kind::kRange:
      return "range";
    case NotationError::Kind::kStructure:
      return "structure";
  }
  return "unknown";
}

namespace {

using Kind = NotationError::Kind;

struct Token {
  FaceSpec face;
  bool shorthand = false;
  std::size_t position = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> tokens() {
    std::vector<Token> out;
    skip_space();
    if (pos_ == text_.size()) {
      throw NotationError(Kind::kSyntax, pos_, "empty spec");
    }
    while (pos_ < text_.size()) {
      out.push_back(token());
      skip_space();
    }
    return out;
  }

 private:
  Token token() {
    Token tok;
    tok.position = pos_;
    expect('t');
    expect('(');
    const int first = integer();
    if (peek() == ')') {
      ++pos_;
      // t(j) -> t(6,j)
      tok.shorthand = true;
      tok.face = FaceSpec{6, first};
      if (first < 1 || first > 3) {
        throw NotationError(Kind::kRange, tok.position,
                            "hexagonal shorthand t(j) needs j in 1..3");
      }
      return tok;
    }
    expect(',');
    tok.face.size = first;
    if (peek() == '*') {
      ++pos_;
    } else {
      tok.face.offset = integer();
    }
    expect(')');
    check_range(tok.face, tok.position);
    return tok;
  }

  static void check_range(const FaceSpec& face, std::size_t position) {
    if (face.size < kMinFaceSize) {
      throw NotationError(Kind::kRange, position,
                          "face size " + std::to_string(face.size) +
                              " is below " + std::to_string(kMinFaceSize));
    }
    if (face.offset && (*face.offset < 1 || *face.offset > face.size - 3)) {
      throw NotationError(Kind::kRange, position,
                          "offset " + std::to_string(*face.offset) +
                              " outside 1.." + std::to_string(face.size - 3));
    }
  }

  int integer() {
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) {
        throw NotationError(Kind::kRange, start, "integer too large");
      }
      ++pos_;
    }
    if (pos_ == start) {
      throw NotationError(Kind::kSyntax, pos_, "expected an integer");
    }
    return static_cast<int>(value);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char ch) {
    if (peek() != ch) {
      throw NotationError(Kind::kSyntax, pos_,
                          std::string("expected '") + ch + "'");
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_faces(const std::vector<FaceSpec>& faces) {
  std::string out;
  for (const FaceSpec& face : faces) {
    out += "t(" + std::to_string(face.size) + ",";
    out += face.offset ? std::to_string(*face.offset) : "*";
    out += ")";
  }
  return out;
}

void validate_face(const FaceSpec& face, std::size_t index) {
  if (face.size < kMinFaceSize) {
    throw NotationError(Kind::kRange, index, "face size below 4");
  }
  if (face.offset && (*face.offset < 1 || *face.offset > face.size - 3)) {
    throw NotationError(Kind::kRange, index, "offset out of range");
  }
}

}  // namespace

void validate_chain(const ChainSpec& spec) {
  const std::size_t n = spec.faces.size();
  if (n == 0) throw NotationError(Kind::kStructure, 0, "chain has no faces");
  for (std::size_t j = 0; j < n; ++j) {
    validate_face(spec.faces[j], j);
    const bool end = j == 0 || j + 1 == n;
    if (end && !spec.faces[j].is_terminal()) {
      throw NotationError(Kind::kStructure, j,
                          "chain terminal face must use the '*' offset");
    }
    if (!end && spec.faces[j].is_terminal()) {
      throw NotationError(Kind::kStructure, j,
                          "'*' offset on an interior chain face");
    }
  }
}

void validate_ring(const RingSpec& spec) {
  if (spec.faces.size() < kMinRingFaces) {
    throw NotationError(Kind::kStructure, 0, "a ring needs at least 3 faces");
  }
  for (std::size_t j = 0; j < spec.faces.size(); ++j) {
    validate_face(spec.faces[j], j);
    if (spec.faces[j].is_terminal()) {
      throw NotationError(Kind::kStructure, j, "'*' offset inside a ring");
    }
  }
}

ChainSpec parse_chain(std::string_view text) {
  std::vector<Token> tokens = Lexer(text).tokens();
  bool all_shorthand = true;
  for (const Token& tok : tokens) all_shorthand = all_shorthand && tok.shorthand;

  ChainSpec spec;
  if (all_shorthand) spec.faces.push_back(FaceSpec{6, std::nullopt});
  for (const Token& tok : tokens) spec.faces.push_back(tok.face);
  if (all_shorthand) spec.faces.push_back(FaceSpec{6, std::nullopt});

  if (spec.faces.size() < kMinChainFaces) {
    throw NotationError(Kind::kStructure, 0, "a chain needs at least 2 faces");
  }
  const std::size_t offset = all_shorthand ? 1 : 0;
  for (std::size_t j = 0; j < spec.faces.size(); ++j) {
    const bool end = j == 0 || j + 1 == spec.faces.size();
    if (end == spec.faces[j].is_terminal()) continue;
    const std::size_t where = tokens[j - offset].position;
    throw NotationError(Kind::kStructure, where,
                        end ? "chain terminal face must use the '*' offset"
                            : "'*' offset on an interior chain face");
  }
  return spec;
}

RingSpec parse_ring(std::string_view text) {
  std::vector<Token> tokens = Lexer(text).tokens();
  RingSpec spec;
  for (const Token& tok : tokens) {
    if (tok.face.is_terminal()) {
      throw NotationError(Kind::kStructure, tok.position,
                          "'*' offset inside a ring");
    }
    spec.faces.push_back(tok.face);
  }
  if (spec.faces.size() < kMinRingFaces) {
    throw NotationError(Kind::kStructure, 0, "a ring needs at least 3 faces");
  }
  return spec;
}

std::string format_spec(const ChainSpec& spec) {
  return format_faces(spec.faces);
}

std::string format_spec(const RingSpec& spec) {
  return format_faces(spec.faces);
}

RingSpec rotate(const RingSpec& spec, std::size_t shift) {
  RingSpec out;
  const std::size_t n = spec.faces.size();
  out.faces.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.faces.push_back(spec.faces[(j + shift) % n]);
  }
  return out;
}

}  // namespace polyring
