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

#include "polyring/matrix.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace polyring {

namespace {

constexpr std::size_t kDim = TransferMatrix::kDim;

// acc += x * y, skipping zeros and using the single-limb path when one side
// is small (the face matrices almost always are).
void add_product(Count& acc, const Count& x, const Count& y) {
  if (sgn(x) == 0 || sgn(y) == 0) return;
  if (y.fits_ulong_p()) {
    mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), y.get_ui());
  } else if (x.fits_ulong_p()) {
    mpz_addmul_ui(acc.get_mpz_t(), y.get_mpz_t(), x.get_ui());
  } else {
    mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  }
}

}  // namespace

TransferMatrix::TransferMatrix() {
  for (Count& entry : entries_) entry = 0;
}

TransferMatrix TransferMatrix::identity() {
  TransferMatrix out;
  for (std::size_t k = 0; k < kDim; ++k) out(k, k) = 1;
  return out;
}

TransferMatrix TransferMatrix::from_rows(const Rows& rows) {
  TransferMatrix out;
  for (std::size_t r = 0; r < kDim; ++r) {
    for (std::size_t c = 0; c < kDim; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

TransferMatrix mat_mul(const TransferMatrix& a, const TransferMatrix& b) {
  TransferMatrix out;
  for (std::size_t r = 0; r < kDim; ++r) {
    for (std::size_t c = 0; c < kDim; ++c) {
      Count& acc = out(r, c);
      for (std::size_t k = 0; k < kDim; ++k) add_product(acc, a(r, k), b(k, c));
    }
  }
  return out;
}

Count mat_trace(const TransferMatrix& a) {
  Count out = 0;
  for (std::size_t k = 0; k < kDim; ++k) out += a(k, k);
  return out;
}

MMVector row_times(const MMVector& row, const TransferMatrix& m) {
  MMVector out;
  for (std::size_t c = 0; c < kDim; ++c) {
    out[c] = 0;
    for (std::size_t k = 0; k < kDim; ++k) add_product(out[c], row[k], m(k, c));
  }
  return out;
}

MMVector times_column(const TransferMatrix& m, const MMVector& column) {
  MMVector out;
  for (std::size_t r = 0; r < kDim; ++r) {
    out[r] = 0;
    for (std::size_t k = 0; k < kDim; ++k) {
      add_product(out[r], m(r, k), column[k]);
    }
  }
  return out;
}

Count dot(const MMVector& row, const MMVector& column) {
  Count out = 0;
  for (std::size_t k = 0; k < kDim; ++k) add_product(out, row[k], column[k]);
  return out;
}

std::string format_matrix_plain(const TransferMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < kDim; ++r) {
    for (std::size_t c = 0; c < kDim; ++c) {
      if (c > 0) out += ' ';
      out += to_decimal(m(r, c));
    }
    out += '\n';
  }
  return out;
}

TransferMatrix parse_matrix_plain(std::istream& in) {
  TransferMatrix out;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string word;
    std::size_t col = 0;
    while (fields >> word) {
      if (row >= kDim || col >= kDim) {
        throw std::invalid_argument("matrix text has more than 9x9 entries");
      }
      out(row, col++) = parse_count(word);
    }
    if (col == 0) continue;
    if (col != kDim) {
      throw std::invalid_argument("matrix row " + std::to_string(row + 1) +
                                  " has " + std::to_string(col) + " entries");
    }
    ++row;
  }
  if (row != kDim) throw std::invalid_argument("matrix text needs 9 rows");
  return out;
}

std::string format_matrix_json(const TransferMatrix& m, int size, int offset) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < kDim; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < kDim; ++c) {
      if (m(r, c).fits_ulong_p()) {
        row.push_back(static_cast<std::uint64_t>(m(r, c).get_ui()));
      } else {
        row.push_back(to_decimal(m(r, c)));
      }
    }
    rows.push_back(std::move(row));
  }
  nlohmann::json doc = {{"size", size}, {"offset", offset}, {"rows", rows}};
  return doc.dump();
}

LabeledMatrix parse_matrix_json(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  LabeledMatrix out;
  if (doc.contains("size")) out.size = doc.at("size").get<int>();
  if (doc.contains("offset")) out.offset = doc.at("offset").get<int>();
  const auto& rows = doc.at("rows");
  if (!rows.is_array() || rows.size() != kDim) {
    throw std::invalid_argument("\"rows\" must hold 9 rows");
  }
  for (std::size_t r = 0; r < kDim; ++r) {
    if (!rows[r].is_array() || rows[r].size() != kDim) {
      throw std::invalid_argument("matrix row " + std::to_string(r + 1) +
                                  " must hold 9 entries");
    }
    for (std::size_t c = 0; c < kDim; ++c) {
      const auto& cell = rows[r][c];
      if (cell.is_number_unsigned()) {
        out.matrix(r, c) = static_cast<unsigned long>(cell.get<std::uint64_t>());
      } else if (cell.is_string()) {
        out.matrix(r, c) = parse_count(cell.get<std::string>());
      } else {
        throw std::invalid_argument("matrix entries must be nonnegative");
      }
    }
  }
  return out;
}

}  // namespace polyring
