// Copyright 2026 The symmhg Authors
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

/**
 * @file
 * Exact binomial-parity arithmetic: Lucas' theorem for p = 2, the mod-2
 * Pascal matrix, and bit-packed matrix products over GF(2).
 */

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "symmhg/errors.hpp"

namespace symmhg {

/// Parity of the binomial coefficient C(a, b), without big integers.
/// By Lucas' theorem, C(a, b) is odd exactly when every binary digit of b
/// is at most the matching digit of a, i.e. b is a submask of a. The
/// convention C(a, b) = 0 for b > a falls out of the same test.
[[nodiscard]] constexpr int binom_mod2(std::uint64_t a, std::uint64_t b) noexcept {
  return (b & ~a) == 0 ? 1 : 0;
}

/// Square 0/1 matrix with each row packed into 64-bit words. Sized for the
/// (n+1) x (n+1) binomial-parity matrices with n up to 64, where a row is
/// one or two words.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t size)
      : size_(size),
        words_per_row_((size + 63) / 64),
        rows_(size * words_per_row_, 0) {}

  static BitMatrix identity(std::size_t size) {
    BitMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) m.set(i, i, 1);
    return m;
  }

  [[nodiscard]] std::size_t size() const noexcept { return size_; }

  [[nodiscard]] int get(std::size_t i, std::size_t j) const {
    return static_cast<int>((row(i)[j >> 6] >> (j & 63)) & 1u);
  }

  void set(std::size_t i, std::size_t j, int bit) {
    std::uint64_t mask = std::uint64_t{1} << (j & 63);
    if (bit) {
      row(i)[j >> 6] |= mask;
    } else {
      row(i)[j >> 6] &= ~mask;
    }
  }

  [[nodiscard]] const std::uint64_t* row(std::size_t i) const {
    return rows_.data() + i * words_per_row_;
  }
  [[nodiscard]] std::uint64_t* row(std::size_t i) {
    return rows_.data() + i * words_per_row_;
  }
  [[nodiscard]] std::size_t words_per_row() const noexcept { return words_per_row_; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t size_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> rows_;
};

/// The (n+1) x (n+1) matrix with entry (i, j) = C(i, j) mod 2. It is lower
/// triangular with unit diagonal, and is its own inverse over GF(2).
inline BitMatrix pascal_matrix(int n) {
  if (n < 0) throw DomainError("pascal_matrix: n must be nonnegative");
  std::size_t size = static_cast<std::size_t>(n) + 1;
  BitMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j <= i; ++j) m.set(i, j, binom_mod2(i, j));
  }
  return m;
}

inline BitMatrix transpose(const BitMatrix& a) {
  BitMatrix t(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a.get(i, j)) t.set(j, i, 1);
    }
  }
  return t;
}

/// Matrix product over GF(2): entry (i, j) is the parity of the AND of
/// row i of a with column j of b.
inline BitMatrix matmul_mod2(const BitMatrix& a, const BitMatrix& b) {
  if (a.size() != b.size()) {
    throw DimensionError("matmul_mod2: size mismatch");
  }
  const BitMatrix bt = transpose(b);
  BitMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      int parity = 0;
      for (std::size_t w = 0; w < a.words_per_row(); ++w) {
        parity ^= std::popcount(a.row(i)[w] & bt.row(j)[w]) & 1;
      }
      if (parity) c.set(i, j, 1);
    }
  }
  return c;
}

}  // namespace symmhg
