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
 * Core data model for symmetric hypergraph states: the cardinality vector
 * (n; m_1 < ... < m_k) naming the state, its 0/1 level-indicator vector g,
 * the exponent vector e and weight sign vector f with f_w = (-1)^{e_w},
 * and the combinatorial moves between them (n +/- 1 shifts, vertex delete,
 * vertex shrink).
 *
 * The conversions between e and g are both given by the mod-2 Pascal
 * matrix: e = Ag and g = Ae, using that A is an involution over GF(2).
 */

#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "symmhg/errors.hpp"
#include "symmhg/pascal.hpp"

namespace symmhg {

/// Names the n-qubit symmetric hypergraph that is complete in the edge
/// cardinalities m_1 < m_2 < ... < m_k. An empty cardinality list names the
/// edgeless hypergraph; it can arise as an intermediate of vertex removal
/// but is rejected at every user-facing entry point.
class CardinalityVector {
 public:
  CardinalityVector(int n, std::vector<int> m) : n_(n), m_(std::move(m)) {
    if (n_ < 1) throw DomainError("cardinality vector: n must be >= 1");
    for (std::size_t i = 0; i < m_.size(); ++i) {
      if (m_[i] < 1 || m_[i] > n_) {
        throw DomainError("cardinality vector: levels must lie in [1, n]");
      }
      if (i > 0 && m_[i] <= m_[i - 1]) {
        throw DomainError("cardinality vector: levels must strictly increase");
      }
    }
  }

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const std::vector<int>& m() const noexcept { return m_; }
  [[nodiscard]] int levels() const noexcept { return static_cast<int>(m_.size()); }
  [[nodiscard]] bool edgeless() const noexcept { return m_.empty(); }
  [[nodiscard]] bool has_level(int c) const {
    return std::binary_search(m_.begin(), m_.end(), c);
  }

  /// Text form "K<n>^<m1>,<m2>,...", e.g. "K11^6,8".
  [[nodiscard]] std::string to_string() const {
    std::string out = "K" + std::to_string(n_) + "^";
    for (std::size_t i = 0; i < m_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(m_[i]);
    }
    return out;
  }

  /// Parses the text form. The grammar is K<digits>^<digits>(,<digits>)*;
  /// an empty cardinality list is not accepted here.
  static CardinalityVector parse(std::string_view text) {
    auto fail = [&] { throw ParseError("cannot parse state '" + std::string(text) + "'"); };
    if (text.size() < 4 || text.front() != 'K' || text.back() == ',') fail();
    std::size_t caret = text.find('^');
    if (caret == std::string_view::npos) fail();
    int n = 0;
    auto [np, nec] = std::from_chars(text.data() + 1, text.data() + caret, n);
    if (nec != std::errc() || np != text.data() + caret) fail();
    std::vector<int> m;
    std::size_t pos = caret + 1;
    if (pos >= text.size()) fail();
    while (pos < text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      if (next == pos) fail();
      int v = 0;
      auto [vp, vec] = std::from_chars(text.data() + pos, text.data() + next, v);
      if (vec != std::errc() || vp != text.data() + next) fail();
      m.push_back(v);
      pos = next + 1;
    }
    try {
      return CardinalityVector(n, std::move(m));
    } catch (const DomainError& e) {
      throw ParseError(std::string("invalid state '") + std::string(text) + "': " + e.what());
    }
  }

  friend bool operator==(const CardinalityVector&, const CardinalityVector&) = default;
  friend std::strong_ordering operator<=>(const CardinalityVector&,
                                          const CardinalityVector&) = default;

 private:
  int n_;
  std::vector<int> m_;
};

/// 0/1 vector indexed by weight 0..n. Plays two roles: the level indicator
/// g (bit w set iff w is an edge cardinality) and the sign exponent e
/// (f_w = (-1)^{e_w}).
struct IndicatorVector {
  int n = 0;
  std::vector<std::uint8_t> bits;  // size n + 1

  friend bool operator==(const IndicatorVector&, const IndicatorVector&) = default;
};

/// The +/-1 coefficients of a symmetric hypergraph state grouped by
/// Hamming weight. Entry 0 is always +1: no hyperedge is empty, so the
/// all-zero basis vector never picks up a sign.
struct SignVector {
  int n = 0;
  std::vector<int> f;  // size n + 1, entries +1 / -1

  friend bool operator==(const SignVector&, const SignVector&) = default;
};

inline IndicatorVector indicator_from_cardinalities(const CardinalityVector& k) {
  IndicatorVector g;
  g.n = k.n();
  g.bits.assign(static_cast<std::size_t>(k.n()) + 1, 0);
  for (int level : k.m()) g.bits[static_cast<std::size_t>(level)] = 1;
  return g;
}

inline CardinalityVector cardinalities_from_indicator(const IndicatorVector& g) {
  if (g.bits.size() != static_cast<std::size_t>(g.n) + 1) {
    throw DimensionError("indicator vector has wrong length");
  }
  if (!g.bits.empty() && g.bits[0]) {
    throw DomainError("indicator vector marks an empty hyperedge");
  }
  std::vector<int> m;
  for (int w = 1; w <= g.n; ++w) {
    if (g.bits[static_cast<std::size_t>(w)]) m.push_back(w);
  }
  return CardinalityVector(g.n, std::move(m));
}

/// e = Ag over GF(2): e_w is the parity of the number of odd C(w, m_j).
inline IndicatorVector e_from_g(const IndicatorVector& g) {
  if (g.bits.size() != static_cast<std::size_t>(g.n) + 1) {
    throw DimensionError("indicator vector has wrong length");
  }
  IndicatorVector e;
  e.n = g.n;
  e.bits.assign(g.bits.size(), 0);
  for (int w = 0; w <= g.n; ++w) {
    int parity = 0;
    for (int j = 0; j <= g.n; ++j) {
      if (g.bits[static_cast<std::size_t>(j)]) {
        parity ^= binom_mod2(static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(j));
      }
    }
    e.bits[static_cast<std::size_t>(w)] = static_cast<std::uint8_t>(parity);
  }
  return e;
}

/// Inverse of e_from_g; the same Pascal action, since A = A^{-1} mod 2.
/// Rejects e_0 = 1: no hypergraph state has a flipped weight-0 sign.
inline IndicatorVector g_from_e(const IndicatorVector& e) {
  if (e.bits.size() != static_cast<std::size_t>(e.n) + 1) {
    throw DimensionError("indicator vector has wrong length");
  }
  if (!e.bits.empty() && e.bits[0]) {
    throw DomainError("sign exponent vector with e_0 = 1 matches no hypergraph state");
  }
  IndicatorVector g = e_from_g(e);
  return g;
}

inline SignVector sign_vector(const CardinalityVector& k) {
  IndicatorVector e = e_from_g(indicator_from_cardinalities(k));
  SignVector f;
  f.n = k.n();
  f.f.resize(e.bits.size());
  for (std::size_t w = 0; w < e.bits.size(); ++w) f.f[w] = e.bits[w] ? -1 : 1;
  return f;
}

/// Recovers the cardinality vector of the state whose weight sign vector is
/// f. Throws InvalidInputError when f is not realizable.
inline CardinalityVector cardinalities_from_sign_vector(const SignVector& f) {
  if (f.f.size() != static_cast<std::size_t>(f.n) + 1) {
    throw DimensionError("sign vector has wrong length");
  }
  IndicatorVector e;
  e.n = f.n;
  e.bits.resize(f.f.size());
  for (std::size_t w = 0; w < f.f.size(); ++w) {
    if (f.f[w] != 1 && f.f[w] != -1) {
      throw InvalidInputError("sign vector entries must be +1 or -1");
    }
    e.bits[w] = f.f[w] == -1 ? 1 : 0;
  }
  if (e.bits[0]) {
    throw InvalidInputError("sign vector with f_0 = -1 matches no hypergraph state");
  }
  return cardinalities_from_indicator(g_from_e(e));
}

/// The (n-1)-qubit state with every level lowered by one. A level that
/// reaches zero is dropped from the list.
inline CardinalityVector down(const CardinalityVector& k) {
  if (k.n() < 2) throw DomainError("down: needs n >= 2");
  std::vector<int> m;
  for (int level : k.m()) {
    if (level - 1 >= 1) m.push_back(level - 1);
  }
  return CardinalityVector(k.n() - 1, std::move(m));
}

/// The (n+1)-qubit state with every level raised by one; optionally with a
/// fresh cardinality-1 level prepended.
inline CardinalityVector up(const CardinalityVector& k, bool prepend_one) {
  std::vector<int> m;
  if (prepend_one) m.push_back(1);
  for (int level : k.m()) m.push_back(level + 1);
  return CardinalityVector(k.n() + 1, std::move(m));
}

/// Same qubit count, with the cardinality-1 level added.
inline CardinalityVector prepend_unit(const CardinalityVector& k) {
  if (!k.edgeless() && k.m().front() == 1) {
    throw DomainError("prepend_unit: state already has cardinality-1 edges");
  }
  std::vector<int> m;
  m.push_back(1);
  for (int level : k.m()) m.push_back(level);
  return CardinalityVector(k.n(), std::move(m));
}

/// Removes one vertex together with every hyperedge through it. On the
/// level indicator this truncates the top entry: only the full-size level
/// n disappears.
inline CardinalityVector delete_vertex(const CardinalityVector& k) {
  if (k.n() < 2) throw DomainError("delete_vertex: needs n >= 2");
  std::vector<int> m;
  for (int level : k.m()) {
    if (level < k.n()) m.push_back(level);
  }
  return CardinalityVector(k.n() - 1, std::move(m));
}

struct ShrinkResult {
  CardinalityVector graph;
  /// +1 or -1. Shrinking a vertex turns its cardinality-1 edge (when one
  /// exists) into an empty edge, i.e. a global factor C_emptyset = -Id.
  int sign = 1;
};

/// Removes one vertex from the vertex set only, so each hyperedge through
/// it drops by one in size. Edge multiplicities cancel in pairs (each gate
/// squares to the identity), which on the level indicator reads
/// g'_w = g_w + g_{w+1} mod 2.
inline ShrinkResult shrink_vertex(const CardinalityVector& k) {
  if (k.n() < 2) throw DomainError("shrink_vertex: needs n >= 2");
  IndicatorVector g = indicator_from_cardinalities(k);
  std::vector<int> m;
  int sign = 1;
  for (int w = 0; w <= k.n() - 1; ++w) {
    int bit = g.bits[static_cast<std::size_t>(w)] ^ g.bits[static_cast<std::size_t>(w) + 1];
    if (!bit) continue;
    if (w == 0) {
      sign = -1;  // the shrunk 1-edge became C_emptyset
    } else {
      m.push_back(w);
    }
  }
  return ShrinkResult{CardinalityVector(k.n() - 1, std::move(m)), sign};
}

}  // namespace symmhg
