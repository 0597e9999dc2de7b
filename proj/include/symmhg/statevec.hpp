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
 * Dense brute-force machinery: hypergraph states built gate by gate,
 * Pauli-word action, exhaustive local-Pauli stabilizer search, the
 * stabilizer generators g_j = X_j * prod_{e in E(j)} C_{e \ j}, density
 * matrices, and partial traces.
 *
 * Qubit convention, used everywhere: qubit 1 is the most significant bit
 * of the basis index, so vertex j occupies bit (n - j).
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "symmhg/cardinality.hpp"
#include "symmhg/errors.hpp"

namespace symmhg {

inline constexpr int kDenseCap = 20;    // statevector work
inline constexpr int kDensityCap = 12;  // full density matrices
inline constexpr int kSearchCap = 8;    // 4^(n+1) word enumeration

using Complex = std::complex<double>;

/// i^k as an exact complex unit.
[[nodiscard]] inline Complex imag_unit_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

/// Hypergraph on n labeled vertices; each hyperedge is a nonempty bitmask
/// with vertex j at bit (n - j).
struct Hypergraph {
  int n = 0;
  std::vector<std::uint32_t> edges;

  static std::uint32_t vertex_bit(int n, int j) {
    return std::uint32_t{1} << (n - j);
  }

  static Hypergraph from_vertex_lists(int n, const std::vector<std::vector<int>>& lists) {
    if (n < 1) throw DomainError("hypergraph: n must be >= 1");
    if (n > 30) throw ResourceLimitError("hypergraph: n exceeds the bitmask width");
    Hypergraph g;
    g.n = n;
    for (const auto& list : lists) {
      if (list.empty()) throw DomainError("hypergraph: empty hyperedge");
      std::uint32_t mask = 0;
      for (int v : list) {
        if (v < 1 || v > n) throw DomainError("hypergraph: vertex out of range");
        mask |= vertex_bit(n, v);
      }
      g.edges.push_back(mask);
    }
    std::sort(g.edges.begin(), g.edges.end());
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end()) {
      throw DomainError("hypergraph: duplicate hyperedge");
    }
    return g;
  }

  /// All C(n, m_j) hyperedges of the symmetric hypergraph K_n^m.
  static Hypergraph symmetric(const CardinalityVector& k) {
    if (k.n() > 30) throw ResourceLimitError("hypergraph: n exceeds the bitmask width");
    Hypergraph g;
    g.n = k.n();
    for (int level : k.m()) {
      // Gosper's hack walks the size-`level` submasks in increasing order.
      std::uint32_t mask = (std::uint32_t{1} << level) - 1;
      const std::uint32_t limit = std::uint32_t{1} << k.n();
      while (mask < limit) {
        g.edges.push_back(mask);
        const std::uint32_t low = mask & -mask;
        const std::uint32_t carry = mask + low;
        mask = carry | (((mask ^ carry) / low) >> 2);
      }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
  }

  [[nodiscard]] std::vector<std::vector<int>> vertex_lists() const {
    std::vector<std::vector<int>> lists;
    lists.reserve(edges.size());
    for (std::uint32_t mask : edges) {
      std::vector<int> list;
      for (int j = 1; j <= n; ++j) {
        if (mask & vertex_bit(n, j)) list.push_back(j);
      }
      lists.push_back(std::move(list));
    }
    return lists;
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

/// Dense n-qubit state: 2^n complex amplitudes indexed by basis bit strings.
struct StateVector {
  int n = 0;
  std::vector<Complex> amp;

  [[nodiscard]] std::size_t dim() const { return std::size_t{1} << n; }
};

enum class Pauli { I, X, Y, Z };

[[nodiscard]] inline char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

/// A phase in {1, i, -1, -i} times an n-fold tensor product of single-qubit
/// Pauli letters.
struct PauliWord {
  int phase_power = 0;  // the word carries the scalar i^phase_power
  std::vector<Pauli> letters;

  static PauliWord uniform(int n, Pauli p, int phase_power = 0) {
    return PauliWord{phase_power, std::vector<Pauli>(static_cast<std::size_t>(n), p)};
  }

  [[nodiscard]] int size() const { return static_cast<int>(letters.size()); }

  [[nodiscard]] std::string to_string() const {
    static constexpr const char* kPhases[4] = {"+", "+i", "-", "-i"};
    std::string out = kPhases[((phase_power % 4) + 4) % 4];
    for (Pauli p : letters) out += to_char(p);
    return out;
  }

  friend bool operator==(const PauliWord&, const PauliWord&) = default;
};

inline StateVector plus_state(int n, int cap = kDenseCap) {
  if (n < 1) throw DomainError("plus_state: needs n >= 1");
  if (n > cap) throw ResourceLimitError("plus_state: n exceeds dense cap");
  StateVector s;
  s.n = n;
  const double c = 1.0 / std::sqrt(static_cast<double>(std::uint64_t{1} << n));
  s.amp.assign(std::size_t{1} << n, Complex{c, 0.0});
  return s;
}

/// Builds |G> by applying one sign-flip gate per hyperedge to the uniform
/// state: basis vector I picks up -1 for every edge contained in its
/// support. Each gate visits only the 2^(n-|e|) basis vectors it acts on.
inline StateVector build_state(const Hypergraph& g, int cap = kDenseCap) {
  if (g.n > cap) throw ResourceLimitError("build_state: n exceeds dense cap");
  StateVector s = plus_state(g.n, cap);
  const std::uint32_t full = (g.n == 32) ? ~std::uint32_t{0}
                                         : (std::uint32_t{1} << g.n) - 1;
  for (std::uint32_t edge : g.edges) {
    if (edge == 0) throw DomainError("build_state: empty hyperedge");
    const std::uint32_t rest = full & ~edge;
    // Walk all supersets of `edge`: edge | (subset of rest).
    std::uint32_t sub = 0;
    while (true) {
      s.amp[edge | sub] = -s.amp[edge | sub];
      if (sub == rest) break;
      sub = (sub - rest) & rest;
    }
  }
  return s;
}

/// Dense state of |K_n^m> straight from its weight sign vector, bypassing
/// the per-edge gate loop. Amplitudes are exactly +-2^(-n/2).
inline StateVector build_symmetric_state(const CardinalityVector& k, int cap = kDenseCap) {
  if (k.n() > cap) throw ResourceLimitError("build_symmetric_state: n exceeds dense cap");
  const SignVector f = sign_vector(k);
  StateVector s;
  s.n = k.n();
  const double c = 1.0 / std::sqrt(static_cast<double>(std::uint64_t{1} << k.n()));
  s.amp.resize(std::size_t{1} << k.n());
  for (std::size_t i = 0; i < s.amp.size(); ++i) {
    s.amp[i] = Complex{f.f[static_cast<std::size_t>(std::popcount(i))] * c, 0.0};
  }
  return s;
}

/// Exact action of a Pauli word: X letters permute basis states, Z letters
/// flip signs on set bits, Y letters do both with a factor i(-1)^bit.
inline StateVector apply_pauli(const PauliWord& p, const StateVector& s) {
  if (p.size() != s.n) throw DimensionError("apply_pauli: word/state length mismatch");
  std::size_t flip_mask = 0;  // letters acting as X on the basis index (X, Y)
  std::size_t sign_mask = 0;  // letters contributing (-1)^bit (Z, Y)
  int y_count = 0;
  for (int j = 1; j <= s.n; ++j) {
    const Pauli letter = p.letters[static_cast<std::size_t>(j) - 1];
    const std::size_t bit = std::size_t{1} << (s.n - j);
    if (letter == Pauli::X || letter == Pauli::Y) flip_mask |= bit;
    if (letter == Pauli::Z || letter == Pauli::Y) sign_mask |= bit;
    if (letter == Pauli::Y) ++y_count;
  }
  StateVector out;
  out.n = s.n;
  out.amp.resize(s.amp.size());
  const int base_power = p.phase_power + y_count;
  for (std::size_t i = 0; i < s.amp.size(); ++i) {
    const int power = base_power + 2 * (std::popcount(i & sign_mask) & 1);
    out.amp[i ^ flip_mask] = imag_unit_power(power) * s.amp[i];
  }
  return out;
}

[[nodiscard]] inline Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) throw DimensionError("inner_product: length mismatch");
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.amp.size(); ++i) acc += std::conj(a.amp[i]) * b.amp[i];
  return acc;
}

[[nodiscard]] inline double norm_distance(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) throw DimensionError("norm_distance: length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.amp.size(); ++i) acc += std::norm(a.amp[i] - b.amp[i]);
  return std::sqrt(acc);
}

inline constexpr double kStateTol = 1e-10;

/// True iff P|s> = |s> within kStateTol.
inline bool is_stabilized(const PauliWord& p, const StateVector& s, double tol = kStateTol) {
  if (p.size() != s.n) throw DimensionError("is_stabilized: length mismatch");
  std::size_t flip_mask = 0;
  std::size_t sign_mask = 0;
  int y_count = 0;
  for (int j = 1; j <= s.n; ++j) {
    const Pauli letter = p.letters[static_cast<std::size_t>(j) - 1];
    const std::size_t bit = std::size_t{1} << (s.n - j);
    if (letter == Pauli::X || letter == Pauli::Y) flip_mask |= bit;
    if (letter == Pauli::Z || letter == Pauli::Y) sign_mask |= bit;
    if (letter == Pauli::Y) ++y_count;
  }
  const int base_power = p.phase_power + y_count;
  double acc = 0.0;
  for (std::size_t i = 0; i < s.amp.size(); ++i) {
    const int power = base_power + 2 * (std::popcount(i & sign_mask) & 1);
    const Complex moved = imag_unit_power(power) * s.amp[i];
    acc += std::norm(moved - s.amp[i ^ flip_mask]);
    if (acc > tol * tol) return false;
  }
  return std::sqrt(acc) < tol;
}

/// Every nontrivial word c * L_1 x ... x L_n (4 phases, 4^n letter
/// patterns) that stabilizes s, excluding the identity word with phase +1.
inline std::vector<PauliWord> search_local_pauli_stabilizers(const StateVector& s,
                                                             int cap = kSearchCap) {
  if (s.n > cap) {
    throw ResourceLimitError("search_local_pauli_stabilizers: n exceeds search cap");
  }
  std::vector<PauliWord> found;
  const std::uint64_t letter_patterns = std::uint64_t{1} << (2 * s.n);
  for (std::uint64_t code = 0; code < letter_patterns; ++code) {
    PauliWord word;
    word.letters.resize(static_cast<std::size_t>(s.n));
    std::uint64_t rest = code;
    for (int j = s.n; j >= 1; --j) {
      word.letters[static_cast<std::size_t>(j) - 1] = static_cast<Pauli>(rest & 3);
      rest >>= 2;
    }
    for (int phase = 0; phase < 4; ++phase) {
      if (code == 0 && phase == 0) continue;  // identity word with phase +1
      word.phase_power = phase;
      if (is_stabilized(word, s)) found.push_back(word);
    }
  }
  return found;
}

/// Applies g_j = X_j * prod_{e in E(j)} C_{e \ j}. An edge equal to {j}
/// contributes C_emptyset = -Id. The diagonal gate product acts first,
/// then X_j.
inline StateVector g_operator_apply(const Hypergraph& g, int j, const StateVector& s) {
  if (g.n != s.n) throw DimensionError("g_operator_apply: hypergraph/state mismatch");
  if (j < 1 || j > g.n) throw DomainError("g_operator_apply: vertex out of range");
  const std::uint32_t jbit = Hypergraph::vertex_bit(g.n, j);
  std::vector<std::uint32_t> reduced;
  bool global_flip = false;
  for (std::uint32_t edge : g.edges) {
    if (!(edge & jbit)) continue;
    const std::uint32_t r = edge & ~jbit;
    if (r == 0) {
      global_flip = !global_flip;
    } else {
      reduced.push_back(r);
    }
  }
  StateVector out;
  out.n = s.n;
  out.amp.resize(s.amp.size());
  for (std::size_t i = 0; i < s.amp.size(); ++i) {
    bool flip = global_flip;
    for (std::uint32_t r : reduced) {
      if ((i & r) == r) flip = !flip;
    }
    out.amp[i ^ jbit] = flip ? -s.amp[i] : s.amp[i];
  }
  return out;
}

/// Row-major dense complex matrix.
struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<Complex> a;

  explicit DenseMatrix(std::size_t d = 0) : dim(d), a(d * d, Complex{0.0, 0.0}) {}

  [[nodiscard]] Complex& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  [[nodiscard]] const Complex& at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }

  [[nodiscard]] Complex trace() const {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < dim; ++i) t += at(i, i);
    return t;
  }
};

[[nodiscard]] inline double frobenius_distance(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.dim != y.dim) throw DimensionError("frobenius_distance: size mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i) acc += std::norm(x.a[i] - y.a[i]);
  return std::sqrt(acc);
}

inline DenseMatrix density_matrix(const StateVector& s, int cap = kDensityCap) {
  if (s.n > cap) throw ResourceLimitError("density_matrix: n exceeds density cap");
  DenseMatrix rho(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) {
    for (std::size_t c = 0; c < s.dim(); ++c) {
      rho.at(r, c) = s.amp[r] * std::conj(s.amp[c]);
    }
  }
  return rho;
}

/// Accumulates w * |s><s| into rho.
inline void accumulate_outer_product(DenseMatrix& rho, const StateVector& s, double weight) {
  if (rho.dim != s.dim()) throw DimensionError("accumulate_outer_product: size mismatch");
  for (std::size_t r = 0; r < s.dim(); ++r) {
    for (std::size_t c = 0; c < s.dim(); ++c) {
      rho.at(r, c) += weight * s.amp[r] * std::conj(s.amp[c]);
    }
  }
}

namespace detail {

/// Splits an n-bit index into (kept bits, traced bits) given the traced
/// qubit mask; kept qubits keep their relative order.
struct IndexSplitter {
  int n;
  std::size_t traced_mask;
  std::vector<std::size_t> kept_bits;    // bit values of kept positions, MSB first
  std::vector<std::size_t> traced_bits;  // bit values of traced positions, MSB first

  IndexSplitter(int n_qubits, const std::vector<int>& traced_qubits) : n(n_qubits), traced_mask(0) {
    for (int q : traced_qubits) {
      if (q < 1 || q > n) throw DomainError("partial trace: qubit out of range");
      const std::size_t bit = std::size_t{1} << (n - q);
      if (traced_mask & bit) throw DomainError("partial trace: repeated qubit");
      traced_mask |= bit;
    }
    for (int j = 1; j <= n; ++j) {
      const std::size_t bit = std::size_t{1} << (n - j);
      if (traced_mask & bit) {
        traced_bits.push_back(bit);
      } else {
        kept_bits.push_back(bit);
      }
    }
  }

  [[nodiscard]] std::size_t expand(std::size_t compact, const std::vector<std::size_t>& bits) const {
    std::size_t out = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (compact & (std::size_t{1} << (bits.size() - 1 - i))) out |= bits[i];
    }
    return out;
  }
};

}  // namespace detail

/// Standard index-summation partial trace over the listed qubits (1-based).
inline DenseMatrix partial_trace_dense(const DenseMatrix& rho, int n,
                                       const std::vector<int>& traced_qubits) {
  if (rho.dim != (std::size_t{1} << n)) {
    throw DimensionError("partial_trace_dense: matrix is not 2^n x 2^n");
  }
  const detail::IndexSplitter split(n, traced_qubits);
  const std::size_t kept_dim = std::size_t{1} << split.kept_bits.size();
  const std::size_t traced_dim = std::size_t{1} << split.traced_bits.size();
  DenseMatrix out(kept_dim);
  for (std::size_t r = 0; r < kept_dim; ++r) {
    const std::size_t rbase = split.expand(r, split.kept_bits);
    for (std::size_t c = 0; c < kept_dim; ++c) {
      const std::size_t cbase = split.expand(c, split.kept_bits);
      Complex acc{0.0, 0.0};
      for (std::size_t t = 0; t < traced_dim; ++t) {
        const std::size_t tbits = split.expand(t, split.traced_bits);
        acc += rho.at(rbase | tbits, cbase | tbits);
      }
      out.at(r, c) = acc;
    }
  }
  return out;
}

/// Reduced density matrix of a pure state, formed without materializing the
/// full 2^n x 2^n density matrix.
inline DenseMatrix reduced_density_matrix(const StateVector& s,
                                          const std::vector<int>& traced_qubits) {
  const detail::IndexSplitter split(s.n, traced_qubits);
  const std::size_t kept_dim = std::size_t{1} << split.kept_bits.size();
  const std::size_t traced_dim = std::size_t{1} << split.traced_bits.size();
  DenseMatrix out(kept_dim);
  for (std::size_t t = 0; t < traced_dim; ++t) {
    const std::size_t tbits = split.expand(t, split.traced_bits);
    for (std::size_t r = 0; r < kept_dim; ++r) {
      const Complex ar = s.amp[split.expand(r, split.kept_bits) | tbits];
      if (ar == Complex{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < kept_dim; ++c) {
        out.at(r, c) += ar * std::conj(s.amp[split.expand(c, split.kept_bits) | tbits]);
      }
    }
  }
  return out;
}

}  // namespace symmhg
