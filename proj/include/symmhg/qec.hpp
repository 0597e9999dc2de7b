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
 * One-qubit-in-n code against collective decoherence, built from any
 * symmetric hypergraph state with a uniform local Pauli stabilizer:
 * |0_L> = |K_n^m> and |1_L> = Z_1 Z_2 |0_L>. The code corrects the four
 * collective errors Id, X^n, Y^n, Z^n; correctability is certified by the
 * Knill-Laflamme criterion P E_i E_j P = alpha_ij P with (alpha_ij)
 * Hermitian, where P projects onto the span of the logicals.
 */

#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <string>

#include "symmhg/cardinality.hpp"
#include "symmhg/classify.hpp"
#include "symmhg/errors.hpp"
#include "symmhg/statevec.hpp"

namespace symmhg {

struct Code {
  Code(CardinalityVector descriptor, StabilizerClass cls)
      : k(std::move(descriptor)), stabilizer_class(cls) {}

  CardinalityVector k;
  StabilizerClass stabilizer_class;
  StateVector zero_logical;
  StateVector one_logical;
};

/// The four collective errors, in criterion order.
inline const std::array<Pauli, 4> kCollectiveErrors = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

inline StateVector apply_z1_z2(const StateVector& s) {
  if (s.n < 2) throw DomainError("apply_z1_z2: needs n >= 2");
  StateVector out = s;
  const std::size_t mask = (std::size_t{3} << (s.n - 2));  // qubits 1 and 2
  for (std::size_t i = 0; i < out.amp.size(); ++i) {
    if (std::popcount(i & mask) & 1) out.amp[i] = -out.amp[i];
  }
  return out;
}

inline Code build_code(const CardinalityVector& k, int cap = kDensityCap) {
  if (k.n() < 3) throw DomainError("build_code: needs n >= 3");
  if (k.n() > cap) throw ResourceLimitError("build_code: n exceeds dense cap");
  const StabilizerClass cls = classify(k);
  if (cls == StabilizerClass::None) {
    throw DomainError("build_code: " + k.to_string() + " has no uniform Pauli stabilizer");
  }
  Code code(k, cls);
  code.zero_logical = build_symmetric_state(k, cap);
  code.one_logical = apply_z1_z2(code.zero_logical);
  return code;
}

/// 4x4 complex matrix of criterion scalars alpha_ij.
struct AlphaMatrix {
  std::array<Complex, 16> a{};

  [[nodiscard]] Complex& at(int i, int j) { return a[static_cast<std::size_t>(4 * i + j)]; }
  [[nodiscard]] const Complex& at(int i, int j) const {
    return a[static_cast<std::size_t>(4 * i + j)];
  }

  [[nodiscard]] bool is_hermitian(double tol = kStateTol) const {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
      }
    }
    return true;
  }
};

[[nodiscard]] inline double max_abs_difference(const AlphaMatrix& x, const AlphaMatrix& y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i) {
    worst = std::max(std::abs(x.a[i] - y.a[i]), worst);
  }
  return worst;
}

namespace detail {

/// In-logical-basis matrix of E_i E_j: entries <a_L| E_i E_j |b_L>. Since
/// the logicals are orthonormal, P E_i E_j P = alpha P holds exactly when
/// this 2x2 matrix is alpha times the identity, and the Frobenius residual
/// of the 2x2 comparison equals the operator-space residual.
struct LogicalBlock {
  Complex m00, m01, m10, m11;
};

inline LogicalBlock logical_block(const Code& code, Pauli ei, Pauli ej) {
  const PauliWord wi = PauliWord::uniform(code.zero_logical.n, ei);
  const PauliWord wj = PauliWord::uniform(code.zero_logical.n, ej);
  // <a| E_i E_j |b> = <E_i a | E_j b>: the collective errors are Hermitian.
  const StateVector zi = apply_pauli(wi, code.zero_logical);
  const StateVector oi = apply_pauli(wi, code.one_logical);
  const StateVector zj = apply_pauli(wj, code.zero_logical);
  const StateVector oj = apply_pauli(wj, code.one_logical);
  return LogicalBlock{inner_product(zi, zj), inner_product(zi, oj),
                      inner_product(oi, zj), inner_product(oi, oj)};
}

inline double block_residual(const LogicalBlock& b, Complex alpha) {
  return std::sqrt(std::norm(b.m00 - alpha) + std::norm(b.m01) + std::norm(b.m10) +
                   std::norm(b.m11 - alpha));
}

}  // namespace detail

/// Extracts (alpha_ij) densely: alpha_ij = tr(P E_i E_j P) / tr(P), with a
/// residual check that P E_i E_j P really is alpha_ij P. A residual beyond
/// tolerance means the code was constructed wrong.
inline AlphaMatrix alpha_matrix(const Code& code, double tol = kStateTol) {
  AlphaMatrix alpha;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const detail::LogicalBlock block =
          detail::logical_block(code, kCollectiveErrors[static_cast<std::size_t>(i)],
                                kCollectiveErrors[static_cast<std::size_t>(j)]);
      const Complex a = (block.m00 + block.m11) / 2.0;
      if (detail::block_residual(block, a) > tol) {
        throw ConsistencyError("alpha_matrix: P E_i E_j P is not proportional to P at (" +
                               std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      alpha.at(i, j) = a;
    }
  }
  return alpha;
}

/// Knill-Laflamme test: every P E_i E_j P must be a scalar multiple of P
/// and the scalar matrix must be Hermitian. Unlike alpha_matrix this never
/// throws on failure; it reports it.
inline bool knill_laflamme_check(const Code& code, double tol = kStateTol) {
  AlphaMatrix alpha;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const detail::LogicalBlock block =
          detail::logical_block(code, kCollectiveErrors[static_cast<std::size_t>(i)],
                                kCollectiveErrors[static_cast<std::size_t>(j)]);
      const Complex a = (block.m00 + block.m11) / 2.0;
      if (detail::block_residual(block, a) > tol) return false;
      alpha.at(i, j) = a;
    }
  }
  return alpha.is_hermitian(tol);
}

/// The criterion scalars every code of a given class must produce,
/// from the collective-error algebra alone: X^n acts as +-1 on the code
/// space, Y^n Z^n = i^n X^n, Z^n X^n = i^n Y^n, X^n Y^n = i^n Z^n, and the
/// cross terms vanish because Z^n averages to zero on the logicals.
inline AlphaMatrix expected_alpha(StabilizerClass cls, int n) {
  AlphaMatrix alpha;
  const Complex in = imag_unit_power(n);          // i^n
  const Complex min = imag_unit_power(3 * n);     // (-i)^n
  for (int i = 0; i < 4; ++i) alpha.at(i, i) = Complex{1.0, 0.0};
  switch (cls) {
    case StabilizerClass::XPlus:
      alpha.at(0, 1) = alpha.at(1, 0) = Complex{1.0, 0.0};
      alpha.at(2, 3) = in;
      alpha.at(3, 2) = min;
      break;
    case StabilizerClass::XMinus:
      alpha.at(0, 1) = alpha.at(1, 0) = Complex{-1.0, 0.0};
      alpha.at(2, 3) = -in;
      alpha.at(3, 2) = -min;
      break;
    case StabilizerClass::YPlus:
      alpha.at(0, 2) = alpha.at(2, 0) = Complex{1.0, 0.0};
      alpha.at(1, 3) = min;
      alpha.at(3, 1) = in;
      break;
    case StabilizerClass::None:
      throw DomainError("expected_alpha: no code without a stabilizer");
  }
  return alpha;
}

/// Structural properties of the logical pair, each checked densely:
/// a shared stabilizing word, orthogonality, and vanishing Z^n matrix
/// elements (diagonal and cross).
struct CodeOverlapReport {
  bool shared_stabilizer = false;
  bool logicals_orthogonal = false;
  bool z_cross_zero = false;
  bool z_diagonal_zero = false;

  [[nodiscard]] bool all() const {
    return shared_stabilizer && logicals_orthogonal && z_cross_zero && z_diagonal_zero;
  }
};

inline PauliWord stabilizer_word(StabilizerClass cls, int n) {
  switch (cls) {
    case StabilizerClass::XPlus: return PauliWord::uniform(n, Pauli::X, 0);
    case StabilizerClass::XMinus: return PauliWord::uniform(n, Pauli::X, 2);
    case StabilizerClass::YPlus: return PauliWord::uniform(n, Pauli::Y, 0);
    case StabilizerClass::None:
      throw DomainError("stabilizer_word: class carries no word");
  }
  throw DomainError("stabilizer_word: class carries no word");
}

inline CodeOverlapReport code_overlap_checks(const Code& code, double tol = kStateTol) {
  CodeOverlapReport report;
  const PauliWord word = stabilizer_word(code.stabilizer_class, code.zero_logical.n);
  report.shared_stabilizer =
      is_stabilized(word, code.zero_logical, tol) && is_stabilized(word, code.one_logical, tol);
  report.logicals_orthogonal =
      std::abs(inner_product(code.zero_logical, code.one_logical)) < tol;
  const PauliWord zn = PauliWord::uniform(code.zero_logical.n, Pauli::Z);
  const StateVector z_one = apply_pauli(zn, code.one_logical);
  const StateVector z_zero = apply_pauli(zn, code.zero_logical);
  report.z_cross_zero = std::abs(inner_product(code.zero_logical, z_one)) < tol;
  report.z_diagonal_zero =
      std::abs(inner_product(code.zero_logical, z_zero)) < tol &&
      std::abs(inner_product(code.one_logical, z_one)) < tol;
  return report;
}

}  // namespace symmhg
