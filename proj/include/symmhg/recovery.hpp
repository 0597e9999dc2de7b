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
 * Partial trace of symmetric hypergraph states and reconstruction from
 * reduced density matrices.
 *
 * Tracing one qubit of |G><G| yields the equal mixture of the states of
 * the two vertex-removed hypergraphs: delete (erase the vertex and every
 * hyperedge through it) and shrink (erase the vertex only). The two
 * operations commute, so tracing k qubits expands binomially into k+1
 * components D^j S^(k-j) G with weights C(k, j) / 2^k. On weight sign
 * vectors, delete keeps the leading window and shrink shifts by one, so
 * component j carries the window (f_{k-j}, ..., f_{n-j}).
 *
 * The first column of the reduced matrix, grouped by weight and with the
 * 2^-(n-k) density normalization divided out, is therefore
 * v_c = 2^-k * sum_l C(k, l) f_{c+l}. When the smallest hyperedge
 * cardinality is at least k+1 the seeds f_0 = ... = f_k = 1 are forced and
 * the banded recurrence recovers the whole sign vector, hence the state.
 * (A shifted-binomial C(k+1, l) weighting is kept selectable purely so the
 * dense oracle can demonstrate which rule is the right one.)
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "symmhg/cardinality.hpp"
#include "symmhg/errors.hpp"
#include "symmhg/statevec.hpp"

namespace symmhg {

/// Coefficient rule tying component windows to first-column entries.
/// Binomial is the rule the dense partial-trace oracle confirms;
/// ShiftedBinomial is the rejected alternative, kept for comparison.
enum class TraceWeightRule { Binomial, ShiftedBinomial };

inline constexpr TraceWeightRule kDefaultTraceRule = TraceWeightRule::Binomial;

/// Exact small binomial for the mixture weights (k stays tiny).
inline std::uint64_t small_binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  std::uint64_t num = 1;
  for (int i = 1; i <= b; ++i) {
    num = num * static_cast<std::uint64_t>(a - b + i) / static_cast<std::uint64_t>(i);
  }
  return num;
}

struct MixtureTerm {
  std::uint64_t weight_num = 0;  // weight = weight_num / 2^k
  int deletions = 0;             // this term is D^deletions S^(k - deletions) G
  CardinalityVector graph;       // cardinality vector of the component
  SignVector component;          // its weight sign vector (f_0 = +1 form)
  /// +-1 global state factor accumulated from shrink steps that squeezed a
  /// 1-edge into C_emptyset. Density matrices are blind to it; it is
  /// carried so the decomposition stays an exact state-level identity.
  int sign_flag = 1;
};

/// Convex mixture of symmetric hypergraph states on n qubits, produced by
/// tracing `traced` qubits from an (n + traced)-qubit state.
struct SymmetricMixture {
  int n = 0;
  int traced = 0;
  std::vector<MixtureTerm> terms;
};

/// Expands tr_{1..k}(|K_n^m><K_n^m|) into its delete/shrink mixture.
inline SymmetricMixture trace_mixture(const CardinalityVector& k, int traced) {
  if (traced < 0 || traced >= k.n()) {
    throw DomainError("trace_mixture: need 0 <= k < n");
  }
  SymmetricMixture mix;
  mix.n = k.n() - traced;
  mix.traced = traced;
  for (int deletions = 0; deletions <= traced; ++deletions) {
    MixtureTerm term{small_binomial(traced, deletions), deletions, k, SignVector{}, 1};
    for (int s = 0; s < traced - deletions; ++s) {
      ShrinkResult shrunk = shrink_vertex(term.graph);
      term.graph = std::move(shrunk.graph);
      term.sign_flag *= shrunk.sign;
    }
    for (int d = 0; d < deletions; ++d) {
      term.graph = delete_vertex(term.graph);
    }
    term.component = sign_vector(term.graph);
    mix.terms.push_back(std::move(term));
  }
  return mix;
}

namespace detail {

inline std::uint64_t rule_weight(TraceWeightRule rule, int k, int deletions) {
  // Component D^j S^(k-j) pairs with window offset l = k - j.
  return rule == TraceWeightRule::Binomial ? small_binomial(k, deletions)
                                           : small_binomial(k + 1, k - deletions);
}

}  // namespace detail

/// First column of the reduced density matrix, grouped by weight, scaled
/// by 2^(n - k) so a pure source gives v_0 = 1. Entries are exact dyadic
/// rationals accumulated in integers.
inline std::vector<double> first_column(const SymmetricMixture& mix,
                                        TraceWeightRule rule = kDefaultTraceRule) {
  std::vector<long long> acc(static_cast<std::size_t>(mix.n) + 1, 0);
  for (const MixtureTerm& term : mix.terms) {
    // The first column of a pure component is f_c * f_0; with the sign
    // vector in its f_0 = +1 form that is just f_c. The shrink sign flag
    // squares away.
    const std::uint64_t weight = detail::rule_weight(rule, mix.traced, term.deletions);
    for (std::size_t c = 0; c < acc.size(); ++c) {
      acc[c] += static_cast<long long>(weight) * term.component.f[c];
    }
  }
  const double denom = static_cast<double>(std::uint64_t{1} << mix.traced);
  std::vector<double> v(acc.size());
  for (std::size_t c = 0; c < acc.size(); ++c) v[c] = static_cast<double>(acc[c]) / denom;
  return v;
}

/// Recovers the weight sign vector of the n-qubit source state from the
/// scaled first column of its (n-k)-qubit reduced density matrix. Requires
/// the source's smallest hyperedge cardinality to be at least k+1, which
/// forces the seeds f_0 = ... = f_k = 1; each later entry follows from the
/// banded recurrence 2^k v_j = sum_l C(k, l) f_{j+l}. Every solved entry
/// must land on +-1 (within a small snap tolerance for oracle-produced
/// input), and the recovered state must itself satisfy the cardinality
/// bound, else the input is rejected.
inline SignVector reconstruct(const std::vector<double>& v, int n, int k,
                              TraceWeightRule rule = kDefaultTraceRule) {
  if (k < 0 || k >= n) throw DomainError("reconstruct: need 0 <= k < n");
  if (v.size() != static_cast<std::size_t>(n - k) + 1) {
    throw DimensionError("reconstruct: column must have n - k + 1 entries");
  }
  SignVector f;
  f.n = n;
  f.f.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int w = 0; w <= k; ++w) f.f[static_cast<std::size_t>(w)] = 1;
  const double scale = static_cast<double>(std::uint64_t{1} << k);
  std::vector<double> coeff(static_cast<std::size_t>(k) + 1);
  for (int l = 0; l <= k; ++l) {
    coeff[static_cast<std::size_t>(l)] = static_cast<double>(
        rule == TraceWeightRule::Binomial ? small_binomial(k, l) : small_binomial(k + 1, l));
  }
  auto snap = [](double value) {
    if (std::abs(value - 1.0) < 1e-6) return 1;
    if (std::abs(value + 1.0) < 1e-6) return -1;
    throw InvalidInputError("reconstruct: recovered entry " + std::to_string(value) +
                            " is not a sign");
  };
  // v_0 involves only the seeds. A mismatch means the source state cannot
  // have all hyperedges larger than k, so the base case does not apply.
  {
    double window = 0.0;
    for (int l = 0; l <= k; ++l) window += coeff[static_cast<std::size_t>(l)];
    if (std::abs(scale * v[0] - window) > 1e-6) {
      throw DomainError("reconstruct: column contradicts the unit seeds; the source must "
                        "have no hyperedge of cardinality <= k");
    }
  }
  for (int j = 1; j <= n - k; ++j) {
    double rest = 0.0;
    for (int l = 0; l < k; ++l) {
      rest += coeff[static_cast<std::size_t>(l)] * f.f[static_cast<std::size_t>(j + l)];
    }
    const double solved =
        (scale * v[static_cast<std::size_t>(j)] - rest) / coeff[static_cast<std::size_t>(k)];
    f.f[static_cast<std::size_t>(j + k)] = snap(solved);
  }
  const CardinalityVector recovered = cardinalities_from_sign_vector(f);
  if (recovered.edgeless() || recovered.m().front() < k + 1) {
    throw DomainError("reconstruct: recovered state " + recovered.to_string() +
                      " has a hyperedge smaller than k + 1");
  }
  return f;
}

/// Assembles the mixture's density matrix densely (oracle side).
inline DenseMatrix mixture_density_matrix(const SymmetricMixture& mix, int cap = kDensityCap) {
  if (mix.n > cap) throw ResourceLimitError("mixture_density_matrix: n exceeds density cap");
  DenseMatrix rho(std::size_t{1} << mix.n);
  const double denom = static_cast<double>(std::uint64_t{1} << mix.traced);
  for (const MixtureTerm& term : mix.terms) {
    const StateVector component = build_symmetric_state(term.graph, cap);
    accumulate_outer_product(rho, component, static_cast<double>(term.weight_num) / denom);
  }
  return rho;
}

}  // namespace symmhg
