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
 * Mermin-type noncontextuality tests built from the stabilizer generators
 * g_j = X_j * prod_{e in E(j)} C_{e \ j} of a symmetric hypergraph state.
 *
 * The measured operator is M = sum_j g_j + prod_j g_j. Quantum mechanics
 * on a -X-stable state gives <M> = n + 1 (each g_j fixes the state, and
 * the product of all g_j collapses to -X^n, which also fixes it). A
 * noncontextual assignment of +-1 values to the variables X_j and
 * C_{e \ j} evaluates M classically; the classical maximum is searched
 * exhaustively when the variable count permits, and by seeded hill
 * climbing otherwise.
 */

#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "symmhg/cardinality.hpp"
#include "symmhg/classify.hpp"
#include "symmhg/errors.hpp"
#include "symmhg/statevec.hpp"

namespace symmhg {

namespace detail {

/// Diagonal of the gate product prod_{e in E(j)} C_{e \ j} on |K_n^m>, as
/// +-1 per basis index. The number of residual gates C_{e \ j} that act on
/// basis vector I is, per level, the count of (m_l - 1)-subsets of
/// supp(I) \ {j}; only its parity matters. A level-1 edge {j} contributes
/// the constant C_emptyset = -Id, which the same formula covers via
/// C(w, 0) = 1.
inline std::vector<std::int8_t> g_diagonal(const CardinalityVector& k, int j,
                                           int cap = kDenseCap) {
  if (k.n() > cap) throw ResourceLimitError("g_diagonal: n exceeds dense cap");
  if (j < 1 || j > k.n()) throw DomainError("g_diagonal: vertex out of range");
  const std::size_t jbit = std::size_t{1} << (k.n() - j);
  std::vector<std::int8_t> diag(std::size_t{1} << k.n());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const int support = std::popcount(i & ~jbit & (diag.size() - 1));
    int parity = 0;
    for (int level : k.m()) {
      parity ^= binom_mod2(static_cast<std::uint64_t>(support),
                           static_cast<std::uint64_t>(level - 1));
    }
    diag[i] = parity ? -1 : 1;
  }
  return diag;
}

}  // namespace detail

/// Applies g_j to a state of the symmetric hypergraph K_n^m without
/// materializing the edge list.
inline StateVector g_operator_apply_symmetric(const CardinalityVector& k, int j,
                                              const StateVector& s) {
  if (k.n() != s.n) throw DimensionError("g_operator_apply_symmetric: size mismatch");
  const std::vector<std::int8_t> diag = detail::g_diagonal(k, j);
  const std::size_t jbit = std::size_t{1} << (k.n() - j);
  StateVector out;
  out.n = s.n;
  out.amp.resize(s.amp.size());
  for (std::size_t i = 0; i < s.amp.size(); ++i) {
    out.amp[i ^ jbit] = static_cast<double>(diag[i]) * s.amp[i];
  }
  return out;
}

/// Collapses prod_j g_j symbolically. Expanding every g_j past the X's
/// leaves, besides a global (-1)^|E|, a product of residual diagonal gates
/// C_{e \ f}. A fixed residual set of size d >= 1 occurs with multiplicity
/// sum_{l: m_l >= d+1} C(n-d, m_l - d); even multiplicities cancel because
/// each gate squares to the identity. For a stabilized state everything
/// cancels except possibly the d = 1 layer, which collapses to Z^n; then
/// X^n Z^n = (XZ)^n = (-i)^n Y^n folds the result into a uniform Y word.
inline PauliWord product_of_g(const CardinalityVector& k) {
  const StabilizerClass cls = classify(k);
  if (cls == StabilizerClass::None) {
    throw DomainError("product_of_g: " + k.to_string() + " has no uniform Pauli stabilizer");
  }
  const int n = k.n();
  const int edge_parity = detail::level_sum_parity(k.m(), n);
  const int top = k.edgeless() ? 0 : k.m().back();
  bool z_layer = false;
  for (int d = 1; d <= top - 1; ++d) {
    int parity = 0;
    for (int level : k.m()) {
      if (level >= d + 1) {
        parity ^= binom_mod2(static_cast<std::uint64_t>(n - d),
                             static_cast<std::uint64_t>(level - d));
      }
    }
    if (parity == 0) continue;
    if (d == 1) {
      z_layer = true;
    } else {
      throw ConsistencyError("product_of_g: residual gates of arity " + std::to_string(d) +
                             " fail to cancel for " + k.to_string());
    }
  }
  PauliWord word;
  if (!z_layer) {
    word = PauliWord::uniform(n, Pauli::X, edge_parity ? 2 : 0);
    const bool matches = (cls == StabilizerClass::XPlus && word.phase_power == 0) ||
                         (cls == StabilizerClass::XMinus && word.phase_power == 2);
    if (!matches) {
      throw ConsistencyError("product_of_g: collapsed word disagrees with the class of " +
                             k.to_string());
    }
  } else {
    // (-1)^|E| X^n Z^n = i^(2|E| + 3n) Y^n; the phase must come out +1.
    const int phase = (2 * edge_parity + 3 * n) % 4;
    if (cls != StabilizerClass::YPlus || phase != 0) {
      throw ConsistencyError("product_of_g: Z-layer collapse disagrees with the class of " +
                             k.to_string());
    }
    word = PauliWord::uniform(n, Pauli::Y, 0);
  }
  return word;
}

/// <G| M |G> with M = sum_j g_j + prod_j g_j, evaluated densely. Each g_j
/// must fix the state exactly; a failed stabilization means the state was
/// built wrong and is reported as such.
inline double quantum_value(const CardinalityVector& k, int cap = kDenseCap) {
  if (classify(k) != StabilizerClass::XMinus) {
    throw DomainError("quantum_value: " + k.to_string() + " is not -X-stable");
  }
  const StateVector state = build_symmetric_state(k, cap);
  double total = 0.0;
  StateVector product = state;
  for (int j = 1; j <= k.n(); ++j) {
    const StateVector moved = g_operator_apply_symmetric(k, j, state);
    const Complex e = inner_product(state, moved);
    if (std::abs(e - Complex{1.0, 0.0}) > 1e-9) {
      throw ConsistencyError("quantum_value: g_" + std::to_string(j) +
                             " fails to stabilize " + k.to_string());
    }
    total += e.real();
    product = g_operator_apply_symmetric(k, j, product);
  }
  total += inner_product(state, product).real();
  return total;
}

/// A +-1 value for each vertex variable X_j and each distinct gate
/// variable C_S, S = e \ {j}. Two pairs (e, j), (e', j') with the same
/// difference set share one variable. The empty set is not a variable: it
/// is the constant -1.
struct ClassicalAssignment {
  std::vector<int> x;              // index j-1 holds the value of X_j
  std::map<std::uint32_t, int> c;  // keyed by subset bitmask (vertex j at bit n-j)
};

/// The variable layout of a symmetric state's Mermin test.
struct ClassicalVariableLayout {
  int n = 0;
  std::vector<std::uint32_t> subsets;  // distinct sets e \ {j}, sorted
  /// Per vertex: which subsets feed C_j, as a bitmask over subset indices.
  /// Only populated when the subsets fit one word, which covers every
  /// exhaustively searchable layout.
  std::vector<std::uint64_t> vertex_masks;
  bool unit_level = false;  // m_1 = 1, so each C_j carries one constant -1

  [[nodiscard]] int variable_count() const {
    return n + static_cast<int>(subsets.size());
  }

  /// True iff gate variable i enters the product C_j.
  [[nodiscard]] bool affects(std::size_t i, int j) const {
    return (subsets[i] & Hypergraph::vertex_bit(n, j)) == 0;
  }
};

inline ClassicalVariableLayout classical_variable_layout(const CardinalityVector& k) {
  if (k.edgeless()) throw DomainError("classical_variable_layout: needs at least one level");
  if (k.n() > 30) throw ResourceLimitError("classical_variable_layout: n too large");
  ClassicalVariableLayout layout;
  layout.n = k.n();
  layout.unit_level = k.m().front() == 1;
  for (int level : k.m()) {
    if (level < 2) continue;
    std::uint32_t mask = (std::uint32_t{1} << (level - 1)) - 1;
    const std::uint32_t limit = std::uint32_t{1} << k.n();
    while (mask < limit) {
      layout.subsets.push_back(mask);
      const std::uint32_t low = mask & -mask;
      const std::uint32_t carry = mask + low;
      mask = carry | (((mask ^ carry) / low) >> 2);
    }
  }
  std::sort(layout.subsets.begin(), layout.subsets.end());
  if (layout.subsets.size() <= 64) {
    layout.vertex_masks.assign(static_cast<std::size_t>(k.n()), 0);
    for (std::size_t i = 0; i < layout.subsets.size(); ++i) {
      for (int j = 1; j <= k.n(); ++j) {
        if (layout.affects(i, j)) {
          layout.vertex_masks[static_cast<std::size_t>(j) - 1] |= std::uint64_t{1} << i;
        }
      }
    }
  }
  return layout;
}

namespace detail {

/// Sign (+1 or -1) of the collapsed word prod_j g_j; only the X family
/// makes sense as the final term of the classical M.
inline int product_word_sign(const CardinalityVector& k) {
  const PauliWord word = product_of_g(k);
  if (word.letters.front() != Pauli::X) {
    throw DomainError("classical Mermin value: prod g_j is not a signed X word for " +
                      k.to_string());
  }
  return word.phase_power == 2 ? -1 : 1;
}

}  // namespace detail

/// Evaluates M = sum_j X_j C_j + s * prod_j X_j for one assignment, where
/// C_j is the product of the assigned values over all difference sets
/// e \ {j} with e through j, and s is the sign of the collapsed word
/// prod_j g_j.
inline double classical_value(const CardinalityVector& k, const ClassicalAssignment& a) {
  const ClassicalVariableLayout layout = classical_variable_layout(k);
  if (a.x.size() != static_cast<std::size_t>(layout.n)) {
    throw DomainError("classical_value: wrong number of vertex variables");
  }
  if (a.c.size() != layout.subsets.size()) {
    throw DomainError("classical_value: wrong number of gate variables");
  }
  std::vector<int> cvals(layout.subsets.size());
  for (std::size_t i = 0; i < layout.subsets.size(); ++i) {
    const auto it = a.c.find(layout.subsets[i]);
    if (it == a.c.end()) throw DomainError("classical_value: gate variable set mismatch");
    if (it->second != 1 && it->second != -1) {
      throw DomainError("classical_value: values must be +-1");
    }
    cvals[i] = it->second;
  }
  const int product_sign = detail::product_word_sign(k);
  double sum = 0.0;
  int xprod = 1;
  for (int j = 1; j <= layout.n; ++j) {
    const int xj = a.x[static_cast<std::size_t>(j) - 1];
    if (xj != 1 && xj != -1) throw DomainError("classical_value: values must be +-1");
    int cj = layout.unit_level ? -1 : 1;
    for (std::size_t i = 0; i < layout.subsets.size(); ++i) {
      if (layout.affects(i, j)) cj *= cvals[i];
    }
    sum += xj * cj;
    xprod *= xj;
  }
  return sum + product_sign * xprod;
}

struct MerminSearchPolicy {
  int exhaustive_cap = 26;   // scan all 2^V assignments up to this many variables
  std::uint64_t seed = 1;    // hill-climbing fallback
  int restarts = 200;
  unsigned threads = 0;      // 0 = use hardware concurrency
};

struct MerminReport {
  explicit MerminReport(CardinalityVector s) : state(std::move(s)) {}

  CardinalityVector state;
  double quantum = 0.0;
  double classical_max = 0.0;
  bool exhaustive = false;
  ClassicalAssignment witness;
  bool violation = false;
  std::optional<std::uint64_t> seed;  // set when the search was randomized
  std::uint64_t evaluations = 0;
};

namespace detail {

inline ClassicalAssignment unpack_assignment(const ClassicalVariableLayout& layout,
                                             std::uint64_t assignment) {
  ClassicalAssignment a;
  a.x.resize(static_cast<std::size_t>(layout.n));
  for (int j = 1; j <= layout.n; ++j) {
    a.x[static_cast<std::size_t>(j) - 1] = (assignment >> (j - 1)) & 1 ? -1 : 1;
  }
  for (std::size_t i = 0; i < layout.subsets.size(); ++i) {
    a.c[layout.subsets[i]] =
        (assignment >> (layout.n + static_cast<int>(i))) & 1 ? -1 : 1;
  }
  return a;
}

struct SearchChunkResult {
  double best = -1e300;
  std::uint64_t witness = 0;
};

inline SearchChunkResult exhaustive_chunk(const ClassicalVariableLayout& layout,
                                          int product_sign, std::uint64_t c_lo,
                                          std::uint64_t c_hi) {
  SearchChunkResult result;
  const int n = layout.n;
  std::vector<int> cj(static_cast<std::size_t>(n));
  for (std::uint64_t cbits = c_lo; cbits < c_hi; ++cbits) {
    for (int j = 0; j < n; ++j) {
      int parity = std::popcount(cbits & layout.vertex_masks[static_cast<std::size_t>(j)]) & 1;
      if (layout.unit_level) parity ^= 1;
      cj[static_cast<std::size_t>(j)] = parity ? -1 : 1;
    }
    for (std::uint64_t xbits = 0; xbits < (std::uint64_t{1} << n); ++xbits) {
      int sum = 0;
      for (int j = 0; j < n; ++j) {
        sum += ((xbits >> j) & 1) ? -cj[static_cast<std::size_t>(j)]
                                  : cj[static_cast<std::size_t>(j)];
      }
      sum += (std::popcount(xbits) & 1) ? -product_sign : product_sign;
      const double value = static_cast<double>(sum);
      const std::uint64_t assignment = (cbits << n) | xbits;
      if (value > result.best || (value == result.best && assignment < result.witness)) {
        result.best = value;
        result.witness = assignment;
      }
    }
  }
  return result;
}

}  // namespace detail

/// Maximum of the classical M over assignments. Exhaustive over all 2^V
/// assignments when the variable count V fits the policy cap; otherwise a
/// seeded multi-restart single-flip hill climb, flagged as non-exhaustive.
/// The returned witness is deterministic for fixed inputs and seed: ties
/// resolve to the numerically smallest assignment.
inline MerminReport classical_max(const CardinalityVector& k,
                                  const MerminSearchPolicy& policy = {}) {
  if (classify(k) != StabilizerClass::XMinus) {
    throw DomainError("classical_max: " + k.to_string() + " is not -X-stable");
  }
  const ClassicalVariableLayout layout = classical_variable_layout(k);
  const int product_sign = detail::product_word_sign(k);
  const int v = layout.variable_count();
  MerminReport report(k);
  report.quantum = static_cast<double>(k.n()) + 1.0;

  // 62 is a hard packing limit for the assignment word, over and above the
  // runtime budget expressed by the policy cap.
  if (v <= policy.exhaustive_cap && v <= 62) {
    const std::uint64_t c_count = std::uint64_t{1} << layout.subsets.size();
    unsigned threads = policy.threads ? policy.threads : std::thread::hardware_concurrency();
    if (threads < 1) threads = 1;
    if (threads > c_count) threads = static_cast<unsigned>(c_count);
    std::vector<detail::SearchChunkResult> partial(threads);
    if (threads == 1) {
      partial[0] = detail::exhaustive_chunk(layout, product_sign, 0, c_count);
    } else {
      std::vector<std::thread> pool;
      const std::uint64_t step = (c_count + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t lo = t * step;
        const std::uint64_t hi = std::min(c_count, lo + step);
        pool.emplace_back([&, t, lo, hi] {
          partial[t] = detail::exhaustive_chunk(layout, product_sign, lo, hi);
        });
      }
      for (auto& th : pool) th.join();
    }
    detail::SearchChunkResult best = partial[0];
    for (const auto& p : partial) {
      if (p.best > best.best || (p.best == best.best && p.witness < best.witness)) best = p;
    }
    report.classical_max = best.best;
    report.exhaustive = true;
    report.witness = detail::unpack_assignment(layout, best.witness);
    report.evaluations = c_count << layout.n;
  } else {
    // Seeded hill climbing with incremental C_j updates on single flips.
    std::mt19937_64 rng(policy.seed);
    double best = -1e300;
    std::vector<int> best_x;
    std::vector<int> best_c;
    std::uint64_t evaluations = 0;
    const std::size_t num_c = layout.subsets.size();
    for (int restart = 0; restart < policy.restarts; ++restart) {
      std::vector<int> x(static_cast<std::size_t>(layout.n));
      std::vector<int> cvals(num_c);
      for (auto& xv : x) xv = (rng() & 1) ? -1 : 1;
      for (auto& cv : cvals) cv = (rng() & 1) ? -1 : 1;
      std::vector<int> cj(static_cast<std::size_t>(layout.n));
      for (int j = 1; j <= layout.n; ++j) {
        int prod = layout.unit_level ? -1 : 1;
        for (std::size_t i = 0; i < num_c; ++i) {
          if (layout.affects(i, j)) prod *= cvals[i];
        }
        cj[static_cast<std::size_t>(j) - 1] = prod;
      }
      auto value_of = [&] {
        int sum = 0;
        int xprod = 1;
        for (int j = 0; j < layout.n; ++j) {
          sum += x[static_cast<std::size_t>(j)] * cj[static_cast<std::size_t>(j)];
          xprod *= x[static_cast<std::size_t>(j)];
        }
        return static_cast<double>(sum + product_sign * xprod);
      };
      double current = value_of();
      ++evaluations;
      bool improved = true;
      while (improved) {
        improved = false;
        for (int j = 0; j < layout.n && !improved; ++j) {
          x[static_cast<std::size_t>(j)] = -x[static_cast<std::size_t>(j)];
          const double candidate = value_of();
          ++evaluations;
          if (candidate > current) {
            current = candidate;
            improved = true;
          } else {
            x[static_cast<std::size_t>(j)] = -x[static_cast<std::size_t>(j)];
          }
        }
        for (std::size_t i = 0; i < num_c && !improved; ++i) {
          cvals[i] = -cvals[i];
          for (int j = 1; j <= layout.n; ++j) {
            if (layout.affects(i, j)) cj[static_cast<std::size_t>(j) - 1] *= -1;
          }
          const double candidate = value_of();
          ++evaluations;
          if (candidate > current) {
            current = candidate;
            improved = true;
          } else {
            cvals[i] = -cvals[i];
            for (int j = 1; j <= layout.n; ++j) {
              if (layout.affects(i, j)) cj[static_cast<std::size_t>(j) - 1] *= -1;
            }
          }
        }
      }
      if (current > best ||
          (current == best && std::pair(x, cvals) < std::pair(best_x, best_c))) {
        best = current;
        best_x = x;
        best_c = cvals;
      }
    }
    report.classical_max = best;
    report.exhaustive = false;
    report.witness.x = best_x;
    for (std::size_t i = 0; i < num_c; ++i) report.witness.c[layout.subsets[i]] = best_c[i];
    report.seed = policy.seed;
    report.evaluations = evaluations;
  }
  report.violation = report.quantum > report.classical_max + 1e-9;
  return report;
}

/// Builds the chain from a single-level -X-stable start to the first
/// two-level -X-stable state: step down once, prepend the cardinality-1
/// level, then step up until the class flips back to -X. The endpoint
/// satisfies the parity condition (n - m_j + 1 even for both levels) that
/// guarantees a Mermin violation.
inline std::vector<CardinalityVector> build_two_level_family(const CardinalityVector& start) {
  if (start.levels() != 1 || classify(start) != StabilizerClass::XMinus) {
    throw DomainError("build_two_level_family: start must be single-level and -X-stable");
  }
  if (start.m().front() < 3) {
    throw DomainError("build_two_level_family: start level must be >= 3");
  }
  std::vector<CardinalityVector> chain;
  CardinalityVector below = down(start);
  if (classify(below) != StabilizerClass::XPlus) {
    throw ConsistencyError("build_two_level_family: descent of " + start.to_string() +
                           " is not X-stable");
  }
  chain.push_back(below);
  CardinalityVector current = prepend_unit(below);
  if (classify(current) != StabilizerClass::XPlus) {
    throw ConsistencyError("build_two_level_family: unit-augmented state is not X-stable");
  }
  chain.push_back(current);
  for (int step = 0; step < 64; ++step) {
    current = up(current, false);
    chain.push_back(current);
    const StabilizerClass c = classify(current);
    if (c == StabilizerClass::XMinus) {
      for (int level : current.m()) {
        if ((current.n() - level + 1) % 2 != 0) {
          throw ConsistencyError("build_two_level_family: endpoint fails the parity condition");
        }
      }
      return chain;
    }
    if (c != StabilizerClass::XPlus) {
      throw ConsistencyError("build_two_level_family: chain left the X family at " +
                             current.to_string());
    }
  }
  throw ConsistencyError("build_two_level_family: no -X-stable state within 64 steps");
}

}  // namespace symmhg
