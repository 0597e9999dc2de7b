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
 * Classification of symmetric hypergraph states by their uniform local
 * Pauli stabilizer. A state |K_n^m> is fixed by X^n, -X^n or Y^n exactly
 * when its weight sign vector is, respectively, a palindrome, an
 * antipalindrome, or a palindrome after twisting by (-1)^{w + n/2}; each
 * condition is a mod-2 congruence on binomial sums, checked here with
 * exact bit arithmetic. On top of the congruences sit the closed-form
 * single-level parameter families, the recursion that transfers stability
 * across the (n, m) -> (n-1, m-1) shift, enumeration, and the rank of the
 * sliding sign-vector windows used to pin down local stabilizers of
 * product form.
 */

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symmhg/cardinality.hpp"
#include "symmhg/errors.hpp"
#include "symmhg/pascal.hpp"

namespace symmhg {

enum class StabilizerClass { XPlus, XMinus, YPlus, None };

[[nodiscard]] inline std::string to_string(StabilizerClass c) {
  switch (c) {
    case StabilizerClass::XPlus: return "X";
    case StabilizerClass::XMinus: return "-X";
    case StabilizerClass::YPlus: return "Y";
    case StabilizerClass::None: return "none";
  }
  return "none";
}

/// The six candidate uniform words c * P^n whose stabilization is
/// equivalent to a sign-vector congruence. Only the first three can occur;
/// the last three are kept because ruling them out is part of the theory.
enum class StabilizerCandidate { X, MinusX, Y, MinusY, IY, MinusIY };

namespace detail {

/// Parity of C(w, m_1) + ... + C(w, m_k).
inline int level_sum_parity(const std::vector<int>& m, int w) {
  int parity = 0;
  for (int level : m) {
    parity ^= binom_mod2(static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(level));
  }
  return parity;
}

}  // namespace detail

/// Evaluates the stabilization congruence for one candidate word at every
/// weight 0 <= w <= n. The Y-family words additionally constrain the
/// parity of n (Y and -Y need n even, +-iY need n odd). The edgeless state
/// is accepted for uniformity; its empty level sums make it X-stable,
/// which matches the uniform plus state it is.
inline bool check_palindrome(const CardinalityVector& k, StabilizerCandidate which) {
  const int n = k.n();
  switch (which) {
    case StabilizerCandidate::Y:
    case StabilizerCandidate::MinusY:
      if (n % 2 != 0) return false;
      break;
    case StabilizerCandidate::IY:
    case StabilizerCandidate::MinusIY:
      if (n % 2 == 0) return false;
      break;
    default:
      break;
  }
  for (int w = 0; w <= n; ++w) {
    const int lhs = detail::level_sum_parity(k.m(), w);
    int rhs = detail::level_sum_parity(k.m(), n - w);
    switch (which) {
      case StabilizerCandidate::X:
        break;
      case StabilizerCandidate::MinusX:
        rhs ^= 1;
        break;
      case StabilizerCandidate::Y:
        rhs ^= (w & 1) ^ ((n / 2) & 1);
        break;
      case StabilizerCandidate::MinusY:
        rhs ^= (w & 1) ^ ((n / 2) & 1) ^ 1;
        break;
      case StabilizerCandidate::IY:
        rhs ^= (w & 1) ^ (((n + 1) / 2) & 1);
        break;
      case StabilizerCandidate::MinusIY:
        rhs ^= (w & 1) ^ (((n + 1) / 2) & 1) ^ 1;
        break;
    }
    if (lhs != rhs) return false;
  }
  return true;
}

/// Classifies |K_n^m> by direct evaluation of all six congruences. At most
/// one of the X / -X / Y conditions can hold and none of the -Y / +-iY
/// conditions ever hold; both facts are asserted rather than assumed.
inline StabilizerClass classify(const CardinalityVector& k) {
  const bool x = check_palindrome(k, StabilizerCandidate::X);
  const bool mx = check_palindrome(k, StabilizerCandidate::MinusX);
  const bool y = check_palindrome(k, StabilizerCandidate::Y);
  if (static_cast<int>(x) + static_cast<int>(mx) + static_cast<int>(y) > 1) {
    throw ConsistencyError("classify: two distinct uniform words stabilize " + k.to_string());
  }
  if (check_palindrome(k, StabilizerCandidate::MinusY) ||
      check_palindrome(k, StabilizerCandidate::IY) ||
      check_palindrome(k, StabilizerCandidate::MinusIY)) {
    throw ConsistencyError("classify: excluded stabilizer family matched " + k.to_string());
  }
  if (x) return StabilizerClass::XPlus;
  if (mx) return StabilizerClass::XMinus;
  if (y) return StabilizerClass::YPlus;
  return StabilizerClass::None;
}

/// Closed-form classification for a single-level state |K_n^m>:
///  - X-stable  iff 2^t <= m < 2^{t+1} and n - m + 1 is a positive
///    multiple of 2^{t+1},
///  - -X-stable iff m = 2^t and n + 1 is a positive multiple of 2^{t+1},
///  - Y-stable  iff m = 2^t + 1 and n is a positive multiple of 2^{t+1}.
inline StabilizerClass classify_base(int n, int m) {
  if (m < 1 || m > n) throw DomainError("classify_base: needs 1 <= m <= n");
  const auto block_of = [](int v) {
    int t = 0;
    while ((2 << t) <= v) ++t;  // 2^t <= v < 2^{t+1}
    return std::int64_t{2} << t;
  };
  const std::int64_t x_block = block_of(m);
  if ((n - m + 1) % x_block == 0) return StabilizerClass::XPlus;
  const bool m_pow2 = (m & (m - 1)) == 0;
  if (m_pow2 && (static_cast<std::int64_t>(n) + 1) % (std::int64_t{2} * m) == 0) {
    return StabilizerClass::XMinus;
  }
  const bool m_pred_pow2 = m >= 2 && ((m - 1) & (m - 2)) == 0;
  if (m_pred_pow2 && n % (std::int64_t{2} * (m - 1)) == 0) {
    return StabilizerClass::YPlus;
  }
  return StabilizerClass::None;
}

/// Transfer of the stabilizer class under the (n, m) -> (n-1, m-1) shift:
/// X and -X both land on X, Y lands on -X.
inline StabilizerClass going_down_predict(StabilizerClass c) {
  switch (c) {
    case StabilizerClass::XPlus: return StabilizerClass::XPlus;
    case StabilizerClass::XMinus: return StabilizerClass::XPlus;
    case StabilizerClass::YPlus: return StabilizerClass::XMinus;
    case StabilizerClass::None:
      throw DomainError("going_down_predict: undefined for unstabilized states");
  }
  throw DomainError("going_down_predict: undefined transition");
}

namespace detail {

/// Parity of C(n, m_1) + ... + C(n, m_k), i.e. of the hyperedge count.
inline int edge_count_parity(const CardinalityVector& k) {
  return level_sum_parity(k.m(), k.n());
}

}  // namespace detail

/// Recursive classification: walk the state down one qubit at a time until
/// a single level remains, classify that bottom in closed form, then come
/// back up. A state is X- or -X-stable exactly when its descendant is
/// X-stable, split by the parity of the hyperedge count; it is Y-stable
/// exactly when its descendant is -X-stable.
inline StabilizerClass classify_recursive(const CardinalityVector& k) {
  if (k.edgeless()) throw DomainError("classify_recursive: needs at least one level");
  if (k.levels() == 1) return classify_base(k.n(), k.m().front());
  const StabilizerClass below = classify_recursive(down(k));
  switch (below) {
    case StabilizerClass::XPlus:
      return detail::edge_count_parity(k) ? StabilizerClass::XMinus : StabilizerClass::XPlus;
    case StabilizerClass::XMinus:
      return StabilizerClass::YPlus;
    case StabilizerClass::YPlus:
    case StabilizerClass::None:
      return StabilizerClass::None;
  }
  return StabilizerClass::None;
}

/// Expands a stable state upward one qubit. From an X-stable state both
/// (n+1, m+1) and (n+1, (1, m+1)) remain stable: both X-stable when n is
/// odd, and exactly one of each sign when n is even, decided by the parity
/// of the lifted hyperedge count. From a -X-stable state the single lift
/// (n+1, m+1) is Y-stable.
inline std::vector<std::pair<CardinalityVector, StabilizerClass>> going_up_expand(
    const CardinalityVector& k) {
  const StabilizerClass c = classify(k);
  if (c == StabilizerClass::XMinus) {
    return {{up(k, false), StabilizerClass::YPlus}};
  }
  if (c != StabilizerClass::XPlus) {
    throw DomainError("going_up_expand: needs an X-stable or -X-stable state");
  }
  CardinalityVector plain = up(k, false);
  CardinalityVector with_unit = up(k, true);
  const int parity_plain = detail::edge_count_parity(plain);
  const int parity_unit = detail::edge_count_parity(with_unit);
  if (k.n() % 2 == 1) {
    if (parity_plain != 0 || parity_unit != 0) {
      throw ConsistencyError("going_up_expand: odd-n lift of " + k.to_string() +
                             " should keep both lifts X-stable");
    }
    return {{std::move(plain), StabilizerClass::XPlus},
            {std::move(with_unit), StabilizerClass::XPlus}};
  }
  if (parity_plain == parity_unit) {
    throw ConsistencyError("going_up_expand: even-n lift of " + k.to_string() +
                           " should split into one X and one -X state");
  }
  return {{std::move(plain),
           parity_plain ? StabilizerClass::XMinus : StabilizerClass::XPlus},
          {std::move(with_unit),
           parity_unit ? StabilizerClass::XMinus : StabilizerClass::XPlus}};
}

inline constexpr int kEnumerationCap = 20;

/// All nonempty cardinality vectors on n qubits whose class is c, in
/// lexicographic order of the level list. Brute force over the 2^n - 1
/// nonempty level subsets.
inline std::vector<CardinalityVector> enumerate_stable(int n, StabilizerClass c,
                                                       int cap = kEnumerationCap) {
  if (n < 1) throw DomainError("enumerate_stable: needs n >= 1");
  if (n > cap) {
    throw ResourceLimitError("enumerate_stable: n = " + std::to_string(n) +
                             " exceeds cap " + std::to_string(cap));
  }
  std::vector<CardinalityVector> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> m;
    for (int level = 1; level <= n; ++level) {
      if (mask & (std::uint32_t{1} << (level - 1))) m.push_back(level);
    }
    CardinalityVector k(n, std::move(m));
    if (classify(k) == c) out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end(),
            [](const CardinalityVector& a, const CardinalityVector& b) { return a.m() < b.m(); });
  return out;
}

/// Closed-form count of n-qubit X-stable states: 2^floor(n/2) - 1.
inline std::uint64_t stable_state_count(int n) {
  if (n < 1) throw DomainError("stable_state_count: needs n >= 1");
  return (std::uint64_t{1} << (n / 2)) - 1;
}

/// Exact rank of the (n-1) x 3 integer matrix whose rows are the sliding
/// windows (f_j, f_{j+1}, f_{j+2}) of the weight sign vector. Equals 3 for
/// every state with smallest level >= 2 except the three degenerate
/// families m = (n), m = (2), and m = (2, 3, ..., n).
inline int sign_window_rank(const CardinalityVector& k) {
  if (k.n() < 3) throw DomainError("sign_window_rank: needs n >= 3");
  if (k.edgeless() || k.m().front() < 2) {
    throw DomainError("sign_window_rank: needs smallest level >= 2");
  }
  const SignVector f = sign_vector(k);
  std::vector<std::array<long long, 3>> rows;
  rows.reserve(static_cast<std::size_t>(k.n()) - 1);
  for (int j = 0; j + 2 <= k.n(); ++j) {
    rows.push_back({f.f[static_cast<std::size_t>(j)], f.f[static_cast<std::size_t>(j) + 1],
                    f.f[static_cast<std::size_t>(j) + 2]});
  }
  // Fraction-free Gaussian elimination; entries stay tiny.
  int rank = 0;
  for (int col = 0; col < 3 && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
    const auto& prow = rows[static_cast<std::size_t>(rank)];
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      auto& row = rows[static_cast<std::size_t>(r)];
      const long long factor = row[static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (int c2 = 0; c2 < 3; ++c2) {
        row[static_cast<std::size_t>(c2)] =
            row[static_cast<std::size_t>(c2)] * prow[static_cast<std::size_t>(col)] -
            prow[static_cast<std::size_t>(c2)] * factor;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace symmhg
