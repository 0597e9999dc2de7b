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

#include <map>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "symmhg/recovery.hpp"

using namespace symmhg;

namespace {

CardinalityVector kv(int n, std::vector<int> m) { return CardinalityVector(n, std::move(m)); }

/// Weight-grouped scaled first column straight out of a dense reduced
/// density matrix; checks on the way that same-weight entries agree.
std::vector<double> dense_first_column(const DenseMatrix& reduced, int n) {
  std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<bool> seen(v.size(), false);
  const double scale = static_cast<double>(std::size_t{1} << n);
  for (std::size_t i = 0; i < reduced.dim; ++i) {
    const auto w = static_cast<std::size_t>(std::popcount(i));
    const Complex entry = reduced.at(i, 0);
    REQUIRE(std::abs(entry.imag()) < 1e-12);
    if (!seen[w]) {
      v[w] = entry.real() * scale;
      seen[w] = true;
    } else {
      REQUIRE(std::abs(entry.real() * scale - v[w]) < 1e-12);
    }
  }
  return v;
}

std::vector<int> traced_qubits(int k) {
  std::vector<int> out;
  for (int q = 1; q <= k; ++q) out.push_back(q);
  return out;
}

}  // namespace

TEST_CASE("mixture structure") {
  const auto mix0 = trace_mixture(kv(4, {3}), 0);
  REQUIRE(mix0.terms.size() == 1);
  CHECK(mix0.terms[0].graph == kv(4, {3}));
  CHECK(mix0.terms[0].weight_num == 1);

  const auto mix1 = trace_mixture(kv(4, {3}), 1);
  REQUIRE(mix1.terms.size() == 2);
  CHECK(mix1.terms[0].graph == kv(3, {2, 3}));  // pure shrink
  CHECK(mix1.terms[1].graph == kv(3, {3}));     // pure delete
  CHECK(mix1.terms[0].weight_num == 1);
  CHECK(mix1.terms[1].weight_num == 1);

  const auto mix2 = trace_mixture(kv(6, {4}), 2);
  REQUIRE(mix2.terms.size() == 3);
  CHECK(mix2.terms[1].weight_num == 2);  // the mixed delete/shrink path

  CHECK_THROWS_AS(trace_mixture(kv(4, {3}), 4), DomainError);
  CHECK_THROWS_AS(trace_mixture(kv(4, {3}), -1), DomainError);
}

TEST_CASE("component sign vectors are shifted windows of the source") {
  for (int n = 2; n <= 12; ++n) {
    for (const auto& k : oracles::all_states(n)) {
      const auto f = sign_vector(k).f;
      for (int traced = 1; traced <= std::min(3, n - 1); ++traced) {
        const auto mix = trace_mixture(k, traced);
        for (const auto& term : mix.terms) {
          // D^j S^(k-j) keeps the window starting at offset k - j.
          const int offset = traced - term.deletions;
          auto window = sign_vector(term.graph).f;
          for (int& value : window) value *= term.sign_flag;
          CAPTURE(k.to_string(), traced, term.deletions);
          REQUIRE(window ==
                  std::vector<int>(f.begin() + offset, f.begin() + offset + mix.n + 1));
        }
      }
    }
  }
}

TEST_CASE("mixture equals the dense partial trace") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& k : oracles::all_states(n)) {
      const auto psi = build_symmetric_state(k);
      for (int traced = 1; traced <= std::min(3, n - 1); ++traced) {
        const auto reduced = reduced_density_matrix(psi, traced_qubits(traced));
        const auto assembled = mixture_density_matrix(trace_mixture(k, traced));
        CAPTURE(k.to_string(), traced);
        REQUIRE(frobenius_distance(reduced, assembled) < 1e-12);
      }
    }
  }
}

TEST_CASE("first column values") {
  const auto mix1 = trace_mixture(kv(4, {3}), 1);
  CHECK(first_column(mix1) == std::vector<double>{1.0, 1.0, 0.0, 0.0});

  const auto mix0 = trace_mixture(kv(4, {3}), 0);
  std::vector<double> f_as_doubles;
  for (int v : sign_vector(kv(4, {3})).f) f_as_doubles.push_back(v);
  CHECK(first_column(mix0) == f_as_doubles);

  const auto mix2 = trace_mixture(kv(4, {3}), 2);
  CHECK(first_column(mix2) == std::vector<double>{1.0, 0.5, 0.0});
}

TEST_CASE("first column matches the dense reduced matrix") {
  for (int n = 2; n <= 9; ++n) {
    for (const auto& k : oracles::all_states(n)) {
      const auto psi = build_symmetric_state(k);
      for (int traced = 0; traced <= std::min(3, n - 1); ++traced) {
        const auto reduced = reduced_density_matrix(psi, traced_qubits(traced));
        const auto dense = dense_first_column(reduced, n - traced);
        const auto symbolic = first_column(trace_mixture(k, traced));
        REQUIRE(symbolic.size() == dense.size());
        for (std::size_t i = 0; i < dense.size(); ++i) {
          CAPTURE(k.to_string(), traced, i);
          REQUIRE(symbolic[i] == Catch::Approx(dense[i]).margin(1e-12));
        }
      }
    }
  }
}

TEST_CASE("the shifted-binomial weighting fails the dense oracle") {
  // This is the whole point of keeping the alternative rule around: at
  // k = 1 the correct column is (f_j + f_{j+1})/2, while the shifted rule
  // would produce (f_j + 2 f_{j+1})/2.
  const auto k = kv(4, {3});
  const auto psi = build_symmetric_state(k);
  const auto dense = dense_first_column(reduced_density_matrix(psi, {1}), 3);
  const auto mix = trace_mixture(k, 1);
  const auto good = first_column(mix, TraceWeightRule::Binomial);
  const auto bad = first_column(mix, TraceWeightRule::ShiftedBinomial);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    REQUIRE(good[i] == Catch::Approx(dense[i]).margin(1e-12));
  }
  bool differs = false;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    differs |= std::abs(bad[i] - dense[i]) > 1e-9;
  }
  CHECK(differs);
}

TEST_CASE("reconstruction from a first column") {
  const auto f = reconstruct({1.0, 1.0, 0.0, 0.0}, 4, 1);
  CHECK(f.f == std::vector<int>{1, 1, 1, -1, 1});
  CHECK(cardinalities_from_sign_vector(f) == kv(4, {3}));

  // A source with a 1-edge (here the product-like column of K_4^1)
  // contradicts the forced seeds one step into the recursion.
  CHECK_THROWS_AS(reconstruct({1.0, -1.0, 1.0, -1.0}, 4, 1), InvalidInputError);
  // A column no state produces.
  CHECK_THROWS_AS(reconstruct({1.0, 0.5, 0.0, 0.0}, 4, 1), InvalidInputError);
  // A first entry that contradicts the unit seeds outright: some hyperedge
  // of the source must have cardinality <= k.
  CHECK_THROWS_AS(reconstruct({0.5, 1.0, 0.0, 0.0}, 4, 1), DomainError);
  // The column of a graph-state source at k = 2 starts at 1 (legal
  // components do), so the contradiction only shows downstream.
  const auto k52_column = first_column(trace_mixture(kv(5, {2}), 2));
  CHECK_THROWS_AS(reconstruct(k52_column, 5, 2), InvalidInputError);
  CHECK_THROWS_AS(reconstruct({1.0, 1.0}, 3, 3), DomainError);
  CHECK_THROWS_AS(reconstruct({1.0, 1.0}, 4, 1), DimensionError);
}

TEST_CASE("round trip over all qualifying states") {
  for (int n = 2; n <= 12; ++n) {
    for (const auto& k : oracles::all_states(n)) {
      for (int traced = 1; traced <= std::min(3, n - 1); ++traced) {
        if (k.m().front() < traced + 1) continue;
        const auto column = first_column(trace_mixture(k, traced));
        const auto f = reconstruct(column, n, traced);
        CAPTURE(k.to_string(), traced);
        REQUIRE(f == sign_vector(k));
        REQUIRE(cardinalities_from_sign_vector(f) == k);
      }
    }
  }
}

TEST_CASE("reduced matrices separate qualifying states") {
  // Injectivity: among states with smallest level >= k + 1 on a fixed
  // qubit count, the scaled first columns (hence the reduced matrices)
  // never collide.
  for (int traced = 1; traced <= 3; ++traced) {
    for (int n = traced + 1; n <= 10; ++n) {
      std::map<std::vector<double>, CardinalityVector> seen;
      for (const auto& k : oracles::all_states(n)) {
        if (k.m().front() < traced + 1) continue;
        const auto column = first_column(trace_mixture(k, traced));
        const auto [it, inserted] = seen.emplace(column, k);
        CAPTURE(n, traced, k.to_string(), it->second.to_string());
        REQUIRE(inserted);
      }
    }
  }
  // Small-n spot check at the full matrix level.
  for (int n = 3; n <= 6; ++n) {
    std::vector<std::pair<CardinalityVector, DenseMatrix>> reduced;
    for (const auto& k : oracles::all_states(n)) {
      if (k.m().front() < 2) continue;
      reduced.emplace_back(k,
                           reduced_density_matrix(build_symmetric_state(k), {1}));
    }
    for (std::size_t a = 0; a < reduced.size(); ++a) {
      for (std::size_t b = a + 1; b < reduced.size(); ++b) {
        CAPTURE(reduced[a].first.to_string(), reduced[b].first.to_string());
        REQUIRE(frobenius_distance(reduced[a].second, reduced[b].second) > 1e-9);
      }
    }
  }
}
