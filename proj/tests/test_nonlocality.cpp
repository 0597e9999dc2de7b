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

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "symmhg/json_io.hpp"
#include "symmhg/nonlocality.hpp"

using namespace symmhg;

namespace {

CardinalityVector kv(int n, std::vector<int> m) { return CardinalityVector(n, std::move(m)); }

/// Dense product of all generators applied to one basis column.
StateVector dense_generator_product(const CardinalityVector& k, std::size_t index) {
  StateVector col;
  col.n = k.n();
  col.amp.assign(std::size_t{1} << k.n(), Complex{0.0, 0.0});
  col.amp[index] = Complex{1.0, 0.0};
  for (int j = 1; j <= k.n(); ++j) col = g_operator_apply_symmetric(k, j, col);
  return col;
}

std::uint32_t subset_mask(int n, std::initializer_list<int> vertices) {
  std::uint32_t mask = 0;
  for (int v : vertices) mask |= Hypergraph::vertex_bit(n, v);
  return mask;
}

}  // namespace

TEST_CASE("collapsed generator product on reference states") {
  CHECK(product_of_g(kv(6, {3})) == PauliWord::uniform(6, Pauli::X));
  CHECK(product_of_g(kv(7, {4})) == PauliWord::uniform(7, Pauli::X, 2));
  CHECK(product_of_g(kv(4, {3})) == PauliWord::uniform(4, Pauli::Y));
  CHECK_THROWS_AS(product_of_g(kv(3, {3})), DomainError);
}

TEST_CASE("collapsed product equals the dense generator product") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& k : oracles::all_states(n)) {
      if (classify(k) == StabilizerClass::None) continue;
      const PauliWord word = product_of_g(k);
      for (std::size_t idx = 0; idx < (std::size_t{1} << n); ++idx) {
        StateVector expected;
        expected.n = n;
        expected.amp.assign(std::size_t{1} << n, Complex{0.0, 0.0});
        expected.amp[idx] = Complex{1.0, 0.0};
        expected = apply_pauli(word, expected);
        REQUIRE(norm_distance(dense_generator_product(k, idx), expected) < 1e-12);
      }
    }
  }
}

TEST_CASE("quantum value is n + 1") {
  CHECK(quantum_value(kv(3, {2})) == Catch::Approx(4.0).margin(1e-10));
  CHECK(quantum_value(kv(5, {3, 4})) == Catch::Approx(6.0).margin(1e-10));
  CHECK(quantum_value(kv(7, {4})) == Catch::Approx(8.0).margin(1e-10));
  CHECK_THROWS_AS(quantum_value(kv(6, {3})), DomainError);  // X-stable, not -X
}

TEST_CASE("classical value of chosen assignments") {
  const auto k = kv(5, {3, 4});
  const auto layout = classical_variable_layout(k);
  REQUIRE(layout.variable_count() == 25);

  ClassicalAssignment all_ones;
  all_ones.x.assign(5, 1);
  for (std::uint32_t s : layout.subsets) all_ones.c[s] = 1;
  CHECK(classical_value(k, all_ones) == Catch::Approx(4.0));  // n - 1

  // The counterexample assignment: -1 on the pair {1,2} and on X_3..X_5
  // reaches n + 1 classically, so this state shows no violation.
  ClassicalAssignment witness = all_ones;
  witness.c[subset_mask(5, {1, 2})] = -1;
  witness.x = {1, 1, -1, -1, -1};
  CHECK(classical_value(k, witness) == Catch::Approx(6.0));

  ClassicalAssignment wrong = all_ones;
  wrong.c.erase(subset_mask(5, {1, 2}));
  CHECK_THROWS_AS(classical_value(k, wrong), DomainError);
  ClassicalAssignment bad_value = all_ones;
  bad_value.x[0] = 0;
  CHECK_THROWS_AS(classical_value(k, bad_value), DomainError);
}

TEST_CASE("the product term is blind to a global x flip when n is even") {
  const auto k = kv(6, {3});  // X-stable, even n
  const auto layout = classical_variable_layout(k);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    ClassicalAssignment a;
    a.x.resize(6);
    for (auto& v : a.x) v = (rng() & 1) ? 1 : -1;
    for (std::uint32_t s : layout.subsets) a.c[s] = (rng() & 1) ? 1 : -1;
    ClassicalAssignment flipped = a;
    for (auto& v : flipped.x) v = -v;
    // M(x) + M(-x) = 2 * s * prod(x): the sum term cancels, the product
    // term repeats.
    int xprod = 1;
    for (int v : a.x) xprod *= v;
    const double lhs = classical_value(k, a) + classical_value(k, flipped);
    CHECK(lhs == Catch::Approx(2.0 * xprod));
  }
}

TEST_CASE("classical maximum, exhaustively searchable states") {
  const auto report3 = classical_max(kv(3, {2}));
  CHECK(report3.exhaustive);
  CHECK(report3.classical_max == Catch::Approx(2.0));
  CHECK(report3.quantum == Catch::Approx(4.0));
  CHECK(report3.violation);
  CHECK_FALSE(report3.seed.has_value());
  CHECK(classical_value(kv(3, {2}), report3.witness) == Catch::Approx(2.0));

  const auto report7 = classical_max(kv(7, {2}));
  CHECK(report7.exhaustive);
  CHECK(report7.classical_max == Catch::Approx(6.0));
  CHECK(report7.violation);

  const auto report54 = classical_max(kv(5, {3, 4}));
  CHECK(report54.exhaustive);
  CHECK(report54.classical_max == Catch::Approx(6.0));
  CHECK_FALSE(report54.violation);
  CHECK(classical_value(kv(5, {3, 4}), report54.witness) == Catch::Approx(6.0));

  CHECK_THROWS_AS(classical_max(kv(6, {3})), DomainError);
}

TEST_CASE("exhaustive search is deterministic") {
  const auto a = classical_max(kv(3, {2}));
  const auto b = classical_max(kv(3, {2}));
  CHECK(a.witness.x == b.witness.x);
  CHECK(a.witness.c == b.witness.c);
  CHECK(a.classical_max == b.classical_max);
  // And independent of the worker split.
  MerminSearchPolicy two_threads;
  two_threads.threads = 2;
  const auto c = classical_max(kv(3, {2}), two_threads);
  CHECK(a.witness.x == c.witness.x);
  CHECK(a.witness.c == c.witness.c);
}

TEST_CASE("randomized fallback reports its seed and a reachable value") {
  MerminSearchPolicy tiny;
  tiny.exhaustive_cap = 1;  // force the randomized path
  tiny.seed = 12345;
  tiny.restarts = 40;
  const auto randomized = classical_max(kv(3, {2}), tiny);
  CHECK_FALSE(randomized.exhaustive);
  REQUIRE(randomized.seed.has_value());
  CHECK(*randomized.seed == 12345);
  CHECK(classical_value(kv(3, {2}), randomized.witness) ==
        Catch::Approx(randomized.classical_max));
  // Hill climbing can only reach values the exhaustive search dominates.
  const auto exact = classical_max(kv(3, {2}));
  CHECK(randomized.classical_max <= exact.classical_max + 1e-12);

  const auto repeat = classical_max(kv(3, {2}), tiny);
  CHECK(repeat.classical_max == randomized.classical_max);
  CHECK(repeat.witness.x == randomized.witness.x);
  CHECK(repeat.witness.c == randomized.witness.c);
}

TEST_CASE("no-violation bound holds for parity-even -X states") {
  // Every -X-stable state with all n - m_j + 1 even and a searchable
  // variable count obeys the classical bound n - 1.
  for (int n = 2; n <= 7; ++n) {
    for (const auto& k : oracles::all_states(n)) {
      if (classify(k) != StabilizerClass::XMinus) continue;
      bool parity_even = true;
      for (int level : k.m()) parity_even &= ((n - level + 1) % 2 == 0);
      if (!parity_even) continue;
      const auto layout = classical_variable_layout(k);
      if (layout.variable_count() > 26) continue;
      CAPTURE(k.to_string());
      const auto report = classical_max(k);
      REQUIRE(report.exhaustive);
      REQUIRE(report.classical_max <= n - 1 + 1e-12);
      REQUIRE(report.violation);
    }
  }
}

TEST_CASE("column-parity form of the product of C_j") {
  // prod_j C_j multiplies each gate variable once per vertex outside its
  // set, so it equals prod_S c_S^(n - |S|) times (-1)^n when a unit level
  // feeds every C_j a constant -1.
  std::mt19937_64 rng(5);
  for (const auto& k : {kv(5, {3, 4}), kv(7, {2}), kv(4, {1, 3})}) {
    const auto layout = classical_variable_layout(k);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<int> cvals(layout.subsets.size());
      for (auto& v : cvals) v = (rng() & 1) ? 1 : -1;
      int direct = 1;
      for (int j = 1; j <= k.n(); ++j) {
        int cj = layout.unit_level ? -1 : 1;
        for (std::size_t i = 0; i < layout.subsets.size(); ++i) {
          if (layout.affects(i, j)) cj *= cvals[i];
        }
        direct *= cj;
      }
      int by_parity = (layout.unit_level && (k.n() % 2 == 1)) ? -1 : 1;
      for (std::size_t i = 0; i < layout.subsets.size(); ++i) {
        const int exponent = k.n() - std::popcount(layout.subsets[i]);
        if (exponent % 2 == 1) by_parity *= cvals[i];
      }
      REQUIRE(direct == by_parity);
    }
  }
}

TEST_CASE("two-level chain construction") {
  const auto chain = build_two_level_family(kv(7, {4}));
  const std::vector<CardinalityVector> expected = {
      kv(6, {3}),  kv(6, {1, 3}), kv(7, {2, 4}),  kv(8, {3, 5}),
      kv(9, {4, 6}), kv(10, {5, 7}), kv(11, {6, 8})};
  REQUIRE(chain == expected);
  CHECK(classify(chain.back()) == StabilizerClass::XMinus);
  for (int level : chain.back().m()) {
    CHECK((chain.back().n() - level + 1) % 2 == 0);
  }

  CHECK_THROWS_AS(build_two_level_family(kv(6, {3})), DomainError);     // X-stable
  CHECK_THROWS_AS(build_two_level_family(kv(5, {3, 4})), DomainError);  // two levels
  CHECK_THROWS_AS(build_two_level_family(kv(3, {2})), DomainError);     // level too small
}

TEST_CASE("mermin report JSON shape") {
  const auto report = classical_max(kv(3, {2}));
  const Json j = to_json(report);
  CHECK(j.at("state") == "K3^2");
  CHECK(j.at("quantum") == 4.0);
  CHECK(j.at("classical_max") == 2.0);
  CHECK(j.at("exhaustive") == true);
  CHECK(j.at("violation") == true);
  CHECK(j.contains("witness"));
  CHECK_FALSE(j.contains("seed"));
  CHECK(j.at("witness").at("x").size() == 3);
  CHECK(j.at("witness").at("c").size() == 3);
}
