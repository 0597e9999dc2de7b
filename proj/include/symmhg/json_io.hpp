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
 * JSON forms of the public types. Field order is fixed so that identical
 * inputs produce byte-identical reports.
 */

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "symmhg/cardinality.hpp"
#include "symmhg/classify.hpp"
#include "symmhg/nonlocality.hpp"
#include "symmhg/qec.hpp"
#include "symmhg/recovery.hpp"
#include "symmhg/statevec.hpp"

namespace symmhg {

using Json = nlohmann::ordered_json;

inline Json to_json(const CardinalityVector& k) {
  return Json{{"n", k.n()}, {"m", k.m()}};
}

inline CardinalityVector cardinality_from_json(const Json& j) {
  try {
    return CardinalityVector(j.at("n").get<int>(), j.at("m").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cardinality vector JSON: ") + e.what());
  }
}

inline Json to_json(const SignVector& f) {
  return Json{{"n", f.n}, {"f", f.f}};
}

inline Json to_json(const Hypergraph& g) {
  return Json{{"n", g.n}, {"edges", g.vertex_lists()}};
}

inline Hypergraph hypergraph_from_json(const Json& j) {
  try {
    return Hypergraph::from_vertex_lists(j.at("n").get<int>(),
                                         j.at("edges").get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("hypergraph JSON: ") + e.what());
  }
}

inline Json to_json(const PauliWord& w) {
  static constexpr const char* kPhases[4] = {"+1", "+i", "-1", "-i"};
  std::string letters;
  for (Pauli p : w.letters) letters += to_char(p);
  return Json{{"phase", kPhases[((w.phase_power % 4) + 4) % 4]}, {"letters", letters}};
}

inline Json to_json(const Complex& z) {
  return Json::array({z.real(), z.imag()});
}

inline Json to_json(const AlphaMatrix& alpha) {
  Json rows = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 4; ++j) row.push_back(to_json(alpha.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const CodeOverlapReport& r) {
  return Json{{"shared_stabilizer", r.shared_stabilizer},
              {"logicals_orthogonal", r.logicals_orthogonal},
              {"z_cross_zero", r.z_cross_zero},
              {"z_diagonal_zero", r.z_diagonal_zero},
              {"all", r.all()}};
}

inline Json to_json(int n, const ClassicalAssignment& a) {
  Json c = Json::array();
  for (const auto& [mask, value] : a.c) {
    std::vector<int> set;
    for (int j = 1; j <= n; ++j) {
      if (mask & Hypergraph::vertex_bit(n, j)) set.push_back(j);
    }
    c.push_back(Json{{"set", set}, {"value", value}});
  }
  return Json{{"x", a.x}, {"c", std::move(c)}};
}

inline Json to_json(const MerminReport& r) {
  Json j{{"state", r.state.to_string()},
         {"quantum", r.quantum},
         {"classical_max", r.classical_max},
         {"exhaustive", r.exhaustive},
         {"witness", to_json(r.state.n(), r.witness)},
         {"violation", r.violation},
         {"evaluations", r.evaluations}};
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

inline Json to_json(const SymmetricMixture& mix) {
  Json terms = Json::array();
  for (const MixtureTerm& t : mix.terms) {
    terms.push_back(Json{{"weight_num", t.weight_num},
                         {"weight_den", std::uint64_t{1} << mix.traced},
                         {"deletions", t.deletions},
                         {"state", t.graph.to_string()},
                         {"sign_flag", t.sign_flag},
                         {"f", t.component.f}});
  }
  return Json{{"n", mix.n}, {"traced", mix.traced}, {"terms", std::move(terms)}};
}

}  // namespace symmhg
