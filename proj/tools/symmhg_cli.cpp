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

// Command-line front end. Subcommands cover classification, enumeration
// and counting, dense verification, Mermin reports, the collective-
// decoherence code, partial-trace mixtures, and reconstruction from a
// reduced first column.
//
// Exit codes: 0 success, 2 usage or malformed input, 3 resource cap
// exceeded, 4 internal consistency failure (a structural identity that
// must hold did not).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symmhg/json_io.hpp"
#include "symmhg/symmhg.hpp"

namespace {

constexpr const char* kVersion = "symmhg 0.1.0";

struct GlobalOptions {
  bool json = false;
  std::uint64_t seed = 1;
  int max_n = symmhg::kDenseCap;
  int budget = 26;
  std::string oracle = "both";
  unsigned threads = 0;
};

symmhg::StabilizerClass parse_class(const std::string& text) {
  if (text == "X" || text == "x" || text == "+X") return symmhg::StabilizerClass::XPlus;
  if (text == "-X" || text == "-x") return symmhg::StabilizerClass::XMinus;
  if (text == "Y" || text == "y" || text == "+Y") return symmhg::StabilizerClass::YPlus;
  if (text == "none") return symmhg::StabilizerClass::None;
  throw symmhg::ParseError("unknown stabilizer class '" + text + "'");
}

symmhg::Json run_classify(const std::string& state, const GlobalOptions&) {
  const auto k = symmhg::CardinalityVector::parse(state);
  const auto direct = symmhg::classify(k);
  const auto recursive = symmhg::classify_recursive(k);
  if (direct != recursive) {
    throw symmhg::ConsistencyError("direct and recursive classification disagree on " +
                                   k.to_string());
  }
  return symmhg::Json{{"class", symmhg::to_string(direct)},
                      {"recursive_class", symmhg::to_string(recursive)},
                      {"agreement", true}};
}

symmhg::Json run_enumerate(int n, const std::optional<std::string>& class_filter,
                           const GlobalOptions&) {
  using symmhg::StabilizerClass;
  auto list_json = [](const std::vector<symmhg::CardinalityVector>& states) {
    symmhg::Json out = symmhg::Json::array();
    for (const auto& k : states) out.push_back(k.to_string());
    return out;
  };
  if (class_filter) {
    const auto cls = parse_class(*class_filter);
    const auto states = symmhg::enumerate_stable(n, cls);
    return symmhg::Json{{"n", n},
                        {"class", symmhg::to_string(cls)},
                        {"count", states.size()},
                        {"states", list_json(states)}};
  }
  symmhg::Json classes;
  symmhg::Json counts;
  for (StabilizerClass cls :
       {StabilizerClass::XPlus, StabilizerClass::XMinus, StabilizerClass::YPlus}) {
    const auto states = symmhg::enumerate_stable(n, cls);
    counts[symmhg::to_string(cls)] = states.size();
    classes[symmhg::to_string(cls)] = list_json(states);
  }
  return symmhg::Json{{"n", n}, {"counts", counts}, {"classes", classes}};
}

symmhg::Json run_count(const std::string& range, const GlobalOptions&) {
  int lo = 0;
  int hi = 0;
  const auto sep = range.find("..");
  try {
    if (sep == std::string::npos) {
      lo = hi = std::stoi(range);
    } else {
      lo = std::stoi(range.substr(0, sep));
      hi = std::stoi(range.substr(sep + 2));
    }
  } catch (const std::exception&) {
    throw symmhg::ParseError("cannot parse range '" + range + "' (expected lo..hi)");
  }
  if (lo < 1 || hi < lo) throw symmhg::ParseError("empty or invalid range '" + range + "'");
  symmhg::Json rows = symmhg::Json::array();
  bool all_match = true;
  for (int n = lo; n <= hi; ++n) {
    const auto states = symmhg::enumerate_stable(n, symmhg::StabilizerClass::XPlus);
    const std::uint64_t closed = symmhg::stable_state_count(n);
    const bool match = states.size() == closed;
    all_match = all_match && match;
    rows.push_back(symmhg::Json{
        {"n", n}, {"enumerated", states.size()}, {"closed_form", closed}, {"match", match}});
  }
  return symmhg::Json{{"range", range}, {"rows", rows}, {"all_match", all_match}};
}

symmhg::Json run_verify(const std::string& state, const GlobalOptions& opts) {
  const auto k = symmhg::CardinalityVector::parse(state);
  const auto cls = symmhg::classify(k);
  symmhg::Json results{{"class", symmhg::to_string(cls)}};
  const bool want_dense = opts.oracle == "dense" || opts.oracle == "both";
  if (opts.oracle != "dense" && opts.oracle != "both" && opts.oracle != "symbolic") {
    throw symmhg::ParseError("--oracle must be dense, symbolic, or both");
  }
  if (!want_dense) return results;
  if (k.n() > opts.max_n) {
    throw symmhg::ResourceLimitError("verify: n exceeds --max-n; rerun with --oracle symbolic");
  }
  const auto psi = symmhg::build_symmetric_state(k, opts.max_n);
  const bool x = symmhg::is_stabilized(symmhg::PauliWord::uniform(k.n(), symmhg::Pauli::X), psi);
  const bool mx =
      symmhg::is_stabilized(symmhg::PauliWord::uniform(k.n(), symmhg::Pauli::X, 2), psi);
  const bool y = symmhg::is_stabilized(symmhg::PauliWord::uniform(k.n(), symmhg::Pauli::Y), psi);
  results["candidates"] = symmhg::Json{{"X", x}, {"-X", mx}, {"Y", y}};
  const bool consistent = (x == (cls == symmhg::StabilizerClass::XPlus)) &&
                          (mx == (cls == symmhg::StabilizerClass::XMinus)) &&
                          (y == (cls == symmhg::StabilizerClass::YPlus));
  if (!consistent) {
    throw symmhg::ConsistencyError("verify: dense candidate checks disagree with the " +
                                   std::string("classification of ") + k.to_string());
  }
  results["dense_agrees"] = true;
  if (k.n() <= symmhg::kSearchCap) {
    const auto words = symmhg::search_local_pauli_stabilizers(psi);
    symmhg::Json found = symmhg::Json::array();
    for (const auto& w : words) found.push_back(w.to_string());
    results["search_exhaustive"] = true;
    results["stabilizers_found"] = found;
  } else {
    results["search_exhaustive"] = false;
  }
  return results;
}

symmhg::Json run_mermin(const std::string& state, const GlobalOptions& opts) {
  const auto k = symmhg::CardinalityVector::parse(state);
  symmhg::MerminSearchPolicy policy;
  policy.exhaustive_cap = opts.budget;
  policy.seed = opts.seed;
  policy.threads = opts.threads;
  auto report = symmhg::classical_max(k, policy);
  // The reported quantum value n + 1 is not assumed: it is recomputed
  // densely and must match before the report goes out.
  const double dense_quantum = symmhg::quantum_value(k, opts.max_n);
  if (std::abs(dense_quantum - (k.n() + 1.0)) > 1e-9) {
    throw symmhg::ConsistencyError("mermin: dense quantum value is not n + 1");
  }
  symmhg::Json out = symmhg::to_json(report);
  out["quantum_dense_verified"] = true;
  return out;
}

symmhg::Json run_qec(const std::string& state, const GlobalOptions&) {
  const auto k = symmhg::CardinalityVector::parse(state);
  const auto code = symmhg::build_code(k);
  auto alpha = symmhg::alpha_matrix(code);
  const auto expected = symmhg::expected_alpha(code.stabilizer_class, k.n());
  const bool kl = symmhg::knill_laflamme_check(code);
  const bool matches = symmhg::max_abs_difference(alpha, expected) < symmhg::kStateTol;
  const auto overlaps = symmhg::code_overlap_checks(code);
  // The scalars are provably on the Gaussian-integer lattice; round away
  // float dust for the report after the raw comparison above.
  for (auto& entry : alpha.a) {
    const double re = std::round(entry.real());
    const double im = std::round(entry.imag());
    if (std::abs(entry.real() - re) < 1e-9 && std::abs(entry.imag() - im) < 1e-9) {
      entry = symmhg::Complex{re == 0.0 ? 0.0 : re, im == 0.0 ? 0.0 : im};
    }
  }
  return symmhg::Json{{"class", symmhg::to_string(code.stabilizer_class)},
                      {"knill_laflamme", kl},
                      {"alpha", symmhg::to_json(alpha)},
                      {"alpha_matches_expected", matches},
                      {"overlaps", symmhg::to_json(overlaps)}};
}

symmhg::Json run_trace(const std::string& state, int k, const GlobalOptions& opts) {
  const auto kv = symmhg::CardinalityVector::parse(state);
  const auto mix = symmhg::trace_mixture(kv, k);
  const auto column = symmhg::first_column(mix);
  symmhg::Json results{{"mixture", symmhg::to_json(mix)}, {"first_column", column}};
  const bool want_dense = opts.oracle == "dense" || opts.oracle == "both";
  if (want_dense && kv.n() <= symmhg::kDensityCap) {
    const auto psi = symmhg::build_symmetric_state(kv);
    std::vector<int> traced;
    for (int q = 1; q <= k; ++q) traced.push_back(q);
    const auto reduced = symmhg::reduced_density_matrix(psi, traced);
    const auto assembled = symmhg::mixture_density_matrix(mix);
    const double deviation = symmhg::frobenius_distance(reduced, assembled);
    if (deviation > 1e-12) {
      throw symmhg::ConsistencyError("trace: mixture disagrees with the dense partial trace");
    }
    results["dense_checked"] = true;
    results["dense_deviation"] = deviation;
  } else {
    results["dense_checked"] = false;
  }
  return results;
}

symmhg::Json run_recover(const std::string& column_json, int n, int k, const std::string& rule,
                         const GlobalOptions&) {
  std::vector<double> v;
  try {
    const auto parsed = symmhg::Json::parse(column_json);
    v = parsed.get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw symmhg::ParseError(std::string("cannot parse column JSON: ") + e.what());
  }
  symmhg::TraceWeightRule weight_rule = symmhg::kDefaultTraceRule;
  if (rule == "shifted") {
    weight_rule = symmhg::TraceWeightRule::ShiftedBinomial;
  } else if (rule != "binomial") {
    throw symmhg::ParseError("--rule must be binomial or shifted");
  }
  const auto f = symmhg::reconstruct(v, n, k, weight_rule);
  const auto recovered = symmhg::cardinalities_from_sign_vector(f);
  return symmhg::Json{{"state", recovered.to_string()}, {"f", f.f}};
}

const char* error_code(const std::exception& e) {
  if (dynamic_cast<const symmhg::ParseError*>(&e)) return "parse_error";
  if (dynamic_cast<const symmhg::InvalidInputError*>(&e)) return "invalid_input";
  if (dynamic_cast<const symmhg::DimensionError*>(&e)) return "dimension_error";
  if (dynamic_cast<const symmhg::ResourceLimitError*>(&e)) return "resource_limit";
  if (dynamic_cast<const symmhg::ConsistencyError*>(&e)) return "consistency_failure";
  if (dynamic_cast<const symmhg::DomainError*>(&e)) return "domain_error";
  return "error";
}

int error_exit_code(const std::exception& e) {
  if (dynamic_cast<const symmhg::ResourceLimitError*>(&e)) return 3;
  if (dynamic_cast<const symmhg::ConsistencyError*>(&e)) return 4;
  return 2;
}

void print_human(const symmhg::Json& report) {
  const auto& results = report.at("results");
  const auto command = report.at("command").get<std::string>();
  std::cout << command << " " << report.at("inputs").dump() << "\n";
  if (command == "count") {
    std::cout << "   n  enumerated  closed_form  match\n";
    for (const auto& row : results.at("rows")) {
      std::printf("%4d  %10llu  %11llu  %s\n", row.at("n").get<int>(),
                  static_cast<unsigned long long>(row.at("enumerated").get<std::uint64_t>()),
                  static_cast<unsigned long long>(row.at("closed_form").get<std::uint64_t>()),
                  row.at("match").get<bool>() ? "yes" : "NO");
    }
    std::cout << (results.at("all_match").get<bool>() ? "all counts match\n"
                                                      : "COUNT MISMATCH\n");
  } else if (command == "enumerate" && results.contains("classes")) {
    for (const auto& [cls, states] : results.at("classes").items()) {
      std::cout << cls << " (" << states.size() << "):";
      for (const auto& s : states) std::cout << " " << s.get<std::string>();
      std::cout << "\n";
    }
  } else if (command == "enumerate") {
    std::cout << results.at("class").get<std::string>() << " ("
              << results.at("count").get<std::size_t>() << "):";
    for (const auto& s : results.at("states")) std::cout << " " << s.get<std::string>();
    std::cout << "\n";
  } else {
    std::cout << results.dump(2) << "\n";
  }
  std::cout << "elapsed: " << report.at("timing_ms").get<double>() << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local Pauli stabilizers of symmetric hypergraph states"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();  // accept the global flags after the subcommand too

  GlobalOptions opts;
  app.add_flag("--json", opts.json, "machine-readable output (byte-stable for fixed inputs)");
  app.add_option("--seed", opts.seed, "seed for randomized search");
  app.add_option("--max-n", opts.max_n, "dense statevector cap");
  app.add_option("--budget", opts.budget, "max variable count for exhaustive Mermin search");
  app.add_option("--oracle", opts.oracle, "dense | symbolic | both (default both)");
  app.add_option("--threads", opts.threads, "worker threads (0 = hardware)");

  std::string state;
  std::string range;
  std::string column_json;
  std::string rule = "binomial";
  std::optional<std::string> class_filter;
  int n = 0;
  int k = 0;

  auto* cmd_classify = app.add_subcommand("classify", "classify a state by both routes");
  cmd_classify->add_option("state", state, "state text, e.g. K6^3")->required();

  auto* cmd_enumerate = app.add_subcommand("enumerate", "list stable states on n qubits");
  cmd_enumerate->add_option("n", n, "qubit count")->required();
  std::string filter_text;
  auto* filter_opt = cmd_enumerate->add_option("--class", filter_text, "X | -X | Y | none");

  auto* cmd_count = app.add_subcommand("count", "compare enumerated and closed-form counts");
  cmd_count->add_option("range", range, "n range, e.g. 2..9")->required();

  auto* cmd_verify = app.add_subcommand("verify", "check the classification densely");
  cmd_verify->add_option("state", state, "state text")->required();

  auto* cmd_mermin = app.add_subcommand("mermin", "quantum vs classical Mermin value");
  cmd_mermin->add_option("state", state, "state text")->required();

  auto* cmd_qec = app.add_subcommand("qec", "collective-decoherence code checks");
  cmd_qec->add_option("state", state, "state text")->required();

  auto* cmd_trace = app.add_subcommand("trace", "delete/shrink mixture of a partial trace");
  cmd_trace->add_option("state", state, "state text")->required();
  cmd_trace->add_option("k", k, "number of traced qubits")->required();

  auto* cmd_recover = app.add_subcommand("recover", "reconstruct a state from a first column");
  cmd_recover->add_option("column", column_json, "scaled first column as a JSON array")->required();
  cmd_recover->add_option("n", n, "source qubit count")->required();
  cmd_recover->add_option("k", k, "number of traced qubits")->required();
  cmd_recover->add_option("--rule", rule, "binomial (default) | shifted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (*filter_opt) class_filter = filter_text;

  symmhg::Json inputs;
  std::string command;
  symmhg::Json results;
  const auto started = std::chrono::steady_clock::now();
  try {
    if (*cmd_classify) {
      command = "classify";
      inputs = symmhg::Json{{"state", state}};
      results = run_classify(state, opts);
    } else if (*cmd_enumerate) {
      command = "enumerate";
      inputs = symmhg::Json{{"n", n}};
      if (class_filter) inputs["class"] = *class_filter;
      results = run_enumerate(n, class_filter, opts);
    } else if (*cmd_count) {
      command = "count";
      inputs = symmhg::Json{{"range", range}};
      results = run_count(range, opts);
    } else if (*cmd_verify) {
      command = "verify";
      inputs = symmhg::Json{{"state", state}, {"oracle", opts.oracle}, {"max_n", opts.max_n}};
      results = run_verify(state, opts);
    } else if (*cmd_mermin) {
      command = "mermin";
      inputs = symmhg::Json{{"state", state}, {"budget", opts.budget}, {"seed", opts.seed}};
      results = run_mermin(state, opts);
    } else if (*cmd_qec) {
      command = "qec";
      inputs = symmhg::Json{{"state", state}};
      results = run_qec(state, opts);
    } else if (*cmd_trace) {
      command = "trace";
      inputs = symmhg::Json{{"state", state}, {"k", k}, {"oracle", opts.oracle}};
      results = run_trace(state, k, opts);
    } else if (*cmd_recover) {
      command = "recover";
      inputs = symmhg::Json{{"column", column_json}, {"n", n}, {"k", k}, {"rule", rule}};
      results = run_recover(column_json, n, k, rule, opts);
    }
  } catch (const std::exception& e) {
    if (opts.json) {
      symmhg::Json err{{"command", command},
                       {"inputs", inputs},
                       {"error", symmhg::Json{{"code", error_code(e)}, {"message", e.what()}}},
                       {"version", kVersion}};
      std::cout << err.dump(2) << '\n';
    } else {
      std::cerr << "error (" << error_code(e) << "): " << e.what() << '\n';
    }
    return error_exit_code(e);
  }
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();

  if (opts.json) {
    // Timing is deliberately left out: fixed inputs and seed must produce
    // byte-identical reports.
    symmhg::Json report{
        {"command", command}, {"inputs", inputs}, {"results", results}, {"version", kVersion}};
    std::cout << report.dump(2) << '\n';
  } else {
    symmhg::Json report{{"command", command},
                        {"inputs", inputs},
                        {"results", results},
                        {"timing_ms", elapsed_ms},
                        {"version", kVersion}};
    print_human(report);
  }
  return 0;
}
