#pragma once
// Command-line front end.  run_cli() is the whole program (testable against
// string streams); tools/mbqc_main.cpp is a thin wrapper around it.
//
// Subcommands:
//   compile    circuit JSON -> pattern JSON or DOT
//   resources  closed-form qubit counts for the benchmark families
//   verify     dense-simulate pattern vs circuit, print the fidelity
//   residual   measure a subset of a pattern symbolically, print the result
//   export     pattern JSON -> DOT file
// Exit codes: 0 success, 1 verification/crosscheck failure, 2 usage or
// domain errors.  Errors go to stderr as single-line JSON {"error": ...}.

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "mbqc/circuit.hpp"
#include "mbqc/compiler.hpp"
#include "mbqc/graph.hpp"
#include "mbqc/io.hpp"
#include "mbqc/pauli.hpp"
#include "mbqc/residual.hpp"
#include "mbqc/simulator.hpp"
#include "mbqc/tensor.hpp"

namespace mbqc {

namespace detail {

inline std::vector<std::pair<Complex, Complex>> default_or_parsed_state(
    const std::string& text, int n) {
  if (text.empty())
    return std::vector<std::pair<Complex, Complex>>(std::size_t(n),
                                                    {Complex(1.0), Complex(0.0)});
  auto pairs = parse_state_string(text);
  if (int(pairs.size()) != n)
    throw Error("state string has " + std::to_string(pairs.size()) +
                " qubits, expected " + std::to_string(n));
  return pairs;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"measurement-pattern compiler, resource accountant, and verifier"};
  app.require_subcommand(1);

  // ---- compile ----------------------------------------------------------
  auto* cmd_compile =
      app.add_subcommand("compile", "compile a rotation circuit into a measurement pattern");
  std::string co_input, co_state, co_gauge = "fully-symmetric", co_emit = "json", co_out;
  bool co_json = false;
  cmd_compile->add_option("--input", co_input, "circuit JSON file")->required();
  cmd_compile->add_option("--state", co_state,
                          "input coefficients \"a,b;a,b;...\" (default |0...0>)");
  cmd_compile->add_option("--gauge", co_gauge, "compilation gauge")
      ->check(CLI::IsMember({"fully-symmetric", "clifford"}));
  cmd_compile->add_option("--emit", co_emit, "output format")
      ->check(CLI::IsMember({"json", "dot"}));
  cmd_compile->add_option("--out", co_out, "write output to this file instead of stdout");
  cmd_compile->add_flag("--json", co_json, "emit a JSON envelope with summary fields");

  // ---- resources --------------------------------------------------------
  auto* cmd_res = app.add_subcommand("resources", "closed-form physical qubit counts");
  std::string re_algo, re_method = "mcalculus";
  long long re_n = 0, re_p = 1, re_ops = 0;
  bool re_json = false;
  cmd_res->add_option("--algo", re_algo, "circuit family")
      ->required()
      ->check(CLI::IsMember({"qft", "qaoa-cyclic", "qaoa-complete", "generic"}));
  cmd_res->add_option("--n", re_n, "logical qubit count")->required();
  cmd_res->add_option("--p", re_p, "round count (QAOA families)");
  cmd_res->add_option("--ops", re_ops, "rotation count (generic family)");
  cmd_res->add_option("--method", re_method, "accounting method")
      ->check(CLI::IsMember({"mcalculus", "fully-symmetric"}));
  cmd_res->add_flag("--json", re_json, "emit the full report as JSON");

  // ---- verify ------------------------------------------------------------
  auto* cmd_verify =
      app.add_subcommand("verify", "dense-simulate a pattern against its circuit");
  std::string ve_circuit, ve_pattern, ve_state, ve_mode = "postselect";
  double ve_tol = 1e-9;
  bool ve_json = false;
  cmd_verify->add_option("--circuit", ve_circuit, "circuit JSON file")->required();
  cmd_verify->add_option("--pattern", ve_pattern, "pattern JSON file")->required();
  cmd_verify->add_option("--input", ve_state,
                         "input coefficients \"a,b;a,b;...\" (default |0...0>)");
  cmd_verify->add_option("--mode", ve_mode, "outcome handling")
      ->check(CLI::IsMember({"postselect", "byproduct"}));
  cmd_verify->add_option("--tol", ve_tol, "fidelity tolerance (pass if >= 1 - tol)");
  cmd_verify->add_flag("--json", ve_json, "emit the full report as JSON");

  // ---- residual ----------------------------------------------------------
  auto* cmd_residual =
      app.add_subcommand("residual", "measure pattern vertices symbolically");
  std::string rs_graph, rs_measure;
  bool rs_json = false;
  cmd_residual->add_option("--graph", rs_graph, "pattern JSON file")->required();
  cmd_residual
      ->add_option("--measure", rs_measure, "measurements \"q:alpha,beta;...\"")
      ->required();
  cmd_residual->add_flag("--json", rs_json, "include the crosscheck verdict");

  // ---- export ------------------------------------------------------------
  auto* cmd_export = app.add_subcommand("export", "render a pattern as Graphviz DOT");
  std::string ex_pattern, ex_out;
  bool ex_json = false;
  cmd_export->add_option("--pattern", ex_pattern, "pattern JSON file")->required();
  cmd_export->add_option("--out", ex_out, "write DOT to this file instead of stdout");
  cmd_export->add_flag("--json", ex_json, "report the written file as JSON");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    err << Json{{"error", std::string(e.what())}}.dump() << "\n";
    return 2;
  }

  try {
    if (cmd_compile->parsed()) {
      const Circuit circuit = circuit_from_json(read_json_file(co_input));
      const auto state = detail::default_or_parsed_state(co_state, circuit.n);
      GraphStatePattern pattern;
      if (co_gauge == "clifford") {
        const bool shape_ok = circuit.n == 1 && circuit.gates.size() == 1 &&
                              circuit.cliffords.empty() &&
                              circuit.gates[0].axis.ops.size() == 1 &&
                              circuit.gates[0].axis.ops.count(1) == 1 &&
                              circuit.gates[0].axis.ops.at(1) == 1;
        if (!shape_ok)
          throw Error("--gauge clifford supports exactly one single-qubit X rotation");
        pattern = compile_clifford_gauge_rx(-2.0 * circuit.gates[0].theta, state[0]);
      } else {
        pattern = compile(circuit, state);
      }
      std::string payload;
      if (co_json) {
        Json env;
        env["vertices"] = pattern.vertices.size();
        env["edges"] = pattern.edges.size();
        env["gauge"] = co_gauge;
        if (co_emit == "dot")
          env["dot"] = pattern_to_dot(pattern);
        else
          env["pattern"] = pattern_to_json(pattern);
        payload = env.dump() + "\n";
      } else if (co_emit == "dot") {
        payload = pattern_to_dot(pattern);
      } else {
        payload = pattern_to_json(pattern).dump(2) + "\n";
      }
      if (co_out.empty())
        out << payload;
      else
        write_text_file(co_out, payload);
      return 0;
    }

    if (cmd_res->parsed()) {
      ResourceAlgo algo = ResourceAlgo::Generic;
      if (re_algo == "qft") algo = ResourceAlgo::QFT;
      else if (re_algo == "qaoa-cyclic") algo = ResourceAlgo::QAOACyclic;
      else if (re_algo == "qaoa-complete") algo = ResourceAlgo::QAOAComplete;
      const ResourceMethod method = re_method == "mcalculus"
                                        ? ResourceMethod::MCalculus
                                        : ResourceMethod::FullySymmetric;
      const ResourceReport rep = count_resources(algo, re_n, re_p, method, re_ops);
      if (re_json) {
        Json j;
        j["algo"] = algo_label(rep.algo);
        j["method"] = method_label(rep.method);
        j["n"] = rep.n;
        j["p"] = rep.p;
        j["qubit_count"] = rep.qubit_count;
        j["formula"] = rep.formula;
        if (rep.table_variant) j["table_variant"] = *rep.table_variant;
        if (!rep.notes.empty()) j["notes"] = rep.notes;
        out << j.dump() << "\n";
      } else {
        out << rep.qubit_count << "\n";
      }
      return 0;
    }

    if (cmd_verify->parsed()) {
      const Circuit circuit = circuit_from_json(read_json_file(ve_circuit));
      const GraphStatePattern pattern = pattern_from_json(read_json_file(ve_pattern));
      const auto state = detail::default_or_parsed_state(ve_state, circuit.n);
      for (const auto& [a, b] : state)
        if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-9)
          throw Error("input coefficients are not normalized");

      const StateVector circuit_out = apply_circuit(product_state(state), circuit);

      int input_count = 0;
      for (const auto& [id, v] : pattern.vertices)
        if (v.role == VertexRole::Input) ++input_count;
      std::optional<std::vector<std::pair<Complex, Complex>>> override_state;
      if (input_count > 0) {
        if (input_count != circuit.n)
          throw Error("pattern has " + std::to_string(input_count) +
                      " input vertices but the circuit has " + std::to_string(circuit.n) +
                      " qubits");
        override_state = state;
      }
      const RunMode mode =
          ve_mode == "byproduct" ? RunMode::Byproduct : RunMode::Postselect0;
      const RunResult result = run_pattern(prepare(pattern, override_state), pattern, mode);

      double fid = fidelity_up_to_phase(circuit_out, result.output);
      bool prob_ok = true;
      if (mode == RunMode::Byproduct) {
        for (const auto& br : result.record.branches)
          if (br.probability > 1e-12) fid = std::min(fid, std::abs(br.overlap_ref));
        prob_ok = std::abs(result.record.total_probability - 1.0) <= 1e-9;
      }
      const bool pass = prob_ok && fid >= 1.0 - ve_tol;
      if (ve_json) {
        Json j;
        j["fidelity"] = fid;
        j["pass"] = pass;
        j["mode"] = ve_mode;
        if (mode == RunMode::Byproduct) {
          j["total_probability"] = result.record.total_probability;
          j["branches"] = result.record.branches.size();
        }
        out << j.dump() << "\n";
      } else {
        out << std::setprecision(15) << fid << "\n";
      }
      return pass ? 0 : 1;
    }

    if (cmd_residual->parsed()) {
      const GraphStatePattern pattern = pattern_from_json(read_json_file(rs_graph));
      const auto gens = parse_measure_string(rs_measure);
      const Residual by_recursion = fold_measurements(pattern, gens);
      std::vector<int> measured;
      for (const auto& g : gens) measured.push_back(g.qubit);
      const Residual by_rules = residual_by_rules(pattern, measured, gens);
      const bool match = residuals_match(by_recursion, by_rules, 1e-12);
      if (rs_json) {
        Json j;
        j["residual"] = residual_to_json(by_recursion);
        j["crosscheck"] = match;
        out << j.dump() << "\n";
      } else {
        out << residual_to_json(by_recursion).dump(2) << "\n";
      }
      return match ? 0 : 1;
    }

    if (cmd_export->parsed()) {
      const GraphStatePattern pattern = pattern_from_json(read_json_file(ex_pattern));
      const std::string dot = pattern_to_dot(pattern);
      if (ex_out.empty()) {
        out << dot;
      } else {
        write_text_file(ex_out, dot);
        if (ex_json)
          out << Json{{"written", ex_out}, {"bytes", dot.size()}}.dump() << "\n";
        else
          out << ex_out << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    err << Json{{"error", std::string(e.what())}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << Json{{"error", std::string(e.what())}}.dump() << "\n";
    return 2;
  }
  err << Json{{"error", "no subcommand given"}}.dump() << "\n";
  return 2;
}

}  // namespace mbqc
