#pragma once
// JSON (de)serialization for circuits, patterns, tensors, and residuals;
// Graphviz DOT export; parsers for complex literals and state strings.

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "mbqc/circuit.hpp"
#include "mbqc/graph.hpp"
#include "mbqc/pauli.hpp"
#include "mbqc/residual.hpp"
#include "mbqc/tensor.hpp"

namespace mbqc {

using Json = nlohmann::json;

inline Json complex_to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

inline Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error("expected a complex number as [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

// ---------------------------------------------------------------------------
// Patterns.

inline Json pattern_to_json(const GraphStatePattern& p) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& [id, v] : p.vertices) {
    Json jv;
    jv["id"] = id;
    jv["role"] = role_label(v.role);
    jv["a"] = complex_to_json(v.a);
    jv["b"] = complex_to_json(v.b);
    if (v.measure) {
      jv["measure"] = {{"plane", plane_label(v.measure->plane)},
                       {"angle", v.measure->angle},
                       {"order", v.measure->order}};
    } else {
      jv["measure"] = nullptr;
    }
    j["vertices"].push_back(jv);
  }
  j["edges"] = Json::array();
  for (const auto& [a, b] : p.edges) j["edges"].push_back(Json::array({a, b}));
  j["byproducts"] = Json::array();
  for (const auto& bp : p.byproducts)
    j["byproducts"].push_back({{"trigger", bp.trigger}, {"correction", bp.correction.to_text()}});
  if (!p.final_cliffords.empty()) {
    j["final_clifford"] = Json::array();
    for (const auto& g : p.final_cliffords) {
      Json jg;
      switch (g.kind) {
        case CliffordGate::Kind::H:
          jg = {{"kind", "H"}, {"target", g.q1}};
          break;
        case CliffordGate::Kind::CZ:
          jg = {{"kind", "CZ"}, {"targets", Json::array({g.q1, g.q2})}};
          break;
        case CliffordGate::Kind::CX:
          jg = {{"kind", "CX"}, {"control", g.q1}, {"target", g.q2}};
          break;
      }
      j["final_clifford"].push_back(jg);
    }
  }
  return j;
}

inline CliffordGate clifford_from_json(const Json& jg) {
  const std::string kind = jg.at("kind").get<std::string>();
  if (kind == "H") return CliffordGate::h(jg.at("target").get<int>());
  if (kind == "CZ") {
    const auto& t = jg.at("targets");
    if (!t.is_array() || t.size() != 2) throw Error("CZ expects \"targets\": [i, j]");
    return CliffordGate::cz(t[0].get<int>(), t[1].get<int>());
  }
  if (kind == "CX")
    return CliffordGate::cx(jg.at("control").get<int>(), jg.at("target").get<int>());
  throw Error("unknown clifford kind '" + kind + "' (expected H, CZ, or CX)");
}

inline GraphStatePattern pattern_from_json(const Json& j) {
  GraphStatePattern p;
  if (!j.is_object() || !j.contains("vertices"))
    throw Error("pattern JSON must be an object with a \"vertices\" array");
  for (const auto& jv : j.at("vertices")) {
    PatternVertex v;
    v.id = jv.at("id").get<int>();
    v.role = role_from_label(jv.at("role").get<std::string>());
    v.a = complex_from_json(jv.at("a"));
    v.b = complex_from_json(jv.at("b"));
    if (jv.contains("measure") && !jv.at("measure").is_null()) {
      const auto& jm = jv.at("measure");
      v.measure = MeasurementSpec{plane_from_label(jm.at("plane").get<std::string>()),
                                  jm.at("angle").get<double>(), jm.at("order").get<int>()};
    }
    p.add_vertex(v);
  }
  if (j.contains("edges"))
    for (const auto& je : j.at("edges")) {
      if (!je.is_array() || je.size() != 2) throw Error("edge entries must be [i, j]");
      p.add_edge(je[0].get<int>(), je[1].get<int>());
    }
  if (j.contains("byproducts"))
    for (const auto& jb : j.at("byproducts")) {
      Byproduct bp;
      bp.trigger = jb.at("trigger").get<int>();
      bp.correction = PauliTerm::from_text(jb.at("correction").get<std::string>());
      p.byproducts.push_back(bp);
    }
  if (j.contains("final_clifford"))
    for (const auto& jg : j.at("final_clifford"))
      p.final_cliffords.push_back(clifford_from_json(jg));
  p.validate();
  return p;
}

// ---------------------------------------------------------------------------
// Circuits.  Angles are stored under a declared convention:
//   "theta"       — the gate is cos(theta) + i sin(theta) sigma
//   "half-theta"  — the gate is cos(theta/2) + i sin(theta/2) sigma
// Internally everything uses the full angle.

inline Json circuit_to_json(const Circuit& c) {
  Json j;
  j["n"] = c.n;
  j["convention"] = "theta";
  j["gates"] = Json::array();
  for (const auto& g : c.gates)
    j["gates"].push_back({{"axis", g.axis.ops_text()}, {"theta", g.theta}});
  if (!c.cliffords.empty()) {
    j["clifford"] = Json::array();
    for (const auto& g : c.cliffords) {
      Json jg;
      switch (g.kind) {
        case CliffordGate::Kind::H:
          jg = {{"kind", "H"}, {"target", g.q1}};
          break;
        case CliffordGate::Kind::CZ:
          jg = {{"kind", "CZ"}, {"targets", Json::array({g.q1, g.q2})}};
          break;
        case CliffordGate::Kind::CX:
          jg = {{"kind", "CX"}, {"control", g.q1}, {"target", g.q2}};
          break;
      }
      j["clifford"].push_back(jg);
    }
  }
  return j;
}

inline Circuit circuit_from_json(const Json& j) {
  Circuit c;
  if (!j.is_object() || !j.contains("n"))
    throw Error("circuit JSON must be an object with \"n\"");
  c.n = j.at("n").get<int>();
  double scale = 1.0;
  if (j.contains("convention")) {
    const std::string conv = j.at("convention").get<std::string>();
    if (conv == "theta")
      scale = 1.0;
    else if (conv == "half-theta")
      scale = 0.5;
    else
      throw Error("unknown angle convention '" + conv +
                  "' (expected \"theta\" or \"half-theta\")");
  }
  if (j.contains("gates"))
    for (const auto& jg : j.at("gates")) {
      RotationGate g;
      g.axis = PauliTerm::from_text(jg.at("axis").get<std::string>());
      g.theta = scale * jg.at("theta").get<double>();
      c.gates.push_back(g);
    }
  if (j.contains("clifford"))
    for (const auto& jg : j.at("clifford")) c.cliffords.push_back(clifford_from_json(jg));
  validate_circuit(c);
  return c;
}

// ---------------------------------------------------------------------------
// Tensors.  basis "pauli" stores transfer-tensor entries (index digits
// 2·capital + lower per position, position 1 most significant); basis
// "canonical" stores the unitary-supplement entries and is mapped through
// the basis isomorphism on read.

inline Json tensor_to_json(const TransferTensor& t) {
  Json j;
  j["n"] = t.n;
  j["basis"] = "pauli";
  j["entries"] = Json::array();
  for (const auto& e : t.entries) j["entries"].push_back(complex_to_json(e));
  return j;
}

inline Json supplement_to_json(const UnitarySupplement& s) {
  Json j;
  j["n"] = s.n;
  j["basis"] = "canonical";
  j["entries"] = Json::array();
  for (const auto& e : s.entries) j["entries"].push_back(complex_to_json(e));
  return j;
}

inline TransferTensor tensor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw Error("tensor JSON must be an object with \"n\" and \"entries\"");
  const int n = j.at("n").get<int>();
  std::vector<Complex> entries;
  for (const auto& je : j.at("entries")) entries.push_back(complex_from_json(je));
  std::string basis = "pauli";
  if (j.contains("basis")) basis = j.at("basis").get<std::string>();
  if (basis == "pauli") return TransferTensor(n, std::move(entries));
  if (basis == "canonical") return m_forward(UnitarySupplement(n, std::move(entries)));
  throw Error("unknown tensor basis '" + basis + "' (expected \"pauli\" or \"canonical\")");
}

// ---------------------------------------------------------------------------
// Residuals.

inline Json residual_to_json(const Residual& r) {
  Json j = Json::array();
  for (const auto& [support, coeff] : r.terms) {
    Json entry;
    entry["zs"] = support;
    entry["coeff"] = complex_to_json(coeff);
    j.push_back(entry);
  }
  return j;
}

// ---------------------------------------------------------------------------
// DOT export.  Deterministic bytes: vertices ascending by id, edges in
// (min, max) lexicographic order.

namespace detail {

inline std::string format_angle(double a) {
  std::ostringstream os;
  os.precision(12);
  os << a;
  return os.str();
}

}  // namespace detail

inline std::string pattern_to_dot(const GraphStatePattern& p) {
  std::ostringstream os;
  os << "graph pattern {\n";
  os << "  node [style=filled];\n";
  for (const auto& [id, v] : p.vertices) {
    std::string label = std::to_string(id);
    label += "/";
    label += role_label(v.role);
    if (v.measure) {
      label += "/";
      label += plane_label(v.measure->plane);
      label += "(" + detail::format_angle(v.measure->angle) + ")";
    }
    const char* color = v.role == VertexRole::Input     ? "lightblue"
                        : v.role == VertexRole::Output  ? "palegreen"
                                                        : "khaki";
    os << "  v" << id << " [label=\"" << label << "\", fillcolor=\"" << color << "\"];\n";
  }
  for (const auto& [a, b] : p.edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Text parsers.

/// Parses a complex literal: "1", "-0.5", "i", "-i", "0.3i", "1+2i",
/// "0.6-0.8i", "1e-3+2.5e-2i".
inline Complex parse_complex(std::string text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error("empty complex literal");

  auto parse_double = [](const std::string& t) {
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      throw Error("bad numeric literal '" + t + "'");
    }
    if (used != t.size()) throw Error("bad numeric literal '" + t + "'");
    return v;
  };
  auto parse_imag_mag = [&](std::string t) {  // t ends with 'i'
    t.pop_back();
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t);
  };

  // Split at the last '+'/'-' that is not leading and not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if (s[i] != '+' && s[i] != '-') continue;
    const char prev = s[i - 1];
    if (prev == 'e' || prev == 'E') continue;
    split = i;
    break;
  }
  if (split == std::string::npos) {
    if (s.back() == 'i' || s.back() == 'I') return Complex(0.0, parse_imag_mag(s));
    return Complex(parse_double(s), 0.0);
  }
  const std::string head = s.substr(0, split), tail = s.substr(split);
  if (tail.back() == 'i' || tail.back() == 'I')
    return Complex(parse_double(head), parse_imag_mag(tail));
  if (head.back() == 'i' || head.back() == 'I')
    return Complex(parse_double(tail), parse_imag_mag(head));
  throw Error("complex literal '" + text + "' has two real parts");
}

/// Parses "a,b;a,b;…" into per-qubit coefficient pairs.
inline std::vector<std::pair<Complex, Complex>> parse_state_string(const std::string& text) {
  std::vector<std::pair<Complex, Complex>> out;
  std::stringstream ss(text);
  std::string chunk;
  while (std::getline(ss, chunk, ';')) {
    const auto comma = chunk.find(',');
    if (comma == std::string::npos || chunk.find(',', comma + 1) != std::string::npos)
      throw Error("state entry '" + chunk + "' must be two comma-separated literals");
    out.emplace_back(parse_complex(chunk.substr(0, comma)),
                     parse_complex(chunk.substr(comma + 1)));
  }
  if (out.empty()) throw Error("empty state string");
  return out;
}

/// Parses "q:alpha,beta;q:alpha,beta;…" into measurement generators.
inline std::vector<MeasGenerator> parse_measure_string(const std::string& text) {
  std::vector<MeasGenerator> out;
  std::stringstream ss(text);
  std::string chunk;
  while (std::getline(ss, chunk, ';')) {
    const auto colon = chunk.find(':');
    if (colon == std::string::npos)
      throw Error("measurement entry '" + chunk + "' must look like q:alpha,beta");
    int qubit;
    try {
      std::size_t used = 0;
      qubit = std::stoi(chunk.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw Error("bad vertex id in measurement entry '" + chunk + "'");
    }
    const std::string rest = chunk.substr(colon + 1);
    const auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw Error("measurement entry '" + chunk + "' must give two coefficients");
    out.push_back({qubit, parse_complex(rest.substr(0, comma)),
                   parse_complex(rest.substr(comma + 1))});
  }
  if (out.empty()) throw Error("empty measurement string");
  return out;
}

// ---------------------------------------------------------------------------
// File helpers.

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace mbqc
