// Copyright 2026 The Topomap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "topomap/gate_circuit.h"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "topomap/errors.h"

namespace topomap {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X:
      return "X";
    case GateKind::CNOT:
      return "CNOT";
    case GateKind::CCNOT:
      return "CCNOT";
    case GateKind::CSWAP:
      return "CSWAP";
    case GateKind::SWAP:
      return "SWAP";
  }
  return "?";
}

std::size_t gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::X:
      return 1;
    case GateKind::CNOT:
    case GateKind::SWAP:
      return 2;
    case GateKind::CCNOT:
    case GateKind::CSWAP:
      return 3;
  }
  return 0;
}

std::string Gate::to_string() const {
  std::string s(gate_name(kind));
  for (std::size_t i = 0; i < arity(); ++i) {
    s += ' ';
    s += std::to_string(qubits[i]);
  }
  return s;
}

GateCircuit::GateCircuit(std::size_t qubit_count, std::vector<Gate> gates)
    : qubits_(qubit_count), gates_(std::move(gates)) {
  for (const Gate& g : gates_) {
    const std::size_t k = g.arity();
    for (std::size_t i = 0; i < k; ++i) {
      if (g.qubits[i] >= qubits_) {
        throw PreconditionError("gate '" + g.to_string() + "' addresses qubit " +
                                std::to_string(g.qubits[i]) + " of " +
                                std::to_string(qubits_));
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (g.qubits[i] == g.qubits[j]) {
          throw PreconditionError("gate '" + g.to_string() +
                                  "' repeats qubit " +
                                  std::to_string(g.qubits[i]));
        }
      }
    }
  }
}

GateCircuit GateCircuit::inverse() const {
  std::vector<Gate> rev(gates_.rbegin(), gates_.rend());
  return GateCircuit(qubits_, std::move(rev));
}

GateCircuit GateCircuit::then(const GateCircuit& next) const {
  std::vector<Gate> all = gates_;
  all.insert(all.end(), next.gates_.begin(), next.gates_.end());
  return GateCircuit(std::max(qubits_, next.qubits_), std::move(all));
}

std::string_view role_name(InputRole role) {
  switch (role) {
    case InputRole::input_map:
      return "input-map";
    case InputRole::ancilla0:
      return "ancilla-0";
    case InputRole::ancilla1:
      return "ancilla-1";
  }
  return "?";
}

std::string_view role_name(OutputRole role) {
  switch (role) {
    case OutputRole::output_map:
      return "output-map";
    case OutputRole::garbage:
      return "garbage";
    case OutputRole::passthrough:
      return "passthrough";
  }
  return "?";
}

std::size_t RegisterLayout::count(InputRole role) const {
  return static_cast<std::size_t>(std::count(inputs.begin(), inputs.end(), role));
}

std::size_t RegisterLayout::count(OutputRole role) const {
  return static_cast<std::size_t>(std::count(outputs.begin(), outputs.end(), role));
}

std::vector<std::size_t> RegisterLayout::qubits_with(InputRole role) const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < inputs.size(); ++q) {
    if (inputs[q] == role) out.push_back(q);
  }
  return out;
}

std::vector<std::size_t> RegisterLayout::output_qubits() const {
  std::vector<std::size_t> out(count(OutputRole::output_map), 0);
  for (std::size_t q = 0; q < outputs.size(); ++q) {
    if (outputs[q] != OutputRole::output_map) continue;
    const std::size_t v = output_values[q].value();
    if (v >= out.size()) {
      throw PreconditionError("output-map ordinal " + std::to_string(v) +
                              " exceeds the number of output-map qubits");
    }
    out[v] = q;
  }
  return out;
}

void write_circuit(std::ostream& os, const GateCircuit& circuit,
                   const RegisterLayout* layout) {
  os << "qubits," << circuit.qubit_count() << "\n";
  for (const Gate& g : circuit.gates()) os << g.to_string() << "\n";
  if (layout == nullptr) return;
  os << "# arguments " << layout->arguments << "\n";
  for (std::size_t q = 0; q < layout->inputs.size(); ++q) {
    os << "# role " << q << " " << role_name(layout->inputs[q]);
    if (!layout->input_labels[q].empty()) os << " " << layout->input_labels[q];
    os << "\n";
  }
  // Output-map lines in codomain order so the ordinals survive a round trip.
  const auto carriers = layout->output_qubits();
  for (std::size_t v = 0; v < carriers.size(); ++v) {
    const std::size_t q = carriers[v];
    os << "# role " << q << " output-map " << layout->output_labels[q] << "\n";
  }
  for (std::size_t q = 0; q < layout->outputs.size(); ++q) {
    if (layout->outputs[q] == OutputRole::output_map) continue;
    os << "# role " << q << " " << role_name(layout->outputs[q]) << "\n";
  }
}

namespace {

std::uint32_t parse_u32(std::string_view s, std::size_t line_no) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad integer '" +
                     std::string(s) + "'");
  }
  return v;
}

std::optional<GateKind> parse_kind(std::string_view s) {
  for (GateKind k : {GateKind::X, GateKind::CNOT, GateKind::CCNOT,
                     GateKind::CSWAP, GateKind::SWAP}) {
    if (gate_name(k) == s) return k;
  }
  return std::nullopt;
}

}  // namespace

ParsedCircuit read_circuit(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> qubits;
  std::vector<Gate> gates;
  RegisterLayout layout;
  bool any_layout = false;
  std::size_t next_value = 0;

  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!qubits) {
      if (line.rfind("qubits,", 0) != 0) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected header 'qubits,<q>'");
      }
      qubits = parse_u32(std::string_view(line).substr(7), line_no);
      layout.inputs.assign(*qubits, InputRole::input_map);
      layout.input_labels.assign(*qubits, "");
      layout.outputs.assign(*qubits, OutputRole::garbage);
      layout.output_values.assign(*qubits, std::nullopt);
      layout.output_labels.assign(*qubits, "");
      continue;
    }
    std::istringstream ss(line);
    std::string word;
    ss >> word;
    if (word == "#") {
      std::string key;
      ss >> key;
      if (key == "arguments") {
        std::string n;
        ss >> n;
        layout.arguments = parse_u32(n, line_no);
        any_layout = true;
      } else if (key == "role") {
        std::string idx, role, label;
        ss >> idx >> role;
        std::getline(ss >> std::ws, label);
        const std::size_t q = parse_u32(idx, line_no);
        if (q >= *qubits) {
          throw ParseError("line " + std::to_string(line_no) +
                           ": role for qubit outside the register");
        }
        any_layout = true;
        if (role == "input-map") {
          layout.inputs[q] = InputRole::input_map;
          layout.input_labels[q] = label;
        } else if (role == "ancilla-0") {
          layout.inputs[q] = InputRole::ancilla0;
        } else if (role == "ancilla-1") {
          layout.inputs[q] = InputRole::ancilla1;
        } else if (role == "output-map") {
          layout.outputs[q] = OutputRole::output_map;
          layout.output_values[q] = next_value++;
          layout.output_labels[q] = label;
        } else if (role == "garbage") {
          layout.outputs[q] = OutputRole::garbage;
        } else if (role == "passthrough") {
          layout.outputs[q] = OutputRole::passthrough;
        } else {
          throw ParseError("line " + std::to_string(line_no) +
                           ": unknown role '" + role + "'");
        }
      }
      continue;
    }
    const auto kind = parse_kind(word);
    if (!kind) {
      throw ParseError("line " + std::to_string(line_no) + ": unknown gate '" +
                       word + "'");
    }
    Gate g{*kind, {0, 0, 0}};
    for (std::size_t i = 0; i < g.arity(); ++i) {
      std::string operand;
      if (!(ss >> operand)) {
        throw ParseError("line " + std::to_string(line_no) + ": gate " + word +
                         " needs " + std::to_string(g.arity()) + " operands");
      }
      g.qubits[i] = parse_u32(operand, line_no);
    }
    std::string extra;
    if (ss >> extra) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": trailing operand '" + extra + "'");
    }
    gates.push_back(g);
  }
  if (!qubits) throw ParseError("circuit file has no 'qubits' header");
  ParsedCircuit out;
  try {
    out.circuit = GateCircuit(*qubits, std::move(gates));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  if (any_layout) out.layout = std::move(layout);
  return out;
}

}  // namespace topomap
