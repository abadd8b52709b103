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

#ifndef TOPOMAP_GATE_CIRCUIT_H
#define TOPOMAP_GATE_CIRCUIT_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace topomap {

enum class GateKind : std::uint8_t { X, CNOT, CCNOT, CSWAP, SWAP };

std::string_view gate_name(GateKind kind);
std::size_t gate_arity(GateKind kind);

/// A reversible gate. Operand order follows the text format:
///   X t | CNOT c t | CCNOT c1 c2 t | CSWAP c a b | SWAP a b
struct Gate {
  GateKind kind = GateKind::X;
  std::array<std::uint32_t, 3> qubits{};

  static Gate x(std::uint32_t t) { return {GateKind::X, {t, 0, 0}}; }
  static Gate cnot(std::uint32_t c, std::uint32_t t) {
    return {GateKind::CNOT, {c, t, 0}};
  }
  static Gate ccnot(std::uint32_t c1, std::uint32_t c2, std::uint32_t t) {
    return {GateKind::CCNOT, {c1, c2, t}};
  }
  static Gate cswap(std::uint32_t c, std::uint32_t a, std::uint32_t b) {
    return {GateKind::CSWAP, {c, a, b}};
  }
  static Gate swap(std::uint32_t a, std::uint32_t b) {
    return {GateKind::SWAP, {a, b, 0}};
  }

  std::size_t arity() const { return gate_arity(kind); }
  std::string to_string() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// An ordered list of reversible gates over `qubit_count` qubits.
///
/// Every gate permutes computational basis states and is its own inverse.
class GateCircuit {
 public:
  GateCircuit() = default;
  explicit GateCircuit(std::size_t qubit_count, std::vector<Gate> gates = {});

  std::size_t qubit_count() const { return qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Gates in reverse order.
  GateCircuit inverse() const;

  /// `this` followed by `next`; the result is as wide as the wider circuit.
  GateCircuit then(const GateCircuit& next) const;

  friend bool operator==(const GateCircuit&, const GateCircuit&) = default;

 private:
  std::size_t qubits_ = 0;
  std::vector<Gate> gates_;
};

enum class InputRole : std::uint8_t { input_map, ancilla0, ancilla1 };
enum class OutputRole : std::uint8_t { output_map, garbage, passthrough };

std::string_view role_name(InputRole role);
std::string_view role_name(OutputRole role);

/// Role of every qubit before and after a map circuit runs.
///
/// Input roles and output roles each partition the qubit range. Input-map
/// qubits come first in argument order, then the |0> ancillae, then the |1>
/// ancillae. Output roles annotate the final positions; output-map qubits
/// record the codomain ordinal (and label) they carry.
struct RegisterLayout {
  std::vector<InputRole> inputs;
  std::vector<std::string> input_labels;  // empty string for ancillae
  std::size_t arguments = 1;              // number of input maps
  std::vector<OutputRole> outputs;
  std::vector<std::optional<std::size_t>> output_values;
  std::vector<std::string> output_labels;  // empty unless output-map

  std::size_t qubit_count() const { return inputs.size(); }
  std::size_t count(InputRole role) const;
  std::size_t count(OutputRole role) const;
  /// Qubit indices with the given input role, ascending.
  std::vector<std::size_t> qubits_with(InputRole role) const;
  /// Qubit index carrying each codomain ordinal; size = number of output-map
  /// qubits, indexed by codomain ordinal.
  std::vector<std::size_t> output_qubits() const;
};

/// A circuit together with its register layout.
struct MapCircuit {
  GateCircuit circuit;
  RegisterLayout layout;
};

/// Text form: "qubits,<q>", one gate per line, then
/// "# role <index> <role> [<label>]" lines (input roles first).
void write_circuit(std::ostream& os, const GateCircuit& circuit,
                   const RegisterLayout* layout = nullptr);

struct ParsedCircuit {
  GateCircuit circuit;
  std::optional<RegisterLayout> layout;
};

ParsedCircuit read_circuit(std::istream& is);

}  // namespace topomap

#endif  // TOPOMAP_GATE_CIRCUIT_H
