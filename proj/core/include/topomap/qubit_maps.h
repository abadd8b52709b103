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

#ifndef TOPOMAP_QUBIT_MAPS_H
#define TOPOMAP_QUBIT_MAPS_H

// Reversible circuits over topographic qubit maps: one qubit per grid value,
// |1> meaning "value present". Every construction uses only X, CNOT, CCNOT,
// CSWAP and SWAP, so crisp sets (computational basis states) can be replayed
// classically at any size.

#include <cstddef>
#include <cstdint>
#include <span>

#include "topomap/finite_function.h"
#include "topomap/gate_circuit.h"

namespace topomap {

/// X(q1) X(q2) CCNOT(q1, q2 -> anc). With anc = |1>, anc ends as q1 OR q2 and
/// q1, q2 hold the negated inputs.
GateCircuit or2_circuit(std::uint32_t q1, std::uint32_t q2, std::uint32_t anc);

/// Left fold of OR2: OR2(in1, in2 -> anc1), OR2(anc1, in3 -> anc2), ...
/// Needs |ancs| = |inputs| - 1, all |1>. The last ancilla carries the OR; for
/// a single input the circuit is empty.
GateCircuit orn_circuit(std::span<const std::uint32_t> inputs,
                        std::span<const std::uint32_t> ancs);

/// Qubits used by unary_map_circuit: 2 n_n + n_b + m_nr - m_n.
std::size_t unary_qubit_count(const FunctionStats& s);
/// Qubits used by binary_map_circuit: 2 n^2 + n + 2 m_nr.
std::size_t binary_qubit_count(std::size_t n, std::size_t m_nr);

/// Computes f on a topographic qubit map. Requires |domain| = |codomain|
/// (see pad_to_square).
///
/// Layout: n input-map qubits, m_nr |0> ancillae (one per non-range value),
/// n_n - m_n |1> ancillae for the OR cascades. Values with one preimage are
/// carried by the input qubit itself; non-range values by their |0> ancilla.
MapCircuit unary_map_circuit(const FiniteFunction& f);

/// CCNOT(a_j, b_k -> pair(j,k)) for all j, k. Layout: n qubits for each
/// argument, then n^2 |0> pair qubits at 2n + j n + k. Arguments pass
/// through; pair qubits are the output map with ordinal j n + k.
MapCircuit outer_product_circuit(std::size_t n);

/// Outer product followed by the unary construction over the n^2 pair map.
/// Requires the codomain to have the same size n as the argument grid.
///
/// Layout: 2n argument qubits, n^2 + m_nr |0> ancillae (pairs first, then
/// non-range values), n^2 - n + m_nr |1> ancillae.
MapCircuit binary_map_circuit(const BinaryFunction& f);

/// Routes a |1> token to map position k selected by an m-bit register
/// (qubit 0 is the most significant bit) using a tree of n - 1 CSWAPs,
/// n = 2^m. Layout: m register qubits, n - 1 |0> ancillae for map positions
/// 1..n-1, then the |1> token (map position 0).
MapCircuit demux_circuit(std::size_t bits);

/// CNOT(j -> n + j) for j < n: copies a crisp map on qubits 0..n-1 into
/// |0> qubits n..2n-1.
GateCircuit copy_crisp_map(std::size_t n);

}  // namespace topomap

#endif  // TOPOMAP_QUBIT_MAPS_H
