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

#ifndef TOPOMAP_SIMULATE_H
#define TOPOMAP_SIMULATE_H

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "topomap/amplitude_vector.h"
#include "topomap/gate_circuit.h"

namespace topomap {

/// A computational basis state; character/bit i belongs to qubit i.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t size) : bits_(size, 0) {}
  /// Accepts '0'/'1' characters only.
  static BitString parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }
  std::size_t popcount() const;
  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Fuzzy (or crisp) membership per map location; qubit j is prepared as
/// sqrt(1 - m_j^2)|0> + m_j|1>.
class MembershipVector {
 public:
  MembershipVector() = default;
  explicit MembershipVector(std::vector<double> memberships);
  static MembershipVector crisp(std::size_t size,
                                const std::set<std::size_t>& members);

  std::size_t size() const { return m_.size(); }
  double operator[](std::size_t i) const { return m_[i]; }
  const std::vector<double>& values() const { return m_; }
  bool is_crisp() const;

 private:
  std::vector<double> m_;
};

/// Exact classical replay; works for any width.
BitString simulate_basis(const GateCircuit& circuit, BitString input);

inline constexpr std::size_t kDefaultStatevectorCap = 20;

/// Dense 2^q state vector over Basis::qubit_register(q) for a product input.
AmplitudeVector product_state(const MembershipVector& per_qubit,
                              std::size_t cap = kDefaultStatevectorCap);

/// Runs `circuit` on the product state of `per_qubit` (one entry per qubit).
AmplitudeVector simulate_statevector(const GateCircuit& circuit,
                                     const MembershipVector& per_qubit,
                                     std::size_t cap = kDefaultStatevectorCap);

/// Runs `circuit` on an arbitrary register state.
AmplitudeVector simulate_statevector(const GateCircuit& circuit,
                                     const AmplitudeVector& state,
                                     std::size_t cap = kDefaultStatevectorCap);

/// Probability that `qubit` reads 1.
double probability_of_one(const AmplitudeVector& state, std::size_t qubit);

/// Initial basis state for a map circuit: input-map qubits from the argument
/// sets (one set per argument, in order), |0>/|1> ancillae as laid out.
BitString prepare_input(const RegisterLayout& layout,
                        const std::vector<std::set<std::size_t>>& arguments);

/// Same as prepare_input for fuzzy maps.
MembershipVector prepare_memberships(
    const RegisterLayout& layout, const std::vector<MembershipVector>& arguments);

/// Codomain ordinals whose output-map qubit reads 1.
std::set<std::size_t> read_output(const RegisterLayout& layout,
                                  const BitString& state);

}  // namespace topomap

#endif  // TOPOMAP_SIMULATE_H
