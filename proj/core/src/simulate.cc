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

#include "topomap/simulate.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "topomap/errors.h"

namespace topomap {

BitString BitString::parse(std::string_view text) {
  BitString b(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw ParseError("bitstring contains '" + std::string(1, text[i]) + "'");
    }
    b.bits_[i] = text[i] == '1' ? 1 : 0;
  }
  return b;
}

std::size_t BitString::popcount() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string BitString::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

MembershipVector::MembershipVector(std::vector<double> memberships)
    : m_(std::move(memberships)) {
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (!(m_[i] >= 0.0 && m_[i] <= 1.0)) {
      throw PreconditionError("membership " + std::to_string(i) + " = " +
                              std::to_string(m_[i]) + " is outside [0,1]");
    }
  }
}

MembershipVector MembershipVector::crisp(std::size_t size,
                                         const std::set<std::size_t>& members) {
  std::vector<double> m(size, 0.0);
  for (std::size_t x : members) {
    if (x >= size) {
      throw PreconditionError("member " + std::to_string(x) +
                              " outside a map of size " + std::to_string(size));
    }
    m[x] = 1.0;
  }
  return MembershipVector(std::move(m));
}

bool MembershipVector::is_crisp() const {
  return std::all_of(m_.begin(), m_.end(),
                     [](double v) { return v == 0.0 || v == 1.0; });
}

BitString simulate_basis(const GateCircuit& circuit, BitString s) {
  if (s.size() != circuit.qubit_count()) {
    throw PreconditionError("input has " + std::to_string(s.size()) +
                            " bits, circuit has " +
                            std::to_string(circuit.qubit_count()) + " qubits");
  }
  for (const Gate& g : circuit.gates()) {
    const auto& q = g.qubits;
    switch (g.kind) {
      case GateKind::X:
        s.flip(q[0]);
        break;
      case GateKind::CNOT:
        if (s[q[0]]) s.flip(q[1]);
        break;
      case GateKind::CCNOT:
        if (s[q[0]] && s[q[1]]) s.flip(q[2]);
        break;
      case GateKind::CSWAP:
        if (s[q[0]] && s[q[1]] != s[q[2]]) {
          s.flip(q[1]);
          s.flip(q[2]);
        }
        break;
      case GateKind::SWAP:
        if (s[q[0]] != s[q[1]]) {
          s.flip(q[0]);
          s.flip(q[1]);
        }
        break;
    }
  }
  return s;
}

namespace {

void check_cap(std::size_t qubits, std::size_t cap) {
  if (qubits > cap) {
    throw CapacityError("state-vector simulation of " + std::to_string(qubits) +
                        " qubits exceeds the cap of " + std::to_string(cap));
  }
}

// Basis-state index permutation of one gate; qubit 0 is the top bit.
struct IndexGate {
  GateKind kind;
  std::array<std::uint64_t, 3> mask;

  std::uint64_t operator()(std::uint64_t i) const {
    auto bit = [&](int k) { return (i & mask[k]) != 0; };
    switch (kind) {
      case GateKind::X:
        return i ^ mask[0];
      case GateKind::CNOT:
        return bit(0) ? i ^ mask[1] : i;
      case GateKind::CCNOT:
        return bit(0) && bit(1) ? i ^ mask[2] : i;
      case GateKind::CSWAP:
        return bit(0) && bit(1) != bit(2) ? i ^ mask[1] ^ mask[2] : i;
      case GateKind::SWAP:
        return bit(0) != bit(1) ? i ^ mask[0] ^ mask[1] : i;
    }
    return i;
  }
};

}  // namespace

AmplitudeVector product_state(const MembershipVector& per_qubit,
                              std::size_t cap) {
  const std::size_t q = per_qubit.size();
  check_cap(q, cap);
  auto basis = Basis::qubit_register(q);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(basis->dim()));
  for (std::size_t k = 0; k < q; ++k) {
    const double one = per_qubit[k];
    const double zero = std::sqrt(std::max(0.0, 1.0 - one * one));
    const std::uint64_t mask = std::uint64_t{1} << (q - 1 - k);
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
      amps[i] *= (static_cast<std::uint64_t>(i) & mask) ? one : zero;
    }
  }
  return AmplitudeVector(std::move(basis), std::move(amps));
}

AmplitudeVector simulate_statevector(const GateCircuit& circuit,
                                     const MembershipVector& per_qubit,
                                     std::size_t cap) {
  if (per_qubit.size() != circuit.qubit_count()) {
    throw PreconditionError("membership vector has " +
                            std::to_string(per_qubit.size()) +
                            " entries, circuit has " +
                            std::to_string(circuit.qubit_count()) + " qubits");
  }
  check_cap(circuit.qubit_count(), cap);
  return simulate_statevector(circuit, product_state(per_qubit, cap), cap);
}

AmplitudeVector simulate_statevector(const GateCircuit& circuit,
                                     const AmplitudeVector& state,
                                     std::size_t cap) {
  const std::size_t q = circuit.qubit_count();
  check_cap(q, cap);
  if (state.basis().qubit_count() != q || state.dim() != (std::size_t{1} << q)) {
    throw BasisError("state is not on a " + std::to_string(q) +
                     "-qubit register");
  }
  Eigen::VectorXcd amps = state.amplitudes();
  for (const Gate& g : circuit.gates()) {
    IndexGate ig{g.kind, {0, 0, 0}};
    for (std::size_t k = 0; k < g.arity(); ++k) {
      ig.mask[k] = std::uint64_t{1} << (q - 1 - g.qubits[k]);
    }
    // Every gate is an involution on indices: swap each 2-cycle once.
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(amps.size()); ++i) {
      const std::uint64_t j = ig(i);
      if (j > i) std::swap(amps[static_cast<Eigen::Index>(i)], amps[static_cast<Eigen::Index>(j)]);
    }
  }
  return AmplitudeVector(state.basis_ptr(), std::move(amps));
}

double probability_of_one(const AmplitudeVector& state, std::size_t qubit) {
  const std::size_t q = state.basis().qubit_count();
  if (qubit >= q) throw BasisError("qubit index outside the register");
  const std::uint64_t mask = std::uint64_t{1} << (q - 1 - qubit);
  double p = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    if (i & mask) p += std::norm(state[i]);
  }
  return p;
}

namespace {

std::vector<std::vector<std::size_t>> argument_groups(const RegisterLayout& layout,
                                                      std::size_t given) {
  const auto maps = layout.qubits_with(InputRole::input_map);
  if (given != layout.arguments) {
    throw PreconditionError("circuit takes " + std::to_string(layout.arguments) +
                            " input maps, got " + std::to_string(given));
  }
  if (layout.arguments == 0 || maps.size() % layout.arguments != 0) {
    throw PreconditionError("input-map qubits do not split evenly into arguments");
  }
  const std::size_t width = maps.size() / layout.arguments;
  std::vector<std::vector<std::size_t>> groups(layout.arguments);
  for (std::size_t i = 0; i < maps.size(); ++i) groups[i / width].push_back(maps[i]);
  return groups;
}

}  // namespace

BitString prepare_input(const RegisterLayout& layout,
                        const std::vector<std::set<std::size_t>>& arguments) {
  const auto groups = argument_groups(layout, arguments.size());
  BitString s(layout.qubit_count());
  for (std::size_t q = 0; q < layout.qubit_count(); ++q) {
    if (layout.inputs[q] == InputRole::ancilla1) s.set(q, true);
  }
  for (std::size_t a = 0; a < groups.size(); ++a) {
    for (std::size_t x : arguments[a]) {
      if (x >= groups[a].size()) {
        throw PreconditionError("member " + std::to_string(x) +
                                " outside an input map of size " +
                                std::to_string(groups[a].size()));
      }
      s.set(groups[a][x], true);
    }
  }
  return s;
}

MembershipVector prepare_memberships(
    const RegisterLayout& layout, const std::vector<MembershipVector>& arguments) {
  const auto groups = argument_groups(layout, arguments.size());
  std::vector<double> m(layout.qubit_count(), 0.0);
  for (std::size_t q = 0; q < layout.qubit_count(); ++q) {
    if (layout.inputs[q] == InputRole::ancilla1) m[q] = 1.0;
  }
  for (std::size_t a = 0; a < groups.size(); ++a) {
    if (arguments[a].size() != groups[a].size()) {
      throw PreconditionError("argument map " + std::to_string(a) + " has " +
                              std::to_string(arguments[a].size()) +
                              " entries, expected " +
                              std::to_string(groups[a].size()));
    }
    for (std::size_t x = 0; x < groups[a].size(); ++x) m[groups[a][x]] = arguments[a][x];
  }
  return MembershipVector(std::move(m));
}

std::set<std::size_t> read_output(const RegisterLayout& layout,
                                  const BitString& state) {
  if (state.size() != layout.qubit_count()) {
    throw PreconditionError("state width does not match the layout");
  }
  std::set<std::size_t> out;
  for (std::size_t q = 0; q < layout.qubit_count(); ++q) {
    if (layout.outputs[q] == OutputRole::output_map && state[q]) {
      out.insert(layout.output_values[q].value());
    }
  }
  return out;
}

}  // namespace topomap
