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

#include "topomap/qubit_maps.h"

#include <algorithm>
#include <string>

#include "topomap/errors.h"

namespace topomap {
namespace {

std::uint32_t u32(std::size_t v) { return static_cast<std::uint32_t>(v); }

struct OrResult {
  std::uint32_t output = 0;
  std::vector<std::uint32_t> garbage;
};

OrResult append_or_cascade(std::vector<Gate>& gates,
                           std::span<const std::uint32_t> inputs,
                           std::span<const std::uint32_t> ancs) {
  OrResult r;
  r.output = inputs.front();
  for (std::size_t i = 1; i < inputs.size(); ++i) {
    const std::uint32_t anc = ancs[i - 1];
    gates.push_back(Gate::x(r.output));
    gates.push_back(Gate::x(inputs[i]));
    gates.push_back(Gate::ccnot(r.output, inputs[i], anc));
    if (i == 1) r.garbage.push_back(inputs[0]);
    else r.garbage.push_back(r.output);
    r.garbage.push_back(inputs[i]);
    r.output = anc;
  }
  return r;
}

std::size_t widest(std::span<const std::uint32_t> a,
                   std::span<const std::uint32_t> b) {
  std::size_t w = 0;
  for (auto q : a) w = std::max<std::size_t>(w, q + 1);
  for (auto q : b) w = std::max<std::size_t>(w, q + 1);
  return w;
}

RegisterLayout empty_layout(std::size_t qubits) {
  RegisterLayout l;
  l.inputs.assign(qubits, InputRole::input_map);
  l.input_labels.assign(qubits, "");
  l.outputs.assign(qubits, OutputRole::garbage);
  l.output_values.assign(qubits, std::nullopt);
  l.output_labels.assign(qubits, "");
  return l;
}

// Wires the codomain of a (flattened) function onto an existing set of
// source qubits: one source per domain element. Non-range values take the
// next |0> ancilla, single-preimage values reuse their source qubit, and
// multi-preimage values OR their sources using |1> ancillae.
void wire_function(const FiniteFunction& f,
                   std::span<const std::uint32_t> sources,
                   std::span<const std::uint32_t> zero_ancillae,
                   std::span<const std::uint32_t> one_ancillae,
                   std::vector<Gate>& gates, RegisterLayout& layout) {
  std::size_t next_zero = 0;
  std::size_t next_one = 0;
  for (std::size_t y = 0; y < f.codomain_size(); ++y) {
    const auto pre = f.preimage(y);
    std::uint32_t carrier = 0;
    if (pre.empty()) {
      carrier = zero_ancillae[next_zero++];
    } else if (pre.size() == 1) {
      carrier = sources[pre.front()];
    } else {
      std::vector<std::uint32_t> ins;
      for (std::size_t x : pre) ins.push_back(sources[x]);
      const auto ancs = one_ancillae.subspan(next_one, pre.size() - 1);
      next_one += pre.size() - 1;
      const auto r = append_or_cascade(gates, ins, ancs);
      carrier = r.output;
      for (auto g : r.garbage) layout.outputs[g] = OutputRole::garbage;
    }
    layout.outputs[carrier] = OutputRole::output_map;
    layout.output_values[carrier] = y;
    layout.output_labels[carrier] = f.codomain()->label_text(y);
  }
  if (next_zero != zero_ancillae.size() || next_one != one_ancillae.size()) {
    throw PreconditionError("internal ancilla accounting mismatch");
  }
}

}  // namespace

GateCircuit or2_circuit(std::uint32_t q1, std::uint32_t q2, std::uint32_t anc) {
  if (q1 == q2 || q1 == anc || q2 == anc) {
    throw PreconditionError("OR2 needs three distinct qubits");
  }
  return GateCircuit(std::max({q1, q2, anc}) + std::size_t{1},
                     {Gate::x(q1), Gate::x(q2), Gate::ccnot(q1, q2, anc)});
}

GateCircuit orn_circuit(std::span<const std::uint32_t> inputs,
                        std::span<const std::uint32_t> ancs) {
  if (inputs.empty()) throw PreconditionError("OR of zero inputs");
  if (ancs.size() + 1 != inputs.size()) {
    throw PreconditionError("OR over " + std::to_string(inputs.size()) +
                            " inputs needs " +
                            std::to_string(inputs.size() - 1) +
                            " ancillae, got " + std::to_string(ancs.size()));
  }
  std::vector<Gate> gates;
  append_or_cascade(gates, inputs, ancs);
  return GateCircuit(widest(inputs, ancs), std::move(gates));
}

std::size_t unary_qubit_count(const FunctionStats& s) {
  return 2 * s.n_n + s.n_b + s.m_nr - s.m_n;
}

std::size_t binary_qubit_count(std::size_t n, std::size_t m_nr) {
  return 2 * n * n + n + 2 * m_nr;
}

MapCircuit unary_map_circuit(const FiniteFunction& f) {
  const std::size_t n = f.domain_size();
  if (n != f.codomain_size()) {
    throw PreconditionError(
        "qubit-map circuit requires |domain| = |codomain| (got " +
        std::to_string(n) + " and " + std::to_string(f.codomain_size()) +
        "); pad the smaller space first");
  }
  const auto& s = f.stats();
  const std::size_t zeros = s.m_nr;
  const std::size_t ones = s.n_n - s.m_n;
  const std::size_t total = n + zeros + ones;

  RegisterLayout layout = empty_layout(total);
  std::vector<std::uint32_t> sources, zero_anc, one_anc;
  for (std::size_t q = 0; q < n; ++q) {
    sources.push_back(u32(q));
    layout.input_labels[q] = f.domain()->label_text(q);
  }
  for (std::size_t q = n; q < n + zeros; ++q) {
    layout.inputs[q] = InputRole::ancilla0;
    zero_anc.push_back(u32(q));
  }
  for (std::size_t q = n + zeros; q < total; ++q) {
    layout.inputs[q] = InputRole::ancilla1;
    one_anc.push_back(u32(q));
  }
  std::vector<Gate> gates;
  wire_function(f, sources, zero_anc, one_anc, gates, layout);
  return {GateCircuit(total, std::move(gates)), std::move(layout)};
}

MapCircuit outer_product_circuit(std::size_t n) {
  if (n == 0) throw PreconditionError("outer product of empty maps");
  const std::size_t total = 2 * n + n * n;
  RegisterLayout layout = empty_layout(total);
  layout.arguments = 2;
  std::vector<Gate> gates;
  for (std::size_t j = 0; j < n; ++j) {
    layout.input_labels[j] = "a" + std::to_string(j + 1);
    layout.input_labels[n + j] = "b" + std::to_string(j + 1);
    layout.outputs[j] = OutputRole::passthrough;
    layout.outputs[n + j] = OutputRole::passthrough;
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t pair = 2 * n + j * n + k;
      layout.inputs[pair] = InputRole::ancilla0;
      layout.outputs[pair] = OutputRole::output_map;
      layout.output_values[pair] = j * n + k;
      layout.output_labels[pair] =
          "(a" + std::to_string(j + 1) + ",b" + std::to_string(k + 1) + ")";
      gates.push_back(Gate::ccnot(u32(j), u32(n + k), u32(pair)));
    }
  }
  return {GateCircuit(total, std::move(gates)), std::move(layout)};
}

MapCircuit binary_map_circuit(const BinaryFunction& f) {
  const std::size_t n = f.argument_size();
  if (f.codomain_size() != n) {
    throw PreconditionError(
        "binary qubit-map circuit requires the result grid to match the "
        "argument grid (arguments " + std::to_string(n) + ", codomain " +
        std::to_string(f.codomain_size()) + ")");
  }
  const FiniteFunction flat = f.flatten();
  const auto& s = flat.stats();
  const std::size_t pairs = n * n;
  const std::size_t zeros = pairs + s.m_nr;
  const std::size_t ones = s.n_n - s.m_n;
  const std::size_t total = 2 * n + zeros + ones;

  RegisterLayout layout = empty_layout(total);
  layout.arguments = 2;
  std::vector<Gate> gates;
  for (std::size_t j = 0; j < n; ++j) {
    layout.input_labels[j] = f.arguments()->label_text(j);
    layout.input_labels[n + j] = f.arguments()->label_text(j);
    layout.outputs[j] = OutputRole::passthrough;
    layout.outputs[n + j] = OutputRole::passthrough;
  }
  std::vector<std::uint32_t> pair_qubits, zero_anc, one_anc;
  for (std::size_t q = 2 * n; q < 2 * n + zeros; ++q) {
    layout.inputs[q] = InputRole::ancilla0;
    if (q < 2 * n + pairs) pair_qubits.push_back(u32(q));
    else zero_anc.push_back(u32(q));
  }
  for (std::size_t q = 2 * n + zeros; q < total; ++q) {
    layout.inputs[q] = InputRole::ancilla1;
    one_anc.push_back(u32(q));
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      gates.push_back(Gate::ccnot(u32(j), u32(n + k), pair_qubits[j * n + k]));
    }
  }
  wire_function(flat, pair_qubits, zero_anc, one_anc, gates, layout);
  return {GateCircuit(total, std::move(gates)), std::move(layout)};
}

MapCircuit demux_circuit(std::size_t bits) {
  if (bits == 0) throw PreconditionError("demux needs at least one bit");
  if (bits > 24) {
    throw CapacityError("demux of " + std::to_string(bits) +
                        " bits exceeds the 24-bit limit");
  }
  const std::size_t n = std::size_t{1} << bits;
  const std::size_t total = bits + n;
  RegisterLayout layout = empty_layout(total);
  auto position = [&](std::size_t p) {
    return u32(p == 0 ? bits + n - 1 : bits + p - 1);
  };
  for (std::size_t b = 0; b < bits; ++b) {
    layout.input_labels[b] = "bit" + std::to_string(b);
    layout.outputs[b] = OutputRole::passthrough;
  }
  for (std::size_t p = 0; p < n; ++p) {
    const std::uint32_t q = position(p);
    layout.inputs[q] = p == 0 ? InputRole::ancilla1 : InputRole::ancilla0;
    layout.outputs[q] = OutputRole::output_map;
    layout.output_values[q] = p;
    layout.output_labels[q] = std::to_string(p);
  }
  std::vector<Gate> gates;
  for (std::size_t level = 0; level < bits; ++level) {
    const std::size_t weight = std::size_t{1} << level;
    const std::uint32_t control = u32(bits - 1 - level);
    for (std::size_t p = 0; p < weight; ++p) {
      gates.push_back(Gate::cswap(control, position(p), position(p + weight)));
    }
  }
  return {GateCircuit(total, std::move(gates)), std::move(layout)};
}

GateCircuit copy_crisp_map(std::size_t n) {
  std::vector<Gate> gates;
  for (std::size_t j = 0; j < n; ++j) gates.push_back(Gate::cnot(u32(j), u32(n + j)));
  return GateCircuit(2 * n, std::move(gates));
}

}  // namespace topomap
