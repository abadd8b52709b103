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

#include "topomap/pipeline.h"

#include <ostream>

#include "topomap/errors.h"
#include "topomap/simulate.h"
#include "topomap/tables.h"

namespace topomap {

std::string StageSource::to_string() const {
  switch (kind) {
    case Kind::activation:
      return "a" + std::to_string(index + 1);
    case Kind::weight:
      return "w" + std::to_string(index + 1);
    case Kind::stage:
      return "stage" + std::to_string(index + 1);
  }
  return "?";
}

InnerProductPlan::InnerProductPlan(std::size_t terms, GridSpec grid)
    : terms_(terms),
      grid_(std::move(grid)),
      product_(product_table(grid_)),
      sum_(sum_table(SumKind::tsum, grid_)),
      product_circuit_(binary_map_circuit(product_)),
      sum_circuit_(binary_map_circuit(sum_)) {
  if (terms == 0) throw PreconditionError("inner product of zero terms");
  using K = StageSource::Kind;
  const std::size_t mul_q = product_circuit_.circuit.qubit_count();
  const std::size_t add_q = sum_circuit_.circuit.qubit_count();
  for (std::size_t i = 0; i < terms; ++i) {
    stages_.push_back({StageKind::multiply, {K::activation, i}, {K::weight, i}, mul_q});
  }
  for (std::size_t i = 1; i < terms; ++i) {
    const std::size_t left = i == 1 ? 0 : terms + i - 2;
    stages_.push_back({StageKind::add, {K::stage, left}, {K::stage, i}, add_q});
  }
}

std::size_t InnerProductPlan::leading_order_qubits() const {
  const std::size_t n = grid_.size();
  return 2 * terms_ * terms_ * n * n;
}

std::size_t InnerProductPlan::itemized_qubits() const {
  std::size_t total = 0;
  for (const auto& s : stages_) total += s.qubits;
  return total;
}

std::size_t InnerProductPlan::execute(const std::vector<std::size_t>& activations,
                                      const std::vector<std::size_t>& weights) const {
  if (activations.size() != terms_ || weights.size() != terms_) {
    throw PreconditionError("inner product plan takes " + std::to_string(terms_) +
                            " activations and weights");
  }
  std::vector<std::size_t> results;
  auto value_of = [&](const StageSource& s) {
    switch (s.kind) {
      case StageSource::Kind::activation:
        return activations.at(s.index);
      case StageSource::Kind::weight:
        return weights.at(s.index);
      case StageSource::Kind::stage:
        return results.at(s.index);
    }
    return std::size_t{0};
  };
  for (const auto& stage : stages_) {
    const MapCircuit& mc =
        stage.kind == StageKind::multiply ? product_circuit_ : sum_circuit_;
    const BitString in = prepare_input(mc.layout, {{value_of(stage.left)},
                                                   {value_of(stage.right)}});
    const auto out = read_output(mc.layout, simulate_basis(mc.circuit, in));
    if (out.size() != 1) {
      throw Error("stage did not produce a singleton map");
    }
    results.push_back(*out.begin());
  }
  return results.back();
}

void InnerProductPlan::write_manifest(std::ostream& os) const {
  os << "# inner product, N=" << terms_ << ", n=" << grid_.size() << "\n";
  os << "# grid";
  for (const auto& l : grid_.labels()) os << ' ' << l;
  os << "\n";
  for (std::size_t i = 0; i < stages_.size(); ++i) {
    const auto& s = stages_[i];
    os << "stage" << i + 1 << ' '
       << (s.kind == StageKind::multiply ? "multiply" : "tsum") << ' '
       << s.left.to_string() << ' ' << s.right.to_string() << " qubits "
       << s.qubits << "\n";
  }
  os << "itemized_qubits " << itemized_qubits() << "\n";
  os << "leading_order_qubits " << leading_order_qubits() << "\n";
}

InnerProductPlan inner_product_plan(std::size_t terms, const GridSpec& grid) {
  return InnerProductPlan(terms, grid);
}

LayerEstimate estimate_layer(std::size_t M, std::size_t N, std::size_t n) {
  if (M == 0 || N == 0 || n == 0) {
    throw PreconditionError("layer estimate needs M, N, n >= 1");
  }
  LayerEstimate e;
  e.M = M;
  e.N = N;
  e.n = n;
  const std::size_t per_op = 2 * n * n + n;
  e.multiply_qubits = M * N * per_op;
  e.add_qubits = M * (N - 1) * per_op;
  e.copy_ancillae = (M - 1) * n;
  e.copy_cnots_per_location = M - 1;
  e.itemized_total = e.multiply_qubits + e.add_qubits + e.copy_ancillae;
  e.total = 2 * M * N * N * n * n;
  return e;
}

void write_estimate(std::ostream& os, const LayerEstimate& e) {
  os << "M " << e.M << "\n"
     << "N " << e.N << "\n"
     << "n " << e.n << "\n"
     << "multiply_qubits " << e.multiply_qubits << "\n"
     << "add_qubits " << e.add_qubits << "\n"
     << "copy_ancillae " << e.copy_ancillae << "\n"
     << "copy_cnots_per_location " << e.copy_cnots_per_location << "\n"
     << "itemized_total " << e.itemized_total << "\n"
     << "total " << e.total << "\n";
}

}  // namespace topomap
