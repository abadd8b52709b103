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

#ifndef TOPOMAP_PIPELINE_H
#define TOPOMAP_PIPELINE_H

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "topomap/finite_function.h"
#include "topomap/grid.h"
#include "topomap/qubit_maps.h"

namespace topomap {

enum class StageKind { multiply, add };

/// Where a stage argument comes from: an external input (a_i or w_i) or the
/// result of an earlier stage.
struct StageSource {
  enum class Kind { activation, weight, stage } kind;
  std::size_t index;

  std::string to_string() const;
};

struct PlanStage {
  StageKind kind;
  StageSource left;
  StageSource right;
  std::size_t qubits;
};

/// sum_i a_i w_i as N product stages followed by N-1 truncating-sum stages,
/// folded left: s_0 = p_0, s_i = tsum(s_{i-1}, p_i).
class InnerProductPlan {
 public:
  InnerProductPlan(std::size_t terms, GridSpec grid);

  std::size_t terms() const { return terms_; }
  const GridSpec& grid() const { return grid_; }
  const std::vector<PlanStage>& stages() const { return stages_; }
  const BinaryFunction& product() const { return product_; }
  const BinaryFunction& sum() const { return sum_; }

  /// 2 N^2 n^2.
  std::size_t leading_order_qubits() const;
  /// Sum over stages of 2n^2 + n + 2 m_nr for each stage's table.
  std::size_t itemized_qubits() const;

  /// Runs every stage as a qubit-map circuit on crisp singleton maps and
  /// returns the grid index of the result.
  std::size_t execute(const std::vector<std::size_t>& activations,
                      const std::vector<std::size_t>& weights) const;

  /// One line per stage plus totals.
  void write_manifest(std::ostream& os) const;

 private:
  std::size_t terms_;
  GridSpec grid_;
  BinaryFunction product_;
  BinaryFunction sum_;
  MapCircuit product_circuit_;
  MapCircuit sum_circuit_;
  std::vector<PlanStage> stages_;
};

InnerProductPlan inner_product_plan(std::size_t terms, const GridSpec& grid);

/// Qubit budget of a layer of M units, each taking an N-term inner product of
/// n-point maps. `total` is the leading-order figure 2 M N^2 n^2; the other
/// fields itemize the circuits at 2n^2 + n qubits per binary operation.
struct LayerEstimate {
  std::size_t M = 0;
  std::size_t N = 0;
  std::size_t n = 0;
  std::size_t multiply_qubits = 0;
  std::size_t add_qubits = 0;
  /// |0> targets for fanning each of the n input locations out M-1 times.
  std::size_t copy_ancillae = 0;
  /// CNOTs per input location.
  std::size_t copy_cnots_per_location = 0;
  std::size_t itemized_total = 0;
  std::size_t total = 0;
};

LayerEstimate estimate_layer(std::size_t M, std::size_t N, std::size_t n);

void write_estimate(std::ostream& os, const LayerEstimate& e);

}  // namespace topomap

#endif  // TOPOMAP_PIPELINE_H
