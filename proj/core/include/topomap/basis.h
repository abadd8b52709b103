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

#ifndef TOPOMAP_BASIS_H
#define TOPOMAP_BASIS_H

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace topomap {

/// One element of an orthonormal basis: its text label and its position.
struct BasisLabel {
  std::string text;
  std::size_t ordinal = 0;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Separator used for composite labels such as "x3⊗w1".
inline constexpr std::string_view kTensorSeparator = "⊗";

/// An ordered, labeled orthonormal basis.
///
/// Every coordinate may additionally carry a *readout value*: the ordinal of
/// the domain/codomain value that the coordinate stands for. Coordinates
/// without a readout value (ancilla constants, garbage, the extra x0/y0
/// directions) are ignored when a state is read back as a set.
///
/// Composite bases produced by `Basis::tensor` use row-major ordinals
/// (major index * minor dim + minor index) and inherit readout values from
/// the major factor.
class Basis {
 public:
  using Ptr = std::shared_ptr<const Basis>;

  /// Labels must be unique. When `values` is empty every coordinate reads out
  /// as its own ordinal.
  static Ptr from_labels(std::vector<std::string> labels,
                         std::vector<std::optional<std::size_t>> values = {});

  /// Labels "<prefix>1" .. "<prefix>dim".
  static Ptr indexed(std::string_view prefix, std::size_t dim);

  /// The 2^qubits computational basis of a qubit register. Labels are
  /// bitstrings with character i holding qubit i (qubit 0 is the most
  /// significant bit of the ordinal). Labels are generated on demand.
  static Ptr qubit_register(std::size_t qubits);

  static Ptr tensor(const Ptr& major, const Ptr& minor);

  std::size_t dim() const { return dim_; }
  BasisLabel label(std::size_t ordinal) const;
  std::string label_text(std::size_t ordinal) const;
  std::optional<std::size_t> find(std::string_view text) const;
  /// Throws BasisError for unknown labels.
  std::size_t index_of(std::string_view text) const;

  std::optional<std::size_t> value(std::size_t ordinal) const;

  /// Factor dimensions, outermost first. A simple basis has one factor.
  const std::vector<std::size_t>& factor_dims() const { return factor_dims_; }
  bool is_composite() const { return factor_dims_.size() > 1; }
  std::size_t qubit_count() const { return qubits_; }

  friend bool operator==(const Basis& a, const Basis& b);

 private:
  Basis() = default;

  std::size_t dim_ = 0;
  std::size_t qubits_ = 0;  // nonzero only for qubit registers
  std::vector<std::string> labels_;
  std::vector<std::optional<std::size_t>> values_;
  std::vector<std::size_t> factor_dims_;
  std::unordered_map<std::string, std::size_t> index_;
};

bool same_basis(const Basis::Ptr& a, const Basis::Ptr& b);

}  // namespace topomap

#endif  // TOPOMAP_BASIS_H
