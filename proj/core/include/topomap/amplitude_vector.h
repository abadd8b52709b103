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

#ifndef TOPOMAP_AMPLITUDE_VECTOR_H
#define TOPOMAP_AMPLITUDE_VECTOR_H

#include <complex>
#include <cstddef>
#include <string_view>

#include <Eigen/Dense>

#include "topomap/basis.h"

namespace topomap {

using Complex = std::complex<double>;

/// Tolerance on squared norms and unitarity residuals.
inline constexpr double kNormTolerance = 1e-12;

/// Complex amplitudes over a labeled basis.
///
/// Vectors may be sub-normalized (garbage projected away) but never exceed
/// unit squared norm by more than kNormTolerance.
class AmplitudeVector {
 public:
  AmplitudeVector(Basis::Ptr basis, Eigen::VectorXcd amplitudes);

  static AmplitudeVector zero(Basis::Ptr basis);
  static AmplitudeVector basis_vector(Basis::Ptr basis, std::size_t ordinal);
  static AmplitudeVector basis_vector(Basis::Ptr basis, std::string_view label);

  const Basis& basis() const { return *basis_; }
  const Basis::Ptr& basis_ptr() const { return basis_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }

  Complex operator[](std::size_t ordinal) const { return amps_[static_cast<Eigen::Index>(ordinal)]; }
  Complex at(std::string_view label) const;

  double squared_norm() const { return amps_.squaredNorm(); }
  double norm() const { return amps_.norm(); }
  bool is_pure_input() const;

 private:
  Basis::Ptr basis_;
  Eigen::VectorXcd amps_;
};

/// Product state; `a` supplies the major index.
AmplitudeVector tensor(const AmplitudeVector& a, const AmplitudeVector& b);

/// <a|b>, conjugate-linear in `a`.
Complex inner_product(const AmplitudeVector& a, const AmplitudeVector& b);

}  // namespace topomap

#endif  // TOPOMAP_AMPLITUDE_VECTOR_H
