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

#include "topomap/amplitude_vector.h"

#include <cmath>
#include <string>

#include "topomap/errors.h"

namespace topomap {

AmplitudeVector::AmplitudeVector(Basis::Ptr basis, Eigen::VectorXcd amplitudes)
    : basis_(std::move(basis)), amps_(std::move(amplitudes)) {
  if (!basis_) throw BasisError("amplitude vector without a basis");
  if (static_cast<std::size_t>(amps_.size()) != basis_->dim()) {
    throw BasisError("amplitude count " + std::to_string(amps_.size()) +
                     " does not match basis dimension " +
                     std::to_string(basis_->dim()));
  }
  const double sq = amps_.squaredNorm();
  if (!(sq <= 1.0 + kNormTolerance)) {
    throw PreconditionError("squared norm " + std::to_string(sq) +
                            " exceeds 1");
  }
}

AmplitudeVector AmplitudeVector::zero(Basis::Ptr basis) {
  const auto n = static_cast<Eigen::Index>(basis->dim());
  return AmplitudeVector(std::move(basis), Eigen::VectorXcd::Zero(n));
}

AmplitudeVector AmplitudeVector::basis_vector(Basis::Ptr basis,
                                              std::size_t ordinal) {
  if (ordinal >= basis->dim()) {
    throw BasisError("basis vector ordinal " + std::to_string(ordinal) +
                     " out of range");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->dim()));
  v[static_cast<Eigen::Index>(ordinal)] = 1.0;
  return AmplitudeVector(std::move(basis), std::move(v));
}

AmplitudeVector AmplitudeVector::basis_vector(Basis::Ptr basis,
                                              std::string_view label) {
  const std::size_t i = basis->index_of(label);
  return basis_vector(std::move(basis), i);
}

Complex AmplitudeVector::at(std::string_view label) const {
  return (*this)[basis_->index_of(label)];
}

bool AmplitudeVector::is_pure_input() const {
  return std::abs(squared_norm() - 1.0) <= kNormTolerance;
}

AmplitudeVector tensor(const AmplitudeVector& a, const AmplitudeVector& b) {
  auto basis = Basis::tensor(a.basis_ptr(), b.basis_ptr());
  const Eigen::Index nb = b.amplitudes().size();
  Eigen::VectorXcd amps(a.amplitudes().size() * nb);
  for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i) {
    amps.segment(i * nb, nb) = a.amplitudes()[i] * b.amplitudes();
  }
  return AmplitudeVector(std::move(basis), std::move(amps));
}

Complex inner_product(const AmplitudeVector& a, const AmplitudeVector& b) {
  if (!same_basis(a.basis_ptr(), b.basis_ptr())) {
    throw BasisError("inner product between vectors on different bases");
  }
  return a.amplitudes().dot(b.amplitudes());
}

}  // namespace topomap
