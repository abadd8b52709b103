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

#ifndef TOPOMAP_BASIS_MAPS_H
#define TOPOMAP_BASIS_MAPS_H

// Unitary graph kernels for finite functions on topographic basis maps.
//
// A value x is represented by the basis vector |x>; a set of values by an
// equal-weight superposition of its members. Each construction below embeds a
// (possibly non-injective, non-surjective) function into a permutation-like
// unitary, using ancilla registers where the shapes require them.

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "topomap/amplitude_vector.h"
#include "topomap/basis_map_operator.h"
#include "topomap/finite_function.h"

namespace topomap {

/// Label of the extra input direction x0 (carries upstream garbage).
inline constexpr std::string_view kExtraDomainLabel = "<x0>";
/// Label of the extra output direction y0 (carries garbage; also the ancilla
/// constant of the arbitrary-function kernel).
inline constexpr std::string_view kExtraCodomainLabel = "<y0>";
/// Prefix of the garbage directions appended to the codomain by the
/// surjection kernel.
inline constexpr std::string_view kGarbagePrefix = "<w";

/// One named summand of a kernel together with the number of basis vectors
/// it maps.
struct KernelComponent {
  std::string name;
  std::size_t mapped = 0;
  BasisMapOperator op;
};

/// Sum of all components.
BasisMapOperator sum_components(const std::vector<KernelComponent>& parts);

/// Orthonormal pieces of the domain induced by a function.
struct SurjectionDecomposition {
  /// Range element (codomain ordinal) per nonnull vector, codomain order.
  std::vector<std::size_t> range;
  /// u_i = (1/sqrt n_i) sum of |x> over the preimage of range[i].
  std::vector<AmplitudeVector> nonnull;
  /// Orthonormal basis of the null space, block by block.
  std::vector<AmplitudeVector> null;
  /// Garbage directions of the output space, as ordinals into the
  /// surjection kernel's output basis.
  std::vector<std::size_t> garbage;
  /// n_i per range element (aligned with `range`).
  std::vector<std::size_t> multiplicities;
};

/// Nonnull/null decomposition for any f; the garbage list is empty.
///
/// Within each preimage block {x_j(1), ..., x_j(k)} (domain order) the null
/// vectors are Gram-Schmidt over |x_j(1)> - |x_j(t)>, t = 2..k.
SurjectionDecomposition preimage_decomposition(const FiniteFunction& f);

/// Requires f surjective. Garbage directions are output coordinates m..n-1.
SurjectionDecomposition surjection_decomposition(const FiniteFunction& f);

/// T = sum_i |f(x_i)><x_i|. Requires f bijective.
BasisMapOperator bijection_kernel(const FiniteFunction& f);

/// Components T, S, R, Q of the injection kernel on H(domain) (x) H_C ->
/// H(codomain) (x) H_G, with H_C labeled by the codomain and H_G by the
/// domain. Requires f injective and n < m.
std::vector<KernelComponent> injection_components(const FiniteFunction& f);
BasisMapOperator injection_unitary(const FiniteFunction& f);

/// Components M, N of the n-dimensional surjection kernel. Output basis is the
/// codomain followed by garbage labels "<w1>".."<w{n-m}>". Requires f
/// surjective.
std::vector<KernelComponent> surjection_components(const FiniteFunction& f);
BasisMapOperator surjection_unitary(const FiniteFunction& f);

/// Components M, N, S, R, Q, P of the (m+1)(n+1)-dimensional kernel
/// H(domain + x0) (x) H(codomain + y0) -> H(codomain + y0) (x) H(domain + x0).
/// Defined for every f.
std::vector<KernelComponent> arbitrary_components(const FiniteFunction& f);
BasisMapOperator arbitrary_unitary(const FiniteFunction& f);

/// Input bases of the kernels above, for preparing states.
Basis::Ptr extended_domain(const FiniteFunction& f);    // <x0>, x1..xn
Basis::Ptr extended_codomain(const FiniteFunction& f);  // <y0>, y1..ym

/// v (x) |w1>, the injection kernel's ancilla constant.
AmplitudeVector injection_input(const FiniteFunction& f,
                                const AmplitudeVector& v);
/// (v + t|x0>) (x) |y0>. `v` lives on the plain domain.
AmplitudeVector arbitrary_input(const FiniteFunction& f,
                                const AmplitudeVector& v, Complex t = 0.0);

/// Equal amplitudes 1/sqrt|S| on the members; the zero vector for S empty.
AmplitudeVector represent_set(const std::set<std::size_t>& members,
                              const Basis::Ptr& space);

inline constexpr double kDefaultExtractThreshold = 1e-9;

/// Readout values whose amplitude magnitude (root-sum-square over the
/// coordinates reading out that value) exceeds `threshold`. Coordinates with
/// no readout value (ancilla, garbage, x0/y0) are skipped.
///
/// Each non-injective stage attenuates amplitudes by 1/sqrt(n_x); after k
/// stages a surviving member can be as small as prod 1/sqrt(n_x), so deep
/// pipelines may need a smaller threshold.
std::set<std::size_t> extract_set(const AmplitudeVector& v,
                                  double threshold = kDefaultExtractThreshold);

/// Norm of the coordinates without a readout value.
double garbage_norm(const AmplitudeVector& v);

/// Brute-force image f[S].
std::set<std::size_t> image_of(const FiniteFunction& f,
                               const std::set<std::size_t>& members);

}  // namespace topomap

#endif  // TOPOMAP_BASIS_MAPS_H
