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

#ifndef TOPOMAP_FINITE_FUNCTION_H
#define TOPOMAP_FINITE_FUNCTION_H

#include <cstddef>
#include <string>
#include <vector>

#include "topomap/basis.h"

namespace topomap {

/// Injectivity/surjectivity accounting of a finite function.
///
///   n_b  domain elements whose image has exactly one preimage
///   n_n  = n - n_b
///   m_n  range elements with two or more preimages (= |Im f| - n_b)
///   m_nr codomain elements outside the range
struct FunctionStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t image_size = 0;
  std::size_t m_nr = 0;
  std::size_t n_b = 0;
  std::size_t n_n = 0;
  std::size_t m_n = 0;
  /// Preimage multiplicity per codomain ordinal (zero outside the range).
  std::vector<std::size_t> multiplicities;
};

/// A total map from a labeled domain grid to a labeled codomain grid.
class FiniteFunction {
 public:
  FiniteFunction(std::vector<std::string> domain,
                 std::vector<std::string> codomain,
                 std::vector<std::size_t> mapping);

  /// Labels x1..xn and y1..ym.
  static FiniteFunction indexed(std::size_t m, std::vector<std::size_t> mapping);

  std::size_t domain_size() const { return mapping_.size(); }
  std::size_t codomain_size() const { return codomain_->dim(); }
  std::size_t operator()(std::size_t x) const { return mapping_.at(x); }
  const std::vector<std::size_t>& mapping() const { return mapping_; }

  const Basis::Ptr& domain() const { return domain_; }
  const Basis::Ptr& codomain() const { return codomain_; }
  std::vector<std::string> domain_labels() const;
  std::vector<std::string> codomain_labels() const;

  const FunctionStats& stats() const { return stats_; }
  bool is_injective() const { return stats_.n_b == stats_.n; }
  bool is_surjective() const { return stats_.m_nr == 0; }
  bool is_bijective() const { return is_injective() && is_surjective(); }

  /// Domain ordinals mapping to codomain ordinal y, ascending.
  std::vector<std::size_t> preimage(std::size_t y) const;
  /// Range elements in codomain order.
  std::vector<std::size_t> range() const;
  /// Codomain elements outside the range, in codomain order.
  std::vector<std::size_t> non_range() const;

  friend bool operator==(const FiniteFunction& a, const FiniteFunction& b);

 private:
  Basis::Ptr domain_;
  Basis::Ptr codomain_;
  std::vector<std::size_t> mapping_;
  FunctionStats stats_;
};

/// f : Omega x Omega -> Omega' stored as an n x n table, first argument major.
class BinaryFunction {
 public:
  BinaryFunction(std::vector<std::string> arguments,
                 std::vector<std::string> codomain,
                 std::vector<std::size_t> table);

  std::size_t argument_size() const { return arguments_->dim(); }
  std::size_t codomain_size() const { return codomain_->dim(); }
  std::size_t operator()(std::size_t a, std::size_t b) const {
    return table_.at(a * argument_size() + b);
  }
  const std::vector<std::size_t>& table() const { return table_; }
  const Basis::Ptr& arguments() const { return arguments_; }
  const Basis::Ptr& codomain() const { return codomain_; }
  std::vector<std::string> argument_labels() const;
  std::vector<std::string> codomain_labels() const;

  /// The same table as a unary function on argument pairs labeled "(a,b)".
  FiniteFunction flatten() const;

  friend bool operator==(const BinaryFunction& a, const BinaryFunction& b);

 private:
  Basis::Ptr arguments_;
  Basis::Ptr codomain_;
  std::vector<std::size_t> table_;
};

/// Extends the smaller of domain/codomain with labels "<pad1>", "<pad2>", ...
/// so that both have the same size. Padded codomain elements stay outside the
/// range; the k-th padded domain element maps to the k-th non-range codomain
/// element, so existing elements keep their injectivity class.
FiniteFunction pad_to_square(const FiniteFunction& f);

}  // namespace topomap

#endif  // TOPOMAP_FINITE_FUNCTION_H
