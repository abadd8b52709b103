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

#ifndef TOPOMAP_BASIS_MAP_OPERATOR_H
#define TOPOMAP_BASIS_MAP_OPERATOR_H

#include <cstddef>
#include <iosfwd>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "topomap/amplitude_vector.h"
#include "topomap/basis.h"

namespace topomap {

struct MatrixEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Complex value;
};

enum class Storage { automatic, dense, sparse };

/// Largest dimension (rows or columns) stored densely under
/// Storage::automatic.
inline constexpr std::size_t kDenseDimLimit = 1024;

/// A complex matrix between two labeled bases, (dim out) x (dim in).
class BasisMapOperator {
 public:
  using DenseMatrix = Eigen::MatrixXcd;
  using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

  /// Duplicate (row, col) entries are summed.
  static BasisMapOperator from_entries(Basis::Ptr input, Basis::Ptr output,
                                       const std::vector<MatrixEntry>& entries,
                                       Storage storage = Storage::automatic);
  static BasisMapOperator from_dense(Basis::Ptr input, Basis::Ptr output,
                                     DenseMatrix m);
  static BasisMapOperator identity(Basis::Ptr basis,
                                   Storage storage = Storage::automatic);
  static BasisMapOperator zero(Basis::Ptr input, Basis::Ptr output,
                               Storage storage = Storage::automatic);

  const Basis& input_basis() const { return *in_; }
  const Basis& output_basis() const { return *out_; }
  const Basis::Ptr& input_basis_ptr() const { return in_; }
  const Basis::Ptr& output_basis_ptr() const { return out_; }
  std::size_t rows() const { return out_->dim(); }
  std::size_t cols() const { return in_->dim(); }
  bool is_dense() const { return std::holds_alternative<DenseMatrix>(m_); }

  Complex entry(std::size_t row, std::size_t col) const;
  /// Nonzero entries in row-major order.
  std::vector<MatrixEntry> nonzeros() const;
  DenseMatrix to_dense() const;
  SparseMatrix to_sparse() const;

  /// Same operator, different storage.
  BasisMapOperator with_storage(Storage storage) const;

  friend AmplitudeVector apply(const BasisMapOperator& op,
                               const AmplitudeVector& v);
  friend BasisMapOperator adjoint(const BasisMapOperator& op);
  friend BasisMapOperator compose(const BasisMapOperator& g,
                                  const BasisMapOperator& f);
  friend BasisMapOperator operator+(const BasisMapOperator& a,
                                    const BasisMapOperator& b);
  friend double unitarity_residual(const BasisMapOperator& op);

 private:
  using Matrix = std::variant<DenseMatrix, SparseMatrix>;
  BasisMapOperator(Basis::Ptr in, Basis::Ptr out, Matrix m);
  static Matrix store(DenseMatrix m, Storage storage);
  static Matrix store(SparseMatrix m, Storage storage);

  Basis::Ptr in_;
  Basis::Ptr out_;
  Matrix m_;
};

/// Matrix-vector product. Throws BasisError when `v` is not on the
/// operator's input basis.
AmplitudeVector apply(const BasisMapOperator& op, const AmplitudeVector& v);

/// Conjugate transpose; input and output bases swap.
BasisMapOperator adjoint(const BasisMapOperator& op);

/// g . f (apply f first). Requires f's output basis to equal g's input basis.
BasisMapOperator compose(const BasisMapOperator& g, const BasisMapOperator& f);

BasisMapOperator operator+(const BasisMapOperator& a, const BasisMapOperator& b);

/// max(|U^H U - I|_max, |U U^H - I|_max). Throws for non-square operators.
double unitarity_residual(const BasisMapOperator& op);

/// "dims,<rows>,<cols>" followed by "row,col,re,im" per nonzero entry,
/// 17 significant digits.
void write_operator_csv(std::ostream& os, const BasisMapOperator& op);

struct OperatorTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<MatrixEntry> entries;
};

OperatorTable read_operator_csv(std::istream& is);

/// Attach bases to a parsed table; basis dimensions must match.
BasisMapOperator operator_from_table(const OperatorTable& table,
                                     Basis::Ptr input, Basis::Ptr output);

}  // namespace topomap

#endif  // TOPOMAP_BASIS_MAP_OPERATOR_H
