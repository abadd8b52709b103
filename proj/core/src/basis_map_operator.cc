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

#include "topomap/basis_map_operator.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "topomap/errors.h"

namespace topomap {
namespace {

using DenseMatrix = BasisMapOperator::DenseMatrix;
using SparseMatrix = BasisMapOperator::SparseMatrix;

bool wants_dense(std::size_t rows, std::size_t cols, Storage storage) {
  switch (storage) {
    case Storage::dense:
      return true;
    case Storage::sparse:
      return false;
    case Storage::automatic:
      break;
  }
  return std::max(rows, cols) <= kDenseDimLimit;
}

SparseMatrix to_sparse_matrix(const DenseMatrix& d) {
  SparseMatrix s = d.sparseView(Complex(0.0), 0.0);
  s.makeCompressed();
  return s;
}

std::string describe(const Basis& b) {
  std::string s = "[dim " + std::to_string(b.dim());
  if (b.dim() > 0) s += ", first '" + b.label_text(0) + "'";
  return s + "]";
}

void require_same(const Basis::Ptr& expected, const Basis::Ptr& actual,
                  const char* what) {
  if (!same_basis(expected, actual)) {
    throw BasisError(std::string(what) + ": expected basis " +
                     describe(*expected) + " but got " + describe(*actual));
  }
}

std::string format17(double x) {
  if (x == 0.0) x = 0.0;  // drop negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

BasisMapOperator::BasisMapOperator(Basis::Ptr in, Basis::Ptr out, Matrix m)
    : in_(std::move(in)), out_(std::move(out)), m_(std::move(m)) {}

BasisMapOperator::Matrix BasisMapOperator::store(DenseMatrix m,
                                                 Storage storage) {
  if (wants_dense(static_cast<std::size_t>(m.rows()),
                  static_cast<std::size_t>(m.cols()), storage)) {
    return m;
  }
  return to_sparse_matrix(m);
}

BasisMapOperator::Matrix BasisMapOperator::store(SparseMatrix m,
                                                 Storage storage) {
  if (wants_dense(static_cast<std::size_t>(m.rows()),
                  static_cast<std::size_t>(m.cols()), storage)) {
    return DenseMatrix(m);
  }
  m.makeCompressed();
  return m;
}

BasisMapOperator BasisMapOperator::from_entries(
    Basis::Ptr input, Basis::Ptr output,
    const std::vector<MatrixEntry>& entries, Storage storage) {
  const std::size_t rows = output->dim();
  const std::size_t cols = input->dim();
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(entries.size());
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols) {
      throw BasisError("matrix entry (" + std::to_string(e.row) + "," +
                       std::to_string(e.col) + ") outside " +
                       std::to_string(rows) + "x" + std::to_string(cols));
    }
    triplets.emplace_back(static_cast<Eigen::Index>(e.row),
                          static_cast<Eigen::Index>(e.col), e.value);
  }
  SparseMatrix s(static_cast<Eigen::Index>(rows),
                 static_cast<Eigen::Index>(cols));
  s.setFromTriplets(triplets.begin(), triplets.end());
  s.prune(Complex(0.0), 0.0);
  return BasisMapOperator(std::move(input), std::move(output),
                          store(std::move(s), storage));
}

BasisMapOperator BasisMapOperator::from_dense(Basis::Ptr input,
                                              Basis::Ptr output,
                                              DenseMatrix m) {
  if (static_cast<std::size_t>(m.rows()) != output->dim() ||
      static_cast<std::size_t>(m.cols()) != input->dim()) {
    throw BasisError("matrix shape does not match bases");
  }
  return BasisMapOperator(std::move(input), std::move(output),
                          store(std::move(m), Storage::automatic));
}

BasisMapOperator BasisMapOperator::identity(Basis::Ptr basis,
                                            Storage storage) {
  std::vector<MatrixEntry> entries;
  entries.reserve(basis->dim());
  for (std::size_t i = 0; i < basis->dim(); ++i) entries.push_back({i, i, 1.0});
  return from_entries(basis, basis, entries, storage);
}

BasisMapOperator BasisMapOperator::zero(Basis::Ptr input, Basis::Ptr output,
                                        Storage storage) {
  return from_entries(std::move(input), std::move(output), {}, storage);
}

Complex BasisMapOperator::entry(std::size_t row, std::size_t col) const {
  if (row >= rows() || col >= cols()) {
    throw BasisError("entry index out of range");
  }
  const auto r = static_cast<Eigen::Index>(row);
  const auto c = static_cast<Eigen::Index>(col);
  if (const auto* d = std::get_if<DenseMatrix>(&m_)) return (*d)(r, c);
  return std::get<SparseMatrix>(m_).coeff(r, c);
}

std::vector<MatrixEntry> BasisMapOperator::nonzeros() const {
  std::vector<MatrixEntry> out;
  if (const auto* d = std::get_if<DenseMatrix>(&m_)) {
    for (Eigen::Index r = 0; r < d->rows(); ++r) {
      for (Eigen::Index c = 0; c < d->cols(); ++c) {
        if ((*d)(r, c) != Complex(0.0)) {
          out.push_back({static_cast<std::size_t>(r),
                         static_cast<std::size_t>(c), (*d)(r, c)});
        }
      }
    }
    return out;
  }
  const auto& s = std::get<SparseMatrix>(m_);
  out.reserve(static_cast<std::size_t>(s.nonZeros()));
  for (Eigen::Index r = 0; r < s.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(s, r); it; ++it) {
      if (it.value() != Complex(0.0)) {
        out.push_back({static_cast<std::size_t>(it.row()),
                       static_cast<std::size_t>(it.col()), it.value()});
      }
    }
  }
  return out;
}

DenseMatrix BasisMapOperator::to_dense() const {
  if (const auto* d = std::get_if<DenseMatrix>(&m_)) return *d;
  return DenseMatrix(std::get<SparseMatrix>(m_));
}

SparseMatrix BasisMapOperator::to_sparse() const {
  if (const auto* s = std::get_if<SparseMatrix>(&m_)) return *s;
  return to_sparse_matrix(std::get<DenseMatrix>(m_));
}

BasisMapOperator BasisMapOperator::with_storage(Storage storage) const {
  if (wants_dense(rows(), cols(), storage)) {
    return BasisMapOperator(in_, out_, to_dense());
  }
  return BasisMapOperator(in_, out_, to_sparse());
}

AmplitudeVector apply(const BasisMapOperator& op, const AmplitudeVector& v) {
  require_same(op.in_, v.basis_ptr(), "apply");
  Eigen::VectorXcd out = std::visit(
      [&](const auto& m) -> Eigen::VectorXcd { return m * v.amplitudes(); },
      op.m_);
  return AmplitudeVector(op.out_, std::move(out));
}

BasisMapOperator adjoint(const BasisMapOperator& op) {
  return std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        M adj = m.adjoint();
        return BasisMapOperator(op.out_, op.in_, std::move(adj));
      },
      op.m_);
}

BasisMapOperator compose(const BasisMapOperator& g, const BasisMapOperator& f) {
  require_same(g.in_, f.out_, "compose");
  if (g.is_dense() && f.is_dense()) {
    DenseMatrix p = std::get<DenseMatrix>(g.m_) * std::get<DenseMatrix>(f.m_);
    return BasisMapOperator(f.in_, g.out_,
                            BasisMapOperator::store(std::move(p), Storage::automatic));
  }
  SparseMatrix p = (g.to_sparse() * f.to_sparse()).pruned();
  return BasisMapOperator(f.in_, g.out_,
                          BasisMapOperator::store(std::move(p), Storage::automatic));
}

BasisMapOperator operator+(const BasisMapOperator& a, const BasisMapOperator& b) {
  require_same(a.in_, b.in_, "operator sum (input)");
  require_same(a.out_, b.out_, "operator sum (output)");
  if (a.is_dense() && b.is_dense()) {
    DenseMatrix s = std::get<DenseMatrix>(a.m_) + std::get<DenseMatrix>(b.m_);
    return BasisMapOperator(a.in_, a.out_, std::move(s));
  }
  SparseMatrix s = a.to_sparse() + b.to_sparse();
  return BasisMapOperator(a.in_, a.out_,
                          BasisMapOperator::store(std::move(s), Storage::automatic));
}

double unitarity_residual(const BasisMapOperator& op) {
  if (op.rows() != op.cols()) {
    throw PreconditionError("unitarity residual of a non-square " +
                            std::to_string(op.rows()) + "x" +
                            std::to_string(op.cols()) + " operator");
  }
  const auto n = static_cast<Eigen::Index>(op.rows());
  if (n == 0) return 0.0;
  if (const auto* d = std::get_if<DenseMatrix>(&op.m_)) {
    const DenseMatrix id = DenseMatrix::Identity(n, n);
    const double left = (d->adjoint() * *d - id).cwiseAbs().maxCoeff();
    const double right = (*d * d->adjoint() - id).cwiseAbs().maxCoeff();
    return std::max(left, right);
  }
  const auto& s = std::get<SparseMatrix>(op.m_);
  SparseMatrix id(n, n);
  id.setIdentity();
  auto max_abs = [](const SparseMatrix& m) {
    double best = 0.0;
    for (Eigen::Index r = 0; r < m.outerSize(); ++r) {
      for (SparseMatrix::InnerIterator it(m, r); it; ++it) {
        best = std::max(best, std::abs(it.value()));
      }
    }
    return best;
  };
  const SparseMatrix adj = s.adjoint();
  const SparseMatrix left = SparseMatrix(adj * s) - id;
  const SparseMatrix right = SparseMatrix(s * adj) - id;
  return std::max(max_abs(left), max_abs(right));
}

void write_operator_csv(std::ostream& os, const BasisMapOperator& op) {
  os << "dims," << op.rows() << "," << op.cols() << "\n";
  for (const auto& e : op.nonzeros()) {
    os << e.row << "," << e.col << "," << format17(e.value.real()) << ","
       << format17(e.value.imag()) << "\n";
  }
}

namespace {

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    fields.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return fields;
}

std::size_t parse_index(const std::string& s, std::size_t line_no) {
  std::size_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("line " + std::to_string(line_no) + ": bad index '" + s +
                     "'");
  }
  return v;
}

double parse_real(const std::string& s, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" + s +
                     "'");
  }
}

}  // namespace

OperatorTable read_operator_csv(std::istream& is) {
  OperatorTable t;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto f = split_commas(line);
    if (!have_header) {
      if (f.size() != 3 || f[0] != "dims") {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected header 'dims,<rows>,<cols>'");
      }
      t.rows = parse_index(f[1], line_no);
      t.cols = parse_index(f[2], line_no);
      have_header = true;
      continue;
    }
    if (f.size() != 4) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'row,col,re,im'");
    }
    MatrixEntry e{parse_index(f[0], line_no), parse_index(f[1], line_no),
                  Complex(parse_real(f[2], line_no), parse_real(f[3], line_no))};
    if (e.row >= t.rows || e.col >= t.cols) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": entry outside declared dims");
    }
    t.entries.push_back(e);
  }
  if (!have_header) throw ParseError("operator file has no 'dims' header");
  return t;
}

BasisMapOperator operator_from_table(const OperatorTable& table,
                                     Basis::Ptr input, Basis::Ptr output) {
  if (input->dim() != table.cols || output->dim() != table.rows) {
    throw BasisError("operator table is " + std::to_string(table.rows) + "x" +
                     std::to_string(table.cols) + " but bases give " +
                     std::to_string(output->dim()) + "x" +
                     std::to_string(input->dim()));
  }
  return BasisMapOperator::from_entries(std::move(input), std::move(output),
                                        table.entries);
}

}  // namespace topomap
