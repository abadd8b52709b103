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

#include "topomap/finite_function.h"

#include <string>

#include "topomap/errors.h"

namespace topomap {
namespace {

std::vector<std::string> labels_of(const Basis& b) {
  std::vector<std::string> out;
  out.reserve(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) out.push_back(b.label_text(i));
  return out;
}

}  // namespace

FiniteFunction::FiniteFunction(std::vector<std::string> domain,
                               std::vector<std::string> codomain,
                               std::vector<std::size_t> mapping)
    : mapping_(std::move(mapping)) {
  if (domain.size() != mapping_.size()) {
    throw PreconditionError("function table has " +
                            std::to_string(mapping_.size()) +
                            " map entries for " + std::to_string(domain.size()) +
                            " domain labels");
  }
  if (domain.empty()) throw PreconditionError("function domain is empty");
  if (codomain.empty()) throw PreconditionError("function codomain is empty");
  domain_ = Basis::from_labels(std::move(domain));
  codomain_ = Basis::from_labels(std::move(codomain));

  const std::size_t m = codomain_->dim();
  stats_.n = mapping_.size();
  stats_.m = m;
  stats_.multiplicities.assign(m, 0);
  for (std::size_t x = 0; x < mapping_.size(); ++x) {
    if (mapping_[x] >= m) {
      throw PreconditionError("map entry " + std::to_string(x) + " = " +
                              std::to_string(mapping_[x]) +
                              " is outside the codomain of size " +
                              std::to_string(m));
    }
    ++stats_.multiplicities[mapping_[x]];
  }
  for (std::size_t y = 0; y < m; ++y) {
    const std::size_t k = stats_.multiplicities[y];
    if (k == 0) ++stats_.m_nr;
    if (k > 0) ++stats_.image_size;
    if (k == 1) ++stats_.n_b;
  }
  stats_.n_n = stats_.n - stats_.n_b;
  stats_.m_n = stats_.image_size - stats_.n_b;
}

FiniteFunction FiniteFunction::indexed(std::size_t m,
                                       std::vector<std::size_t> mapping) {
  std::vector<std::string> domain;
  std::vector<std::string> codomain;
  for (std::size_t i = 1; i <= mapping.size(); ++i) {
    domain.push_back("x" + std::to_string(i));
  }
  for (std::size_t i = 1; i <= m; ++i) {
    codomain.push_back("y" + std::to_string(i));
  }
  return FiniteFunction(std::move(domain), std::move(codomain),
                        std::move(mapping));
}

std::vector<std::string> FiniteFunction::domain_labels() const {
  return labels_of(*domain_);
}

std::vector<std::string> FiniteFunction::codomain_labels() const {
  return labels_of(*codomain_);
}

std::vector<std::size_t> FiniteFunction::preimage(std::size_t y) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < mapping_.size(); ++x) {
    if (mapping_[x] == y) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> FiniteFunction::range() const {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < stats_.m; ++y) {
    if (stats_.multiplicities[y] > 0) out.push_back(y);
  }
  return out;
}

std::vector<std::size_t> FiniteFunction::non_range() const {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < stats_.m; ++y) {
    if (stats_.multiplicities[y] == 0) out.push_back(y);
  }
  return out;
}

bool operator==(const FiniteFunction& a, const FiniteFunction& b) {
  return a.mapping_ == b.mapping_ && *a.domain_ == *b.domain_ &&
         *a.codomain_ == *b.codomain_;
}

BinaryFunction::BinaryFunction(std::vector<std::string> arguments,
                               std::vector<std::string> codomain,
                               std::vector<std::size_t> table)
    : table_(std::move(table)) {
  if (arguments.empty()) throw PreconditionError("argument grid is empty");
  if (codomain.empty()) throw PreconditionError("codomain is empty");
  const std::size_t n = arguments.size();
  if (table_.size() != n * n) {
    throw PreconditionError("binary table has " +
                            std::to_string(table_.size()) +
                            " entries, expected n^2 = " + std::to_string(n * n));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= codomain.size()) {
      throw PreconditionError("table entry " + std::to_string(i) +
                              " is outside the codomain");
    }
  }
  arguments_ = Basis::from_labels(std::move(arguments));
  codomain_ = Basis::from_labels(std::move(codomain));
}

std::vector<std::string> BinaryFunction::argument_labels() const {
  return labels_of(*arguments_);
}

std::vector<std::string> BinaryFunction::codomain_labels() const {
  return labels_of(*codomain_);
}

FiniteFunction BinaryFunction::flatten() const {
  const std::size_t n = argument_size();
  std::vector<std::string> pairs;
  pairs.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      pairs.push_back("(" + arguments_->label_text(a) + "," +
                      arguments_->label_text(b) + ")");
    }
  }
  return FiniteFunction(std::move(pairs), codomain_labels(), table_);
}

bool operator==(const BinaryFunction& a, const BinaryFunction& b) {
  return a.table_ == b.table_ && *a.arguments_ == *b.arguments_ &&
         *a.codomain_ == *b.codomain_;
}

FiniteFunction pad_to_square(const FiniteFunction& f) {
  const std::size_t n = f.domain_size();
  const std::size_t m = f.codomain_size();
  auto domain = f.domain_labels();
  auto codomain = f.codomain_labels();
  auto mapping = f.mapping();
  if (n < m) {
    const auto free = f.non_range();  // at least m - n of them
    for (std::size_t k = 0; k < m - n; ++k) {
      domain.push_back("<pad" + std::to_string(k + 1) + ">");
      mapping.push_back(free[k]);
    }
  } else {
    for (std::size_t k = 0; k < n - m; ++k) {
      codomain.push_back("<pad" + std::to_string(k + 1) + ">");
    }
  }
  return FiniteFunction(std::move(domain), std::move(codomain),
                        std::move(mapping));
}

}  // namespace topomap
