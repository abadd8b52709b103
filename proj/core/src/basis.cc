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

#include "topomap/basis.h"

#include <string>

#include "topomap/errors.h"

namespace topomap {

Basis::Ptr Basis::from_labels(std::vector<std::string> labels,
                              std::vector<std::optional<std::size_t>> values) {
  if (!values.empty() && values.size() != labels.size()) {
    throw BasisError("readout value count " + std::to_string(values.size()) +
                     " does not match label count " +
                     std::to_string(labels.size()));
  }
  auto b = std::shared_ptr<Basis>(new Basis());
  b->dim_ = labels.size();
  b->index_.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = b->index_.emplace(labels[i], i);
    if (!inserted) {
      throw BasisError("duplicate basis label '" + labels[i] + "'");
    }
  }
  if (values.empty()) {
    values.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) values[i] = i;
  }
  b->labels_ = std::move(labels);
  b->values_ = std::move(values);
  b->factor_dims_ = {b->dim_};
  return b;
}

Basis::Ptr Basis::indexed(std::string_view prefix, std::size_t dim) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t i = 1; i <= dim; ++i) {
    labels.push_back(std::string(prefix) + std::to_string(i));
  }
  return from_labels(std::move(labels));
}

Basis::Ptr Basis::qubit_register(std::size_t qubits) {
  if (qubits >= 63) {
    throw CapacityError("qubit register of " + std::to_string(qubits) +
                        " qubits has no addressable state space");
  }
  auto b = std::shared_ptr<Basis>(new Basis());
  b->qubits_ = qubits;
  b->dim_ = std::size_t{1} << qubits;
  b->factor_dims_ = {b->dim_};
  return b;
}

Basis::Ptr Basis::tensor(const Ptr& major, const Ptr& minor) {
  std::vector<std::string> labels;
  std::vector<std::optional<std::size_t>> values;
  labels.reserve(major->dim() * minor->dim());
  values.reserve(major->dim() * minor->dim());
  for (std::size_t i = 0; i < major->dim(); ++i) {
    const std::string head = major->label_text(i);
    for (std::size_t j = 0; j < minor->dim(); ++j) {
      labels.push_back(head + std::string(kTensorSeparator) +
                       minor->label_text(j));
      values.push_back(major->value(i));
    }
  }
  auto b = std::shared_ptr<Basis>(new Basis());
  b->dim_ = labels.size();
  b->labels_ = std::move(labels);
  b->values_ = std::move(values);
  b->factor_dims_ = major->factor_dims();
  b->factor_dims_.insert(b->factor_dims_.end(), minor->factor_dims().begin(),
                         minor->factor_dims().end());
  b->index_.reserve(b->dim_);
  for (std::size_t i = 0; i < b->labels_.size(); ++i) {
    if (!b->index_.emplace(b->labels_[i], i).second) {
      throw BasisError("duplicate composite label '" + b->labels_[i] + "'");
    }
  }
  return b;
}

BasisLabel Basis::label(std::size_t ordinal) const {
  return BasisLabel{label_text(ordinal), ordinal};
}

std::string Basis::label_text(std::size_t ordinal) const {
  if (ordinal >= dim_) {
    throw BasisError("ordinal " + std::to_string(ordinal) +
                     " out of range for basis of dimension " +
                     std::to_string(dim_));
  }
  if (qubits_ == 0 && !labels_.empty()) return labels_[ordinal];
  std::string bits(qubits_, '0');
  for (std::size_t q = 0; q < qubits_; ++q) {
    if ((ordinal >> (qubits_ - 1 - q)) & 1U) bits[q] = '1';
  }
  return bits;
}

std::optional<std::size_t> Basis::find(std::string_view text) const {
  if (qubits_ > 0) {
    if (text.size() != qubits_) return std::nullopt;
    std::size_t ordinal = 0;
    for (char c : text) {
      if (c != '0' && c != '1') return std::nullopt;
      ordinal = (ordinal << 1) | static_cast<std::size_t>(c == '1');
    }
    return ordinal;
  }
  auto it = index_.find(std::string(text));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Basis::index_of(std::string_view text) const {
  if (auto i = find(text)) return *i;
  throw BasisError("unknown basis label '" + std::string(text) + "'");
}

std::optional<std::size_t> Basis::value(std::size_t ordinal) const {
  if (ordinal >= dim_) {
    throw BasisError("ordinal " + std::to_string(ordinal) + " out of range");
  }
  if (qubits_ > 0) return ordinal;
  return values_[ordinal];
}

bool operator==(const Basis& a, const Basis& b) {
  if (&a == &b) return true;
  if (a.dim_ != b.dim_ || a.qubits_ != b.qubits_) return false;
  return a.labels_ == b.labels_;
}

bool same_basis(const Basis::Ptr& a, const Basis::Ptr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace topomap
