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

#include <gtest/gtest.h>

#include "topomap/amplitude_vector.h"
#include "topomap/basis.h"
#include "topomap/errors.h"

namespace topomap {
namespace {

TEST(Basis, LabelsAndOrdinals) {
  auto b = Basis::from_labels({"-1", "0", "1"});
  EXPECT_EQ(b->dim(), 3u);
  EXPECT_EQ(b->label_text(2), "1");
  EXPECT_EQ(b->index_of("0"), 1u);
  EXPECT_FALSE(b->find("7").has_value());
  EXPECT_EQ(b->value(2), 2u);
  EXPECT_THROW(b->index_of("7"), BasisError);
  EXPECT_THROW(b->label_text(3), BasisError);
}

TEST(Basis, DuplicateLabelsRejected) {
  EXPECT_THROW(Basis::from_labels({"a", "b", "a"}), BasisError);
}

TEST(Basis, IndexedLabels) {
  auto b = Basis::indexed("x", 3);
  EXPECT_EQ(b->label_text(0), "x1");
  EXPECT_EQ(b->label_text(2), "x3");
}

TEST(Basis, TensorIsRowMajorAndInheritsMajorValues) {
  auto a = Basis::from_labels({"p", "q"}, {std::nullopt, 0});
  auto b = Basis::from_labels({"r", "s", "t"});
  auto ab = Basis::tensor(a, b);
  ASSERT_EQ(ab->dim(), 6u);
  EXPECT_EQ(ab->label_text(1 * 3 + 2), "q⊗t");
  EXPECT_EQ(ab->index_of("p⊗s"), 1u);
  EXPECT_FALSE(ab->value(2).has_value());
  EXPECT_EQ(ab->value(4), 0u);
  EXPECT_TRUE(ab->is_composite());
  EXPECT_EQ(ab->factor_dims(), (std::vector<std::size_t>{2, 3}));
}

TEST(Basis, QubitRegisterBitstrings) {
  auto r = Basis::qubit_register(3);
  EXPECT_EQ(r->dim(), 8u);
  EXPECT_EQ(r->label_text(1), "001");
  EXPECT_EQ(r->label_text(4), "100");
  EXPECT_EQ(r->index_of("110"), 6u);
  EXPECT_FALSE(r->find("11").has_value());
  EXPECT_THROW(Basis::qubit_register(63), CapacityError);
}

TEST(Basis, Equality) {
  EXPECT_TRUE(same_basis(Basis::from_labels({"a", "b"}), Basis::from_labels({"a", "b"})));
  EXPECT_FALSE(same_basis(Basis::from_labels({"a", "b"}), Basis::from_labels({"b", "a"})));
}

TEST(AmplitudeVector, NormBound) {
  auto b = Basis::indexed("x", 2);
  Eigen::VectorXcd v(2);
  v << 1.0, 1.0;
  EXPECT_THROW(AmplitudeVector(b, v), PreconditionError);
  v << std::sqrt(0.5), std::sqrt(0.5);
  AmplitudeVector a(b, v);
  EXPECT_TRUE(a.is_pure_input());
  EXPECT_NEAR(a.norm(), 1.0, 1e-15);
  EXPECT_FALSE(AmplitudeVector::zero(b).is_pure_input());
}

TEST(AmplitudeVector, BasisVectorsAndLookup) {
  auto b = Basis::from_labels({"u", "v", "w"});
  auto e = AmplitudeVector::basis_vector(b, "v");
  EXPECT_EQ(e.at("v"), Complex(1.0));
  EXPECT_EQ(e.at("w"), Complex(0.0));
  EXPECT_THROW(AmplitudeVector::basis_vector(b, 3), BasisError);
}

TEST(AmplitudeVector, TensorAndInnerProduct) {
  auto a = AmplitudeVector::basis_vector(Basis::indexed("a", 2), 1);
  auto b = AmplitudeVector::basis_vector(Basis::indexed("b", 3), 2);
  auto ab = tensor(a, b);
  EXPECT_EQ(ab.dim(), 6u);
  EXPECT_EQ(ab[1 * 3 + 2], Complex(1.0));
  EXPECT_EQ(ab.at("a2⊗b3"), Complex(1.0));
  EXPECT_EQ(inner_product(ab, ab), Complex(1.0));
  EXPECT_THROW(inner_product(a, b), BasisError);
}

TEST(AmplitudeVector, InnerProductConjugatesFirstArgument) {
  auto b = Basis::indexed("x", 1);
  Eigen::VectorXcd u(1), v(1);
  u << Complex(0.0, 1.0);
  v << Complex(1.0, 0.0);
  EXPECT_EQ(inner_product(AmplitudeVector(b, u), AmplitudeVector(b, v)),
            Complex(0.0, -1.0));
}

}  // namespace
}  // namespace topomap
