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

#include <sstream>

#include "oracles.h"
#include "topomap/basis_map_operator.h"
#include "topomap/basis_maps.h"
#include "topomap/errors.h"

namespace topomap {
namespace {

using testing::Rng;

BasisMapOperator permutation_op(const Basis::Ptr& b, const std::vector<std::size_t>& p,
                                Storage storage = Storage::automatic) {
  std::vector<MatrixEntry> e;
  for (std::size_t i = 0; i < p.size(); ++i) e.push_back({p[i], i, 1.0});
  return BasisMapOperator::from_entries(b, b, e, storage);
}

AmplitudeVector random_unit(Rng& rng, const Basis::Ptr& b) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(b->dim()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v[i] = Complex(testing::uniform_real(rng, -1, 1), testing::uniform_real(rng, -1, 1));
  }
  v /= v.norm();
  return AmplitudeVector(b, v);
}

TEST(Tensor, BasisTimesBasisLandsAtIndexZero) {
  auto a = AmplitudeVector::basis_vector(Basis::indexed("x", 2), 0);
  auto w = AmplitudeVector::basis_vector(Basis::indexed("w", 3), 0);
  auto t = tensor(a, w);
  EXPECT_EQ(t.dim(), 6u);
  EXPECT_EQ(t[0], Complex(1.0));
  EXPECT_EQ(t.basis().label_text(0), "x1⊗w1");
}

TEST(Tensor, Distributes) {
  auto xb = Basis::indexed("x", 2);
  Eigen::VectorXcd v(2);
  v << 0.6, 0.8;
  auto t = tensor(AmplitudeVector(xb, v),
                  AmplitudeVector::basis_vector(Basis::indexed("w", 2), 0));
  EXPECT_EQ(t.at("x1⊗w1"), Complex(0.6));
  EXPECT_EQ(t.at("x2⊗w1"), Complex(0.8));
  EXPECT_EQ(t.at("x2⊗w2"), Complex(0.0));
}

TEST(Tensor, NormIsMultiplicative) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_unit(rng, Basis::indexed("a", testing::uniform(rng, 1, 6)));
    auto b = random_unit(rng, Basis::indexed("b", testing::uniform(rng, 1, 6)));
    EXPECT_NEAR(tensor(a, b).norm(), a.norm() * b.norm(), 1e-14);
  }
}

TEST(Tensor, IndexConvention) {
  auto ab = Basis::indexed("a", 3);
  auto bb = Basis::indexed("b", 4);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      auto t = tensor(AmplitudeVector::basis_vector(ab, i),
                      AmplitudeVector::basis_vector(bb, j));
      EXPECT_EQ(t[i * 4 + j], Complex(1.0));
      EXPECT_NEAR(t.squared_norm(), 1.0, 0.0);
    }
  }
}

TEST(Apply, IdentityAndPermutation) {
  Rng rng(3);
  auto b = Basis::indexed("x", 5);
  auto v = random_unit(rng, b);
  auto iv = apply(BasisMapOperator::identity(b), v);
  EXPECT_EQ(iv.amplitudes(), v.amplitudes());

  const std::vector<std::size_t> p{2, 0, 4, 1, 3};
  auto op = permutation_op(b, p);
  for (std::size_t i = 0; i < 5; ++i) {
    auto r = apply(op, AmplitudeVector::basis_vector(b, i));
    EXPECT_EQ(r[p[i]], Complex(1.0));
    EXPECT_NEAR(r.norm(), 1.0, 0.0);
  }
}

TEST(Apply, BasisMismatch) {
  auto op = BasisMapOperator::identity(Basis::indexed("x", 3));
  EXPECT_THROW(apply(op, AmplitudeVector::basis_vector(Basis::indexed("y", 3), 0)),
               BasisError);
}

TEST(Apply, UnitaryPreservesNormAndInnerProducts) {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = testing::uniform(rng, 1, 6);
    const std::size_t m = testing::uniform(rng, 1, 6);
    const FiniteFunction f = FiniteFunction::indexed(m, testing::random_mapping(rng, n, m));
    const auto u = arbitrary_unitary(f);
    const auto phi = random_unit(rng, u.input_basis_ptr());
    const auto psi = random_unit(rng, u.input_basis_ptr());
    const auto uphi = apply(u, phi);
    const auto upsi = apply(u, psi);
    EXPECT_NEAR(uphi.norm(), 1.0, 1e-12);
    EXPECT_LE(std::abs(inner_product(uphi, upsi) - inner_product(phi, psi)), 1e-10);
  }
}

TEST(Adjoint, InvertsBijectionKernel) {
  const FiniteFunction f = FiniteFunction::indexed(4, {1, 2, 3, 0});
  const auto t = bijection_kernel(f);
  const auto tt = compose(adjoint(t), t);
  EXPECT_EQ(tt.to_dense(), Eigen::MatrixXcd::Identity(4, 4));
}

TEST(Adjoint, IdentityAndInvolution) {
  auto b = Basis::indexed("x", 3);
  EXPECT_EQ(adjoint(BasisMapOperator::identity(b)).to_dense(),
            Eigen::MatrixXcd::Identity(3, 3));
  Rng rng(8);
  const FiniteFunction f = FiniteFunction::indexed(3, testing::random_mapping(rng, 4, 3));
  const auto u = arbitrary_unitary(f);
  EXPECT_EQ(adjoint(adjoint(u)).to_dense(), u.to_dense());
  EXPECT_TRUE(same_basis(adjoint(u).input_basis_ptr(), u.output_basis_ptr()));
}

TEST(Adjoint, ConjugatesEntries) {
  auto a = Basis::indexed("a", 2);
  auto b = Basis::indexed("b", 3);
  auto op = BasisMapOperator::from_entries(a, b, {{2, 1, Complex(0.5, 0.25)}});
  auto adj = adjoint(op);
  EXPECT_EQ(adj.rows(), 2u);
  EXPECT_EQ(adj.entry(1, 2), Complex(0.5, -0.25));
}

TEST(Compose, IdentityIsNeutral) {
  const FiniteFunction f = FiniteFunction::indexed(3, {2, 0, 2, 1});
  const auto u = surjection_unitary(f);
  const auto left = compose(BasisMapOperator::identity(u.output_basis_ptr()), u);
  EXPECT_EQ(left.to_dense(), u.to_dense());
}

TEST(Compose, PermutationsCompose) {
  Rng rng(21);
  auto b = Basis::indexed("x", 7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = testing::random_permutation(rng, 7);
    const auto q = testing::random_permutation(rng, 7);
    std::vector<std::size_t> qp(7);
    for (std::size_t i = 0; i < 7; ++i) qp[i] = q[p[i]];
    const auto c = compose(permutation_op(b, q), permutation_op(b, p));
    EXPECT_EQ(c.to_dense(), permutation_op(b, qp).to_dense());
  }
}

TEST(Compose, AdjointTimesUnitaryForEveryKind) {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = testing::uniform(rng, 1, 5);
    const std::size_t m = testing::uniform(rng, 1, 5);
    const FiniteFunction f = FiniteFunction::indexed(m, testing::random_mapping(rng, n, m));
    const auto u = arbitrary_unitary(f);
    EXPECT_LE(unitarity_residual(compose(adjoint(u), u)), 1e-12);
  }
}

TEST(Compose, BasisMismatch) {
  auto a = BasisMapOperator::identity(Basis::indexed("a", 2));
  auto b = BasisMapOperator::identity(Basis::indexed("b", 2));
  EXPECT_THROW(compose(a, b), BasisError);
}

TEST(UnitarityResidual, IdentityIsZero) {
  EXPECT_EQ(unitarity_residual(BasisMapOperator::identity(Basis::indexed("x", 6))), 0.0);
}

TEST(UnitarityResidual, NonSquareRejected) {
  auto op = BasisMapOperator::zero(Basis::indexed("a", 2), Basis::indexed("b", 3));
  EXPECT_THROW(unitarity_residual(op), PreconditionError);
}

TEST(UnitarityResidual, InjectionWithAndWithoutCompletion) {
  const FiniteFunction f = FiniteFunction::indexed(3, {1, 2});
  EXPECT_LE(unitarity_residual(injection_unitary(f)), 1e-12);
  const auto parts = injection_components(f);
  ASSERT_FALSE(parts.empty());
  EXPECT_GE(unitarity_residual(parts.front().op), 1.0);
}

TEST(Storage, DenseAndSparseAgree) {
  Rng rng(17);
  const FiniteFunction f = FiniteFunction::indexed(5, testing::random_mapping(rng, 6, 5));
  const auto u = arbitrary_unitary(f);
  const auto d = u.with_storage(Storage::dense);
  const auto s = u.with_storage(Storage::sparse);
  EXPECT_TRUE(d.is_dense());
  EXPECT_FALSE(s.is_dense());
  EXPECT_EQ(d.to_dense(), s.to_dense());
  EXPECT_NEAR(unitarity_residual(d), unitarity_residual(s), 1e-15);
  const auto v = AmplitudeVector::basis_vector(u.input_basis_ptr(), 3);
  EXPECT_EQ(apply(d, v).amplitudes(), apply(s, v).amplitudes());
  EXPECT_LE((compose(adjoint(s), s).to_dense() - compose(adjoint(d), d).to_dense())
                .cwiseAbs()
                .maxCoeff(),
            1e-15);
}

TEST(Storage, AutomaticSwitchesAboveLimit) {
  auto small = BasisMapOperator::identity(Basis::indexed("x", kDenseDimLimit));
  auto big = BasisMapOperator::identity(Basis::indexed("x", kDenseDimLimit + 1));
  EXPECT_TRUE(small.is_dense());
  EXPECT_FALSE(big.is_dense());
  EXPECT_EQ(unitarity_residual(big), 0.0);
}

TEST(OperatorCsv, RoundTripIsBitExact) {
  Rng rng(19);
  const FiniteFunction f = FiniteFunction::indexed(3, testing::random_surjection(rng, 6, 3));
  const auto u = surjection_unitary(f);
  std::stringstream ss;
  write_operator_csv(ss, u);
  const std::string text = ss.str();
  EXPECT_EQ(text.rfind("dims,6,6\n", 0), 0u);
  const auto table = read_operator_csv(ss);
  const auto back = operator_from_table(table, u.input_basis_ptr(), u.output_basis_ptr());
  EXPECT_EQ(back.to_dense(), u.to_dense());
  std::stringstream again;
  write_operator_csv(again, back);
  EXPECT_EQ(again.str(), text);
}

TEST(OperatorCsv, SeventeenDigitsAndNoNegativeZero) {
  auto b = Basis::indexed("x", 1);
  auto op = BasisMapOperator::from_entries(b, b, {{0, 0, Complex(1.0 / 3.0, -0.0)}});
  std::stringstream ss;
  write_operator_csv(ss, op);
  EXPECT_EQ(ss.str(), "dims,1,1\n0,0,0.33333333333333331,0\n");
}

TEST(OperatorCsv, Malformed) {
  std::stringstream no_header("0,0,1,0\n");
  EXPECT_THROW(read_operator_csv(no_header), ParseError);
  std::stringstream outside("dims,2,2\n2,0,1,0\n");
  EXPECT_THROW(read_operator_csv(outside), ParseError);
  std::stringstream bad_number("dims,2,2\n0,0,one,0\n");
  EXPECT_THROW(read_operator_csv(bad_number), ParseError);
  std::stringstream comments("# note\ndims,1,1\n\n0,0,1,0\n");
  EXPECT_EQ(read_operator_csv(comments).entries.size(), 1u);
}

TEST(FromEntries, DuplicatesSumAndZerosPrune) {
  auto b = Basis::indexed("x", 2);
  auto op = BasisMapOperator::from_entries(
      b, b, {{0, 0, 0.5}, {0, 0, 0.5}, {1, 1, 1.0}, {1, 1, -1.0}}, Storage::sparse);
  EXPECT_EQ(op.entry(0, 0), Complex(1.0));
  EXPECT_EQ(op.nonzeros().size(), 1u);
}

}  // namespace
}  // namespace topomap
