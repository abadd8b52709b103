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

#include "oracles.h"
#include "topomap/errors.h"
#include "topomap/qubit_maps.h"
#include "topomap/simulate.h"

namespace topomap {
namespace {

using testing::Rng;

TEST(BitString, ParseAndPrint) {
  const BitString b = BitString::parse("0110");
  EXPECT_EQ(b.size(), 4u);
  EXPECT_TRUE(b[1]);
  EXPECT_FALSE(b[3]);
  EXPECT_EQ(b.popcount(), 2u);
  EXPECT_EQ(b.to_string(), "0110");
  EXPECT_THROW(BitString::parse("01a"), ParseError);
}

TEST(MembershipVector, RangeAndCrispness) {
  EXPECT_THROW(MembershipVector({0.5, 1.5}), PreconditionError);
  EXPECT_THROW(MembershipVector({-0.1}), PreconditionError);
  EXPECT_TRUE(MembershipVector({0.0, 1.0}).is_crisp());
  EXPECT_FALSE(MembershipVector({0.0, 0.5}).is_crisp());
  const auto c = MembershipVector::crisp(4, {0, 2});
  EXPECT_EQ(c.values(), (std::vector<double>{1.0, 0.0, 1.0, 0.0}));
  EXPECT_THROW(MembershipVector::crisp(2, {2}), PreconditionError);
}

TEST(SimulateBasis, Basics) {
  EXPECT_EQ(simulate_basis(GateCircuit(2), BitString::parse("01")).to_string(), "01");
  EXPECT_EQ(simulate_basis(GateCircuit(2, {Gate::x(0)}), BitString::parse("00")).to_string(),
            "10");
  EXPECT_EQ(simulate_basis(GateCircuit(3, {Gate::cswap(0, 1, 2)}), BitString::parse("110"))
                .to_string(),
            "101");
  EXPECT_EQ(simulate_basis(GateCircuit(2, {Gate::swap(0, 1)}), BitString::parse("10"))
                .to_string(),
            "01");
  EXPECT_THROW(simulate_basis(GateCircuit(2), BitString::parse("0")), PreconditionError);
}

TEST(Statevector, CapNamedInError) {
  try {
    simulate_statevector(GateCircuit(21), MembershipVector(std::vector<double>(21, 0.0)));
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("20"), std::string::npos);
  }
  EXPECT_NO_THROW(simulate_statevector(GateCircuit(21), MembershipVector(std::vector<double>(21, 0.0)), 21));
}

TEST(Statevector, ProductStateOrdering) {
  // Qubit 0 is the leftmost character of a label.
  const auto s = product_state(MembershipVector({1.0, 0.0, 1.0}));
  EXPECT_EQ(s.at("101"), Complex(1.0));
  EXPECT_EQ(s.squared_norm(), 1.0);
}

TEST(Statevector, AgreesWithBasisReplay) {
  Rng rng(91);
  std::vector<GateCircuit> circuits;
  circuits.push_back(unary_map_circuit(FiniteFunction::indexed(4, {1, 1, 2, 3})).circuit);
  circuits.push_back(unary_map_circuit(FiniteFunction::indexed(4, {0, 0, 0, 0})).circuit);
  circuits.push_back(demux_circuit(3).circuit);
  circuits.push_back(outer_product_circuit(2).circuit);
  circuits.push_back(binary_map_circuit(BinaryFunction({"0", "1"}, {"0", "1"}, {0, 1, 1, 1})).circuit);
  for (const auto& c : circuits) {
    const std::size_t q = c.qubit_count();
    ASSERT_LE(q, 20u);
    for (int trial = 0; trial < 32; ++trial) {
      const std::uint64_t v = rng() & ((std::uint64_t{1} << q) - 1);
      std::vector<double> m(q);
      BitString s(q);
      for (std::size_t b = 0; b < q; ++b) {
        const bool bit = (v >> (q - 1 - b)) & 1;
        m[b] = bit ? 1.0 : 0.0;
        s.set(b, bit);
      }
      const auto state = simulate_statevector(c, MembershipVector(m));
      const auto expected = simulate_basis(c, s).to_string();
      EXPECT_EQ(state.at(expected), Complex(1.0));
    }
  }
}

TEST(Statevector, NormPreservedOnRandomProducts) {
  Rng rng(93);
  const GateCircuit c = unary_map_circuit(FiniteFunction::indexed(5, {0, 0, 1, 1, 1})).circuit;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> m(c.qubit_count());
    for (auto& x : m) x = testing::uniform_real(rng, 0.0, 1.0);
    EXPECT_NEAR(simulate_statevector(c, MembershipVector(m)).squared_norm(), 1.0, 1e-12);
  }
}

TEST(Layout, PrepareAndRead) {
  const MapCircuit mc = unary_map_circuit(FiniteFunction::indexed(4, {1, 1, 2, 3}));
  const BitString in = prepare_input(mc.layout, {{0, 3}});
  EXPECT_EQ(in.to_string(), "100101");
  EXPECT_THROW(prepare_input(mc.layout, {{4}}), PreconditionError);
  EXPECT_THROW(prepare_input(mc.layout, {{0}, {1}}), PreconditionError);
  const auto m = prepare_memberships(mc.layout, {MembershipVector({0.5, 0.0, 0.0, 1.0})});
  EXPECT_EQ(m.values(), (std::vector<double>{0.5, 0.0, 0.0, 1.0, 0.0, 1.0}));
}

TEST(Reversibility, InverseReplayRestoresInputs) {
  Rng rng(97);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = testing::uniform(rng, 1, 5);
    const MapCircuit mc =
        unary_map_circuit(FiniteFunction::indexed(n, testing::random_mapping(rng, n, n)));
    const GateCircuit round = mc.circuit.then(mc.circuit.inverse());
    const std::size_t q = mc.circuit.qubit_count();
    for (int k = 0; k < 50; ++k) {
      BitString s(q);
      for (std::size_t b = 0; b < q; ++b) s.set(b, rng() & 1);
      EXPECT_EQ(simulate_basis(round, s), s);
    }
  }
}

}  // namespace
}  // namespace topomap
