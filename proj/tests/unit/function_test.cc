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
#include "topomap/finite_function.h"

namespace topomap {
namespace {

using testing::Rng;

TEST(FiniteFunction, AbsStatistics) {
  const FiniteFunction f({"-2", "-1", "0", "1", "2"}, {"0", "1", "2"}, {2, 1, 0, 1, 2});
  const auto& s = f.stats();
  EXPECT_EQ(s.n, 5u);
  EXPECT_EQ(s.m, 3u);
  EXPECT_EQ(s.image_size, 3u);
  EXPECT_EQ(s.m_nr, 0u);
  EXPECT_EQ(s.n_b, 1u);
  EXPECT_EQ(s.n_n, 4u);
  EXPECT_EQ(s.m_n, 2u);
  EXPECT_EQ(s.multiplicities, (std::vector<std::size_t>{1, 2, 2}));
  EXPECT_TRUE(f.is_surjective());
  EXPECT_FALSE(f.is_injective());
  EXPECT_EQ(f.preimage(2), (std::vector<std::size_t>{0, 4}));
}

TEST(FiniteFunction, IdentityIsAllBijective) {
  const FiniteFunction f = FiniteFunction::indexed(4, {0, 1, 2, 3});
  EXPECT_EQ(f.stats().n_b, 4u);
  EXPECT_EQ(f.stats().n_n, 0u);
  EXPECT_TRUE(f.is_bijective());
  EXPECT_EQ(f.domain()->label_text(0), "x1");
  EXPECT_EQ(f.codomain()->label_text(3), "y4");
}

TEST(FiniteFunction, RangeAndNonRange) {
  const FiniteFunction f = FiniteFunction::indexed(5, {3, 1, 3});
  EXPECT_EQ(f.range(), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(f.non_range(), (std::vector<std::size_t>{0, 2, 4}));
}

TEST(FiniteFunction, InvalidTables) {
  EXPECT_THROW(FiniteFunction::indexed(2, {0, 2}), PreconditionError);
  EXPECT_THROW(FiniteFunction({"a", "b"}, {"c"}, {0}), PreconditionError);
  EXPECT_THROW(FiniteFunction({}, {"c"}, {}), PreconditionError);
  EXPECT_THROW(FiniteFunction({"a"}, {}, {0}), PreconditionError);
  EXPECT_THROW(FiniteFunction({"a", "a"}, {"c"}, {0, 0}), BasisError);
}

TEST(FiniteFunction, StatsMatchOracleOnRandomTables) {
  Rng rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = testing::uniform(rng, 1, 10);
    const std::size_t m = testing::uniform(rng, 1, 10);
    const auto map = testing::random_mapping(rng, n, m);
    const FiniteFunction f = FiniteFunction::indexed(m, map);
    const auto c = testing::count_classes(map, m);
    const auto& s = f.stats();
    EXPECT_EQ(s.n_b, c.n_b);
    EXPECT_EQ(s.n_n, c.n_n);
    EXPECT_EQ(s.m_n, c.m_n);
    EXPECT_EQ(s.m_nr, c.m_nr);
    EXPECT_EQ(s.image_size, c.image);
    EXPECT_EQ(s.n_b + s.n_n, s.n);
    EXPECT_EQ(s.n_b + s.m_n + s.m_nr, s.m);
    std::size_t total = 0;
    for (std::size_t y = 0; y < m; ++y) {
      EXPECT_EQ(s.multiplicities[y], testing::preimage_count(map, y));
      total += s.multiplicities[y];
    }
    EXPECT_EQ(total, n);
  }
}

TEST(BinaryFunction, FlattenIsFirstArgumentMajor) {
  const BinaryFunction g({"0", "1"}, {"0", "1"}, {0, 1, 1, 1});
  EXPECT_EQ(g(1, 0), 1u);
  EXPECT_EQ(g(0, 0), 0u);
  const FiniteFunction flat = g.flatten();
  EXPECT_EQ(flat.domain_size(), 4u);
  EXPECT_EQ(flat.domain()->label_text(1), "(0,1)");
  EXPECT_EQ(flat(2), 1u);
  EXPECT_THROW(BinaryFunction({"0", "1"}, {"0"}, {0, 0, 0}), PreconditionError);
}

TEST(PadToSquare, WidensTheSmallerSide) {
  const FiniteFunction wide = FiniteFunction::indexed(4, {2, 2});
  const FiniteFunction p = pad_to_square(wide);
  EXPECT_EQ(p.domain_size(), 4u);
  EXPECT_EQ(p.codomain_size(), 4u);
  EXPECT_EQ(p.domain()->label_text(2), "<pad1>");
  // Padded elements land on distinct non-range values.
  EXPECT_EQ(p(2), 0u);
  EXPECT_EQ(p(3), 1u);
  EXPECT_EQ(p.stats().multiplicities[2], 2u);

  const FiniteFunction tall = FiniteFunction::indexed(1, {0, 0, 0});
  const FiniteFunction q = pad_to_square(tall);
  EXPECT_EQ(q.codomain_size(), 3u);
  EXPECT_EQ(q.codomain()->label_text(2), "<pad2>");
  EXPECT_EQ(q.mapping(), tall.mapping());
}

}  // namespace
}  // namespace topomap
