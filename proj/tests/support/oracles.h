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

#ifndef TOPOMAP_TESTS_ORACLES_H
#define TOPOMAP_TESTS_ORACLES_H

// Reference implementations used by the tests. Everything here is written
// from the definitions directly and shares no code with the library beyond
// the data types.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "topomap/basis_map_operator.h"
#include "topomap/finite_function.h"

namespace topomap::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::vector<std::size_t> random_mapping(Rng& rng, std::size_t n, std::size_t m) {
  std::vector<std::size_t> map(n);
  for (auto& y : map) y = uniform(rng, 0, m - 1);
  return map;
}

inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// n < m, distinct images.
inline std::vector<std::size_t> random_injection(Rng& rng, std::size_t n, std::size_t m) {
  auto p = random_permutation(rng, m);
  p.resize(n);
  return p;
}

// n >= m, every codomain element hit.
inline std::vector<std::size_t> random_surjection(Rng& rng, std::size_t n, std::size_t m) {
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i < m ? i : uniform(rng, 0, m - 1);
  std::shuffle(map.begin(), map.end(), rng);
  return map;
}

// Mixed-radix odometer over all m^n mappings.
inline bool next_mapping(std::vector<std::size_t>& map, std::size_t m) {
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (++map[i] < m) return true;
    map[i] = 0;
  }
  return false;
}

inline std::set<std::size_t> brute_image(const std::vector<std::size_t>& map,
                                         std::size_t m,
                                         const std::set<std::size_t>& s) {
  std::set<std::size_t> out;
  for (std::size_t y = 0; y < m; ++y) {
    for (std::size_t x = 0; x < map.size(); ++x) {
      if (map[x] == y && s.count(x)) out.insert(y);
    }
  }
  return out;
}

inline std::size_t preimage_count(const std::vector<std::size_t>& map, std::size_t y) {
  std::size_t c = 0;
  for (std::size_t v : map) c += v == y ? 1 : 0;
  return c;
}

struct Counts {
  std::size_t n = 0, m = 0, n_b = 0, n_n = 0, m_n = 0, m_nr = 0, image = 0;
};

inline Counts count_classes(const std::vector<std::size_t>& map, std::size_t m) {
  Counts c;
  c.n = map.size();
  c.m = m;
  for (std::size_t y = 0; y < m; ++y) {
    const std::size_t k = preimage_count(map, y);
    if (k == 0) ++c.m_nr;
    if (k >= 1) ++c.image;
    if (k == 1) ++c.n_b;
    if (k >= 2) {
      ++c.m_n;
      c.n_n += k;
    }
  }
  return c;
}

inline std::set<std::size_t> subset_from_bits(std::uint64_t bits, std::size_t n) {
  std::set<std::size_t> s;
  for (std::size_t i = 0; i < n; ++i) {
    if ((bits >> i) & 1) s.insert(i);
  }
  return s;
}

// max |U^dagger U - I| and max |U U^dagger - I| computed on a dense copy.
inline double dense_unitarity_error(const BasisMapOperator& op) {
  const Eigen::MatrixXcd u = op.to_dense();
  const auto n = u.rows();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  return std::max((u.adjoint() * u - id).cwiseAbs().maxCoeff(),
                  (u * u.adjoint() - id).cwiseAbs().maxCoeff());
}

// Nearest index on a sorted grid, ties to the lower point.
inline std::size_t nearest_on(const std::vector<double>& grid, double v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double d_best = std::abs(grid[best] - v);
    const double d = std::abs(grid[i] - v);
    const double tol = 1e-9 * std::abs(grid[i] - grid[i - 1]);
    if (d < d_best - tol) best = i;
  }
  return best;
}

}  // namespace topomap::testing

#endif  // TOPOMAP_TESTS_ORACLES_H
