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

#ifndef TOPOMAP_TABLES_H
#define TOPOMAP_TABLES_H

#include <string_view>

#include "topomap/finite_function.h"
#include "topomap/grid.h"

namespace topomap {

enum class SquashKind { tanh_restricted, truncation };
enum class SumKind { tsum, hsum, wide };

SquashKind parse_squash_kind(std::string_view name);
SumKind parse_sum_kind(std::string_view name);

/// Grid point -> nearest grid point of the squashed value.
///   tanh-restricted: tanh(x) / tanh(1) with x clamped to [-1, 1]
///   truncation:      x clamped to [-1, 1]
/// Both need a grid with lower <= -1 and upper >= 1.
FiniteFunction squash_table(SquashKind kind, const GridSpec& grid);

/// Two-argument sums on a uniform grid {0, dx, ..., (n-1) dx}.
///   tsum  min(x + y, x_max)
///   hsum  (x + y) / 2 rounded onto the grid
///   wide  x + y on the doubled grid {0, dx, ..., 2(n-1) dx}
BinaryFunction sum_table(SumKind kind, const GridSpec& grid);

/// (x, y) -> nearest grid point to x*y, clamped to x_max. Uniform grid
/// starting at 0.
BinaryFunction product_table(const GridSpec& grid);

}  // namespace topomap

#endif  // TOPOMAP_TABLES_H
