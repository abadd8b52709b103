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

#include "topomap/tables.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "topomap/errors.h"

namespace topomap {
namespace {

void require_zero_based_uniform(const GridSpec& grid, const char* what) {
  if (grid.spacing() != Spacing::uniform) {
    throw PreconditionError(std::string(what) + " needs a uniform grid");
  }
  if (grid.lower() != 0.0) {
    throw PreconditionError(std::string(what) + " needs a grid starting at 0");
  }
}

}  // namespace

SquashKind parse_squash_kind(std::string_view name) {
  if (name == "tanh-restricted") return SquashKind::tanh_restricted;
  if (name == "truncation") return SquashKind::truncation;
  throw ParseError("unknown squashing function '" + std::string(name) + "'");
}

SumKind parse_sum_kind(std::string_view name) {
  if (name == "tsum") return SumKind::tsum;
  if (name == "hsum") return SumKind::hsum;
  if (name == "wide") return SumKind::wide;
  throw ParseError("unknown sum '" + std::string(name) + "'");
}

FiniteFunction squash_table(SquashKind kind, const GridSpec& grid) {
  if (grid.lower() > -1.0 || grid.upper() < 1.0) {
    throw PreconditionError("squashing table needs a grid covering [-1, 1], got [" +
                            format_value(grid.lower()) + ", " +
                            format_value(grid.upper()) + "]");
  }
  const double scale = std::tanh(1.0);
  std::vector<std::size_t> map(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = std::clamp(grid.point(i), -1.0, 1.0);
    double y = x;
    if (kind == SquashKind::tanh_restricted) {
      // Pin the end points so that +-1 land exactly on themselves.
      y = std::abs(x) == 1.0 ? x : std::tanh(x) / scale;
    }
    map[i] = grid.nearest(y);
  }
  const auto labels = grid.labels();
  return FiniteFunction(labels, labels, std::move(map));
}

BinaryFunction sum_table(SumKind kind, const GridSpec& grid) {
  require_zero_based_uniform(grid, "sum table");
  const std::size_t n = grid.size();
  std::vector<std::size_t> table(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t out = 0;
      switch (kind) {
        case SumKind::tsum:
          out = std::min(j + k, n - 1);
          break;
        case SumKind::hsum:
          out = grid.nearest((grid.point(j) + grid.point(k)) / 2.0);
          break;
        case SumKind::wide:
          out = j + k;
          break;
      }
      table[j * n + k] = out;
    }
  }
  const auto labels = grid.labels();
  if (kind == SumKind::wide) {
    const GridSpec doubled = GridSpec::zero_based(2 * n - 1, grid.step());
    return BinaryFunction(labels, doubled.labels(), std::move(table));
  }
  return BinaryFunction(labels, labels, std::move(table));
}

BinaryFunction product_table(const GridSpec& grid) {
  require_zero_based_uniform(grid, "product table");
  const std::size_t n = grid.size();
  std::vector<std::size_t> table(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      table[j * n + k] = grid.nearest(grid.point(j) * grid.point(k));
    }
  }
  const auto labels = grid.labels();
  return BinaryFunction(labels, labels, std::move(table));
}

}  // namespace topomap
