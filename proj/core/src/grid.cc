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

#include "topomap/grid.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "topomap/errors.h"

namespace topomap {

GridSpec::GridSpec(std::size_t n, double lower, double upper, Spacing spacing)
    : n_(n), lower_(lower), upper_(upper), spacing_(spacing) {
  if (n < 2) throw PreconditionError("a grid needs at least two points");
  if (!(lower < upper)) {
    throw PreconditionError("grid bounds must satisfy lower < upper");
  }
  if (spacing == Spacing::logarithmic && !(lower > 0.0)) {
    throw PreconditionError("logarithmic grid needs a positive lower bound");
  }
  points_.resize(n);
  const double last = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / last;
    if (spacing == Spacing::uniform) {
      points_[i] = lower + (upper - lower) * t;
    } else {
      points_[i] = lower * std::pow(upper / lower, t);
    }
  }
  points_.front() = lower;
  points_.back() = upper;
  for (std::size_t i = 1; i < n; ++i) {
    if (!(points_[i] > points_[i - 1])) {
      throw PreconditionError("grid points are not strictly increasing");
    }
  }
}

GridSpec GridSpec::zero_based(std::size_t n, double step) {
  return GridSpec(n, 0.0, step * static_cast<double>(n - 1), Spacing::uniform);
}

double GridSpec::step() const {
  if (spacing_ != Spacing::uniform) {
    throw PreconditionError("step is only defined for uniform grids");
  }
  return (upper_ - lower_) / static_cast<double>(n_ - 1);
}

std::vector<std::string> GridSpec::labels() const {
  std::vector<std::string> out;
  out.reserve(points_.size());
  for (double p : points_) out.push_back(format_value(p));
  return out;
}

std::size_t GridSpec::nearest(double v) const {
  if (v <= points_.front()) return 0;
  if (v >= points_.back()) return points_.size() - 1;
  const auto hi = static_cast<std::size_t>(
      std::upper_bound(points_.begin(), points_.end(), v) - points_.begin());
  const std::size_t lo = hi - 1;
  const double d_lo = v - points_[lo];
  const double d_hi = points_[hi] - v;
  const double tie = 1e-9 * (points_[hi] - points_[lo]);
  return d_hi < d_lo - tie ? hi : lo;
}

std::string format_value(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw Error("cannot format grid value");
  return std::string(buf, ptr);
}

}  // namespace topomap
