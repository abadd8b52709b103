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

#ifndef TOPOMAP_GRID_H
#define TOPOMAP_GRID_H

#include <cstddef>
#include <string>
#include <vector>

namespace topomap {

enum class Spacing { uniform, logarithmic };

/// n strictly increasing sample points on [lower, upper].
class GridSpec {
 public:
  GridSpec(std::size_t n, double lower, double upper,
           Spacing spacing = Spacing::uniform);

  /// {0, step, ..., (n-1) step}.
  static GridSpec zero_based(std::size_t n, double step = 1.0);

  std::size_t size() const { return points_.size(); }
  double lower() const { return lower_; }
  double upper() const { return upper_; }
  Spacing spacing() const { return spacing_; }
  double point(std::size_t i) const { return points_.at(i); }
  const std::vector<double>& points() const { return points_; }
  /// Uniform spacing only.
  double step() const;

  /// Shortest round-trip decimal text of each point.
  std::vector<std::string> labels() const;

  /// Index of the grid point nearest to v; exact or near ties (within 1e-9
  /// of the local spacing) go to the lower point. Values outside the grid
  /// snap to the end points.
  std::size_t nearest(double v) const;

 private:
  std::size_t n_;
  double lower_;
  double upper_;
  Spacing spacing_;
  std::vector<double> points_;
};

std::string format_value(double v);

}  // namespace topomap

#endif  // TOPOMAP_GRID_H
