// Copyright 2026 The walkeropt Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <set>

#include "walkeropt/hexgrid.hpp"

namespace walkeropt::test {

// A 26-cell grid crossed by two strips: a wide one touching ten cells and a
// narrow one touching six, sharing a single cell. Cells carry the labels 1..26
// used in the reference drawing; label_of maps grid ids onto them.
struct TwoSwathFixture {
  TargetRegion region{{{0, 0}, {0, 4}, {6.5, 4}, {7, 3.5}, {7, 0}}};
  double cell_radius = 1.0;

  static planar::Ring strip(double x0, double slope, double half_width) {
    const double y0 = -2.0;
    const double y1 = 6.0;
    return {{x0 + slope * y0 - half_width, y0},
            {x0 + slope * y0 + half_width, y0},
            {x0 + slope * y1 + half_width, y1},
            {x0 + slope * y1 - half_width, y1}};
  }

  planar::Ring swath_a = strip(-0.5, 0.25, 1.3);
  planar::Ring swath_b = strip(6.75, -0.75, 0.1);

  std::set<int> expected_a{1, 2, 5, 8, 11, 15, 18, 21, 24, 25};
  std::set<int> expected_b{9, 13, 16, 19, 22, 25};

  std::map<int, int> labels{
      {0, 1},  {5, 2},  {6, 5},  {11, 8},  {12, 11}, {16, 15}, {17, 18}, {18, 21}, {22, 24},  // strip a
      {23, 25},                                                                              // shared
      {4, 9},  {9, 13}, {14, 16}, {19, 19}, {24, 22},                                        // strip b
      {1, 3},  {2, 4},  {3, 6},  {7, 7},   {8, 10},  {10, 12}, {13, 14}, {15, 17}, {20, 20},
      {21, 23}, {25, 26}};

  int label_of(int id) const { return labels.at(id); }
};

}  // namespace walkeropt::test
