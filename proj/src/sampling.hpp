// Copyright 2026 The lbptex Authors
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

#include <algorithm>

namespace lbptex::detail {

// Shared by sampleBilinear and the label-map kernels so both paths produce
// identical doubles.
inline double blend(double a, double b, double c, double d, double fx,
                    double fy) {
  const double top = (1.0 - fx) * a + fx * b;
  const double bottom = (1.0 - fx) * c + fx * d;
  const double v = (1.0 - fy) * top + fy * bottom;
  const double lo = std::min(std::min(a, b), std::min(c, d));
  const double hi = std::max(std::max(a, b), std::max(c, d));
  return std::clamp(v, lo, hi);
}

}  // namespace lbptex::detail
