// Copyright 2026 The oovbench Authors
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

#include <cstddef>
#include <vector>

namespace oov::kernels {

/// Axis-aligned boxes in structure-of-arrays layout, the unit the batch
/// kernels operate on.
struct BoxSoA {
  std::vector<float> x0, y0, x1, y1;

  std::size_t size() const { return x0.size(); }
  void push(float bx0, float by0, float bx1, float by1) {
    x0.push_back(bx0);
    y0.push_back(by0);
    x1.push_back(bx1);
    y1.push_back(by1);
  }
};

/// out[i] = intersection area of boxes[i] with the query box (0 when
/// disjoint). out must hold boxes.size() floats. Dispatches to the active
/// backend; all backends produce bit-identical results.
void aabb_intersection(const BoxSoA& boxes, float qx0, float qy0, float qx1,
                       float qy1, float* out);

void aabb_intersection_scalar(const BoxSoA& boxes, float qx0, float qy0,
                              float qx1, float qy1, float* out);

#if defined(OOV_BUILD_AVX2)
void aabb_intersection_avx2(const BoxSoA& boxes, float qx0, float qy0,
                            float qx1, float qy1, float* out);
#endif

}  // namespace oov::kernels
