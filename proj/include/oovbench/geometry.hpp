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

#include <array>
#include <vector>

#include "oovbench/types.hpp"

namespace oov {

// Areas below this are treated as empty; stabilizes degenerate clips.
inline constexpr double kAreaEpsilon = 1e-9;

struct OverlapScores {
  double iou = 0.0;             // I / (A_det + A_gt - I)
  double inter_over_det = 0.0;  // I / A_det
  double inter_over_gt = 0.0;   // I / A_gt
  double intersection_area = 0.0;
};

/// Absolute area in px^2 (shoelace).
double polygon_area(const Polygon& p);

/// Area of the intersection. Convex x convex pairs are clipped exactly;
/// concave inputs are ear-clipped into triangles and the pairwise
/// intersections summed.
double intersect_area(const Polygon& a, const Polygon& b);

/// Overlap ratios of a detection against one ground-truth region. Both
/// polygons carry positive area by construction.
OverlapScores overlap_scores(const Polygon& det, const Polygon& gt);

/// Area-weighted centroid. Throws std::invalid_argument on zero area (cannot
/// happen for a canonical Polygon).
Point2D centroid(const Polygon& p);

// Building blocks, exposed for tests.
namespace geom {

double signed_area(const std::vector<Point2D>& ring);
bool is_simple(const std::vector<Point2D>& ring);
bool is_convex_ccw(const std::vector<Point2D>& ring);
std::vector<Point2D> convex_hull(std::vector<Point2D> pts);

/// Sutherland-Hodgman clip of an arbitrary subject ring against a convex CCW
/// clip ring; returns the clipped ring (possibly empty).
std::vector<Point2D> clip_convex(const std::vector<Point2D>& subject,
                                 const std::vector<Point2D>& clip);

/// Ear-clipping triangulation of a simple CCW ring. Vertex triples index into
/// the input ring.
std::vector<std::array<int, 3>> triangulate(const std::vector<Point2D>& ring);

}  // namespace geom

}  // namespace oov
