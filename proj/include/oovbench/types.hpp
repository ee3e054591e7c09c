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

#include <optional>
#include <string>
#include <vector>

namespace oov {

struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

struct Aabb {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;
};

/// A simple polygon stored in counter-clockwise orientation with its area and
/// bounding box precomputed. Construction goes through make(), which
/// canonicalizes the ring: consecutive duplicate vertices are dropped, winding
/// is flipped to CCW when needed, and self-intersecting rings are repaired by
/// falling back to the convex hull of the vertices (the instance is then
/// flagged repaired()). Degenerate input (fewer than 3 distinct vertices,
/// non-finite coordinates, zero area) throws std::invalid_argument.
class Polygon {
 public:
  Polygon() = default;

  static Polygon make(std::vector<Point2D> vertices);

  const std::vector<Point2D>& vertices() const { return vertices_; }
  double area() const { return area_; }
  const Aabb& bbox() const { return bbox_; }
  bool repaired() const { return repaired_; }
  bool convex() const { return convex_; }

 private:
  std::vector<Point2D> vertices_;
  double area_ = 0.0;
  Aabb bbox_{};
  bool repaired_ = false;
  bool convex_ = false;
};

enum class Split { train, validation, test };

const char* split_name(Split s);
std::optional<Split> split_from_name(std::string_view name);

/// One word-level ground-truth annotation. An absent transcription implies
/// legible == false; ingestion enforces this.
struct TextInstance {
  Polygon polygon;
  std::optional<std::string> transcription;
  bool legible = true;
  std::string dataset;
  std::string instance_id;
};

struct ImageAnnotation {
  std::string image_id;
  int width = 0;
  int height = 0;
  std::string dataset;
  Split split = Split::train;
  std::vector<TextInstance> instances;
};

/// One detection from a Task-1 submission. Confidence is accepted on the wire
/// but takes no part in scoring.
struct Detection {
  Polygon polygon;
  std::string transcription;
  std::optional<double> confidence;
};

enum class SubsetLabel { IV, OOV };

inline const char* subset_name(SubsetLabel s) {
  return s == SubsetLabel::IV ? "IV" : "OOV";
}

}  // namespace oov
