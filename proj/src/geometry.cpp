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

#include "oovbench/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace oov {
namespace {

constexpr double kOrientEps = 1e-9;

double cross3(const Point2D& o, const Point2D& a, const Point2D& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool nearly_same(const Point2D& a, const Point2D& b) {
  return std::abs(a.x - b.x) < 1e-12 && std::abs(a.y - b.y) < 1e-12;
}

bool on_segment(const Point2D& p, const Point2D& q, const Point2D& r) {
  // q collinear with pr; is it within the segment's bounding box?
  return q.x <= std::max(p.x, r.x) + 1e-12 && q.x >= std::min(p.x, r.x) - 1e-12 &&
         q.y <= std::max(p.y, r.y) + 1e-12 && q.y >= std::min(p.y, r.y) - 1e-12;
}

int orient_sign(const Point2D& a, const Point2D& b, const Point2D& c) {
  const double d = cross3(a, b, c);
  if (d > kOrientEps) return 1;
  if (d < -kOrientEps) return -1;
  return 0;
}

// True when segments ab and cd share any point (proper crossing or touch).
bool segments_intersect(const Point2D& a, const Point2D& b, const Point2D& c,
                        const Point2D& d) {
  const int d1 = orient_sign(c, d, a);
  const int d2 = orient_sign(c, d, b);
  const int d3 = orient_sign(a, b, c);
  const int d4 = orient_sign(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment(c, a, d)) return true;
  if (d2 == 0 && on_segment(c, b, d)) return true;
  if (d3 == 0 && on_segment(a, c, b)) return true;
  if (d4 == 0 && on_segment(a, d, b)) return true;
  return false;
}

Aabb ring_bbox(const std::vector<Point2D>& ring) {
  Aabb box{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
           std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
  for (const auto& p : ring) {
    box.x0 = std::min(box.x0, p.x);
    box.y0 = std::min(box.y0, p.y);
    box.x1 = std::max(box.x1, p.x);
    box.y1 = std::max(box.y1, p.y);
  }
  return box;
}

bool bboxes_disjoint(const Aabb& a, const Aabb& b) {
  return a.x1 < b.x0 || b.x1 < a.x0 || a.y1 < b.y0 || b.y1 < a.y0;
}

double ring_clip_area(const std::vector<Point2D>& subject,
                      const std::vector<Point2D>& clip) {
  const auto out = geom::clip_convex(subject, clip);
  if (out.size() < 3) return 0.0;
  return std::abs(geom::signed_area(out));
}

}  // namespace

namespace geom {

double signed_area(const std::vector<Point2D>& ring) {
  const std::size_t n = ring.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2D& p = ring[i];
    const Point2D& q = ring[(i + 1) % n];
    s += p.x * q.y - q.x * p.y;
  }
  return 0.5 * s;
}

bool is_simple(const std::vector<Point2D>& ring) {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2D& a = ring[i];
    const Point2D& b = ring[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      // skip adjacent edges (they legitimately share an endpoint)
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      const Point2D& c = ring[j];
      const Point2D& d = ring[(j + 1) % n];
      if (segments_intersect(a, b, c, d)) return false;
    }
  }
  return true;
}

bool is_convex_ccw(const std::vector<Point2D>& ring) {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (cross3(ring[i], ring[(i + 1) % n], ring[(i + 2) % n]) < -kOrientEps)
      return false;
  }
  return true;
}

std::vector<Point2D> convex_hull(std::vector<Point2D> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2D& a, const Point2D& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Point2D& a, const Point2D& b) {
                          return nearly_same(a, b);
                        }),
            pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Point2D> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross3(hull[k - 2], hull[k - 1], pts[i]) <= kOrientEps) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross3(hull[k - 2], hull[k - 1], pts[i]) <= kOrientEps) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Point2D> clip_convex(const std::vector<Point2D>& subject,
                                 const std::vector<Point2D>& clip) {
  std::vector<Point2D> out = subject;
  std::vector<Point2D> in;
  const std::size_t nc = clip.size();
  for (std::size_t e = 0; e < nc && !out.empty(); ++e) {
    const Point2D& ca = clip[e];
    const Point2D& cb = clip[(e + 1) % nc];
    in.swap(out);
    out.clear();
    const std::size_t ni = in.size();
    double side_prev = cross3(ca, cb, in[ni - 1]);
    for (std::size_t i = 0; i < ni; ++i) {
      const Point2D& prev = in[(i + ni - 1) % ni];
      const Point2D& cur = in[i];
      const double side_cur = cross3(ca, cb, cur);
      const bool in_prev = side_prev >= -kOrientEps;
      const bool in_cur = side_cur >= -kOrientEps;
      if (in_cur != in_prev) {
        const double t = side_prev / (side_prev - side_cur);
        out.push_back({prev.x + t * (cur.x - prev.x), prev.y + t * (cur.y - prev.y)});
      }
      if (in_cur) out.push_back(cur);
      side_prev = side_cur;
    }
  }
  return out;
}

std::vector<std::array<int, 3>> triangulate(const std::vector<Point2D>& ring) {
  const int n = int(ring.size());
  std::vector<std::array<int, 3>> tris;
  if (n < 3) return tris;
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);

  auto point_in_tri = [&](const Point2D& p, const Point2D& a, const Point2D& b,
                          const Point2D& c) {
    return cross3(a, b, p) >= -kOrientEps && cross3(b, c, p) >= -kOrientEps &&
           cross3(c, a, p) >= -kOrientEps;
  };

  while (idx.size() > 3) {
    const int m = int(idx.size());
    bool clipped = false;
    int flattest = 0;
    double flattest_cross = std::numeric_limits<double>::max();
    for (int k = 0; k < m; ++k) {
      const int ip = idx[(k + m - 1) % m];
      const int ic = idx[k];
      const int in_ = idx[(k + 1) % m];
      const double c = cross3(ring[ip], ring[ic], ring[in_]);
      if (std::abs(c) < flattest_cross) {
        flattest_cross = std::abs(c);
        flattest = k;
      }
      if (c <= kOrientEps) continue;  // reflex or collinear: not an ear tip
      bool blocked = false;
      for (int o = 0; o < m && !blocked; ++o) {
        const int io = idx[o];
        if (io == ip || io == ic || io == in_) continue;
        // only reflex vertices can block an ear
        const int op = idx[(o + m - 1) % m];
        const int on = idx[(o + 1) % m];
        if (cross3(ring[op], ring[io], ring[on]) > kOrientEps) continue;
        blocked = point_in_tri(ring[io], ring[ip], ring[ic], ring[in_]);
      }
      if (!blocked) {
        tris.push_back({ip, ic, in_});
        idx.erase(idx.begin() + k);
        clipped = true;
        break;
      }
    }
    if (!clipped) {
      // Degenerate ring (collinear runs). Dropping the flattest vertex keeps
      // the area and guarantees progress.
      idx.erase(idx.begin() + flattest);
    }
  }
  if (idx.size() == 3) tris.push_back({idx[0], idx[1], idx[2]});
  return tris;
}

}  // namespace geom

Polygon Polygon::make(std::vector<Point2D> vertices) {
  if (vertices.size() < 3)
    throw std::invalid_argument("polygon needs at least 3 vertices");
  for (const auto& p : vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("polygon has non-finite coordinate");
  }
  // drop consecutive duplicates, wraparound included
  std::vector<Point2D> ring;
  ring.reserve(vertices.size());
  for (const auto& p : vertices) {
    if (ring.empty() || !nearly_same(ring.back(), p)) ring.push_back(p);
  }
  while (ring.size() > 1 && nearly_same(ring.front(), ring.back())) ring.pop_back();
  if (ring.size() < 3)
    throw std::invalid_argument("polygon has fewer than 3 distinct vertices");

  Polygon poly;
  if (!geom::is_simple(ring)) {
    ring = geom::convex_hull(ring);
    if (ring.size() < 3 || std::abs(geom::signed_area(ring)) < kAreaEpsilon)
      throw std::invalid_argument("self-intersecting polygon with degenerate hull");
    poly.repaired_ = true;
  }
  double sa = geom::signed_area(ring);
  if (std::abs(sa) < kAreaEpsilon)
    throw std::invalid_argument("polygon has zero area");
  if (sa < 0) {
    std::reverse(ring.begin(), ring.end());
    sa = -sa;
  }
  poly.vertices_ = std::move(ring);
  poly.area_ = sa;
  poly.bbox_ = ring_bbox(poly.vertices_);
  poly.convex_ = geom::is_convex_ccw(poly.vertices_);
  return poly;
}

double polygon_area(const Polygon& p) { return p.area(); }

double intersect_area(const Polygon& a, const Polygon& b) {
  if (bboxes_disjoint(a.bbox(), b.bbox())) return 0.0;

  double area = 0.0;
  if (a.convex() && b.convex()) {
    area = ring_clip_area(a.vertices(), b.vertices());
  } else {
    // Triangulations split each ring into interior-disjoint convex pieces,
    // so the intersection area is the sum over all piece pairs.
    auto pieces = [](const Polygon& p) {
      std::vector<std::vector<Point2D>> out;
      if (p.convex()) {
        out.push_back(p.vertices());
      } else {
        for (const auto& t : geom::triangulate(p.vertices()))
          out.push_back({p.vertices()[t[0]], p.vertices()[t[1]], p.vertices()[t[2]]});
      }
      return out;
    };
    const auto pa = pieces(a);
    const auto pb = pieces(b);
    for (const auto& ta : pa) {
      const Aabb ba = ring_bbox(ta);
      for (const auto& tb : pb) {
        if (bboxes_disjoint(ba, ring_bbox(tb))) continue;
        area += ring_clip_area(ta, tb);
      }
    }
  }
  area = std::min(area, std::min(a.area(), b.area()));
  return area < kAreaEpsilon ? 0.0 : area;
}

OverlapScores overlap_scores(const Polygon& det, const Polygon& gt) {
  if (det.area() <= 0.0 || gt.area() <= 0.0)
    throw std::invalid_argument("overlap_scores: degenerate zero-area polygon");
  OverlapScores s;
  s.intersection_area = intersect_area(det, gt);
  const double uni = det.area() + gt.area() - s.intersection_area;
  s.iou = uni <= 0.0 ? 0.0 : s.intersection_area / uni;
  s.inter_over_det = s.intersection_area / det.area();
  s.inter_over_gt = s.intersection_area / gt.area();
  s.iou = std::clamp(s.iou, 0.0, 1.0);
  s.inter_over_det = std::clamp(s.inter_over_det, 0.0, 1.0);
  s.inter_over_gt = std::clamp(s.inter_over_gt, 0.0, 1.0);
  return s;
}

Point2D centroid(const Polygon& p) {
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  const double a = geom::signed_area(v);
  if (std::abs(a) < kAreaEpsilon)
    throw std::invalid_argument("centroid of zero-area polygon");
  double cx = 0.0, cy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2D& p0 = v[i];
    const Point2D& p1 = v[(i + 1) % n];
    const double w = p0.x * p1.y - p1.x * p0.y;
    cx += (p0.x + p1.x) * w;
    cy += (p0.y + p1.y) * w;
  }
  return {cx / (6.0 * a), cy / (6.0 * a)};
}

const char* split_name(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::validation: return "validation";
    case Split::test: return "test";
  }
  return "train";
}

std::optional<Split> split_from_name(std::string_view name) {
  if (name == "train") return Split::train;
  if (name == "validation" || name == "val") return Split::validation;
  if (name == "test") return Split::test;
  return std::nullopt;
}

}  // namespace oov
