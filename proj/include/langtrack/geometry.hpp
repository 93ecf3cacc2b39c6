#pragma once

#include <cmath>

namespace langtrack {

// Axis-aligned box [x1, y1, w, h] in pixels. Coordinates are real-valued;
// pixel (row i, col j) occupies the unit square [j, j+1) x [i, i+1).
// A box with w == 0 or h == 0 is a valid "empty" box.
struct BoundingBox {
  double x1 = 0.0;
  double y1 = 0.0;
  double w = 0.0;
  double h = 0.0;

  double x2() const { return x1 + w; }
  double y2() const { return y1 + h; }
  double center_x() const { return x1 + w / 2.0; }
  double center_y() const { return y1 + h / 2.0; }
  double area() const { return w * h; }
  bool empty() const { return w <= 0.0 || h <= 0.0; }

  bool finite() const {
    return std::isfinite(x1) && std::isfinite(y1) && std::isfinite(w) &&
           std::isfinite(h);
  }

  bool operator==(const BoundingBox& o) const = default;
};

// Intersection area / union area; 0 when the union is degenerate.
double iou(const BoundingBox& a, const BoundingBox& b);

// Euclidean distance between box centers, in pixels.
double center_error(const BoundingBox& a, const BoundingBox& b);

// Intersection box (possibly empty) of two boxes.
BoundingBox intersect(const BoundingBox& a, const BoundingBox& b);

}  // namespace langtrack
