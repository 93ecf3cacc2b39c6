#include "langtrack/geometry.hpp"

#include <algorithm>

namespace langtrack {

BoundingBox intersect(const BoundingBox& a, const BoundingBox& b) {
  const double x1 = std::max(a.x1, b.x1);
  const double y1 = std::max(a.y1, b.y1);
  const double x2 = std::min(a.x2(), b.x2());
  const double y2 = std::min(a.y2(), b.y2());
  if (x2 <= x1 || y2 <= y1) return BoundingBox{x1, y1, 0.0, 0.0};
  return BoundingBox{x1, y1, x2 - x1, y2 - y1};
}

double iou(const BoundingBox& a, const BoundingBox& b) {
  const double inter = intersect(a, b).area();
  const double uni = a.area() + b.area() - inter;
  if (uni <= 0.0) return 0.0;
  return inter / uni;
}

double center_error(const BoundingBox& a, const BoundingBox& b) {
  const double dx = a.center_x() - b.center_x();
  const double dy = a.center_y() - b.center_y();
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace langtrack
