#include "langtrack/image.hpp"

#include <cmath>

namespace langtrack {

Frame Frame::filled(int width, int height, float r, float g, float b) {
  Frame f;
  f.width = width;
  f.height = height;
  f.pixels.resize(static_cast<std::size_t>(width) * height * 3);
  for (std::size_t i = 0; i < f.pixels.size(); i += 3) {
    f.pixels[i] = r;
    f.pixels[i + 1] = g;
    f.pixels[i + 2] = b;
  }
  return f;
}

double sample_bilinear(const Frame& frame, double x, double y, int ch) {
  // Shift so integer coordinates land on pixel centers.
  const double u = x - 0.5;
  const double v = y - 0.5;
  const int j0 = static_cast<int>(std::floor(u));
  const int i0 = static_cast<int>(std::floor(v));
  const double fx = u - j0;
  const double fy = v - i0;

  auto tap = [&](int i, int j) -> double {
    if (i < 0 || j < 0 || i >= frame.height || j >= frame.width) return 0.0;
    return frame.at(i, j, ch);
  };

  const double top = tap(i0, j0) * (1.0 - fx) + tap(i0, j0 + 1) * fx;
  const double bot = tap(i0 + 1, j0) * (1.0 - fx) + tap(i0 + 1, j0 + 1) * fx;
  return top * (1.0 - fy) + bot * fy;
}

Patch crop_resize(const Frame& frame, const BoundingBox& box, int out_w,
                  int out_h) {
  Patch out;
  out.width = out_w;
  out.height = out_h;
  out.pixels.assign(static_cast<std::size_t>(out_w) * out_h * 3, 0.0f);
  if (box.empty() || !box.finite()) return out;

  const double sx = box.w / out_w;
  const double sy = box.h / out_h;
  std::size_t k = 0;
  for (int oi = 0; oi < out_h; ++oi) {
    const double y = box.y1 + (oi + 0.5) * sy;
    for (int oj = 0; oj < out_w; ++oj) {
      const double x = box.x1 + (oj + 0.5) * sx;
      for (int ch = 0; ch < 3; ++ch) {
        out.pixels[k++] = static_cast<float>(sample_bilinear(frame, x, y, ch));
      }
    }
  }
  return out;
}

}  // namespace langtrack
