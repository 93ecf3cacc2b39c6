#pragma once

#include <cstdint>
#include <vector>

#include "langtrack/geometry.hpp"

namespace langtrack {

enum class Modality : std::uint8_t { kRgb = 0, kThermal = 1 };

// One video frame: row-major H x W x 3 intensities in [0, 1].
struct Frame {
  int width = 0;
  int height = 0;
  std::vector<float> pixels;  // height * width * 3
  Modality modality = Modality::kRgb;

  float at(int row, int col, int ch) const {
    return pixels[(static_cast<std::size_t>(row) * width + col) * 3 + ch];
  }
  float& at(int row, int col, int ch) {
    return pixels[(static_cast<std::size_t>(row) * width + col) * 3 + ch];
  }

  static Frame filled(int width, int height, float r, float g, float b);
};

// A small raster crop; same layout as Frame but without modality.
struct Patch {
  int width = 0;
  int height = 0;
  std::vector<float> pixels;  // height * width * 3

  float at(int row, int col, int ch) const {
    return pixels[(static_cast<std::size_t>(row) * width + col) * 3 + ch];
  }
};

// Bilinear sample of one channel at continuous coordinates. Pixel centers sit
// at (col + 0.5, row + 0.5); taps outside the frame contribute zero.
double sample_bilinear(const Frame& frame, double x, double y, int ch);

// Bilinear resample of the box region to out_w x out_h. Regions outside the
// frame are zero-filled; an empty box yields an all-zero patch.
Patch crop_resize(const Frame& frame, const BoundingBox& box, int out_w,
                  int out_h);

// Luma in [0, 1] from linear RGB.
inline double luma(double r, double g, double b) {
  return 0.299 * r + 0.587 * g + 0.114 * b;
}

}  // namespace langtrack
