#pragma once

#include <string>

#include "langtrack/image.hpp"

namespace langtrack {

// 8-bit RGB PNG I/O. Intensities are quantized as round(v * 255) on write and
// restored as k / 255 on read, so frames whose values already lie on the
// 8-bit grid round-trip exactly.
void write_png(const std::string& path, const Frame& frame);
Frame read_png(const std::string& path);

}  // namespace langtrack
