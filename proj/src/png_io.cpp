#include "langtrack/png_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>
#include <vector>

#include "langtrack/error.hpp"

namespace langtrack {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace

void write_png(const std::string& path, const Frame& frame) {
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) throw Error("cannot open for writing: " + path);

  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw Error("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw Error("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error("libpng error while writing " + path);
  }

  png_init_io(png, fp.get());
  // Fixed settings keep the byte stream a pure function of the pixels.
  png_set_compression_level(png, 1);
  png_set_filter(png, 0, PNG_FILTER_SUB);
  png_set_IHDR(png, info, frame.width, frame.height, 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  std::vector<png_byte> row(static_cast<std::size_t>(frame.width) * 3);
  for (int i = 0; i < frame.height; ++i) {
    for (int j = 0; j < frame.width; ++j) {
      for (int c = 0; c < 3; ++c) {
        const double v = std::fmin(1.0, std::fmax(0.0, frame.at(i, j, c)));
        row[static_cast<std::size_t>(j) * 3 + c] =
            static_cast<png_byte>(std::lround(v * 255.0));
      }
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, info);
  png_destroy_write_struct(&png, &info);
}

Frame read_png(const std::string& path) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) throw Error("cannot open for reading: " + path);

  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw Error("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw Error("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw ParseError(path, -1, "libpng error while reading");
  }

  png_init_io(png, fp.get());
  png_read_info(png, info);

  // Normalize whatever we find to 8-bit RGB.
  png_set_strip_16(png);
  png_set_strip_alpha(png);
  png_set_palette_to_rgb(png);
  png_set_expand_gray_1_2_4_to_8(png);
  png_set_gray_to_rgb(png);
  png_read_update_info(png, info);

  const int width = static_cast<int>(png_get_image_width(png, info));
  const int height = static_cast<int>(png_get_image_height(png, info));

  Frame frame;
  frame.width = width;
  frame.height = height;
  frame.pixels.resize(static_cast<std::size_t>(width) * height * 3);

  std::vector<png_byte> row(static_cast<std::size_t>(width) * 3);
  for (int i = 0; i < height; ++i) {
    png_read_row(png, row.data(), nullptr);
    for (int j = 0; j < width; ++j) {
      for (int c = 0; c < 3; ++c) {
        frame.at(i, j, c) =
            static_cast<float>(row[static_cast<std::size_t>(j) * 3 + c]) /
            255.0f;
      }
    }
  }
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return frame;
}

}  // namespace langtrack
