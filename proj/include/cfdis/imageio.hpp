#ifndef CFDIS_IMAGEIO_HPP
#define CFDIS_IMAGEIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cfdis/common.hpp"

namespace cfdis {

// 8-bit RGB image, row-major, interleaved channels.
struct Image {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> rgb;  // height * width * 3

  std::uint8_t& at(int y, int x, int c) { return rgb[std::size_t((y * width + x) * 3 + c)]; }
  std::uint8_t at(int y, int x, int c) const { return rgb[std::size_t((y * width + x) * 3 + c)]; }
};

// 8-bit single-channel image (used for masks, values 0 or 255 on disk).
struct GrayImage {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> v;  // height * width
};

// Binary PPM (P6) / PGM (P5).
void write_ppm(const std::string& path, const Image& img);
Image read_ppm(const std::string& path);
void write_pgm(const std::string& path, const GrayImage& img);
GrayImage read_pgm(const std::string& path);

// Minimal PNG writer (RGB8, zlib-compressed) for rendered plots.
void write_png(const std::string& path, const Image& img);

// Bilinear resize for photos, nearest for masks.
Image resize_bilinear(const Image& img, int out_h, int out_w);
GrayImage resize_nearest(const GrayImage& img, int out_h, int out_w);

}  // namespace cfdis

#endif  // CFDIS_IMAGEIO_HPP
