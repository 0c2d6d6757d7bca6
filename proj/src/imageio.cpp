#include "cfdis/imageio.hpp"

#include <zlib.h>

#include <cmath>
#include <cstring>
#include <sstream>

namespace cfdis {

namespace {

// Reads a PNM header token, skipping whitespace and '#' comments.
std::string pnm_token(const std::string& data, std::size_t& off) {
  while (off < data.size()) {
    char c = data[off];
    if (c == '#') {
      while (off < data.size() && data[off] != '\n') ++off;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++off;
    } else {
      break;
    }
  }
  std::size_t start = off;
  while (off < data.size() && !std::isspace(static_cast<unsigned char>(data[off]))) ++off;
  return data.substr(start, off - start);
}

struct PnmHeader {
  int w, h, maxval;
  std::size_t payload_off;
};

PnmHeader parse_pnm(const std::string& data, const char* magic, const std::string& path) {
  std::size_t off = 0;
  if (pnm_token(data, off) != magic) throw IoError("not a " + std::string(magic) + " file: " + path);
  PnmHeader hd{};
  hd.w = std::stoi(pnm_token(data, off));
  hd.h = std::stoi(pnm_token(data, off));
  hd.maxval = std::stoi(pnm_token(data, off));
  if (hd.maxval != 255) throw IoError("unsupported maxval in " + path);
  hd.payload_off = off + 1;  // single whitespace after maxval
  return hd;
}

std::uint32_t crc_of(const std::string& chunk) {
  return std::uint32_t(::crc32(0L, reinterpret_cast<const Bytef*>(chunk.data()), uInt(chunk.size())));
}

void append_be32(std::string& out, std::uint32_t v) {
  out.push_back(char((v >> 24) & 0xff));
  out.push_back(char((v >> 16) & 0xff));
  out.push_back(char((v >> 8) & 0xff));
  out.push_back(char(v & 0xff));
}

void append_chunk(std::string& out, const char type[4], const std::string& payload) {
  append_be32(out, std::uint32_t(payload.size()));
  std::string body(type, 4);
  body += payload;
  out += body;
  append_be32(out, crc_of(body));
}

}  // namespace

void write_ppm(const std::string& path, const Image& img) {
  std::string out = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(img.rgb.data()), img.rgb.size());
  write_file(path, out);
}

Image read_ppm(const std::string& path) {
  std::string data = read_file(path);
  PnmHeader hd = parse_pnm(data, "P6", path);
  Image img;
  img.width = hd.w;
  img.height = hd.h;
  std::size_t n = std::size_t(hd.w) * std::size_t(hd.h) * 3;
  if (hd.payload_off + n > data.size()) throw IoError("truncated ppm: " + path);
  img.rgb.assign(data.begin() + std::ptrdiff_t(hd.payload_off),
                 data.begin() + std::ptrdiff_t(hd.payload_off + n));
  return img;
}

void write_pgm(const std::string& path, const GrayImage& img) {
  std::string out = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(img.v.data()), img.v.size());
  write_file(path, out);
}

GrayImage read_pgm(const std::string& path) {
  std::string data = read_file(path);
  PnmHeader hd = parse_pnm(data, "P5", path);
  GrayImage img;
  img.width = hd.w;
  img.height = hd.h;
  std::size_t n = std::size_t(hd.w) * std::size_t(hd.h);
  if (hd.payload_off + n > data.size()) throw IoError("truncated pgm: " + path);
  img.v.assign(data.begin() + std::ptrdiff_t(hd.payload_off),
               data.begin() + std::ptrdiff_t(hd.payload_off + n));
  return img;
}

void write_png(const std::string& path, const Image& img) {
  // Raw scanlines with filter byte 0.
  std::string raw;
  raw.reserve(std::size_t(img.height) * (std::size_t(img.width) * 3 + 1));
  for (int y = 0; y < img.height; ++y) {
    raw.push_back('\0');
    raw.append(reinterpret_cast<const char*>(&img.rgb[std::size_t(y) * img.width * 3]),
               std::size_t(img.width) * 3);
  }
  uLongf bound = compressBound(uLong(raw.size()));
  std::vector<Bytef> compressed(bound);
  if (compress2(compressed.data(), &bound, reinterpret_cast<const Bytef*>(raw.data()),
                uLong(raw.size()), 6) != Z_OK)
    throw IoError("png compression failed: " + path);

  std::string out("\x89PNG\r\n\x1a\n", 8);
  std::string ihdr;
  append_be32(ihdr, std::uint32_t(img.width));
  append_be32(ihdr, std::uint32_t(img.height));
  ihdr.push_back(8);   // bit depth
  ihdr.push_back(2);   // color type RGB
  ihdr.push_back(0);   // compression
  ihdr.push_back(0);   // filter
  ihdr.push_back(0);   // interlace
  append_chunk(out, "IHDR", ihdr);
  append_chunk(out, "IDAT", std::string(reinterpret_cast<char*>(compressed.data()), bound));
  append_chunk(out, "IEND", "");
  write_file(path, out);
}

Image resize_bilinear(const Image& img, int out_h, int out_w) {
  Image out;
  out.height = out_h;
  out.width = out_w;
  out.rgb.resize(std::size_t(out_h) * out_w * 3);
  for (int y = 0; y < out_h; ++y) {
    double sy = (out_h == 1) ? 0.0 : double(y) * (img.height - 1) / (out_h - 1);
    int y0 = int(sy);
    int y1 = std::min(y0 + 1, img.height - 1);
    double fy = sy - y0;
    for (int x = 0; x < out_w; ++x) {
      double sx = (out_w == 1) ? 0.0 : double(x) * (img.width - 1) / (out_w - 1);
      int x0 = int(sx);
      int x1 = std::min(x0 + 1, img.width - 1);
      double fx = sx - x0;
      for (int c = 0; c < 3; ++c) {
        double v = (1 - fy) * ((1 - fx) * img.at(y0, x0, c) + fx * img.at(y0, x1, c)) +
                   fy * ((1 - fx) * img.at(y1, x0, c) + fx * img.at(y1, x1, c));
        out.at(y, x, c) = std::uint8_t(std::lround(v));
      }
    }
  }
  return out;
}

GrayImage resize_nearest(const GrayImage& img, int out_h, int out_w) {
  GrayImage out;
  out.height = out_h;
  out.width = out_w;
  out.v.resize(std::size_t(out_h) * out_w);
  for (int y = 0; y < out_h; ++y) {
    int sy = int(std::int64_t(y) * img.height / out_h);
    for (int x = 0; x < out_w; ++x) {
      int sx = int(std::int64_t(x) * img.width / out_w);
      out.v[std::size_t(y) * out_w + x] = img.v[std::size_t(sy) * img.width + sx];
    }
  }
  return out;
}

}  // namespace cfdis
