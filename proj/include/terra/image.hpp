#pragma once

#include <cstdint>
#include <vector>

namespace terra {

struct GrayImage8 {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> pixels;  // row-major, row 0 at top

  uint8_t at(int x, int y) const { return pixels[size_t(y) * width + x]; }
};

/// Per-pixel linear radiance (W m^-2 sr^-1), plus a hit mask.
struct RadianceImage {
  int width = 0;
  int height = 0;
  std::vector<double> radiance;
  std::vector<uint8_t> valid;

  double at(int x, int y) const { return radiance[size_t(y) * width + x]; }
  bool valid_at(int x, int y) const { return valid[size_t(y) * width + x] != 0; }
};

/// Depth along the pixel ray in meters; 0.0 marks a miss.
struct DepthImage {
  int width = 0;
  int height = 0;
  std::vector<float> depth;

  float at(int x, int y) const { return depth[size_t(y) * width + x]; }
};

}  // namespace terra
