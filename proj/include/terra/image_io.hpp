#pragma once

#include <filesystem>

#include "terra/image.hpp"

namespace terra {

/// Grayscale raster decoded to floats normalized by the format's max value.
struct GrayRaster {
  int rows = 0;
  int cols = 0;
  int bits = 8;
  std::vector<float> values;  // row-major, [0,1]
};

/// Reads an 8/16-bit grayscale PGM (P5) or PNG, sniffed by magic bytes.
/// Throws UnsupportedImageFormat for anything else (color, palette, ...).
GrayRaster load_gray_image(const std::filesystem::path& path);

void save_png_gray8(const GrayImage8& img, const std::filesystem::path& path);
void save_pgm8(const GrayImage8& img, const std::filesystem::path& path);

/// PFM "Pf", scale -1.0 (little-endian), scanlines bottom-to-top per the
/// format convention. Miss pixels hold 0.0.
void save_pfm(const DepthImage& img, const std::filesystem::path& path);
DepthImage load_pfm(const std::filesystem::path& path);

/// Raw float dump with an HFG-style header: `HFG1 rows cols spacing 0`
/// followed by row-major little-endian float32, row 0 at top.
void save_depth_raw(const DepthImage& img, double spacing, const std::filesystem::path& path);

}  // namespace terra
