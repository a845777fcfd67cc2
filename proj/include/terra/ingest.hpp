#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "terra/geometry.hpp"
#include "terra/pds3.hpp"

namespace terra {

/// Regular elevation grid in the ENU world frame. Row index grows southward,
/// column index eastward; the world origin sits at the geometric center of
/// the extent, so post (0,0) is the north-west corner.
struct Heightfield {
  int rows = 0;
  int cols = 0;
  double post_spacing = 1.0;
  Vec2 origin_world;                // world (x,y) of post (0,0) center
  std::vector<float> elevations;    // row-major rows*cols
  std::vector<uint8_t> nodata_mask; // row-major, 1 = invalid sample

  double extent_x() const { return (cols - 1) * post_spacing; }
  double extent_y() const { return (rows - 1) * post_spacing; }

  float at(int r, int c) const { return elevations[size_t(r) * cols + c]; }
  bool is_nodata(int r, int c) const { return nodata_mask[size_t(r) * cols + c] != 0; }

  double world_x(double col) const { return origin_world.x + col * post_spacing; }
  double world_y(double row) const { return origin_world.y - row * post_spacing; }

  size_t valid_count() const;

  static Vec2 centered_origin(int rows, int cols, double post_spacing) {
    return {-(cols - 1) * post_spacing / 2.0, (rows - 1) * post_spacing / 2.0};
  }
};

/// Grayscale albedo raster co-registered to a Heightfield, same frame rules.
struct OrthoTexture {
  int rows = 0;
  int cols = 0;
  double pixel_scale = 1.0;   // meters per pixel
  Vec2 origin_world;          // world (x,y) of pixel (0,0) center
  std::vector<float> albedo;  // row-major, values in [0,1]

  double extent_x() const { return (cols - 1) * pixel_scale; }
  double extent_y() const { return (rows - 1) * pixel_scale; }
  float at(int r, int c) const { return albedo[size_t(r) * cols + c]; }
};

struct CoregistrationReport {
  double extent_mismatch_x = 0.0;  // meters
  double extent_mismatch_y = 0.0;
  double texels_per_post = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Decodes the raster described by a PDS3 label. Supported sample types:
/// IEEE_REAL/PC_REAL 32-bit and MSB/LSB_INTEGER 8/16-bit with
/// SCALING_FACTOR and OFFSET applied. Samples equal to MISSING_CONSTANT are
/// masked; non-finite samples are masked as well.
Heightfield load_dtm_pds(const Pds3Label& label, std::span<const uint8_t> data);

/// Reads a whole attached-label .IMG product (label + data area).
Heightfield load_dtm_pds_file(const std::filesystem::path& path);

/// Portable grid format: ASCII header `HFG1 rows cols post_spacing nodata`
/// followed by rows*cols little-endian float32, row-major.
Heightfield load_dtm_grid(const std::filesystem::path& path);
void save_dtm_grid(const Heightfield& h, const std::filesystem::path& path);

/// Sniffs HFG vs PDS3 by magic bytes.
Heightfield load_heightfield_auto(const std::filesystem::path& path);

/// Loads an 8/16-bit grayscale PGM or PNG as albedo, normalized by the
/// format's maximum sample value.
OrthoTexture load_texture(const std::filesystem::path& path, double pixel_scale);

/// Constant-albedo texture covering the heightfield footprint (fixtures).
OrthoTexture constant_texture(const Heightfield& h, float albedo, double pixel_scale);

CoregistrationReport check_coregistration(const Heightfield& h, const OrthoTexture& t);

}  // namespace terra
