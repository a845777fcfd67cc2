#pragma once

#include <cstdint>
#include <utility>

#include "terra/image.hpp"
#include "terra/rng.hpp"
#include "terra/scene.hpp"

namespace terra {

struct RenderConfig {
  int aa_samples = 1;        // rays per pixel; 1 = canonical subpixel (0,0), no jitter
  int shadow_samples = 1;    // 1 = hard shadow through the disk center
  double ambient_fraction = 0.05;
  double exposure_gain = 0.0;  // <= 0 selects the default pi/irradiance
  double gamma = 1.0;          // 1 = linear
  uint64_t seed = 0;
  int tile_size = 64;
  NormalMode shading_normals = NormalMode::Smooth;
};

/// Throws InvalidConfig if any field is out of range.
void validate(const RenderConfig& cfg);

/// Lambertian radiance under a directional sun:
/// L = (albedo/pi) * E * [max(0, n.s) * (1 - occlusion) + ambient].
double shade(const Vec3& normal, const Vec3& sun_dir, double irradiance, double albedo,
             double occlusion_fraction, double ambient_fraction);

/// Fraction of shadow rays over the sun disk (spherical cap of half-angle
/// angular_diameter/2, uniform via concentric disk mapping) that are blocked.
/// n_samples == 1 tests only the exact center direction.
double occlusion_fraction(const TerrainScene& scene, const Vec3& point, const SunLight& sun,
                          int n_samples, SplitMix& rng);

std::pair<RadianceImage, DepthImage> render_image(const TerrainScene& scene,
                                                  const PerspectiveIntrinsics& intr,
                                                  const Pose& pose, const SunLight& sun,
                                                  const RenderConfig& cfg, int jobs = 1);

std::pair<RadianceImage, DepthImage> render_image(const TerrainScene& scene,
                                                  const OrthoCamera& cam, const SunLight& sun,
                                                  const RenderConfig& cfg, int jobs = 1);

/// v = clamp(gain * L, 0, 1), optional 1/gamma curve, rounded to 8 bits.
GrayImage8 expose_quantize(const RadianceImage& img, const RenderConfig& cfg, double irradiance);

std::pair<GrayImage8, DepthImage> render_ortho_map(const TerrainScene& scene,
                                                   const OrthoCamera& cam, const SunLight& sun,
                                                   const RenderConfig& cfg, int jobs = 1);

}  // namespace terra
