#pragma once

#include <optional>
#include <utility>

#include "terra/bvh.hpp"
#include "terra/geometry.hpp"
#include "terra/ingest.hpp"
#include "terra/terrain.hpp"

namespace terra {

/// Camera pose: columns of R_WC are the camera X/Y/Z axes expressed in world
/// coordinates; t_WC is the optical center in world coordinates.
struct Pose {
  Mat3 R_WC;
  Vec3 t_WC;

  Vec3 world_to_camera(const Vec3& p_w) const { return R_WC.transposed() * (p_w - t_WC); }
  Vec3 camera_to_world(const Vec3& p_c) const { return R_WC * p_c + t_WC; }
};

struct PerspectiveIntrinsics {
  int width = 512;
  int height = 512;
  double fx = 256.0;
  double fy = 256.0;
  double cx = 256.0;
  double cy = 256.0;
};

struct OrthoCamera {
  int width = 0;
  int height = 0;
  double gsd = 0.25;      // meters per pixel
  Vec2 center_world;
  double plane_z = 0.0;   // ray start height, above the terrain under the footprint
};

struct SunLight {
  double azimuth_deg = 180.0;          // clockwise from North, viewed from above
  double elevation_deg = 40.0;         // above horizon, [0, 90]
  double irradiance = 590.0;           // W/m^2
  double angular_diameter_deg = 0.35;
};

struct Attitude {
  double yaw_deg = 0.0;    // about camera Z
  double pitch_deg = 0.0;  // about camera Y
  double roll_deg = 0.0;   // about camera X
};

/// sin/cos in degrees, exact at quadrant angles so axis-aligned directions
/// come out bit-exact.
double sin_deg(double deg);
double cos_deg(double deg);

/// Unit vector toward the sun in the world frame.
Vec3 sun_direction(double azimuth_deg, double elevation_deg);
inline Vec3 sun_direction(const SunLight& s) { return sun_direction(s.azimuth_deg, s.elevation_deg); }

/// Nadir convention: camera X = East, Y = South, Z = Down; image up is North.
Pose make_nadir_pose(double x, double y, double z);

/// R_WC = R_nadir * Rz(yaw) * Ry(pitch) * Rx(roll); zero angles are nadir.
Pose pose_from_attitude(double x, double y, double z, const Attitude& att);

/// Immutable scene bundle shared by rendering and dataset generation.
struct TerrainScene {
  Heightfield terrain;
  OrthoTexture texture;
  TriangleMesh mesh;
  Bvh bvh;
  Aabb bounds;

  double ray_epsilon() const { return 1e-4 * terrain.post_spacing; }

  static TerrainScene build(Heightfield terrain, OrthoTexture texture,
                            int leaf_size = Bvh::kDefaultLeafSize);
};

/// Drops a vertical ray from above the terrain bounds at (x,y) and places the
/// camera `agl` meters above the hit. Throws NoTerrainBelow on a miss.
Pose place_camera(const TerrainScene& scene, double x, double y, double agl,
                  const Attitude& att = {});

/// Primary ray through pixel (px,py) at subpixel offset in [0,1)^2.
Ray camera_ray(const PerspectiveIntrinsics& intr, const Pose& pose, int px, int py,
               Vec2 subpixel = {0.0, 0.0});

/// Downward ortho ray; pixel row 0 is the north edge.
Ray ortho_ray(const OrthoCamera& cam, int px, int py, Vec2 subpixel = {0.0, 0.0});

/// Pixel dimensions covering extent_x by extent_y meters at `gsd` m/px.
std::pair<int, int> ortho_map_size(double extent_x, double extent_y, double gsd);

/// Ortho camera covering the scene footprint (or an explicit extent) with the
/// ray-start plane `margin_z` above the highest terrain point.
OrthoCamera make_map_camera(const TerrainScene& scene, double gsd,
                            std::optional<double> extent_x = std::nullopt,
                            std::optional<double> extent_y = std::nullopt,
                            double margin_z = 10.0);

}  // namespace terra
