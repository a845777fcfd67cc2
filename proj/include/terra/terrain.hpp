#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "terra/geometry.hpp"
#include "terra/ingest.hpp"

namespace terra {

struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<uint32_t, 3>> triangles;
  std::vector<Vec3> face_normals;
  std::vector<Vec3> vertex_normals;  // area-weighted, for smooth shading

  size_t triangle_count() const { return triangles.size(); }
  Vec3 vertex(uint32_t tri, int corner) const { return vertices[triangles[tri][corner]]; }
};

enum class NormalMode { Smooth, Flat };

enum class HeightStatus { Ok, Nodata, OutOfBounds };

struct HeightSample {
  HeightStatus status = HeightStatus::OutOfBounds;
  double z = 0.0;

  bool ok() const { return status == HeightStatus::Ok; }
};

/// Bilinear downsampling that preserves the geographic extent; fraction is
/// the output/input resolution ratio in (0, 1]. fraction == 1 is the
/// identity. Any interpolation touching a nodata post yields nodata.
Heightfield resample(const Heightfield& h, double fraction);

/// Splits every fully-valid grid cell along its (i,j)->(i+1,j+1) diagonal
/// into two CCW-from-above triangles. Cells touching nodata are omitted.
TriangleMesh triangulate(const Heightfield& h);

/// Bilinear height oracle. Independent of the triangulation; agrees with the
/// mesh exactly at posts and cell centers.
HeightSample height_at(const Heightfield& h, double x, double y);

/// Bilinear albedo lookup with edge clamp.
double sample_albedo(const OrthoTexture& t, double x, double y);

/// Tight bounds over all mesh vertices. Throws EmptyMesh.
Aabb world_bounds(const TriangleMesh& mesh);

/// Normal at barycentric (u,v) inside a triangle, per shading policy.
Vec3 shading_normal(const TriangleMesh& mesh, uint32_t tri, double u, double v, NormalMode mode);

}  // namespace terra
