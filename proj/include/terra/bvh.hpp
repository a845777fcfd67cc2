#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "terra/geometry.hpp"
#include "terra/terrain.hpp"

namespace terra {

struct Ray {
  Vec3 origin;
  Vec3 direction;  // unit length
  double t_min = 0.0;
  double t_max = kInfinity;
};

struct Hit {
  double t = 0.0;
  uint32_t triangle = 0;
  double u = 0.0;  // barycentric weight of vertex 1
  double v = 0.0;  // barycentric weight of vertex 2
  Vec3 point;
  Vec3 normal;  // per requested shading-normal policy
};

struct RayStats {
  uint64_t triangle_tests = 0;
  uint64_t node_visits = 0;
};

/// Binary BVH built with a binned surface-area heuristic over the longest
/// centroid axis (median split fallback). Construction is deterministic.
struct Bvh {
  struct Node {
    Aabb bounds;
    uint32_t left = 0;   // internal: child node indices
    uint32_t right = 0;
    uint32_t first = 0;  // leaf: range into `order`
    uint32_t count = 0;  // leaf when count > 0
    uint8_t axis = 0;    // split axis, traversal ordering hint

    bool is_leaf() const { return count > 0; }
  };

  static constexpr int kDefaultLeafSize = 4;

  std::vector<Node> nodes;
  std::vector<uint32_t> order;  // permutation of mesh triangle indices
  int leaf_size = kDefaultLeafSize;
};

Bvh build_bvh(const TriangleMesh& mesh, int leaf_size = Bvh::kDefaultLeafSize);

/// Nearest hit in [t_min, t_max]; ties at equal t resolve to the lowest
/// triangle index.
std::optional<Hit> intersect(const Bvh& bvh, const TriangleMesh& mesh, const Ray& ray,
                             NormalMode normal_mode = NormalMode::Flat,
                             RayStats* stats = nullptr);

/// Exhaustive oracle: same ray-triangle formulation and tie-break as
/// intersect, no acceleration structure.
std::optional<Hit> intersect_brute(const TriangleMesh& mesh, const Ray& ray,
                                   NormalMode normal_mode = NormalMode::Flat,
                                   RayStats* stats = nullptr);

/// True iff the ray hits anything in range; exits on the first hit found.
bool occluded(const Bvh& bvh, const TriangleMesh& mesh, const Ray& ray);

}  // namespace terra
