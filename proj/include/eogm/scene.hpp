/*
 * Copyright 2026 The EOGM Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EOGM_SCENE_HPP
#define EOGM_SCENE_HPP

#include <Eigen/Core>

#include <vector>

#include "eogm/bev.hpp"

namespace eogm {

/// Surface material; every scene surface carries exactly one.
enum class Material : int {
  kDrivable = 0,      // asphalt, road marks
  kNonDrivable = 1,   // sidewalk, building, pole, ...
  kDynamicObject = 2,
};

/// Planar ground region: a convex or concave simple polygon in the BEV
/// plane with a linear height profile z(x, y) = z0 + grad_x*x + grad_y*y.
struct GroundPatch {
  std::vector<Eigen::Vector2d> polygon;
  double z0 = 0;
  double grad_x = 0;
  double grad_y = 0;
  Material material = Material::kDrivable;
};

/// Oriented 3D box; size holds full extents, yaw rotates around the
/// vertical axis through the center.
struct SceneBox {
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  Eigen::Vector3d size = Eigen::Vector3d::Zero();
  double yaw = 0;
  Material material = Material::kNonDrivable;
  int object_id = -1;  // meaningful for dynamic boxes only

  OrientedRect bev() const {
    return OrientedRect{center.head<2>(), size.head<2>() / 2, yaw};
  }
};

struct Scene {
  std::vector<GroundPatch> ground_patches;
  std::vector<SceneBox> static_boxes;
  std::vector<SceneBox> dynamic_boxes;

  /// Throws std::domain_error on violated invariants (non-positive box
  /// extents, duplicate dynamic object ids, degenerate patches).
  void validate() const;
};

/// Whether a point lies inside a simple polygon (even-odd rule); points
/// on the boundary may land on either side, consistently per edge.
bool point_in_polygon(const std::vector<Eigen::Vector2d>& polygon, const Eigen::Vector2d& p);

/// Convenience: an axis-aligned rectangular patch.
GroundPatch make_rect_patch(double min_x, double min_y, double max_x, double max_y, double z0 = 0,
                            Material material = Material::kDrivable);

}  // namespace eogm

#endif  // EOGM_SCENE_HPP
