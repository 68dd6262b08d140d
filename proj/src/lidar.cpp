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

#include "eogm/lidar.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace eogm {
namespace {

// Intersections closer than this are the sensor housing, not a surface.
constexpr double kMinRange = 1e-9;

struct Intersection {
  double range;
  Material material;
  std::optional<int> object_id;
};

std::optional<double> intersect_patch(const GroundPatch& patch, const Eigen::Vector3d& origin,
                                      const Eigen::Vector3d& dir) {
  const double den = dir.z() - patch.grad_x * dir.x() - patch.grad_y * dir.y();
  if (std::abs(den) < 1e-12) return std::nullopt;
  const double num =
      patch.z0 + patch.grad_x * origin.x() + patch.grad_y * origin.y() - origin.z();
  const double t = num / den;
  if (t <= kMinRange) return std::nullopt;
  const Eigen::Vector3d p = origin + t * dir;
  if (!point_in_polygon(patch.polygon, p.head<2>())) return std::nullopt;
  return t;
}

std::optional<double> intersect_box(const SceneBox& box, const Eigen::Vector3d& origin,
                                    const Eigen::Vector3d& dir) {
  const Eigen::AngleAxisd rot(box.yaw, Eigen::Vector3d::UnitZ());
  const Eigen::Vector3d q = rot.inverse() * (origin - box.center);
  const Eigen::Vector3d dq = rot.inverse() * dir;
  double t_enter = -std::numeric_limits<double>::infinity();
  double t_exit = std::numeric_limits<double>::infinity();
  for (int axis = 0; axis < 3; ++axis) {
    const double half = box.size[axis] / 2;
    if (std::abs(dq[axis]) < 1e-15) {
      if (std::abs(q[axis]) > half) return std::nullopt;
      continue;
    }
    const double t1 = (-half - q[axis]) / dq[axis];
    const double t2 = (half - q[axis]) / dq[axis];
    t_enter = std::max(t_enter, std::min(t1, t2));
    t_exit = std::min(t_exit, std::max(t1, t2));
  }
  // Rays starting inside a box see no entry face and miss.
  if (t_enter > t_exit || t_enter <= kMinRange) return std::nullopt;
  return t_enter;
}

}  // namespace

void LidarConfig::validate() const {
  if (layers < 1 || azimuth_steps < 1) {
    throw std::domain_error("lidar needs at least one layer and one azimuth step");
  }
  if (!(max_range > 0)) {
    throw std::domain_error("lidar max_range must be positive");
  }
  if (vertical_fov_min > vertical_fov_max) {
    throw std::domain_error("vertical field of view is inverted");
  }
  if (dropout_probability != 0 || range_noise_sigma != 0) {
    throw std::domain_error("noise hooks are reserved and must stay at 0");
  }
}

std::vector<RayHit> cast_rays(const Scene& scene, const LidarConfig& config) {
  scene.validate();
  config.validate();

  const Eigen::Vector3d origin = config.mount_pose.translation();
  const Eigen::Matrix3d rotation = config.mount_pose.linear();
  const double fov_span = config.vertical_fov_max - config.vertical_fov_min;

  std::vector<RayHit> hits;
  for (int layer = 0; layer < config.layers; ++layer) {
    const double elevation =
        config.layers == 1
            ? (config.vertical_fov_min + config.vertical_fov_max) / 2
            : config.vertical_fov_min + layer * fov_span / (config.layers - 1);
    const double cos_e = std::cos(elevation);
    const double sin_e = std::sin(elevation);
    for (int step = 0; step < config.azimuth_steps; ++step) {
      const double azimuth = step * (2 * std::numbers::pi / config.azimuth_steps);
      const Eigen::Vector3d dir =
          rotation * Eigen::Vector3d(cos_e * std::cos(azimuth), cos_e * std::sin(azimuth), sin_e);

      std::optional<Intersection> best;
      auto consider = [&](std::optional<double> t, Material material,
                          std::optional<int> object_id) {
        if (!t || *t > config.max_range) return;
        if (!best || *t < best->range) best = Intersection{*t, material, object_id};
      };
      for (const GroundPatch& patch : scene.ground_patches) {
        consider(intersect_patch(patch, origin, dir), patch.material, std::nullopt);
      }
      for (const SceneBox& box : scene.static_boxes) {
        consider(intersect_box(box, origin, dir), box.material, std::nullopt);
      }
      for (const SceneBox& box : scene.dynamic_boxes) {
        consider(intersect_box(box, origin, dir), box.material, box.object_id);
      }
      if (best) {
        hits.push_back({origin + best->range * dir, best->material, best->object_id, layer});
      }
    }
  }
  return hits;
}

float material_intensity(Material material) {
  switch (material) {
    case Material::kDrivable:
      return 0.25f;
    case Material::kNonDrivable:
      return 0.5f;
    case Material::kDynamicObject:
      return 0.75f;
  }
  return 0;
}

PointCloud hits_to_cloud(const std::vector<RayHit>& hits) {
  PointCloud cloud;
  cloud.frame = Frame::kEgo;
  cloud.points.reserve(hits.size());
  for (const RayHit& hit : hits) {
    cloud.points.push_back({static_cast<float>(hit.point.x()), static_cast<float>(hit.point.y()),
                            static_cast<float>(hit.point.z()), material_intensity(hit.material),
                            static_cast<std::uint32_t>(hit.ring)});
  }
  return cloud;
}

}  // namespace eogm
