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

#ifndef EOGM_LIDAR_HPP
#define EOGM_LIDAR_HPP

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cstdint>
#include <optional>
#include <vector>

#include "eogm/scene.hpp"

namespace eogm {

/// Virtual spinning lidar: `layers` elevation angles uniformly spaced
/// across the vertical field of view, `azimuth_steps` bearings per
/// revolution. The noise fields are forward-compatibility hooks and must
/// stay at their off defaults; cast_rays rejects anything else.
struct LidarConfig {
  int layers = 1;
  int azimuth_steps = 1;
  double vertical_fov_min = 0;  // radians
  double vertical_fov_max = 0;
  Eigen::Isometry3d mount_pose = Eigen::Isometry3d::Identity();
  double max_range = 100;
  double dropout_probability = 0;  // reserved, must be 0
  double range_noise_sigma = 0;    // reserved, must be 0

  void validate() const;
};

struct LidarPoint {
  float x = 0;
  float y = 0;
  float z = 0;
  float intensity = 0;
  std::uint32_t ring = 0;
};

enum class Frame { kSensor, kEgo };

struct PointCloud {
  std::vector<LidarPoint> points;
  Frame frame = Frame::kEgo;
};

struct RayHit {
  Eigen::Vector3d point = Eigen::Vector3d::Zero();  // ego frame
  Material material = Material::kDrivable;
  std::optional<int> object_id;
  int ring = 0;
};

/// Casts one ray per (layer, azimuth) pair, layer-major, and keeps the
/// nearest surface intersection within max_range. Deterministic: ties go
/// to the earliest surface in scene order (patches, then static boxes,
/// then dynamic boxes).
std::vector<RayHit> cast_rays(const Scene& scene, const LidarConfig& config);

/// Material-dependent constant used as point intensity.
float material_intensity(Material material);

/// Packs hits into a point cloud in the ego frame.
PointCloud hits_to_cloud(const std::vector<RayHit>& hits);

}  // namespace eogm

#endif  // EOGM_LIDAR_HPP
