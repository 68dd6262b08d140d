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

#include "eogm/ism.hpp"

#include <cmath>
#include <stdexcept>

#include "eogm/traversal.hpp"

namespace eogm {
namespace {

/// Last in-grid cell along the segment from `from` (inside) toward `to`
/// (outside): the exit point backed off into the grid.
std::optional<CellIndex> clip_exit_cell(const GridSpec& spec, const Eigen::Vector2d& from,
                                        const Eigen::Vector2d& to) {
  const Eigen::Vector2d d = to - from;
  const double lo[2] = {spec.x_min(), spec.y_min()};
  const double hi[2] = {spec.x_min() + spec.length_m(), spec.y_min() + spec.width_m()};
  double t_exit = 1;
  for (int axis = 0; axis < 2; ++axis) {
    if (d[axis] > 0) {
      t_exit = std::min(t_exit, (hi[axis] - from[axis]) / d[axis]);
    } else if (d[axis] < 0) {
      t_exit = std::min(t_exit, (lo[axis] - from[axis]) / d[axis]);
    }
  }
  if (!(t_exit > 0)) return std::nullopt;
  const Eigen::Vector2d exit_point = from + t_exit * d;
  // Back off along the ray so the point is strictly inside the boundary.
  const Eigen::Vector2d inside = exit_point - 1e-9 * d.normalized();
  return world_to_cell(spec, inside);
}

}  // namespace

void IsmConfig::validate() const {
  if (!(ground_z_min < ground_z_max)) {
    throw std::domain_error("ground height band is inverted");
  }
  if (!(free_mass_per_ray > 0) || !(free_mass_per_ray < 1) || !(occupied_mass_per_hit > 0) ||
      !(occupied_mass_per_hit < 1)) {
    throw std::domain_error("per-ray masses must be in (0, 1)");
  }
}

EvidentialGridd geometric_ism(const PointCloud& cloud, const IsmConfig& config,
                              const GridSpec& spec) {
  config.validate();
  EvidentialGridd grid(spec);

  const Eigen::Vector2d sensor = spec.center();
  const auto sensor_cell = world_to_cell(spec, sensor);
  if (!sensor_cell) {
    throw std::domain_error("sensor origin outside the grid extent");
  }

  const BeliefMassd free_mass = BeliefMassd::from_components(config.free_mass_per_ray, 0, 0);
  const BeliefMassd occupied_mass =
      BeliefMassd::from_components(0, config.occupied_mass_per_hit, 0);

  for (const LidarPoint& point : cloud.points) {
    if (!std::isfinite(point.x) || !std::isfinite(point.y) || !std::isfinite(point.z)) continue;
    if (point.z < config.ground_z_min) continue;  // below-ground return, spurious
    const bool is_ground = point.z <= config.ground_z_max;

    const Eigen::Vector2d endpoint(point.x, point.y);
    auto end_cell = world_to_cell(spec, endpoint);
    bool endpoint_in_grid = end_cell.has_value();
    if (!endpoint_in_grid) {
      end_cell = clip_exit_cell(spec, sensor, endpoint);
      if (!end_cell) continue;
    }

    const std::vector<SupercoverStep> steps = supercover_line(*sensor_cell, *end_cell);
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const bool at_endpoint = endpoint_in_grid && i + 1 == steps.size();
      const BeliefMassd& mass = at_endpoint && !is_ground ? occupied_mass : free_mass;
      deposit(grid, steps[i].cell, mass);
      if (steps[i].twin) deposit(grid, *steps[i].twin, mass);
    }
  }
  return grid;
}

}  // namespace eogm
