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

#ifndef EOGM_BEV_HPP
#define EOGM_BEV_HPP

#include <Eigen/Core>

#include <vector>

#include "eogm/grid.hpp"

namespace eogm {

/// Axis extents are half sizes; yaw rotates the rect counterclockwise
/// around its center.
struct OrientedRect {
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
  Eigen::Vector2d half_size = Eigen::Vector2d::Zero();
  double yaw = 0;
};

/// Boundary-inclusive containment with a small tolerance so points on a
/// rect edge (after float round-trips) still count as inside.
bool point_in_rect(const OrientedRect& rect, const Eigen::Vector2d& point, double tol = 1e-9);

enum class FootprintMode {
  kCenter,   // a cell belongs to the footprint when its center is inside
  kOverlap,  // ... when the cell square intersects the rect at all
};

/// Grid cells covered by an oriented rect, in row-major order, clipped to
/// the grid. Cells fully outside the grid are dropped silently.
std::vector<CellIndex> footprint_cells(const GridSpec& spec, const OrientedRect& rect,
                                       FootprintMode mode = FootprintMode::kCenter);

}  // namespace eogm

#endif  // EOGM_BEV_HPP
