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

#ifndef EOGM_ANNOTATION_HPP
#define EOGM_ANNOTATION_HPP

#include <Eigen/Core>

#include <vector>

#include "eogm/bev.hpp"
#include "eogm/grid.hpp"
#include "eogm/lidar.hpp"

namespace eogm {

/// A manually annotated dynamic-class object in the BEV plane.
struct AnnotatedBox {
  int id = 0;
  OrientedRect rect;
};

/// Boolean raster aligned to a GridSpec; true marks drivable surface.
struct DrivableMap {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> cells;  // row-major

  bool at(int row, int col) const { return cells[static_cast<std::size_t>(row) * cols + col] != 0; }
};

struct AnnotatedSample {
  PointCloud cloud;  // ego frame
  std::vector<AnnotatedBox> boxes;
  DrivableMap drivable;
  Eigen::Vector2d sensor_origin = Eigen::Vector2d::Zero();
};

/// Number of cloud points whose (x, y) falls inside the yawed rectangle;
/// z is ignored and boundary points count as inside.
int points_in_box(const PointCloud& cloud, const OrientedRect& rect);

/// Crisp label grid from annotations: dynamic mass on footprints of boxes
/// holding at least min_points cloud points, free mass on the remaining
/// drivable cells, static mass elsewhere, then occlusion masking with the
/// dynamic footprints protected.
EvidentialGridd generate_label_from_annotations(const AnnotatedSample& sample,
                                                const GridSpec& spec, int min_points = 20,
                                                FootprintMode footprint_mode =
                                                    FootprintMode::kCenter);

/// Rewrites every cell the sensor cannot see to full unknown mass.
/// Visibility is the union over supercover rays from the sensor cell to
/// every border cell; a cell whose current label is statically or
/// dynamically occupied blocks the rest of its ray (the blocker itself
/// stays visible). Cells listed in protected_cells (row-major bool mask,
/// may be empty for "none") are never rewritten.
EvidentialGridd occlusion_mask(EvidentialGridd grid, const Eigen::Vector2d& sensor_origin,
                               const std::vector<std::uint8_t>& protected_cells = {});

}  // namespace eogm

#endif  // EOGM_ANNOTATION_HPP
