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

#include "eogm/annotation.hpp"

#include <stdexcept>

#include "eogm/traversal.hpp"

namespace eogm {
namespace {

BeliefMassd one_hot(Hypothesis h) {
  MassVector<double> v = MassVector<double>::Zero();
  v[static_cast<int>(h)] = 1;
  return BeliefMassd(v);
}

bool blocks_rays(const BeliefMassd& mass) {
  const Hypothesis label = classify_cell(mass, 0.5);
  return label == Hypothesis::kStaticOccupied || label == Hypothesis::kDynamicOccupied;
}

}  // namespace

int points_in_box(const PointCloud& cloud, const OrientedRect& rect) {
  int count = 0;
  for (const LidarPoint& point : cloud.points) {
    if (point_in_rect(rect, Eigen::Vector2d(point.x, point.y))) ++count;
  }
  return count;
}

EvidentialGridd occlusion_mask(EvidentialGridd grid, const Eigen::Vector2d& sensor_origin,
                               const std::vector<std::uint8_t>& protected_cells) {
  const GridSpec& spec = grid.spec();
  const std::size_t cell_count = static_cast<std::size_t>(spec.cell_count());
  if (!protected_cells.empty() && protected_cells.size() != cell_count) {
    throw std::domain_error("protected-cell mask does not match the grid");
  }
  const auto sensor_cell = world_to_cell(spec, sensor_origin);
  if (!sensor_cell) {
    throw std::domain_error("sensor origin outside the grid extent");
  }

  // Blockers are determined once, before any rewrite, so masked cells do
  // not become transparent mid-pass.
  std::vector<std::uint8_t> blocked(cell_count, 0);
  for (int row = 0; row < spec.rows(); ++row) {
    for (int col = 0; col < spec.cols(); ++col) {
      blocked[grid.index(row, col)] = blocks_rays(grid.at(row, col)) ? 1 : 0;
    }
  }

  std::vector<std::uint8_t> visible(cell_count, 0);
  auto trace = [&](CellIndex border) {
    bool shadowed = false;
    for (const SupercoverStep& step : supercover_line(*sensor_cell, border)) {
      if (shadowed) break;
      visible[grid.index(step.cell.row, step.cell.col)] = 1;
      bool hit_blocker = blocked[grid.index(step.cell.row, step.cell.col)] != 0;
      if (step.twin) {
        visible[grid.index(step.twin->row, step.twin->col)] = 1;
        hit_blocker = hit_blocker || blocked[grid.index(step.twin->row, step.twin->col)] != 0;
      }
      shadowed = hit_blocker;
    }
  };
  for (int col = 0; col < spec.cols(); ++col) {
    trace({0, col});
    trace({spec.rows() - 1, col});
  }
  for (int row = 0; row < spec.rows(); ++row) {
    trace({row, 0});
    trace({row, spec.cols() - 1});
  }

  const BeliefMassd unknown = BeliefMassd::vacuous();
  for (int row = 0; row < spec.rows(); ++row) {
    for (int col = 0; col < spec.cols(); ++col) {
      const int index = grid.index(row, col);
      const bool is_protected = !protected_cells.empty() && protected_cells[index] != 0;
      if (!visible[index] && !is_protected) grid.set(row, col, unknown);
    }
  }
  return grid;
}

EvidentialGridd generate_label_from_annotations(const AnnotatedSample& sample,
                                                const GridSpec& spec, int min_points,
                                                FootprintMode footprint_mode) {
  if (min_points < 0) throw std::domain_error("min_points must be nonnegative");
  if (sample.drivable.rows != spec.rows() || sample.drivable.cols != spec.cols()) {
    throw std::domain_error("drivable map dimensions do not match the grid");
  }

  EvidentialGridd grid(spec);
  std::vector<std::uint8_t> dynamic_footprint(static_cast<std::size_t>(spec.cell_count()), 0);
  for (const AnnotatedBox& box : sample.boxes) {
    if (points_in_box(sample.cloud, box.rect) < min_points) continue;
    for (const CellIndex& cell : footprint_cells(spec, box.rect, footprint_mode)) {
      dynamic_footprint[grid.index(cell.row, cell.col)] = 1;
    }
  }

  const BeliefMassd dynamic_mass = BeliefMassd::from_components(0, 0, 1);
  const BeliefMassd free_mass = BeliefMassd::from_components(1, 0, 0);
  const BeliefMassd static_mass = BeliefMassd::from_components(0, 1, 0);
  for (int row = 0; row < spec.rows(); ++row) {
    for (int col = 0; col < spec.cols(); ++col) {
      if (dynamic_footprint[grid.index(row, col)]) {
        grid.set(row, col, dynamic_mass);
      } else if (sample.drivable.at(row, col)) {
        grid.set(row, col, free_mass);
      } else {
        grid.set(row, col, static_mass);
      }
    }
  }

  return occlusion_mask(std::move(grid), sample.sensor_origin, dynamic_footprint);
}

}  // namespace eogm
