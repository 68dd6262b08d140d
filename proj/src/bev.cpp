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

#include "eogm/bev.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace eogm {
namespace {

Eigen::Matrix2d rotation(double yaw) {
  const double c = std::cos(yaw);
  const double s = std::sin(yaw);
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

std::array<Eigen::Vector2d, 4> rect_corners(const OrientedRect& rect) {
  const Eigen::Matrix2d r = rotation(rect.yaw);
  const Eigen::Vector2d hx = r.col(0) * rect.half_size.x();
  const Eigen::Vector2d hy = r.col(1) * rect.half_size.y();
  return {rect.center + hx + hy, rect.center + hx - hy, rect.center - hx + hy,
          rect.center - hx - hy};
}

/// Separating-axis test between an oriented rect and an axis-aligned cell
/// square given by its center and half size.
bool rect_overlaps_square(const OrientedRect& rect, const Eigen::Vector2d& square_center,
                          double square_half, double tol) {
  const Eigen::Matrix2d r = rotation(rect.yaw);
  const Eigen::Vector2d d = rect.center - square_center;
  // Candidate separating axes: the square's axes and the rect's axes.
  for (int axis = 0; axis < 2; ++axis) {
    const double rect_extent = rect.half_size.x() * std::abs(r(axis, 0)) +
                               rect.half_size.y() * std::abs(r(axis, 1));
    if (std::abs(d[axis]) > square_half + rect_extent + tol) return false;
  }
  for (int axis = 0; axis < 2; ++axis) {
    const Eigen::Vector2d u = r.col(axis);
    const double square_extent = square_half * (std::abs(u.x()) + std::abs(u.y()));
    if (std::abs(d.dot(u)) > rect.half_size[axis] + square_extent + tol) return false;
  }
  return true;
}

}  // namespace

bool point_in_rect(const OrientedRect& rect, const Eigen::Vector2d& point, double tol) {
  const Eigen::Vector2d local = rotation(rect.yaw).transpose() * (point - rect.center);
  return std::abs(local.x()) <= rect.half_size.x() + tol &&
         std::abs(local.y()) <= rect.half_size.y() + tol;
}

std::vector<CellIndex> footprint_cells(const GridSpec& spec, const OrientedRect& rect,
                                       FootprintMode mode) {
  const auto corners = rect_corners(rect);
  double min_x = corners[0].x(), max_x = corners[0].x();
  double min_y = corners[0].y(), max_y = corners[0].y();
  for (const auto& c : corners) {
    min_x = std::min(min_x, c.x());
    max_x = std::max(max_x, c.x());
    min_y = std::min(min_y, c.y());
    max_y = std::max(max_y, c.y());
  }

  const double cell = spec.cell_size_m();
  int row_lo = static_cast<int>(std::floor((min_x - spec.x_min()) / cell)) - 1;
  int row_hi = static_cast<int>(std::floor((max_x - spec.x_min()) / cell)) + 1;
  int col_lo = static_cast<int>(std::floor((min_y - spec.y_min()) / cell)) - 1;
  int col_hi = static_cast<int>(std::floor((max_y - spec.y_min()) / cell)) + 1;
  row_lo = std::max(row_lo, 0);
  col_lo = std::max(col_lo, 0);
  row_hi = std::min(row_hi, spec.rows() - 1);
  col_hi = std::min(col_hi, spec.cols() - 1);

  std::vector<CellIndex> cells;
  for (int row = row_lo; row <= row_hi; ++row) {
    for (int col = col_lo; col <= col_hi; ++col) {
      const Eigen::Vector2d center = cell_center(spec, row, col);
      const bool hit = mode == FootprintMode::kCenter
                           ? point_in_rect(rect, center)
                           : rect_overlaps_square(rect, center, cell / 2, 1e-9);
      if (hit) cells.push_back({row, col});
    }
  }
  return cells;
}

}  // namespace eogm
