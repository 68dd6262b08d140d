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

#ifndef EOGM_GRID_HPP
#define EOGM_GRID_HPP

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "eogm/belief.hpp"

namespace eogm {

struct CellIndex {
  int row = 0;
  int col = 0;

  friend bool operator==(const CellIndex& a, const CellIndex& b) {
    return a.row == b.row && a.col == b.col;
  }
  friend bool operator!=(const CellIndex& a, const CellIndex& b) { return !(a == b); }
};

/// Geometry of a bird's-eye-view grid. Rows index the longitudinal (x)
/// axis, columns the lateral (y) axis; the sensor origin sits at the grid
/// center by default. Cells are half-open squares: a point on the shared
/// edge of two cells belongs to the one with the larger index.
///
/// The canonical representation is (rows, cols, cell_size); extents are
/// derived as rows * cell_size so that a spec survives serialization
/// through formats that store only the cell counts.
class GridSpec {
 public:
  GridSpec(double length_m, double width_m, double cell_size_m,
           const Eigen::Vector2d& center = Eigen::Vector2d::Zero())
      : cell_size_(cell_size_m), center_(center) {
    if (!(cell_size_ > 0) || !(length_m > 0) || !(width_m > 0)) {
      throw std::domain_error("grid extents and cell size must be positive");
    }
    rows_ = static_cast<int>(std::llround(length_m / cell_size_));
    cols_ = static_cast<int>(std::llround(width_m / cell_size_));
    if (rows_ < 1 || cols_ < 1 ||
        std::abs(rows_ * cell_size_ - length_m) > 1e-6 * std::max(1.0, length_m) ||
        std::abs(cols_ * cell_size_ - width_m) > 1e-6 * std::max(1.0, width_m)) {
      throw std::domain_error("grid extents must be integer multiples of the cell size");
    }
  }

  static GridSpec from_cells(int rows, int cols, double cell_size_m,
                             const Eigen::Vector2d& center = Eigen::Vector2d::Zero()) {
    if (rows < 1 || cols < 1 || !(cell_size_m > 0)) {
      throw std::domain_error("grid needs positive cell counts and cell size");
    }
    return GridSpec(rows * cell_size_m, cols * cell_size_m, cell_size_m, center);
  }

  double length_m() const { return rows_ * cell_size_; }
  double width_m() const { return cols_ * cell_size_; }
  double cell_size_m() const { return cell_size_; }
  const Eigen::Vector2d& center() const { return center_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int cell_count() const { return rows_ * cols_; }

  double x_min() const { return center_.x() - length_m() / 2; }
  double y_min() const { return center_.y() - width_m() / 2; }

  bool contains(int row, int col) const {
    return row >= 0 && row < rows_ && col >= 0 && col < cols_;
  }

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cell_size_ == b.cell_size_ &&
           a.center_ == b.center_;
  }
  friend bool operator!=(const GridSpec& a, const GridSpec& b) { return !(a == b); }

 private:
  double cell_size_;
  Eigen::Vector2d center_;
  int rows_;
  int cols_;
};

/// Maps a world point to its cell, or nullopt when the point lies outside
/// the grid. The upper boundary is exclusive per the half-open cell
/// convention. NaN coordinates map to nullopt.
inline std::optional<CellIndex> world_to_cell(const GridSpec& spec, double x, double y) {
  const double u = x - spec.x_min();
  const double v = y - spec.y_min();
  if (!(u >= 0) || u >= spec.length_m() || !(v >= 0) || v >= spec.width_m()) {
    return std::nullopt;
  }
  // Division may round up to the next boundary; clamp keeps the result in
  // the half-open interval established by the bounds check above.
  int row = static_cast<int>(std::floor(u / spec.cell_size_m()));
  int col = static_cast<int>(std::floor(v / spec.cell_size_m()));
  if (row >= spec.rows()) row = spec.rows() - 1;
  if (col >= spec.cols()) col = spec.cols() - 1;
  return CellIndex{row, col};
}

inline std::optional<CellIndex> world_to_cell(const GridSpec& spec, const Eigen::Vector2d& p) {
  return world_to_cell(spec, p.x(), p.y());
}

/// Center of a cell in world coordinates.
inline Eigen::Vector2d cell_center(const GridSpec& spec, int row, int col) {
  if (!spec.contains(row, col)) {
    throw std::out_of_range("cell index outside the grid");
  }
  return {spec.x_min() + (row + 0.5) * spec.cell_size_m(),
          spec.y_min() + (col + 0.5) * spec.cell_size_m()};
}

inline Eigen::Vector2d cell_center(const GridSpec& spec, CellIndex cell) {
  return cell_center(spec, cell.row, cell.col);
}

/// Dense evidential grid: one belief mass per cell, stored as a 5 x N
/// matrix with one column per cell in row-major cell order. Cells start
/// vacuous (all mass on unknown).
template <typename Scalar>
class EvidentialGrid {
 public:
  using Storage = Eigen::Matrix<Scalar, 5, Eigen::Dynamic>;

  explicit EvidentialGrid(const GridSpec& spec)
      : spec_(spec), cells_(Storage::Zero(5, spec.cell_count())) {
    cells_.row(static_cast<int>(Hypothesis::kUnknown)).setOnes();
  }

  const GridSpec& spec() const { return spec_; }
  int rows() const { return spec_.rows(); }
  int cols() const { return spec_.cols(); }

  int index(int row, int col) const {
    if (!spec_.contains(row, col)) {
      throw std::out_of_range("cell index outside the grid");
    }
    return row * spec_.cols() + col;
  }

  BeliefMass<Scalar> at(int row, int col) const {
    return BeliefMass<Scalar>(cells_.col(index(row, col)));
  }
  BeliefMass<Scalar> at(CellIndex cell) const { return at(cell.row, cell.col); }

  void set(int row, int col, const BeliefMass<Scalar>& mass) {
    cells_.col(index(row, col)) = mass.m;
  }
  void set(CellIndex cell, const BeliefMass<Scalar>& mass) { set(cell.row, cell.col, mass); }

  /// One grid-wide channel (a 1 x N row expression) for a hypothesis.
  auto channel(Hypothesis h) const { return cells_.row(static_cast<int>(h)); }

  Storage& data() { return cells_; }
  const Storage& data() const { return cells_; }

  /// Number of cell updates dropped because the incoming mass fully
  /// conflicted with the cell content.
  std::uint64_t conflict_count() const { return conflicts_; }
  void count_conflict() { ++conflicts_; }

  friend bool operator==(const EvidentialGrid& a, const EvidentialGrid& b) {
    return a.spec_ == b.spec_ && a.cells_ == b.cells_;
  }
  friend bool operator!=(const EvidentialGrid& a, const EvidentialGrid& b) { return !(a == b); }

 private:
  GridSpec spec_;
  Storage cells_;
  std::uint64_t conflicts_ = 0;
};

/// Fuses a measurement mass into a cell with Dempster's rule. A fully
/// conflicting update leaves the cell unchanged and is counted on the
/// grid instead of raising.
template <typename Scalar>
void deposit(EvidentialGrid<Scalar>& grid, int row, int col, const BeliefMass<Scalar>& mass) {
  const BeliefMass<Scalar> current = grid.at(row, col);
  try {
    grid.set(row, col, combine_dempster(current, mass));
  } catch (const TotalConflictError&) {
    grid.count_conflict();
  }
}

template <typename Scalar>
void deposit(EvidentialGrid<Scalar>& grid, CellIndex cell, const BeliefMass<Scalar>& mass) {
  deposit(grid, cell.row, cell.col, mass);
}

using EvidentialGridd = EvidentialGrid<double>;

}  // namespace eogm

#endif  // EOGM_GRID_HPP
