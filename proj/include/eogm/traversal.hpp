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

#ifndef EOGM_TRAVERSAL_HPP
#define EOGM_TRAVERSAL_HPP

#include <cstdlib>
#include <optional>
#include <vector>

#include "eogm/grid.hpp"

namespace eogm {

/// One traversal step. When the segment passes exactly through a cell
/// corner the two edge-adjacent cells are entered at the same parameter;
/// the second one is carried as the twin.
struct SupercoverStep {
  CellIndex cell;
  std::optional<CellIndex> twin;
};

/// Supercover line between two cell centers: every cell the closed
/// segment touches, ordered by entry parameter, starting at `from` and
/// ending at `to`. Unlike Bresenham, diagonal moves also report the two
/// cells sharing the crossed corner, so the result is gap-free.
///
/// All decisions are made in integer arithmetic on a doubled lattice
/// (cell centers at odd coordinates, boundaries at even ones), so the
/// corner case is exact.
inline std::vector<SupercoverStep> supercover_line(CellIndex from, CellIndex to) {
  std::vector<SupercoverStep> steps;
  steps.push_back({from, std::nullopt});
  int row = from.row;
  int col = from.col;

  const long long dr = 2LL * (to.row - from.row);
  const long long dc = 2LL * (to.col - from.col);
  const int step_row = dr > 0 ? 1 : -1;
  const int step_col = dc > 0 ? 1 : -1;
  const long long abs_dr = std::llabs(dr);
  const long long abs_dc = std::llabs(dc);

  if (abs_dr == 0 && abs_dc == 0) return steps;
  if (abs_dr == 0) {
    while (col != to.col) {
      col += step_col;
      steps.push_back({CellIndex{row, col}, std::nullopt});
    }
    return steps;
  }
  if (abs_dc == 0) {
    while (row != to.row) {
      row += step_row;
      steps.push_back({CellIndex{row, col}, std::nullopt});
    }
    return steps;
  }

  // Entry parameters as exact fractions over the common denominator
  // abs_dr * abs_dc: the k-th row boundary from the start center lies at
  // doubled distance 2k - 1, contributing (2k - 1) * abs_dc.
  long long t_row = abs_dc;  // next row-boundary crossing
  long long t_col = abs_dr;  // next column-boundary crossing
  while (row != to.row || col != to.col) {
    if (t_col < t_row) {
      col += step_col;
      t_col += 2 * abs_dr;
      steps.push_back({CellIndex{row, col}, std::nullopt});
    } else if (t_row < t_col) {
      row += step_row;
      t_row += 2 * abs_dc;
      steps.push_back({CellIndex{row, col}, std::nullopt});
    } else {
      // Exact corner: both edge neighbors are touched at this parameter,
      // then the segment continues into the diagonal cell.
      steps.push_back({CellIndex{row + step_row, col}, CellIndex{row, col + step_col}});
      row += step_row;
      col += step_col;
      t_row += 2 * abs_dc;
      t_col += 2 * abs_dr;
      steps.push_back({CellIndex{row, col}, std::nullopt});
    }
  }
  return steps;
}

/// Flattened supercover cells in traversal order (twins expanded).
inline std::vector<CellIndex> supercover_cells(CellIndex from, CellIndex to) {
  std::vector<CellIndex> cells;
  for (const SupercoverStep& step : supercover_line(from, to)) {
    cells.push_back(step.cell);
    if (step.twin) cells.push_back(*step.twin);
  }
  return cells;
}

}  // namespace eogm

#endif  // EOGM_TRAVERSAL_HPP
