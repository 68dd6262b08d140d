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

#include "eogm/synth.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "eogm/bev.hpp"

namespace eogm {

void SynthOptions::validate() const {
  if (!(mass_per_reflection > 0) || !(mass_per_reflection < 1)) {
    throw std::domain_error("mass_per_reflection must be in (0, 1)");
  }
  if (neighborhood_radius < 0) {
    throw std::domain_error("neighborhood_radius must be nonnegative");
  }
  if (min_beams < 0) {
    throw std::domain_error("min_beams must be nonnegative");
  }
}

EvidentialGridd build_label_grid(const std::vector<RayHit>& dense_hits, const GridSpec& spec,
                                 const SynthOptions& options) {
  options.validate();
  EvidentialGridd grid(spec);
  const BeliefMassd free_mass =
      BeliefMassd::from_components(options.mass_per_reflection, 0, 0);
  const BeliefMassd occupied_mass =
      BeliefMassd::from_components(0, options.mass_per_reflection, 0);

  for (const RayHit& hit : dense_hits) {
    const auto cell = world_to_cell(spec, hit.point.x(), hit.point.y());
    if (!cell) continue;
    const BeliefMassd& mass =
        hit.material == Material::kDrivable ? free_mass : occupied_mass;
    const int radius = options.neighborhood_radius;
    for (int dr = -radius; dr <= radius; ++dr) {
      for (int dc = -radius; dc <= radius; ++dc) {
        const int row = cell->row + dr;
        const int col = cell->col + dc;
        if (spec.contains(row, col)) deposit(grid, row, col, mass);
      }
    }
  }
  return grid;
}

EvidentialGridd apply_dynamic_masses(EvidentialGridd grid, const Scene& scene,
                                     const std::vector<RayHit>& hits, int min_beams,
                                     FootprintMode footprint_mode) {
  if (min_beams < 0) throw std::domain_error("min_beams must be nonnegative");

  std::map<int, int> beams_per_object;
  for (const RayHit& hit : hits) {
    if (hit.object_id) ++beams_per_object[*hit.object_id];
  }

  // The footprint average reads the masses present before any dynamic
  // rewrite, so overlapping objects see the same snapshot.
  const EvidentialGridd snapshot = grid;
  for (const SceneBox& box : scene.dynamic_boxes) {
    const auto it = beams_per_object.find(box.object_id);
    const int beams = it == beams_per_object.end() ? 0 : it->second;
    if (beams < min_beams) continue;

    const std::vector<CellIndex> cells =
        footprint_cells(grid.spec(), box.bev(), footprint_mode);
    if (cells.empty()) continue;

    double static_sum = 0;
    for (const CellIndex& cell : cells) {
      static_sum += snapshot.at(cell)(Hypothesis::kStaticOccupied);
    }
    const double dynamic_mass = static_sum / static_cast<double>(cells.size());

    for (const CellIndex& cell : cells) {
      double free = snapshot.at(cell)(Hypothesis::kFree);
      if (free + dynamic_mass > 1) free = 1 - dynamic_mass;
      MassVector<double> v;
      v << free, 0, dynamic_mass, 0, std::max(0.0, 1 - free - dynamic_mass);
      grid.set(cell, BeliefMassd(v));
    }
  }
  return grid;
}

SyntheticSample generate_synthetic_sample(const Scene& scene, const LidarConfig& sparse,
                                          const LidarConfig& dense, const GridSpec& spec,
                                          const SynthOptions& options) {
  options.validate();
  if (!sparse.mount_pose.isApprox(dense.mount_pose, 0) ||
      sparse.vertical_fov_min != dense.vertical_fov_min ||
      sparse.vertical_fov_max != dense.vertical_fov_max) {
    throw std::domain_error(
        "measurement and label sensors must share mount pose and vertical field of view");
  }

  const std::vector<RayHit> sparse_hits = cast_rays(scene, sparse);
  const std::vector<RayHit> dense_hits = cast_rays(scene, dense);

  EvidentialGridd label = build_label_grid(dense_hits, spec, options);
  const std::vector<RayHit>& counted = options.count_sparse_beams ? sparse_hits : dense_hits;
  label = apply_dynamic_masses(std::move(label), scene, counted, options.min_beams,
                               options.footprint_mode);

  return {hits_to_cloud(sparse_hits), std::move(label)};
}

}  // namespace eogm
