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

#ifndef EOGM_SYNTH_HPP
#define EOGM_SYNTH_HPP

#include <vector>

#include "eogm/grid.hpp"
#include "eogm/lidar.hpp"
#include "eogm/scene.hpp"

namespace eogm {

/// Label construction knobs. Every reflection deposits a small belief
/// mass into the containing cell and its square neighborhood; dynamic
/// objects only enter the label when enough beams observed them.
struct SynthOptions {
  double mass_per_reflection = 0.1;
  int neighborhood_radius = 1;  // 0 = containing cell only, 1 = 3x3, ...
  int min_beams = 20;
  bool count_sparse_beams = false;  // count the measurement sensor instead
  FootprintMode footprint_mode = FootprintMode::kCenter;

  void validate() const;
};

struct SyntheticSample {
  PointCloud cloud;          // sparse measurement sensor
  EvidentialGridd label;     // dense label sensor
};

/// Accumulates per-reflection masses from dense-sensor hits: drivable
/// material contributes free mass, everything else static-occupied mass,
/// Dempster-combined per cell. Dynamic postprocessing is separate so the
/// pre-dynamics grid stays observable.
EvidentialGridd build_label_grid(const std::vector<RayHit>& dense_hits, const GridSpec& spec,
                                 const SynthOptions& options);

/// Rewrites the footprint cells of every dynamic object observed by at
/// least min_beams hits: the object's dynamic mass is the footprint
/// average of the previously accumulated static mass; free mass is kept
/// (capped so the cell still sums to 1) and unknown absorbs the residual.
EvidentialGridd apply_dynamic_masses(EvidentialGridd grid, const Scene& scene,
                                     const std::vector<RayHit>& hits, int min_beams,
                                     FootprintMode footprint_mode = FootprintMode::kCenter);

/// Full synthetic pipeline: sparse cloud + dense label grid.
SyntheticSample generate_synthetic_sample(const Scene& scene, const LidarConfig& sparse,
                                          const LidarConfig& dense, const GridSpec& spec,
                                          const SynthOptions& options = {});

}  // namespace eogm

#endif  // EOGM_SYNTH_HPP
