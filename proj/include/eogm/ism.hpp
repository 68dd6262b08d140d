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

#ifndef EOGM_ISM_HPP
#define EOGM_ISM_HPP

#include "eogm/grid.hpp"
#include "eogm/lidar.hpp"

namespace eogm {

/// Height-band ground model: returns with z inside the band are ground,
/// returns above it are obstacles, returns below it are discarded as
/// spurious.
struct IsmConfig {
  double ground_z_min = -0.3;
  double ground_z_max = 0.3;
  double free_mass_per_ray = 0.05;
  double occupied_mass_per_hit = 0.3;

  void validate() const;
};

/// Classical geometric inverse sensor model over a single scan: per-ray
/// free mass along the traversed cells, occupied mass at obstacle
/// endpoints, Dempster-combined. Produces free/static evidence only; a
/// single scan cannot distinguish dynamic from static occupancy.
EvidentialGridd geometric_ism(const PointCloud& cloud, const IsmConfig& config,
                              const GridSpec& spec);

}  // namespace eogm

#endif  // EOGM_ISM_HPP
