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

#ifndef EOGM_IO_PILLAR_FORMAT_HPP
#define EOGM_IO_PILLAR_FORMAT_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "eogm/grid.hpp"
#include "eogm/lidar.hpp"

namespace eogm {

inline constexpr int kPillarFeatureCount = 9;

/// Dense pillar tensor for external trainers: a fixed (P, N, 9) feature
/// block plus one grid-cell index per pillar slot. Per-point features:
///   x, y, z, intensity,
///   x - mean_x, y - mean_y, z - mean_z   (mean over the points kept in
///                                         the pillar),
///   x - cell_center_x, y - cell_center_y.
/// Unused point rows and pillar slots are zero; `pillar_count` says how
/// many leading slots are real.
struct PillarTensor {
  int rows = 0;
  int cols = 0;
  int max_pillars = 0;
  int max_points = 0;
  std::uint32_t pillar_count = 0;
  std::vector<float> features;        // max_pillars * max_points * 9
  std::vector<std::uint32_t> cells;   // max_pillars entries, row-major cell index

  float& feature(int pillar, int point, int channel) {
    return features[(static_cast<std::size_t>(pillar) * max_points + point) *
                        kPillarFeatureCount +
                    channel];
  }
  float feature(int pillar, int point, int channel) const {
    return features[(static_cast<std::size_t>(pillar) * max_points + point) *
                        kPillarFeatureCount +
                    channel];
  }
};

/// Buckets the cloud by containing grid cell. Non-empty cells become
/// pillars; when there are more than max_pillars, the fullest cells win
/// (ties: lower cell index). Surviving pillars are laid out in ascending
/// cell-index order; within a pillar, points keep input order and
/// overflow beyond max_points is dropped.
PillarTensor pillarize(const PointCloud& cloud, const GridSpec& spec, int max_pillars,
                       int max_points);

/// Pillar file layout (all little-endian):
///   magic "EPLT" | version u16 (= 1) | rows u32 | cols u32 | P u32 |
///   N u32 | D u32 (= 9) | pillar_count u32 | P*N*D f32 features |
///   P u32 cell indices.
std::string encode_pillars(const PillarTensor& tensor);
PillarTensor decode_pillars(const std::string& bytes);

void write_pillars(const std::filesystem::path& path, const PillarTensor& tensor);
PillarTensor read_pillars(const std::filesystem::path& path);

}  // namespace eogm

#endif  // EOGM_IO_PILLAR_FORMAT_HPP
