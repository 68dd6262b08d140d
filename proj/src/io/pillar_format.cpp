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

#include "eogm/io/pillar_format.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "eogm/io/binary.hpp"

namespace eogm {
namespace {

constexpr char kMagic[4] = {'E', 'P', 'L', 'T'};
constexpr std::uint16_t kVersion = 1;
constexpr std::int64_t kMaxBlock = 1ll << 31;

}  // namespace

PillarTensor pillarize(const PointCloud& cloud, const GridSpec& spec, int max_pillars,
                       int max_points) {
  if (max_pillars < 1 || max_points < 1) {
    throw std::domain_error("pillar capacities must be at least 1");
  }

  // Bucket points by cell; std::map keeps ascending cell-index order.
  std::map<int, std::vector<const LidarPoint*>> buckets;
  for (const LidarPoint& point : cloud.points) {
    const auto cell = world_to_cell(spec, point.x, point.y);
    if (!cell) continue;
    buckets[cell->row * spec.cols() + cell->col].push_back(&point);
  }

  // Keep the fullest cells when over capacity; ties favor the lower index.
  std::vector<int> kept;
  kept.reserve(buckets.size());
  for (const auto& [index, points] : buckets) kept.push_back(index);
  if (static_cast<int>(kept.size()) > max_pillars) {
    std::stable_sort(kept.begin(), kept.end(), [&](int a, int b) {
      return buckets.at(a).size() != buckets.at(b).size()
                 ? buckets.at(a).size() > buckets.at(b).size()
                 : a < b;
    });
    kept.resize(max_pillars);
    std::sort(kept.begin(), kept.end());
  }

  PillarTensor tensor;
  tensor.rows = spec.rows();
  tensor.cols = spec.cols();
  tensor.max_pillars = max_pillars;
  tensor.max_points = max_points;
  tensor.pillar_count = static_cast<std::uint32_t>(kept.size());
  tensor.features.assign(
      static_cast<std::size_t>(max_pillars) * max_points * kPillarFeatureCount, 0.0f);
  tensor.cells.assign(max_pillars, 0);

  for (std::size_t slot = 0; slot < kept.size(); ++slot) {
    const int cell_index = kept[slot];
    tensor.cells[slot] = static_cast<std::uint32_t>(cell_index);
    const auto& points = buckets.at(cell_index);
    const int count = std::min<int>(max_points, static_cast<int>(points.size()));

    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    for (int i = 0; i < count; ++i) {
      mean += Eigen::Vector3d(points[i]->x, points[i]->y, points[i]->z);
    }
    mean /= count;
    const Eigen::Vector2d center =
        cell_center(spec, cell_index / spec.cols(), cell_index % spec.cols());

    for (int i = 0; i < count; ++i) {
      const LidarPoint& p = *points[i];
      const int s = static_cast<int>(slot);
      tensor.feature(s, i, 0) = p.x;
      tensor.feature(s, i, 1) = p.y;
      tensor.feature(s, i, 2) = p.z;
      tensor.feature(s, i, 3) = p.intensity;
      tensor.feature(s, i, 4) = static_cast<float>(p.x - mean.x());
      tensor.feature(s, i, 5) = static_cast<float>(p.y - mean.y());
      tensor.feature(s, i, 6) = static_cast<float>(p.z - mean.z());
      tensor.feature(s, i, 7) = static_cast<float>(p.x - center.x());
      tensor.feature(s, i, 8) = static_cast<float>(p.y - center.y());
    }
  }
  return tensor;
}

std::string encode_pillars(const PillarTensor& tensor) {
  ByteWriter out;
  out.raw(kMagic, 4);
  out.u16(kVersion);
  out.u32(static_cast<std::uint32_t>(tensor.rows));
  out.u32(static_cast<std::uint32_t>(tensor.cols));
  out.u32(static_cast<std::uint32_t>(tensor.max_pillars));
  out.u32(static_cast<std::uint32_t>(tensor.max_points));
  out.u32(kPillarFeatureCount);
  out.u32(tensor.pillar_count);
  for (const float v : tensor.features) out.f32(v);
  for (const std::uint32_t v : tensor.cells) out.u32(v);
  return out.bytes();
}

PillarTensor decode_pillars(const std::string& bytes) {
  ByteReader in(bytes);
  char magic[4];
  in.raw(magic, 4);
  if (std::memcmp(magic, kMagic, 4) != 0) {
    throw ParseError(ParseError::Kind::kBadMagic, "not a pillar file (bad magic)");
  }
  if (in.u16() != kVersion) {
    throw ParseError(ParseError::Kind::kBadValue, "unsupported pillar format version");
  }
  PillarTensor tensor;
  tensor.rows = static_cast<int>(in.u32());
  tensor.cols = static_cast<int>(in.u32());
  tensor.max_pillars = static_cast<int>(in.u32());
  tensor.max_points = static_cast<int>(in.u32());
  const std::uint32_t feature_count = in.u32();
  tensor.pillar_count = in.u32();
  if (tensor.rows < 1 || tensor.cols < 1 || tensor.max_pillars < 1 || tensor.max_points < 1) {
    throw ParseError(ParseError::Kind::kBadValue, "implausible pillar dimensions");
  }
  if (feature_count != kPillarFeatureCount) {
    throw ParseError(ParseError::Kind::kBadValue, "unsupported feature count");
  }
  if (tensor.pillar_count > static_cast<std::uint32_t>(tensor.max_pillars)) {
    throw ParseError(ParseError::Kind::kBadValue, "pillar count exceeds capacity");
  }
  const std::int64_t block = static_cast<std::int64_t>(tensor.max_pillars) * tensor.max_points *
                             kPillarFeatureCount;
  if (block > kMaxBlock) {
    throw ParseError(ParseError::Kind::kBadValue, "implausible tensor size");
  }

  tensor.features.resize(static_cast<std::size_t>(block));
  for (float& v : tensor.features) v = in.f32();
  tensor.cells.resize(tensor.max_pillars);
  const std::int64_t cell_count = static_cast<std::int64_t>(tensor.rows) * tensor.cols;
  for (std::size_t i = 0; i < tensor.cells.size(); ++i) {
    tensor.cells[i] = in.u32();
    if (tensor.cells[i] >= cell_count) {
      throw ParseError(ParseError::Kind::kBadValue, "pillar cell index outside the grid");
    }
  }
  if (!in.at_end()) {
    throw ParseError(ParseError::Kind::kBadValue, "trailing bytes after pillar payload");
  }
  return tensor;
}

void write_pillars(const std::filesystem::path& path, const PillarTensor& tensor) {
  write_file_atomic(path, encode_pillars(tensor));
}

PillarTensor read_pillars(const std::filesystem::path& path) {
  return decode_pillars(read_file(path));
}

}  // namespace eogm
