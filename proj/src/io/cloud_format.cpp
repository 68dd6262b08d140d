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

#include "eogm/io/cloud_format.hpp"

#include <cmath>

#include "eogm/io/binary.hpp"

namespace eogm {
namespace {

constexpr char kMagic[4] = {'E', 'P', 'C', 'L'};
constexpr std::uint16_t kVersion = 1;
constexpr std::uint64_t kMaxPoints = 1ull << 32;

}  // namespace

std::string encode_cloud(const PointCloud& cloud) {
  ByteWriter out;
  out.raw(kMagic, 4);
  out.u16(kVersion);
  out.u64(cloud.points.size());
  for (const LidarPoint& point : cloud.points) {
    out.f32(point.x);
    out.f32(point.y);
    out.f32(point.z);
    out.f32(point.intensity);
    out.f32(static_cast<float>(point.ring));
  }
  return out.bytes();
}

PointCloud decode_cloud(const std::string& bytes) {
  ByteReader in(bytes);
  char magic[4];
  in.raw(magic, 4);
  if (std::memcmp(magic, kMagic, 4) != 0) {
    throw ParseError(ParseError::Kind::kBadMagic, "not a point-cloud file (bad magic)");
  }
  if (in.u16() != kVersion) {
    throw ParseError(ParseError::Kind::kBadValue, "unsupported cloud format version");
  }
  const std::uint64_t count = in.u64();
  if (count > kMaxPoints) {
    throw ParseError(ParseError::Kind::kBadValue, "implausible point count");
  }

  PointCloud cloud;
  cloud.frame = Frame::kEgo;
  cloud.points.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    LidarPoint point;
    point.x = in.f32();
    point.y = in.f32();
    point.z = in.f32();
    point.intensity = in.f32();
    const float ring = in.f32();
    if (!std::isfinite(point.x) || !std::isfinite(point.y) || !std::isfinite(point.z)) {
      throw ParseError(ParseError::Kind::kBadValue, "non-finite point coordinates");
    }
    if (!std::isfinite(ring) || ring < 0 || std::floor(ring) != ring) {
      throw ParseError(ParseError::Kind::kBadValue, "ring index must be a nonnegative integer");
    }
    point.ring = static_cast<std::uint32_t>(ring);
    cloud.points.push_back(point);
  }
  if (!in.at_end()) {
    throw ParseError(ParseError::Kind::kBadValue, "trailing bytes after point records");
  }
  return cloud;
}

void write_cloud(const std::filesystem::path& path, const PointCloud& cloud) {
  write_file_atomic(path, encode_cloud(cloud));
}

PointCloud read_cloud(const std::filesystem::path& path) {
  return decode_cloud(read_file(path));
}

}  // namespace eogm
