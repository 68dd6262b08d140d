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

#ifndef EOGM_IO_CLOUD_FORMAT_HPP
#define EOGM_IO_CLOUD_FORMAT_HPP

#include <filesystem>
#include <string>

#include "eogm/lidar.hpp"

namespace eogm {

/// Point-cloud file layout (all little-endian):
///   magic "EPCL" | version u16 (= 1) | point count u64 |
///   count records of f32: x, y, z, intensity, ring (integral value).
/// Clouds on disk are always in the ego frame.

std::string encode_cloud(const PointCloud& cloud);
PointCloud decode_cloud(const std::string& bytes);

void write_cloud(const std::filesystem::path& path, const PointCloud& cloud);
PointCloud read_cloud(const std::filesystem::path& path);

}  // namespace eogm

#endif  // EOGM_IO_CLOUD_FORMAT_HPP
