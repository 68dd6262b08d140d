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

#ifndef EOGM_IO_ANNOTATED_SAMPLE_HPP
#define EOGM_IO_ANNOTATED_SAMPLE_HPP

#include <filesystem>
#include <string>

#include "eogm/annotation.hpp"
#include "eogm/grid.hpp"

namespace eogm {

/// On disk an annotated sample is a point-cloud file (see cloud_format)
/// plus a JSON sidecar holding the boxes (center/size/yaw/id), the
/// drivable raster (base64 of row-major packed bits, least significant
/// bit first), the sensor origin, and the grid geometry.
struct LoadedSample {
  AnnotatedSample sample;
  GridSpec grid;
};

/// Writes `<stem>.epcl` and `<stem>.json` into the directory.
void write_annotated_sample(const std::filesystem::path& directory, const std::string& stem,
                            const AnnotatedSample& sample, const GridSpec& spec);

/// Loads a sample from its JSON sidecar; the cloud path inside the
/// sidecar resolves relative to the sidecar's directory.
LoadedSample load_annotated_sample(const std::filesystem::path& sidecar_path);

}  // namespace eogm

#endif  // EOGM_IO_ANNOTATED_SAMPLE_HPP
