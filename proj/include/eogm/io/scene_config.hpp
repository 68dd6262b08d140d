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

#ifndef EOGM_IO_SCENE_CONFIG_HPP
#define EOGM_IO_SCENE_CONFIG_HPP

#include <filesystem>
#include <string>

#include "eogm/grid.hpp"
#include "eogm/lidar.hpp"
#include "eogm/scene.hpp"
#include "eogm/synth.hpp"

namespace eogm {

/// Everything `gen-synthetic` needs, parsed from one JSON document. The
/// jitter ranges drive per-sample variation of dynamic boxes (uniform
/// offsets in x/y and yaw) when more than one sample is requested.
struct SceneDescription {
  GridSpec grid = GridSpec(81.92, 56.32, 0.32);
  LidarConfig sparse;
  LidarConfig dense;
  Scene scene;
  SynthOptions options;
  double jitter_translation_m = 0;
  double jitter_yaw_rad = 0;
};

/// Schema (JSON): see scenes/demo.json and the README for a field-level
/// description. Violations raise ParseError with kind kBadValue.
SceneDescription parse_scene_description(const std::string& json_text);
SceneDescription load_scene_description(const std::filesystem::path& path);

}  // namespace eogm

#endif  // EOGM_IO_SCENE_CONFIG_HPP
