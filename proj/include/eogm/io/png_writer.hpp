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

#ifndef EOGM_IO_PNG_WRITER_HPP
#define EOGM_IO_PNG_WRITER_HPP

#include <filesystem>
#include <string>

#include "eogm/grid.hpp"

namespace eogm {

/// Renders a grid as an 8-bit RGB PNG, one pixel per cell. Red carries
/// the static-occupied mass, green the free mass, blue the dynamic mass
/// (each rounded to 255ths, halves up); vacuous cells come out black.
/// The forward axis points up: image row 0 is the farthest grid row.
std::string encode_png(const EvidentialGridd& grid);
void render_png(const EvidentialGridd& grid, const std::filesystem::path& path);

}  // namespace eogm

#endif  // EOGM_IO_PNG_WRITER_HPP
