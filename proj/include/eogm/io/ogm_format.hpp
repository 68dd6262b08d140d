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

#ifndef EOGM_IO_OGM_FORMAT_HPP
#define EOGM_IO_OGM_FORMAT_HPP

#include <filesystem>
#include <string>

#include "eogm/grid.hpp"

namespace eogm {

/// Grid file layout (all little-endian):
///   magic "EOGM" | version u16 (= 1) | rows u32 | cols u32 |
///   cell_size f32 | channels u8 (= 4) |
///   rows*cols quadruples of f32: m(free), m(static), m(dynamic),
///   m(occupied composite), row-major.
/// The unknown mass is implied as the residual to 1 and not stored.

/// The residual-unknown rule shared by the reader and anything that wants
/// to predict what a read-back grid holds.
inline double implied_unknown_mass(float free, float static_occ, float dynamic_occ,
                                   float occupied) {
  const double residual = 1.0 - static_cast<double>(free) - static_cast<double>(static_occ) -
                          static_cast<double>(dynamic_occ) - static_cast<double>(occupied);
  return residual > 0 ? residual : 0.0;
}

std::string encode_ogm(const EvidentialGridd& grid);
EvidentialGridd decode_ogm(const std::string& bytes);

void write_ogm(const std::filesystem::path& path, const EvidentialGridd& grid);
EvidentialGridd read_ogm(const std::filesystem::path& path);

}  // namespace eogm

#endif  // EOGM_IO_OGM_FORMAT_HPP
