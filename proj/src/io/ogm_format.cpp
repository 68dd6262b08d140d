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

#include "eogm/io/ogm_format.hpp"

#include <cmath>

#include "eogm/io/binary.hpp"

namespace eogm {
namespace {

constexpr char kMagic[4] = {'E', 'O', 'G', 'M'};
constexpr std::uint16_t kVersion = 1;
constexpr std::uint8_t kChannels = 4;
constexpr std::int64_t kMaxCells = 1 << 28;  // 256M cells, ~4 GiB payload

}  // namespace

std::string encode_ogm(const EvidentialGridd& grid) {
  ByteWriter out;
  out.raw(kMagic, 4);
  out.u16(kVersion);
  out.u32(static_cast<std::uint32_t>(grid.rows()));
  out.u32(static_cast<std::uint32_t>(grid.cols()));
  out.f32(static_cast<float>(grid.spec().cell_size_m()));
  out.u8(kChannels);
  for (int row = 0; row < grid.rows(); ++row) {
    for (int col = 0; col < grid.cols(); ++col) {
      const BeliefMassd mass = grid.at(row, col);
      out.f32(static_cast<float>(mass(Hypothesis::kFree)));
      out.f32(static_cast<float>(mass(Hypothesis::kStaticOccupied)));
      out.f32(static_cast<float>(mass(Hypothesis::kDynamicOccupied)));
      out.f32(static_cast<float>(mass(Hypothesis::kOccupied)));
    }
  }
  return out.bytes();
}

EvidentialGridd decode_ogm(const std::string& bytes) {
  ByteReader in(bytes);
  char magic[4];
  in.raw(magic, 4);
  if (std::memcmp(magic, kMagic, 4) != 0) {
    throw ParseError(ParseError::Kind::kBadMagic, "not a grid file (bad magic)");
  }
  const std::uint16_t version = in.u16();
  if (version != kVersion) {
    throw ParseError(ParseError::Kind::kBadValue, "unsupported grid format version");
  }
  const std::uint32_t rows = in.u32();
  const std::uint32_t cols = in.u32();
  const float cell_size = in.f32();
  const std::uint8_t channels = in.u8();
  if (rows == 0 || cols == 0 ||
      static_cast<std::int64_t>(rows) * cols > kMaxCells) {
    throw ParseError(ParseError::Kind::kBadValue, "implausible grid dimensions");
  }
  if (!std::isfinite(cell_size) || !(cell_size > 0)) {
    throw ParseError(ParseError::Kind::kBadValue, "cell size must be positive");
  }
  if (channels != kChannels) {
    throw ParseError(ParseError::Kind::kBadValue, "unsupported channel count");
  }

  EvidentialGridd grid(
      GridSpec::from_cells(static_cast<int>(rows), static_cast<int>(cols),
                           widen_quantized(cell_size)));
  for (std::uint32_t row = 0; row < rows; ++row) {
    for (std::uint32_t col = 0; col < cols; ++col) {
      const float free = in.f32();
      const float static_occ = in.f32();
      const float dynamic_occ = in.f32();
      const float occupied = in.f32();
      const float values[4] = {free, static_occ, dynamic_occ, occupied};
      double sum = 0;
      for (const float v : values) {
        if (!std::isfinite(v) || v < 0 || v > 1) {
          throw ParseError(ParseError::Kind::kBadValue, "cell mass outside [0, 1]");
        }
        sum += v;
      }
      if (sum > 1 + 1e-6) {
        throw ParseError(ParseError::Kind::kBadValue, "cell masses sum above 1");
      }
      MassVector<double> v;
      v << free, static_occ, dynamic_occ, occupied,
          implied_unknown_mass(free, static_occ, dynamic_occ, occupied);
      grid.set(static_cast<int>(row), static_cast<int>(col), BeliefMassd(v));
    }
  }
  if (!in.at_end()) {
    throw ParseError(ParseError::Kind::kBadValue, "trailing bytes after grid payload");
  }
  return grid;
}

void write_ogm(const std::filesystem::path& path, const EvidentialGridd& grid) {
  write_file_atomic(path, encode_ogm(grid));
}

EvidentialGridd read_ogm(const std::filesystem::path& path) {
  return decode_ogm(read_file(path));
}

}  // namespace eogm
