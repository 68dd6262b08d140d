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

#include "eogm/io/png_writer.hpp"

#include <zlib.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "eogm/io/binary.hpp"

namespace eogm {
namespace {

void put_be32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>((v >> 24) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

void put_chunk(std::string& out, const char type[4], const std::string& data) {
  put_be32(out, static_cast<std::uint32_t>(data.size()));
  std::string body(type, 4);
  body += data;
  out += body;
  const auto crc = crc32(0, reinterpret_cast<const Bytef*>(body.data()),
                         static_cast<uInt>(body.size()));
  put_be32(out, static_cast<std::uint32_t>(crc));
}

std::uint8_t to_byte(double mass) {
  return static_cast<std::uint8_t>(std::lround(255.0 * mass));
}

}  // namespace

std::string encode_png(const EvidentialGridd& grid) {
  const int height = grid.rows();
  const int width = grid.cols();

  // Scanlines with filter byte 0; image row 0 shows the farthest grid row.
  std::vector<unsigned char> raster(static_cast<std::size_t>(height) * (1 + 3 * width));
  std::size_t pos = 0;
  for (int image_row = 0; image_row < height; ++image_row) {
    const int grid_row = height - 1 - image_row;
    raster[pos++] = 0;
    for (int col = 0; col < width; ++col) {
      const BeliefMassd mass = grid.at(grid_row, col);
      raster[pos++] = to_byte(mass(Hypothesis::kStaticOccupied));
      raster[pos++] = to_byte(mass(Hypothesis::kFree));
      raster[pos++] = to_byte(mass(Hypothesis::kDynamicOccupied));
    }
  }

  uLongf compressed_size = compressBound(static_cast<uLong>(raster.size()));
  std::vector<unsigned char> compressed(compressed_size);
  if (compress2(compressed.data(), &compressed_size, raster.data(),
                static_cast<uLong>(raster.size()), Z_DEFAULT_COMPRESSION) != Z_OK) {
    throw ParseError(ParseError::Kind::kIo, "PNG compression failed");
  }

  std::string png("\x89PNG\r\n\x1a\n", 8);
  std::string ihdr;
  put_be32(ihdr, static_cast<std::uint32_t>(width));
  put_be32(ihdr, static_cast<std::uint32_t>(height));
  ihdr.push_back(8);  // bit depth
  ihdr.push_back(2);  // color type: truecolor RGB
  ihdr.push_back(0);  // compression
  ihdr.push_back(0);  // filter
  ihdr.push_back(0);  // interlace
  put_chunk(png, "IHDR", ihdr);
  put_chunk(png, "IDAT",
            std::string(reinterpret_cast<const char*>(compressed.data()), compressed_size));
  put_chunk(png, "IEND", "");
  return png;
}

void render_png(const EvidentialGridd& grid, const std::filesystem::path& path) {
  write_file_atomic(path, encode_png(grid));
}

}  // namespace eogm
