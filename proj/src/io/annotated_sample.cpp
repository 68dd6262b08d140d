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

#include "eogm/io/annotated_sample.hpp"

#include <json.hpp>

#include "eogm/io/binary.hpp"
#include "eogm/io/cloud_format.hpp"

namespace eogm {
namespace {

using nlohmann::json;

constexpr char kBase64Chars[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::string base64_encode(const std::string& bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  for (std::size_t i = 0; i < bytes.size(); i += 3) {
    std::uint32_t block = static_cast<unsigned char>(bytes[i]) << 16;
    if (i + 1 < bytes.size()) block |= static_cast<unsigned char>(bytes[i + 1]) << 8;
    if (i + 2 < bytes.size()) block |= static_cast<unsigned char>(bytes[i + 2]);
    const std::size_t chars = std::min<std::size_t>(bytes.size() - i, 3) + 1;
    for (std::size_t c = 0; c < 4; ++c) {
      out.push_back(c < chars ? kBase64Chars[(block >> (18 - 6 * c)) & 0x3f] : '=');
    }
  }
  return out;
}

std::string base64_decode(const std::string& text) {
  int values[256];
  std::fill(std::begin(values), std::end(values), -1);
  for (int i = 0; i < 64; ++i) values[static_cast<unsigned char>(kBase64Chars[i])] = i;

  if (text.size() % 4 != 0) {
    throw ParseError(ParseError::Kind::kBadValue, "base64 length not a multiple of 4");
  }
  std::string out;
  out.reserve(text.size() / 4 * 3);
  for (std::size_t i = 0; i < text.size(); i += 4) {
    std::uint32_t block = 0;
    int chars = 0;
    bool padded = false;
    for (std::size_t c = 0; c < 4; ++c) {
      const char ch = text[i + c];
      if (ch == '=') {
        if (i + 4 != text.size() || c < 2) {
          throw ParseError(ParseError::Kind::kBadValue, "misplaced base64 padding");
        }
        padded = true;
        block <<= 6;
        continue;
      }
      const int value = values[static_cast<unsigned char>(ch)];
      if (value < 0 || padded) {
        throw ParseError(ParseError::Kind::kBadValue, "invalid base64 character");
      }
      block = (block << 6) | static_cast<std::uint32_t>(value);
      ++chars;
    }
    out.push_back(static_cast<char>((block >> 16) & 0xff));
    if (chars >= 3) out.push_back(static_cast<char>((block >> 8) & 0xff));
    if (chars == 4) out.push_back(static_cast<char>(block & 0xff));
  }
  return out;
}

std::string pack_bits(const std::vector<std::uint8_t>& cells) {
  std::string packed((cells.size() + 7) / 8, '\0');
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i]) packed[i / 8] |= static_cast<char>(1 << (i % 8));
  }
  return packed;
}

std::vector<std::uint8_t> unpack_bits(const std::string& packed, std::size_t count) {
  if (packed.size() != (count + 7) / 8) {
    throw ParseError(ParseError::Kind::kBadValue, "drivable raster has the wrong size");
  }
  std::vector<std::uint8_t> cells(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    cells[i] = (packed[i / 8] >> (i % 8)) & 1;
  }
  return cells;
}

}  // namespace

void write_annotated_sample(const std::filesystem::path& directory, const std::string& stem,
                            const AnnotatedSample& sample, const GridSpec& spec) {
  std::filesystem::create_directories(directory);
  write_cloud(directory / (stem + ".epcl"), sample.cloud);

  json doc;
  doc["cloud"] = stem + ".epcl";
  doc["grid"] = {{"rows", spec.rows()},
                 {"cols", spec.cols()},
                 {"cell_size_m", spec.cell_size_m()},
                 {"center", {spec.center().x(), spec.center().y()}}};
  doc["sensor_origin"] = {sample.sensor_origin.x(), sample.sensor_origin.y()};
  json boxes = json::array();
  for (const AnnotatedBox& box : sample.boxes) {
    boxes.push_back({{"id", box.id},
                     {"center", {box.rect.center.x(), box.rect.center.y()}},
                     {"size", {2 * box.rect.half_size.x(), 2 * box.rect.half_size.y()}},
                     {"yaw_rad", box.rect.yaw}});
  }
  doc["boxes"] = boxes;
  doc["drivable"] = {{"rows", sample.drivable.rows},
                     {"cols", sample.drivable.cols},
                     {"bits", base64_encode(pack_bits(sample.drivable.cells))}};

  write_file_atomic(directory / (stem + ".json"), doc.dump(2) + "\n");
}

LoadedSample load_annotated_sample(const std::filesystem::path& sidecar_path) {
  json doc;
  try {
    doc = json::parse(read_file(sidecar_path));
  } catch (const json::exception& e) {
    throw ParseError(ParseError::Kind::kBadValue, std::string("sample JSON: ") + e.what());
  }

  try {
    const json& grid_node = doc.at("grid");
    const GridSpec spec = GridSpec::from_cells(
        grid_node.at("rows").get<int>(), grid_node.at("cols").get<int>(),
        grid_node.at("cell_size_m").get<double>(),
        grid_node.contains("center")
            ? Eigen::Vector2d(grid_node.at("center").at(0).get<double>(),
                              grid_node.at("center").at(1).get<double>())
            : Eigen::Vector2d::Zero());

    AnnotatedSample sample;
    sample.cloud =
        read_cloud(sidecar_path.parent_path() / doc.at("cloud").get<std::string>());
    sample.sensor_origin = {doc.at("sensor_origin").at(0).get<double>(),
                            doc.at("sensor_origin").at(1).get<double>()};
    for (const json& node : doc.at("boxes")) {
      AnnotatedBox box;
      box.id = node.at("id").get<int>();
      box.rect.center = {node.at("center").at(0).get<double>(),
                         node.at("center").at(1).get<double>()};
      box.rect.half_size = {node.at("size").at(0).get<double>() / 2,
                            node.at("size").at(1).get<double>() / 2};
      if (!(box.rect.half_size.x() > 0) || !(box.rect.half_size.y() > 0)) {
        throw ParseError(ParseError::Kind::kBadValue, "box extents must be positive");
      }
      box.rect.yaw = node.value("yaw_rad", 0.0);
      sample.boxes.push_back(box);
    }

    const json& drivable = doc.at("drivable");
    sample.drivable.rows = drivable.at("rows").get<int>();
    sample.drivable.cols = drivable.at("cols").get<int>();
    if (sample.drivable.rows != spec.rows() || sample.drivable.cols != spec.cols()) {
      throw ParseError(ParseError::Kind::kBadValue,
                       "drivable raster dimensions do not match the grid");
    }
    sample.drivable.cells =
        unpack_bits(base64_decode(drivable.at("bits").get<std::string>()),
                    static_cast<std::size_t>(spec.cell_count()));

    return {std::move(sample), spec};
  } catch (const json::exception& e) {
    throw ParseError(ParseError::Kind::kBadValue, std::string("sample JSON: ") + e.what());
  }
}

}  // namespace eogm
