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

#include "eogm/io/scene_config.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "eogm/io/binary.hpp"

namespace eogm {
namespace {

using nlohmann::json;

double deg_to_rad(double degrees) { return degrees * std::numbers::pi / 180.0; }

Eigen::Vector2d parse_vec2(const json& node) {
  return {node.at(0).get<double>(), node.at(1).get<double>()};
}

Eigen::Vector3d parse_vec3(const json& node) {
  return {node.at(0).get<double>(), node.at(1).get<double>(), node.at(2).get<double>()};
}

Material parse_material(const std::string& name) {
  if (name == "drivable") return Material::kDrivable;
  if (name == "non_drivable") return Material::kNonDrivable;
  throw ParseError(ParseError::Kind::kBadValue, "unknown material: " + name);
}

LidarConfig parse_sensor(const json& node) {
  LidarConfig config;
  config.layers = node.at("layers").get<int>();
  config.azimuth_steps = node.at("azimuth_steps").get<int>();
  const json& fov = node.at("vertical_fov_deg");
  config.vertical_fov_min = deg_to_rad(fov.at(0).get<double>());
  config.vertical_fov_max = deg_to_rad(fov.at(1).get<double>());
  config.max_range = node.at("max_range_m").get<double>();
  if (node.contains("mount")) {
    const json& mount = node.at("mount");
    Eigen::Isometry3d pose = Eigen::Isometry3d::Identity();
    if (mount.contains("translation")) {
      pose.translation() = parse_vec3(mount.at("translation"));
    }
    if (mount.contains("yaw_deg")) {
      pose.linear() =
          Eigen::AngleAxisd(deg_to_rad(mount.at("yaw_deg").get<double>()),
                            Eigen::Vector3d::UnitZ())
              .toRotationMatrix();
    }
    config.mount_pose = pose;
  }
  return config;
}

GroundPatch parse_patch(const json& node) {
  GroundPatch patch;
  if (node.contains("rect")) {
    const json& rect = node.at("rect");
    patch = make_rect_patch(rect.at(0).get<double>(), rect.at(1).get<double>(),
                            rect.at(2).get<double>(), rect.at(3).get<double>());
  } else {
    for (const json& vertex : node.at("polygon")) {
      patch.polygon.push_back(parse_vec2(vertex));
    }
  }
  patch.z0 = node.value("z0", 0.0);
  if (node.contains("grad")) {
    patch.grad_x = node.at("grad").at(0).get<double>();
    patch.grad_y = node.at("grad").at(1).get<double>();
  }
  patch.material = parse_material(node.value("material", "drivable"));
  return patch;
}

SceneBox parse_box(const json& node, bool dynamic) {
  SceneBox box;
  box.center = parse_vec3(node.at("center"));
  box.size = parse_vec3(node.at("size"));
  box.yaw = node.value("yaw_rad", 0.0);
  if (dynamic) {
    box.material = Material::kDynamicObject;
    box.object_id = node.at("id").get<int>();
  } else {
    box.material = Material::kNonDrivable;
  }
  return box;
}

FootprintMode parse_footprint_mode(const std::string& name) {
  if (name == "center") return FootprintMode::kCenter;
  if (name == "overlap") return FootprintMode::kOverlap;
  throw ParseError(ParseError::Kind::kBadValue, "unknown footprint mode: " + name);
}

}  // namespace

SceneDescription parse_scene_description(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(ParseError::Kind::kBadValue, std::string("scene JSON: ") + e.what());
  }

  try {
    SceneDescription description;
    const json& grid = doc.at("grid");
    description.grid =
        GridSpec(grid.at("length_m").get<double>(), grid.at("width_m").get<double>(),
                 grid.at("cell_size_m").get<double>(),
                 grid.contains("center") ? parse_vec2(grid.at("center"))
                                         : Eigen::Vector2d::Zero());
    description.sparse = parse_sensor(doc.at("sparse_sensor"));
    description.dense = parse_sensor(doc.at("dense_sensor"));

    if (doc.contains("label_options")) {
      const json& options = doc.at("label_options");
      description.options.mass_per_reflection =
          options.value("mass_per_reflection", description.options.mass_per_reflection);
      description.options.neighborhood_radius =
          options.value("neighborhood_radius", description.options.neighborhood_radius);
      description.options.min_beams = options.value("min_beams", description.options.min_beams);
      description.options.count_sparse_beams =
          options.value("count_sparse_beams", description.options.count_sparse_beams);
      if (options.contains("footprint_mode")) {
        description.options.footprint_mode =
            parse_footprint_mode(options.at("footprint_mode").get<std::string>());
      }
    }
    if (doc.contains("jitter")) {
      const json& jitter = doc.at("jitter");
      description.jitter_translation_m = jitter.value("dynamic_translation_m", 0.0);
      description.jitter_yaw_rad = jitter.value("dynamic_yaw_rad", 0.0);
    }

    for (const json& node : doc.value("ground_patches", json::array())) {
      description.scene.ground_patches.push_back(parse_patch(node));
    }
    for (const json& node : doc.value("static_boxes", json::array())) {
      description.scene.static_boxes.push_back(parse_box(node, false));
    }
    for (const json& node : doc.value("dynamic_boxes", json::array())) {
      description.scene.dynamic_boxes.push_back(parse_box(node, true));
    }

    description.scene.validate();
    description.sparse.validate();
    description.dense.validate();
    description.options.validate();
    return description;
  } catch (const json::exception& e) {
    throw ParseError(ParseError::Kind::kBadValue, std::string("scene JSON: ") + e.what());
  } catch (const std::domain_error& e) {
    throw ParseError(ParseError::Kind::kBadValue, std::string("scene JSON: ") + e.what());
  }
}

SceneDescription load_scene_description(const std::filesystem::path& path) {
  return parse_scene_description(read_file(path));
}

}  // namespace eogm
