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

#include "eogm/scene.hpp"

#include <stdexcept>
#include <unordered_set>

namespace eogm {

void Scene::validate() const {
  for (const GroundPatch& patch : ground_patches) {
    if (patch.polygon.size() < 3) {
      throw std::domain_error("ground patch polygon needs at least 3 vertices");
    }
    if (patch.material == Material::kDynamicObject) {
      throw std::domain_error("ground patches cannot be dynamic objects");
    }
  }
  auto check_box = [](const SceneBox& box) {
    if (!(box.size.x() > 0) || !(box.size.y() > 0) || !(box.size.z() > 0)) {
      throw std::domain_error("scene box extents must be positive");
    }
  };
  for (const SceneBox& box : static_boxes) {
    check_box(box);
    if (box.material == Material::kDynamicObject) {
      throw std::domain_error("static box tagged with dynamic material");
    }
  }
  std::unordered_set<int> ids;
  for (const SceneBox& box : dynamic_boxes) {
    check_box(box);
    if (box.material != Material::kDynamicObject) {
      throw std::domain_error("dynamic box must carry the dynamic material");
    }
    if (!ids.insert(box.object_id).second) {
      throw std::domain_error("duplicate dynamic object id");
    }
  }
}

bool point_in_polygon(const std::vector<Eigen::Vector2d>& polygon, const Eigen::Vector2d& p) {
  bool inside = false;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Eigen::Vector2d& a = polygon[j];
    const Eigen::Vector2d& b = polygon[i];
    const bool crosses = (b.y() > p.y()) != (a.y() > p.y());
    if (crosses && p.x() < (a.x() - b.x()) * (p.y() - b.y()) / (a.y() - b.y()) + b.x()) {
      inside = !inside;
    }
  }
  return inside;
}

GroundPatch make_rect_patch(double min_x, double min_y, double max_x, double max_y, double z0,
                            Material material) {
  GroundPatch patch;
  patch.polygon = {{min_x, min_y}, {max_x, min_y}, {max_x, max_y}, {min_x, max_y}};
  patch.z0 = z0;
  patch.material = material;
  return patch;
}

}  // namespace eogm
