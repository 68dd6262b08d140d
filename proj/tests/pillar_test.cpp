// Copyright 2026 The EOGM Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "eogm/io/pillar_format.hpp"
#include "oracles.hpp"

namespace {

using eogm::GridSpec;
using eogm::kPillarFeatureCount;
using eogm::LidarPoint;
using eogm::PillarTensor;
using eogm::PointCloud;

LidarPoint point(float x, float y, float z, float intensity = 0.0f) {
  LidarPoint p;
  p.x = x;
  p.y = y;
  p.z = z;
  p.intensity = intensity;
  return p;
}

// 4 x 4 cells of 1 m: x and y span [-2, 2), cell (r, c) covers
// [r - 2, r - 1) x [c - 2, c - 1).
const GridSpec kSmallGrid = GridSpec::from_cells(4, 4, 1.0);

}  // namespace

TEST_CASE("pillarize rejects non-positive capacities") {
  const PointCloud cloud;
  CHECK_THROWS_AS(eogm::pillarize(cloud, kSmallGrid, 0, 4), std::domain_error);
  CHECK_THROWS_AS(eogm::pillarize(cloud, kSmallGrid, 4, 0), std::domain_error);
  CHECK_THROWS_AS(eogm::pillarize(cloud, kSmallGrid, -1, 4), std::domain_error);
}

TEST_CASE("an empty cloud yields an all-zero tensor") {
  const PillarTensor tensor = eogm::pillarize(PointCloud{}, kSmallGrid, 3, 2);
  CHECK(tensor.rows == 4);
  CHECK(tensor.cols == 4);
  CHECK(tensor.max_pillars == 3);
  CHECK(tensor.max_points == 2);
  CHECK(tensor.pillar_count == 0);
  REQUIRE(tensor.features.size() == 3u * 2u * kPillarFeatureCount);
  REQUIRE(tensor.cells.size() == 3u);
  for (const float f : tensor.features) CHECK(f == 0.0f);
  for (const std::uint32_t c : tensor.cells) CHECK(c == 0u);
}

TEST_CASE("per-point features use the mean of the kept points only") {
  // Three points in cell (2, 2); capacity keeps the first two, so the
  // mean must ignore the third. All values are dyadic, so the expected
  // features are exact in f32.
  PointCloud cloud;
  cloud.points.push_back(point(0.25f, 0.5f, 1.0f, 0.5f));
  cloud.points.push_back(point(0.75f, 0.25f, 2.0f, 0.25f));
  cloud.points.push_back(point(0.875f, 0.875f, 3.0f, 0.125f));

  const PillarTensor tensor = eogm::pillarize(cloud, kSmallGrid, 3, 2);
  REQUIRE(tensor.pillar_count == 1);
  CHECK(tensor.cells[0] == 2u * 4u + 2u);

  // Slot 0 keeps input order: the first point first.
  CHECK(tensor.feature(0, 0, 0) == 0.25f);
  CHECK(tensor.feature(0, 0, 1) == 0.5f);
  CHECK(tensor.feature(0, 0, 2) == 1.0f);
  CHECK(tensor.feature(0, 0, 3) == 0.5f);
  // Kept-point means: x 0.5, y 0.375, z 1.5.
  CHECK(tensor.feature(0, 0, 4) == -0.25f);
  CHECK(tensor.feature(0, 0, 5) == 0.125f);
  CHECK(tensor.feature(0, 0, 6) == -0.5f);
  // Cell (2, 2) center is (0.5, 0.5).
  CHECK(tensor.feature(0, 0, 7) == -0.25f);
  CHECK(tensor.feature(0, 0, 8) == 0.0f);

  CHECK(tensor.feature(0, 1, 0) == 0.75f);
  CHECK(tensor.feature(0, 1, 1) == 0.25f);
  CHECK(tensor.feature(0, 1, 2) == 2.0f);
  CHECK(tensor.feature(0, 1, 3) == 0.25f);
  CHECK(tensor.feature(0, 1, 4) == 0.25f);
  CHECK(tensor.feature(0, 1, 5) == -0.125f);
  CHECK(tensor.feature(0, 1, 6) == 0.5f);
  CHECK(tensor.feature(0, 1, 7) == 0.25f);
  CHECK(tensor.feature(0, 1, 8) == -0.25f);

  // Unused pillar slots stay zero.
  for (int pillar = 1; pillar < 3; ++pillar) {
    for (int pt = 0; pt < 2; ++pt) {
      for (int ch = 0; ch < kPillarFeatureCount; ++ch) {
        CHECK(tensor.feature(pillar, pt, ch) == 0.0f);
      }
    }
    CHECK(tensor.cells[pillar] == 0u);
  }
}

TEST_CASE("a point at the cell center has zero offset features") {
  PointCloud cloud;
  cloud.points.push_back(point(0.5f, 0.5f, 4.0f, 1.0f));
  const PillarTensor tensor = eogm::pillarize(cloud, kSmallGrid, 1, 4);
  REQUIRE(tensor.pillar_count == 1);
  CHECK(tensor.feature(0, 0, 0) == 0.5f);
  CHECK(tensor.feature(0, 0, 2) == 4.0f);
  for (int ch = 4; ch < kPillarFeatureCount; ++ch) {
    CHECK(tensor.feature(0, 0, ch) == 0.0f);
  }
  // Unused point rows of a live pillar stay zero.
  for (int pt = 1; pt < 4; ++pt) {
    for (int ch = 0; ch < kPillarFeatureCount; ++ch) {
      CHECK(tensor.feature(0, pt, ch) == 0.0f);
    }
  }
}

TEST_CASE("overflow keeps the fullest cells and reorders them by index") {
  PointCloud cloud;
  // Cell (0, 0), index 0: one point.
  cloud.points.push_back(point(-1.5f, -1.5f, 0.0f));
  // Cell (1, 1), index 5: three points.
  cloud.points.push_back(point(-0.5f, -0.5f, 0.0f));
  cloud.points.push_back(point(-0.25f, -0.25f, 0.0f));
  cloud.points.push_back(point(-0.75f, -0.75f, 0.0f));
  // Cell (2, 2), index 10: two points.
  cloud.points.push_back(point(0.5f, 0.5f, 0.0f));
  cloud.points.push_back(point(0.25f, 0.25f, 0.0f));

  const PillarTensor tensor = eogm::pillarize(cloud, kSmallGrid, 2, 4);
  REQUIRE(tensor.pillar_count == 2);
  CHECK(tensor.cells[0] == 5u);
  CHECK(tensor.cells[1] == 10u);
  CHECK(tensor.feature(0, 0, 0) == -0.5f);
  CHECK(tensor.feature(0, 2, 0) == -0.75f);
  CHECK(tensor.feature(1, 0, 0) == 0.5f);
  CHECK(tensor.feature(1, 1, 0) == 0.25f);

  SUBCASE("equal counts break ties toward the lower cell index") {
    PointCloud tie;
    for (const float base : {-1.5f, -0.5f, 0.5f}) {
      tie.points.push_back(point(base, base, 0.0f));
      tie.points.push_back(point(base + 0.25f, base + 0.25f, 0.0f));
    }
    const PillarTensor kept = eogm::pillarize(tie, kSmallGrid, 2, 4);
    REQUIRE(kept.pillar_count == 2);
    CHECK(kept.cells[0] == 0u);
    CHECK(kept.cells[1] == 5u);
  }
}

TEST_CASE("points outside the grid are dropped") {
  PointCloud cloud;
  cloud.points.push_back(point(10.0f, 0.0f, 0.0f));
  cloud.points.push_back(point(2.0f, 0.0f, 0.0f));   // upper edge is exclusive
  cloud.points.push_back(point(-2.0f, -2.0f, 0.0f)); // lower edge is inclusive
  const PillarTensor tensor = eogm::pillarize(cloud, kSmallGrid, 4, 4);
  REQUIRE(tensor.pillar_count == 1);
  CHECK(tensor.cells[0] == 0u);
  CHECK(tensor.feature(0, 0, 0) == -2.0f);
}

TEST_CASE("pillarization matches a naive bucketing oracle") {
  std::mt19937_64 rng(0x5eed059);
  const GridSpec spec = GridSpec::from_cells(6, 5, 0.5);
  const int max_pillars = 12;
  const int max_points = 5;

  for (int trial = 0; trial < 50; ++trial) {
    PointCloud cloud;
    const int count = static_cast<int>(rng() % 160);
    for (int i = 0; i < count; ++i) {
      cloud.points.push_back(point(
          static_cast<float>(4 * (eogm::oracle::unit_draw(rng) - 0.5)),
          static_cast<float>(4 * (eogm::oracle::unit_draw(rng) - 0.5)),
          static_cast<float>(eogm::oracle::unit_draw(rng)),
          static_cast<float>(eogm::oracle::unit_draw(rng))));
    }

    // Oracle: bucket in input order, keep the fullest cells (ties to the
    // lower index), emit ascending by cell index.
    std::map<std::uint32_t, std::vector<LidarPoint>> buckets;
    for (const LidarPoint& p : cloud.points) {
      const auto cell = eogm::world_to_cell(spec, p.x, p.y);
      if (!cell) continue;
      buckets[static_cast<std::uint32_t>(cell->row * spec.cols() + cell->col)].push_back(p);
    }
    std::vector<std::pair<std::uint32_t, std::vector<LidarPoint>>> order(buckets.begin(),
                                                                         buckets.end());
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      if (a.second.size() != b.second.size()) return a.second.size() > b.second.size();
      return a.first < b.first;
    });
    if (order.size() > static_cast<std::size_t>(max_pillars)) order.resize(max_pillars);
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    const PillarTensor tensor = eogm::pillarize(cloud, spec, max_pillars, max_points);
    REQUIRE(tensor.pillar_count == order.size());
    for (std::size_t p = 0; p < order.size(); ++p) {
      CHECK(tensor.cells[p] == order[p].first);
      const auto& kept = order[p].second;
      const int n = std::min<int>(max_points, static_cast<int>(kept.size()));
      for (int i = 0; i < n; ++i) {
        CHECK(tensor.feature(static_cast<int>(p), i, 0) == kept[i].x);
        CHECK(tensor.feature(static_cast<int>(p), i, 1) == kept[i].y);
        CHECK(tensor.feature(static_cast<int>(p), i, 2) == kept[i].z);
        CHECK(tensor.feature(static_cast<int>(p), i, 3) == kept[i].intensity);
      }
      for (int i = n; i < max_points; ++i) {
        for (int ch = 0; ch < kPillarFeatureCount; ++ch) {
          CHECK(tensor.feature(static_cast<int>(p), i, ch) == 0.0f);
        }
      }
      // Offset features are consistent with the raw coordinates.
      const Eigen::Vector2d center = eogm::cell_center(
          spec, static_cast<int>(order[p].first) / spec.cols(),
          static_cast<int>(order[p].first) % spec.cols());
      for (int i = 0; i < n; ++i) {
        CHECK(tensor.feature(static_cast<int>(p), i, 7) ==
              doctest::Approx(kept[i].x - center.x()).epsilon(1e-6));
        CHECK(tensor.feature(static_cast<int>(p), i, 8) ==
              doctest::Approx(kept[i].y - center.y()).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("pillar files survive a disk round trip") {
  std::mt19937_64 rng(0x5eed0b1);
  PointCloud cloud;
  for (int i = 0; i < 64; ++i) {
    cloud.points.push_back(point(
        static_cast<float>(4 * (eogm::oracle::unit_draw(rng) - 0.5)),
        static_cast<float>(4 * (eogm::oracle::unit_draw(rng) - 0.5)),
        static_cast<float>(eogm::oracle::unit_draw(rng)), 0.5f));
  }
  const PillarTensor tensor = eogm::pillarize(cloud, kSmallGrid, 8, 6);
  const auto path = std::filesystem::temp_directory_path() /
                    ("eogm_pillar_" + std::to_string(rng()) + ".eplt");
  eogm::write_pillars(path, tensor);
  const PillarTensor back = eogm::read_pillars(path);
  std::filesystem::remove(path);
  CHECK(back.features == tensor.features);
  CHECK(back.cells == tensor.cells);
  CHECK(back.pillar_count == tensor.pillar_count);
}
