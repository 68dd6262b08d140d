// Copyright 2026 The EOGM Authors
// SPDX-License-Identifier: Apache-2.0

#include "eogm/annotation.hpp"

#include <doctest.h>

#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"

namespace {

using eogm::AnnotatedBox;
using eogm::AnnotatedSample;
using eogm::BeliefMassd;
using eogm::CellIndex;
using eogm::EvidentialGridd;
using eogm::GridSpec;
using eogm::Hypothesis;
using eogm::LidarPoint;
using eogm::OrientedRect;
using eogm::PointCloud;

LidarPoint point(float x, float y, float z = 0.0f) {
  LidarPoint p;
  p.x = x;
  p.y = y;
  p.z = z;
  return p;
}

bool is_one_hot(const BeliefMassd& mass) {
  int ones = 0;
  for (const Hypothesis h : {Hypothesis::kFree, Hypothesis::kStaticOccupied,
                             Hypothesis::kDynamicOccupied, Hypothesis::kOccupied,
                             Hypothesis::kUnknown}) {
    if (mass(h) == 1.0) {
      ++ones;
    } else if (mass(h) != 0.0) {
      return false;
    }
  }
  return ones == 1;
}

// All-drivable 7 x 7 sample with the sensor in the middle cell and one
// annotated box exactly covering cell (5, 3).
AnnotatedSample corridor_sample(int cloud_points) {
  AnnotatedSample sample;
  sample.sensor_origin = Eigen::Vector2d(0, 0);
  sample.drivable.rows = 7;
  sample.drivable.cols = 7;
  sample.drivable.cells.assign(49, 1);
  sample.boxes.push_back(
      {1, OrientedRect{Eigen::Vector2d(2.0, 0.0), Eigen::Vector2d(0.4, 0.4), 0.0}});
  for (int i = 0; i < cloud_points; ++i) {
    sample.cloud.points.push_back(point(2.0f, 0.0f, 0.1f * static_cast<float>(i)));
  }
  return sample;
}

}  // namespace

TEST_CASE("points_in_box counts planar membership and ignores z") {
  PointCloud cloud;
  cloud.points.push_back(point(1.0f, 1.0f, -100.0f));  // center
  cloud.points.push_back(point(2.0f, 1.5f, 50.0f));    // corner, boundary counts
  cloud.points.push_back(point(2.1f, 1.5f));           // just outside in x
  cloud.points.push_back(point(0.0f, 1.0f));           // on the left edge
  cloud.points.push_back(point(1.0f, 1.6f));           // above
  const OrientedRect rect{Eigen::Vector2d(1, 1), Eigen::Vector2d(1, 0.5), 0.0};
  CHECK(eogm::points_in_box(cloud, rect) == 3);

  SUBCASE("rotation moves the membership with the box") {
    const OrientedRect yawed{Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0.25),
                             std::numbers::pi / 4};
    PointCloud diag;
    const double u = std::numbers::sqrt2 / 2;
    diag.points.push_back(point(static_cast<float>(0.9 * u), static_cast<float>(0.9 * u)));
    diag.points.push_back(point(0.9f, 0.0f));  // inside the unrotated box only
    CHECK(eogm::points_in_box(diag, yawed) == 1);
  }
}

TEST_CASE("a populated box becomes dynamic mass and shadows the cell behind it") {
  const GridSpec spec = GridSpec::from_cells(7, 7, 1.0);
  const AnnotatedSample sample = corridor_sample(20);
  const EvidentialGridd label = eogm::generate_label_from_annotations(sample, spec);

  CHECK(label.at(5, 3)(Hypothesis::kDynamicOccupied) == 1.0);
  CHECK(label.at(4, 3)(Hypothesis::kFree) == 1.0);
  // The border rays into (6, 2) and (6, 4) graze the lattice corners of
  // the box cell, so its corner twins shadow them along with (6, 3).
  CHECK(label.at(6, 2) == BeliefMassd::vacuous());
  CHECK(label.at(6, 3) == BeliefMassd::vacuous());
  CHECK(label.at(6, 4) == BeliefMassd::vacuous());
  CHECK(label.at(0, 0)(Hypothesis::kFree) == 1.0);
  CHECK(label.at(6, 6)(Hypothesis::kFree) == 1.0);

  int vacuous_cells = 0;
  int dynamic_cells = 0;
  for (int r = 0; r < 7; ++r) {
    for (int c = 0; c < 7; ++c) {
      CHECK(is_one_hot(label.at(r, c)));
      if (label.at(r, c) == BeliefMassd::vacuous()) ++vacuous_cells;
      if (label.at(r, c)(Hypothesis::kDynamicOccupied) == 1.0) ++dynamic_cells;
    }
  }
  CHECK(vacuous_cells == 3);
  CHECK(dynamic_cells == 1);
}

TEST_CASE("a box below the point threshold is ignored") {
  const GridSpec spec = GridSpec::from_cells(7, 7, 1.0);
  const AnnotatedSample sample = corridor_sample(19);
  const EvidentialGridd label = eogm::generate_label_from_annotations(sample, spec);

  for (int r = 0; r < 7; ++r) {
    for (int c = 0; c < 7; ++c) {
      CHECK(label.at(r, c)(Hypothesis::kFree) == 1.0);
    }
  }

  SUBCASE("min_points zero keeps the box even with an empty cloud") {
    AnnotatedSample empty = corridor_sample(0);
    const EvidentialGridd kept = eogm::generate_label_from_annotations(empty, spec, 0);
    CHECK(kept.at(5, 3)(Hypothesis::kDynamicOccupied) == 1.0);
  }
  SUBCASE("removing the boxes removes all dynamic mass") {
    AnnotatedSample no_boxes = corridor_sample(20);
    no_boxes.boxes.clear();
    const EvidentialGridd plain = eogm::generate_label_from_annotations(no_boxes, spec);
    for (int r = 0; r < 7; ++r) {
      for (int c = 0; c < 7; ++c) {
        CHECK(plain.at(r, c)(Hypothesis::kDynamicOccupied) == 0.0);
      }
    }
  }
}

TEST_CASE("non-drivable cells label as static occupancy") {
  const GridSpec spec = GridSpec::from_cells(3, 3, 1.0);
  AnnotatedSample sample;
  sample.sensor_origin = Eigen::Vector2d(0, 0);
  sample.drivable.rows = 3;
  sample.drivable.cols = 3;
  sample.drivable.cells.assign(9, 1);
  sample.drivable.cells[2 * 3 + 1] = 0;  // cell (2, 1)
  const EvidentialGridd label = eogm::generate_label_from_annotations(sample, spec);
  CHECK(label.at(2, 1)(Hypothesis::kStaticOccupied) == 1.0);
  CHECK(label.at(1, 1)(Hypothesis::kFree) == 1.0);
}

TEST_CASE("label generation validates its inputs") {
  const GridSpec spec = GridSpec::from_cells(4, 4, 1.0);
  AnnotatedSample sample;
  sample.sensor_origin = Eigen::Vector2d(0, 0);
  sample.drivable.rows = 4;
  sample.drivable.cols = 3;  // mismatch
  sample.drivable.cells.assign(12, 1);
  CHECK_THROWS_AS(eogm::generate_label_from_annotations(sample, spec), std::domain_error);

  sample.drivable.cols = 4;
  sample.drivable.cells.assign(16, 1);
  CHECK_THROWS_AS(eogm::generate_label_from_annotations(sample, spec, -1), std::domain_error);

  sample.sensor_origin = Eigen::Vector2d(100, 0);
  CHECK_THROWS_AS(eogm::generate_label_from_annotations(sample, spec), std::domain_error);
}

TEST_CASE("occlusion masking hides cells behind a wall unless protected") {
  const GridSpec spec = GridSpec::from_cells(9, 9, 1.0);
  EvidentialGridd grid(spec);
  std::vector<std::uint8_t> blocked(81, 0);
  for (int r = 0; r < 9; ++r) {
    for (int c = 0; c < 9; ++c) {
      const bool wall = (r == 6 && c >= 2 && c <= 6);
      blocked[static_cast<std::size_t>(r) * 9 + c] = wall ? 1 : 0;
      grid.set(r, c, wall ? BeliefMassd::from_components(0, 1, 0)
                          : BeliefMassd::from_components(1, 0, 0));
    }
  }
  const Eigen::Vector2d sensor_origin = eogm::cell_center(spec, 4, 4);

  const EvidentialGridd masked = eogm::occlusion_mask(grid, sensor_origin);
  CHECK(masked.at(6, 4)(Hypothesis::kStaticOccupied) == 1.0);  // blocker stays visible
  CHECK(masked.at(5, 4)(Hypothesis::kFree) == 1.0);
  CHECK(masked.at(7, 4) == BeliefMassd::vacuous());
  CHECK(masked.at(8, 4) == BeliefMassd::vacuous());
  CHECK(masked.at(0, 4)(Hypothesis::kFree) == 1.0);

  // The whole result matches the dense angular visibility oracle.
  const std::vector<std::uint8_t> visible =
      eogm::oracle::visibility_brute_force(spec, {4, 4}, blocked);
  for (int r = 0; r < 9; ++r) {
    for (int c = 0; c < 9; ++c) {
      const bool impl_visible = !(masked.at(r, c) == BeliefMassd::vacuous());
      CHECK(impl_visible == (visible[static_cast<std::size_t>(r) * 9 + c] != 0));
    }
  }

  SUBCASE("protected cells keep their mass even when occluded") {
    std::vector<std::uint8_t> protected_cells(81, 0);
    protected_cells[7 * 9 + 4] = 1;
    const EvidentialGridd kept = eogm::occlusion_mask(grid, sensor_origin, protected_cells);
    CHECK(kept.at(7, 4)(Hypothesis::kFree) == 1.0);
    CHECK(kept.at(8, 4) == BeliefMassd::vacuous());
  }
  SUBCASE("a wrongly sized protected mask is rejected") {
    CHECK_THROWS_AS(eogm::occlusion_mask(grid, sensor_origin, std::vector<std::uint8_t>(80, 0)),
                    std::domain_error);
  }
  SUBCASE("a sensor outside the grid is rejected") {
    CHECK_THROWS_AS(eogm::occlusion_mask(grid, Eigen::Vector2d(4.5, 0)), std::domain_error);
    CHECK_THROWS_AS(eogm::occlusion_mask(grid, Eigen::Vector2d(-100, 0)), std::domain_error);
  }
}

TEST_CASE("occlusion masking agrees with the angular visibility oracle") {
  // Random blocker fields on grids up to 32 x 32; the oracle casts 4096
  // uniformly spaced rays and walks the same midpoint supercover lines.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int rows = 2 + static_cast<int>(rng() % 31);
    const int cols = 2 + static_cast<int>(rng() % 31);
    const GridSpec spec = GridSpec::from_cells(rows, cols, 1.0);
    const CellIndex sensor{static_cast<int>(rng() % rows), static_cast<int>(rng() % cols)};
    const double density = 0.05 + 0.25 * eogm::oracle::unit_draw(rng);

    std::vector<std::uint8_t> blocked(static_cast<std::size_t>(rows) * cols, 0);
    EvidentialGridd grid(spec);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        const bool block = eogm::oracle::unit_draw(rng) < density;
        blocked[static_cast<std::size_t>(r) * cols + c] = block ? 1 : 0;
        grid.set(r, c, block ? BeliefMassd::from_components(0, 1, 0)
                             : BeliefMassd::from_components(1, 0, 0));
      }
    }

    const EvidentialGridd masked = eogm::occlusion_mask(grid, eogm::cell_center(spec, sensor));
    const std::vector<std::uint8_t> visible =
        eogm::oracle::visibility_brute_force(spec, sensor, blocked);
    long long mismatches = 0;
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        const bool impl_visible = !(masked.at(r, c) == BeliefMassd::vacuous());
        if (impl_visible != (visible[static_cast<std::size_t>(r) * cols + c] != 0)) {
          ++mismatches;
        }
      }
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("generated labels are always one-hot") {
  std::mt19937_64 rng(0x5eed05c);
  for (int trial = 0; trial < 10; ++trial) {
    const int rows = 4 + static_cast<int>(rng() % 10);
    const int cols = 4 + static_cast<int>(rng() % 10);
    const GridSpec spec = GridSpec::from_cells(rows, cols, 1.0);

    AnnotatedSample sample;
    sample.drivable.rows = rows;
    sample.drivable.cols = cols;
    sample.drivable.cells.resize(static_cast<std::size_t>(rows) * cols);
    for (auto& cell : sample.drivable.cells) cell = rng() % 2;
    sample.sensor_origin =
        eogm::cell_center(spec, static_cast<int>(rng() % rows), static_cast<int>(rng() % cols));
    for (int b = 0; b < 3; ++b) {
      const double x = spec.x_min() + spec.length_m() * eogm::oracle::unit_draw(rng);
      const double y = spec.y_min() + spec.width_m() * eogm::oracle::unit_draw(rng);
      sample.boxes.push_back({b, OrientedRect{Eigen::Vector2d(x, y),
                                              Eigen::Vector2d(0.5 + eogm::oracle::unit_draw(rng),
                                                              0.5 + eogm::oracle::unit_draw(rng)),
                                              2 * eogm::oracle::unit_draw(rng)}});
      for (int k = 0; k < 25; ++k) {
        sample.cloud.points.push_back(point(static_cast<float>(x), static_cast<float>(y),
                                            static_cast<float>(k)));
      }
    }

    const EvidentialGridd label = eogm::generate_label_from_annotations(sample, spec);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        CHECK(is_one_hot(label.at(r, c)));
      }
    }
  }
}
