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

#include "eogm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "eogm/annotation.hpp"
#include "eogm/eval.hpp"
#include "eogm/grid.hpp"
#include "eogm/io/annotated_sample.hpp"
#include "eogm/io/binary.hpp"
#include "eogm/io/cloud_format.hpp"
#include "eogm/io/ogm_format.hpp"
#include "eogm/io/pillar_format.hpp"
#include "eogm/io/png_writer.hpp"
#include "eogm/io/scene_config.hpp"
#include "eogm/ism.hpp"
#include "eogm/synth.hpp"

namespace eogm {
namespace {

namespace fs = std::filesystem;

/// Uniform double in [-range, range] from raw engine output, independent
/// of the standard library's distribution internals.
double uniform_symmetric(std::mt19937_64& rng, double range) {
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
  return (2 * unit - 1) * range;
}

Scene jitter_dynamics(Scene scene, std::mt19937_64& rng, double translation, double yaw) {
  for (SceneBox& box : scene.dynamic_boxes) {
    box.center.x() += uniform_symmetric(rng, translation);
    box.center.y() += uniform_symmetric(rng, translation);
    box.yaw += uniform_symmetric(rng, yaw);
  }
  return scene;
}

std::string sample_name(int index) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "sample_%04d", index);
  return buffer;
}

int run_gen_synthetic(const std::string& scene_path, const std::string& out_dir, int samples,
                      std::uint64_t seed) {
  const SceneDescription description = load_scene_description(scene_path);
  fs::create_directories(out_dir);
  std::mt19937_64 rng(seed);
  for (int index = 0; index < samples; ++index) {
    const Scene scene = jitter_dynamics(description.scene, rng,
                                        description.jitter_translation_m,
                                        description.jitter_yaw_rad);
    const SyntheticSample sample = generate_synthetic_sample(
        scene, description.sparse, description.dense, description.grid, description.options);
    const std::string stem = sample_name(index);
    write_cloud(fs::path(out_dir) / (stem + ".epcl"), sample.cloud);
    write_ogm(fs::path(out_dir) / (stem + ".ogm"), sample.label);
  }
  std::cout << "wrote " << samples << " sample(s) to " << out_dir << "\n";
  return 0;
}

int run_gen_labels(const std::string& samples_dir, const std::string& out_dir, int min_points,
                   const std::string& footprint) {
  const FootprintMode mode =
      footprint == "overlap" ? FootprintMode::kOverlap : FootprintMode::kCenter;
  std::vector<fs::path> sidecars;
  for (const auto& entry : fs::directory_iterator(samples_dir)) {
    if (entry.path().extension() == ".json") sidecars.push_back(entry.path());
  }
  std::sort(sidecars.begin(), sidecars.end());
  if (sidecars.empty()) {
    throw ParseError(ParseError::Kind::kIo, "no sample sidecars in " + samples_dir);
  }
  fs::create_directories(out_dir);
  for (const fs::path& sidecar : sidecars) {
    const LoadedSample loaded = load_annotated_sample(sidecar);
    const EvidentialGridd label =
        generate_label_from_annotations(loaded.sample, loaded.grid, min_points, mode);
    write_ogm(fs::path(out_dir) / (sidecar.stem().string() + ".ogm"), label);
  }
  std::cout << "wrote " << sidecars.size() << " label grid(s) to " << out_dir << "\n";
  return 0;
}

int run_eval(const std::string& pred_dir, const std::string& truth_dir, double threshold,
             double mask, const std::string& report_path, const std::string& json_path,
             bool macro) {
  std::vector<fs::path> truth_files;
  for (const auto& entry : fs::directory_iterator(truth_dir)) {
    if (entry.path().extension() == ".ogm") truth_files.push_back(entry.path());
  }
  std::sort(truth_files.begin(), truth_files.end());
  if (truth_files.empty()) {
    throw ParseError(ParseError::Kind::kIo, "no grid files in " + truth_dir);
  }

  std::vector<ConfusionCounts> counts;
  for (const fs::path& truth_file : truth_files) {
    const fs::path pred_file = fs::path(pred_dir) / truth_file.filename();
    if (!fs::exists(pred_file)) {
      throw ParseError(ParseError::Kind::kIo, "missing prediction " + pred_file.string());
    }
    counts.push_back(
        evaluate_pair(read_ogm(pred_file), read_ogm(truth_file), threshold, mask));
  }

  const EvalReport report =
      aggregate(counts, macro ? AverageMode::kMacro : AverageMode::kMicro);
  const std::string text = report_to_text(report);
  std::cout << text;
  if (!report_path.empty()) write_file_atomic(report_path, text);
  if (!json_path.empty()) write_file_atomic(json_path, report_to_json(report));
  return 0;
}

GridSpec grid_from_flags(double length, double width, double cell) {
  return GridSpec(length, width, cell);
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"evidential occupancy-grid toolkit: label generation, ISM baseline, evaluation"};
  app.require_subcommand(1);

  // gen-synthetic
  std::string scene_path, synth_out;
  int synth_samples = 1;
  std::uint64_t seed = 0;
  auto* gen_synthetic =
      app.add_subcommand("gen-synthetic", "simulate lidar samples with dense label grids");
  gen_synthetic->add_option("--scene", scene_path, "scene description (JSON)")->required();
  gen_synthetic->add_option("--out", synth_out, "output directory")->required();
  gen_synthetic->add_option("--samples", synth_samples, "number of samples")
      ->check(CLI::PositiveNumber);
  gen_synthetic->add_option("--seed", seed, "seed for per-sample scene jitter");

  // gen-labels
  std::string labels_in, labels_out, footprint = "center";
  int min_points = 20;
  auto* gen_labels =
      app.add_subcommand("gen-labels", "build crisp label grids from annotated samples");
  gen_labels->add_option("--samples", labels_in, "directory with .json/.epcl samples")
      ->required();
  gen_labels->add_option("--out", labels_out, "output directory")->required();
  gen_labels->add_option("--min-points", min_points, "points required per box (default 20)");
  gen_labels->add_option("--footprint", footprint, "footprint rasterization: center|overlap")
      ->check(CLI::IsMember({"center", "overlap"}));

  // ism
  std::string ism_cloud, ism_out;
  IsmConfig ism_config;
  double length = 81.92, width = 56.32, cell = 0.32;
  auto* ism = app.add_subcommand("ism", "geometric inverse-sensor-model baseline");
  ism->add_option("--cloud", ism_cloud, "input point cloud (.epcl)")->required();
  ism->add_option("--out", ism_out, "output grid (.ogm)")->required();
  ism->add_option("--z-min", ism_config.ground_z_min, "ground band lower bound (m)");
  ism->add_option("--z-max", ism_config.ground_z_max, "ground band upper bound (m)");
  ism->add_option("--free-mass", ism_config.free_mass_per_ray, "free mass per traversed cell");
  ism->add_option("--occupied-mass", ism_config.occupied_mass_per_hit,
                  "occupied mass per endpoint");
  ism->add_option("--length", length, "grid length (m)");
  ism->add_option("--width", width, "grid width (m)");
  ism->add_option("--cell-size", cell, "cell size (m)");

  // eval
  std::string pred_dir, truth_dir, report_path, json_path;
  double threshold = 0.5, mask = 0.5;
  bool macro = false;
  auto* eval = app.add_subcommand("eval", "masked precision/recall over grid directories");
  eval->add_option("--pred", pred_dir, "prediction grid directory")->required();
  eval->add_option("--truth", truth_dir, "ground-truth grid directory")->required();
  eval->add_option("--threshold", threshold, "classification threshold (default 0.5)");
  eval->add_option("--mask", mask, "truth unknown-mass mask level (default 0.5)");
  eval->add_option("--report", report_path, "write the text report here");
  eval->add_option("--json", json_path, "write a JSON report here");
  eval->add_flag("--macro", macro, "macro-average instead of micro");

  // render
  std::string render_in, render_out;
  auto* render = app.add_subcommand("render", "render a grid to PNG");
  render->add_option("--ogm", render_in, "input grid (.ogm)")->required();
  render->add_option("--png", render_out, "output image (.png)")->required();

  // pillarize
  std::string pillar_cloud, pillar_out;
  int max_pillars = 12000, max_points = 100;
  double p_length = 81.92, p_width = 56.32, p_cell = 0.32;
  auto* pillarize_cmd =
      app.add_subcommand("pillarize", "export pillar features for an external trainer");
  pillarize_cmd->add_option("--cloud", pillar_cloud, "input point cloud (.epcl)")->required();
  pillarize_cmd->add_option("--out", pillar_out, "output tensor (.eplt)")->required();
  pillarize_cmd->add_option("--max-pillars", max_pillars, "pillar capacity P");
  pillarize_cmd->add_option("--max-points", max_points, "points per pillar N");
  pillarize_cmd->add_option("--length", p_length, "grid length (m)");
  pillarize_cmd->add_option("--width", p_width, "grid width (m)");
  pillarize_cmd->add_option("--cell-size", p_cell, "cell size (m)");

  try {
    app.parse(argc, argv);
    if (gen_synthetic->parsed()) {
      return run_gen_synthetic(scene_path, synth_out, synth_samples, seed);
    }
    if (gen_labels->parsed()) {
      return run_gen_labels(labels_in, labels_out, min_points, footprint);
    }
    if (ism->parsed()) {
      const EvidentialGridd grid =
          geometric_ism(read_cloud(ism_cloud), ism_config, grid_from_flags(length, width, cell));
      write_ogm(ism_out, grid);
      std::cout << "wrote " << ism_out << "\n";
      return 0;
    }
    if (eval->parsed()) {
      return run_eval(pred_dir, truth_dir, threshold, mask, report_path, json_path, macro);
    }
    if (render->parsed()) {
      render_png(read_ogm(render_in), render_out);
      std::cout << "wrote " << render_out << "\n";
      return 0;
    }
    if (pillarize_cmd->parsed()) {
      const PillarTensor tensor =
          pillarize(read_cloud(pillar_cloud), grid_from_flags(p_length, p_width, p_cell),
                    max_pillars, max_points);
      write_pillars(pillar_out, tensor);
      std::cout << "wrote " << pillar_out << " (" << tensor.pillar_count << " pillars)\n";
      return 0;
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ParseError::Kind::kIo ? 2 : 3;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace eogm
