// Copyright 2026 The EOGM Authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent reference implementations used to cross-check the library.
// Everything here is written from first principles and shares no code with
// the implementations under test.

#ifndef EOGM_TESTS_ORACLES_HPP
#define EOGM_TESTS_ORACLES_HPP

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "eogm/grid.hpp"

namespace eogm::oracle {

// Result of the brute-force Dempster combination.
struct CombineResult {
  bool total_conflict = false;
  double conflict = 0.0;
  std::array<double, 5> mass{};  // F, O_s, O_d, O_sd, Theta
};

// Combines two mass assignments by enumerating all 25 focal-element pairs.
// Uses its own bitmask table and the same accumulation order as a naive
// row-major double loop, so agreement with the library must be bit-exact.
CombineResult combine_brute_force(const std::array<double, 5>& lhs,
                                  const std::array<double, 5>& rhs);

// Independent cell classifier: strict singleton argmax, then occupied sum.
// Returns 0..4 in hypothesis order (F, O_s, O_d, O_sd, unknown).
int classify_brute_force(const std::array<double, 5>& mass, double threshold);

// Exact rational on the doubled integer lattice. Denominator is kept
// positive; values stay far below overflow for grids up to a few hundred
// cells.
struct Frac {
  long long num = 0;
  long long den = 1;
};
bool frac_less(const Frac& a, const Frac& b);
bool frac_equal(const Frac& a, const Frac& b);

// One cell touched by a segment, with its entry parameter and whether the
// intersection is a single point (a corner touch).
struct CoverStep {
  CellIndex cell;
  Frac entry;
  bool point_touch = false;
};

// Slab-based supercover reference: intersects the segment between the two
// cell midpoints (on the doubled lattice) with every candidate cell's
// closed square. Steps are ordered by entry parameter, corner touches
// before the cell entered through them.
std::vector<CoverStep> cover_steps(CellIndex from, CellIndex to);

// The same set reduced to sorted unique cells for set comparisons.
std::vector<CellIndex> cover_cells_sorted(CellIndex from, CellIndex to);

// Visibility of every cell from a sensor cell given a blocked mask, probed
// with `angles` uniformly spaced rays walked over cover_steps. Cells whose
// squares meet a ray at one point are grouped with their corner twin: the
// group is marked visible, and the walk stops before the next group if any
// member blocks. Returns one byte per cell, 1 = visible.
std::vector<std::uint8_t> visibility_brute_force(const GridSpec& spec,
                                                 CellIndex sensor,
                                                 const std::vector<std::uint8_t>& blocked,
                                                 int angles = 4096);

// Confusion counts from a naive per-cell loop, computed without the eval
// module. Order: F, O_s, O_d, O_sd. tp/fp/fn per state plus the masked and
// evaluated totals.
struct NaiveCounts {
  std::array<long long, 4> tp{};
  std::array<long long, 4> fp{};
  std::array<long long, 4> fn{};
  long long evaluated = 0;
  long long masked = 0;
};
NaiveCounts confusion_brute_force(const EvidentialGridd& prediction,
                                  const EvidentialGridd& truth,
                                  double threshold, double mask_level);

// Minimal PNG reader for the writer's output: verifies the signature, every
// chunk CRC, and the IHDR layout (8-bit RGB, no interlace), inflates the
// IDAT stream, and strips the per-row filter bytes (which must all be 0).
struct DecodedPng {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint8_t> rgb;  // row-major, 3 bytes per pixel
};
DecodedPng decode_png(const std::string& bytes);

// Uniform draw in [0, 1) with 53 random bits.
double unit_draw(std::mt19937_64& rng);

// Uniform draw on the closed 5-simplex (masses sum to 1 exactly up to
// rounding), via sorted cut points.
std::array<double, 5> random_mass(std::mt19937_64& rng);

// Mass quadruple (F, O_s, O_d, O_sd) that is exactly representable in f32
// and sums to at most 1: random 256ths.
std::array<float, 4> random_quantized_mass(std::mt19937_64& rng);

}  // namespace eogm::oracle

#endif  // EOGM_TESTS_ORACLES_HPP
