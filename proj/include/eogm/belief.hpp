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

#ifndef EOGM_BELIEF_HPP
#define EOGM_BELIEF_HPP

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace eogm {

template <typename Scalar>
using StateVector = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar>
using MassVector = Eigen::Matrix<Scalar, 5, 1>;

/// The three mutually exclusive cell states of the frame of discernment.
enum class CellState : int {
  kFree = 0,
  kStaticOccupied = 1,
  kDynamicOccupied = 2,
};

inline constexpr int kNumCellStates = 3;

/// The reduced power set used throughout: the three singletons, the
/// combined occupied state, and the full frame ("unknown").
enum class Hypothesis : int {
  kFree = 0,
  kStaticOccupied = 1,
  kDynamicOccupied = 2,
  kOccupied = 3,  // {statically occupied, dynamically occupied}
  kUnknown = 4,   // full frame
};

inline constexpr int kNumHypotheses = 5;

inline constexpr std::array<Hypothesis, kNumHypotheses> kAllHypotheses = {
    Hypothesis::kFree, Hypothesis::kStaticOccupied, Hypothesis::kDynamicOccupied,
    Hypothesis::kOccupied, Hypothesis::kUnknown};

/// Each hypothesis as a bitset over the singleton states.
inline constexpr int hypothesis_bits(Hypothesis h) {
  constexpr std::array<int, kNumHypotheses> bits = {0b001, 0b010, 0b100, 0b110, 0b111};
  return bits[static_cast<int>(h)];
}

inline constexpr Hypothesis singleton_hypothesis(CellState s) {
  return static_cast<Hypothesis>(static_cast<int>(s));
}

/// Set intersection on the reduced power set. Returns nullopt for the
/// empty set. The reduced power set is closed under intersection, so the
/// non-empty results are always representable.
inline constexpr std::optional<Hypothesis> intersect(Hypothesis a, Hypothesis b) {
  switch (hypothesis_bits(a) & hypothesis_bits(b)) {
    case 0b000:
      return std::nullopt;
    case 0b001:
      return Hypothesis::kFree;
    case 0b010:
      return Hypothesis::kStaticOccupied;
    case 0b100:
      return Hypothesis::kDynamicOccupied;
    case 0b110:
      return Hypothesis::kOccupied;
    default:
      return Hypothesis::kUnknown;
  }
}

/// Thrown when two belief masses are fully conflicting and Dempster's
/// rule has no defined result. Callers decide the fallback.
class TotalConflictError : public std::runtime_error {
 public:
  explicit TotalConflictError(double conflict)
      : std::runtime_error("total conflict in Dempster combination"), conflict_(conflict) {}
  double conflict() const { return conflict_; }

 private:
  double conflict_;
};

/// Belief mass assignment over the reduced power set. Masses are stored
/// in hypothesis order (free, static, dynamic, occupied, unknown) and sum
/// to one; the unknown component absorbs any residual.
template <typename Scalar>
struct BeliefMass {
  MassVector<Scalar> m;

  BeliefMass() : m((MassVector<Scalar>() << 0, 0, 0, 0, 1).finished()) {}

  template <typename Derived>
  explicit BeliefMass(const Eigen::MatrixBase<Derived>& values) : m(values) {}

  Scalar operator()(Hypothesis h) const { return m[static_cast<int>(h)]; }
  Scalar& operator()(Hypothesis h) { return m[static_cast<int>(h)]; }

  static BeliefMass vacuous() { return BeliefMass(); }

  /// Builds a mass from explicit components; the unknown mass is set to
  /// the residual 1 - sum.
  static BeliefMass from_components(Scalar free, Scalar static_occ, Scalar dynamic_occ,
                                    Scalar occupied = Scalar(0)) {
    const Scalar sum = free + static_occ + dynamic_occ + occupied;
    if (free < Scalar(0) || static_occ < Scalar(0) || dynamic_occ < Scalar(0) ||
        occupied < Scalar(0) || sum > Scalar(1) + Scalar(1e-9)) {
      throw std::domain_error("belief mass components outside the unit simplex");
    }
    MassVector<Scalar> v;
    v << free, static_occ, dynamic_occ, occupied, std::max(Scalar(0), Scalar(1) - sum);
    return BeliefMass(v);
  }

  bool is_valid(Scalar tol = Scalar(1e-9)) const {
    if ((m.array() < Scalar(0) - tol).any() || (m.array() > Scalar(1) + tol).any()) return false;
    using std::abs;
    return abs(m.sum() - Scalar(1)) <= tol;
  }

  friend bool operator==(const BeliefMass& a, const BeliefMass& b) { return a.m == b.m; }
};

/// Dirichlet evidence over the three singleton states.
template <typename Scalar>
struct DirichletEvidence {
  static constexpr int kClassCount = kNumCellStates;

  StateVector<Scalar> e = StateVector<Scalar>::Zero();

  DirichletEvidence() = default;
  DirichletEvidence(Scalar free, Scalar static_occ, Scalar dynamic_occ)
      : e(free, static_occ, dynamic_occ) {}

  Scalar operator()(CellState s) const { return e[static_cast<int>(s)]; }

  /// Dirichlet strength: sum of the parameters alpha = e + 1.
  Scalar strength() const { return e.sum() + Scalar(kClassCount); }
};

/// Subjective opinion: per-state belief plus explicit uncertainty.
template <typename Scalar>
struct SubjectiveOpinion {
  StateVector<Scalar> b = StateVector<Scalar>::Zero();
  Scalar u = Scalar(1);

  Scalar belief(CellState s) const { return b[static_cast<int>(s)]; }
};

/// Converts Dirichlet evidence to a subjective opinion: b = e / S and
/// u = K / S with S the Dirichlet strength.
template <typename Scalar>
SubjectiveOpinion<Scalar> evidence_to_opinion(const DirichletEvidence<Scalar>& evidence) {
  if ((evidence.e.array() < Scalar(0)).any()) {
    throw std::domain_error("Dirichlet evidence must be nonnegative");
  }
  const Scalar strength = evidence.strength();
  SubjectiveOpinion<Scalar> opinion;
  opinion.b = evidence.e / strength;
  opinion.u = Scalar(DirichletEvidence<Scalar>::kClassCount) / strength;
  return opinion;
}

/// Reads a subjective opinion as a belief mass: singleton masses from the
/// belief vector, unknown mass from the uncertainty.
template <typename Scalar>
BeliefMass<Scalar> opinion_to_mass(const SubjectiveOpinion<Scalar>& opinion) {
  MassVector<Scalar> v;
  v << opinion.b[0], opinion.b[1], opinion.b[2], Scalar(0), opinion.u;
  return BeliefMass<Scalar>(v);
}

/// Dempster's rule of combination over the reduced power set. The
/// conflict (mass on disjoint hypothesis pairs) is renormalized away;
/// total conflict raises TotalConflictError.
template <typename Scalar>
BeliefMass<Scalar> combine_dempster(const BeliefMass<Scalar>& lhs, const BeliefMass<Scalar>& rhs) {
  MassVector<Scalar> joint = MassVector<Scalar>::Zero();
  Scalar conflict = Scalar(0);
  for (int i = 0; i < kNumHypotheses; ++i) {
    for (int j = 0; j < kNumHypotheses; ++j) {
      const Scalar w = lhs.m[i] * rhs.m[j];
      const auto meet = intersect(static_cast<Hypothesis>(i), static_cast<Hypothesis>(j));
      if (meet) {
        joint[static_cast<int>(*meet)] += w;
      } else {
        conflict += w;
      }
    }
  }
  if (conflict >= Scalar(1) - Scalar(1e-12)) {
    throw TotalConflictError(static_cast<double>(conflict));
  }
  return BeliefMass<Scalar>(joint / (Scalar(1) - conflict));
}

/// Classifies a cell by thresholding. A singleton wins when its mass
/// strictly exceeds the threshold; otherwise the combined occupied mass
/// (static + dynamic + composite) is tested; otherwise unknown.
/// Comparison is strict so a threshold of 0.5 can never match two labels.
template <typename Scalar>
Hypothesis classify_cell(const BeliefMass<Scalar>& mass, Scalar threshold) {
  if (!(threshold > Scalar(0)) || threshold > Scalar(1)) {
    throw std::domain_error("classification threshold must be in (0, 1]");
  }
  int best = 0;
  for (int s = 1; s < kNumCellStates; ++s) {
    if (mass.m[s] > mass.m[best]) best = s;
  }
  if (mass.m[best] > threshold) return static_cast<Hypothesis>(best);
  const Scalar occupied = mass.m[1] + mass.m[2] + mass.m[3];
  if (occupied > threshold) return Hypothesis::kOccupied;
  return Hypothesis::kUnknown;
}

using BeliefMassd = BeliefMass<double>;
using DirichletEvidenced = DirichletEvidence<double>;
using SubjectiveOpiniond = SubjectiveOpinion<double>;

}  // namespace eogm

#endif  // EOGM_BELIEF_HPP
