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

#include "eogm/eval.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace eogm {
namespace {

bool counts_as_occupied(Hypothesis label) {
  return label == Hypothesis::kStaticOccupied || label == Hypothesis::kDynamicOccupied ||
         label == Hypothesis::kOccupied;
}

void tally(StateCounts& counts, bool truth_positive, bool pred_positive) {
  if (truth_positive && pred_positive) ++counts.tp;
  if (pred_positive && !truth_positive) ++counts.fp;
  if (truth_positive && !pred_positive) ++counts.fn;
}

std::optional<double> ratio(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) return std::nullopt;
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

std::string render(const std::optional<double>& value) {
  if (!value) return "n/a";
  std::ostringstream out;
  out.precision(6);
  out << std::fixed << *value;
  return out.str();
}

}  // namespace

const char* eval_state_name(EvalState state) {
  switch (state) {
    case EvalState::kFree:
      return "free";
    case EvalState::kStaticOccupied:
      return "static_occupied";
    case EvalState::kDynamicOccupied:
      return "dynamic_occupied";
    case EvalState::kAnyOccupied:
      return "occupied";
  }
  return "?";
}

ConfusionCounts evaluate_pair(const EvidentialGridd& pred, const EvidentialGridd& truth,
                              double threshold, double mask_level) {
  if (pred.spec() != truth.spec()) {
    throw std::domain_error("prediction and truth grids have different geometry");
  }
  if (!(mask_level > 0) || mask_level > 1) {
    throw std::domain_error("mask level must be in (0, 1]");
  }

  ConfusionCounts counts;
  for (int row = 0; row < truth.rows(); ++row) {
    for (int col = 0; col < truth.cols(); ++col) {
      const BeliefMassd truth_mass = truth.at(row, col);
      if (truth_mass(Hypothesis::kUnknown) >= mask_level) {
        ++counts.masked_cells;
        continue;
      }
      const Hypothesis truth_label = classify_cell(truth_mass, threshold);
      if (truth_label == Hypothesis::kUnknown) {
        // No truth mass clears the threshold: the cell has no usable
        // ground truth even though its unknown mass is low.
        ++counts.masked_cells;
        continue;
      }
      ++counts.evaluated_cells;
      const Hypothesis pred_label = classify_cell(pred.at(row, col), threshold);

      for (int s = 0; s < kNumCellStates; ++s) {
        const Hypothesis singleton = static_cast<Hypothesis>(s);
        tally(counts.states[s], truth_label == singleton, pred_label == singleton);
      }
      tally(counts[EvalState::kAnyOccupied], counts_as_occupied(truth_label),
            counts_as_occupied(pred_label));
    }
  }
  return counts;
}

EvalReport aggregate(const std::vector<ConfusionCounts>& reports, AverageMode mode) {
  if (reports.empty()) {
    throw std::domain_error("cannot aggregate an empty report list");
  }

  EvalReport result;
  result.samples = reports.size();
  result.mode = mode;
  for (const ConfusionCounts& counts : reports) {
    for (int s = 0; s < kNumEvalStates; ++s) {
      result.totals[s].tp += counts.states[s].tp;
      result.totals[s].fp += counts.states[s].fp;
      result.totals[s].fn += counts.states[s].fn;
    }
    result.evaluated_cells += counts.evaluated_cells;
    result.masked_cells += counts.masked_cells;
  }

  for (int s = 0; s < kNumEvalStates; ++s) {
    if (mode == AverageMode::kMicro) {
      result.precision[s] = ratio(result.totals[s].tp, result.totals[s].tp + result.totals[s].fp);
      result.recall[s] = ratio(result.totals[s].tp, result.totals[s].tp + result.totals[s].fn);
    } else {
      double precision_sum = 0, recall_sum = 0;
      int precision_n = 0, recall_n = 0;
      for (const ConfusionCounts& counts : reports) {
        if (const auto p = ratio(counts.states[s].tp, counts.states[s].tp + counts.states[s].fp)) {
          precision_sum += *p;
          ++precision_n;
        }
        if (const auto r = ratio(counts.states[s].tp, counts.states[s].tp + counts.states[s].fn)) {
          recall_sum += *r;
          ++recall_n;
        }
      }
      if (precision_n > 0) result.precision[s] = precision_sum / precision_n;
      if (recall_n > 0) result.recall[s] = recall_sum / recall_n;
    }
  }
  return result;
}

std::string report_to_text(const EvalReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(18) << "state" << std::setw(10) << "tp" << std::setw(10) << "fp"
      << std::setw(10) << "fn" << std::setw(11) << "precision" << "recall\n";
  for (int s = 0; s < kNumEvalStates; ++s) {
    const StateCounts& c = report.totals[s];
    out << std::left << std::setw(18) << eval_state_name(static_cast<EvalState>(s))
        << std::setw(10) << c.tp << std::setw(10) << c.fp << std::setw(10) << c.fn
        << std::setw(11) << render(report.precision[s]) << render(report.recall[s]) << "\n";
  }
  out << std::left << std::setw(18) << "evaluated_cells" << report.evaluated_cells << "\n";
  out << std::left << std::setw(18) << "masked_cells" << report.masked_cells << "\n";
  out << std::left << std::setw(18) << "samples" << report.samples << "\n";
  out << std::left << std::setw(18) << "averaging"
      << (report.mode == AverageMode::kMicro ? "micro" : "macro") << "\n";
  return out.str();
}

std::string report_to_json(const EvalReport& report) {
  nlohmann::json doc;
  doc["averaging"] = report.mode == AverageMode::kMicro ? "micro" : "macro";
  doc["samples"] = report.samples;
  doc["evaluated_cells"] = report.evaluated_cells;
  doc["masked_cells"] = report.masked_cells;
  nlohmann::json states = nlohmann::json::object();
  for (int s = 0; s < kNumEvalStates; ++s) {
    nlohmann::json entry;
    entry["tp"] = report.totals[s].tp;
    entry["fp"] = report.totals[s].fp;
    entry["fn"] = report.totals[s].fn;
    entry["precision"] =
        report.precision[s] ? nlohmann::json(*report.precision[s]) : nlohmann::json(nullptr);
    entry["recall"] =
        report.recall[s] ? nlohmann::json(*report.recall[s]) : nlohmann::json(nullptr);
    states[eval_state_name(static_cast<EvalState>(s))] = entry;
  }
  doc["states"] = states;
  return doc.dump(2) + "\n";
}

}  // namespace eogm
