// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "typobench/eval.hpp"
#include "typobench/manifest.hpp"

namespace typobench {

// Aggregated accuracy for one (task, model, prompt) group. Accuracies are
// percentages kept at full precision; display rounding happens only in the
// renderers. `acc_clean` is ACC, `acc_typo` is ACC- and `gap` their
// difference, present only when both sides have records.
struct MetricsRow {
  std::string task;
  std::string model;
  std::string prompt;
  std::int64_t n_clean = 0;
  std::int64_t n_typo = 0;
  std::int64_t correct_clean = 0;
  std::int64_t correct_typo = 0;
  std::optional<double> acc_clean;
  std::optional<double> acc_typo;
  std::optional<double> gap;
};

struct MetricsReport {
  std::vector<MetricsRow> rows;      // per task, canonical task order first
  std::vector<MetricsRow> overall;   // two rows per (model, prompt): mean, pooled
  std::vector<std::string> notes;    // e.g. NoRecordsForTask diagnostics
};

// Groups records by (task, model, prompt) and computes ACC, ACC- and GAP.
// `expected_tasks` lists task names that must have at least one record; a
// missing one adds a "NoRecordsForTask: <name>" note instead of throwing so
// partial runs still report what they have. The overall rows carry both the
// unweighted mean of the task rows and the instance-weighted pool, since the
// two disagree whenever task sizes differ.
MetricsReport compute_metrics(const std::vector<EvalRecord>& records,
                              const std::vector<std::string>& expected_tasks = {});

// Typo-side accuracy per swept setting. Rows are (task, model) pairs and
// columns the canonical axis values; cells without records stay empty.
// Throws AxisMismatch when a record's variant tag belongs to a different
// axis or to the fixing stage.
struct FactorTable {
  Axis axis = Axis::FontSize;
  std::vector<std::string> settings;  // display names, canonical order
  struct Row {
    std::string task;
    std::string model;
    // setting name -> (accuracy percent, sample count)
    std::map<std::string, std::pair<double, std::int64_t>> cells;
  };
  std::vector<Row> rows;
};

FactorTable compute_factor_table(const std::vector<EvalRecord>& records, Axis axis);

enum class ReportFormat { Markdown, Csv };

std::string render_report(const MetricsReport& report, ReportFormat format);
std::string render_factor_table(const FactorTable& table, ReportFormat format);

// Inverse of render_report for the CSV flavor; used for round-trip checks
// and by downstream tooling.
struct ParsedCsvRow {
  std::string task;
  std::string model;
  std::string prompt;
  std::int64_t n_clean = 0;
  std::int64_t n_typo = 0;
  std::optional<double> acc_clean;
  std::optional<double> acc_typo;
  std::optional<double> gap;
};
std::vector<ParsedCsvRow> parse_report_csv(const std::string& csv);

}  // namespace typobench
