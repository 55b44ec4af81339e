// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "typobench/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "typobench/builder.hpp"
#include "typobench/errors.hpp"

namespace typobench {

namespace {

// Canonical ordering for report rows. Known tasks come first in their fixed
// order; anything else sorts alphabetically after them.
int task_rank(const std::string& task) {
  const std::vector<TaskKind>& tasks = all_tasks();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (task_name(tasks[i]) == task) {
      return static_cast<int>(i);
    }
  }
  return static_cast<int>(tasks.size());
}

struct GroupKey {
  std::string task;
  std::string model;
  std::string prompt;

  bool operator<(const GroupKey& other) const {
    const int ra = task_rank(task);
    const int rb = task_rank(other.task);
    if (ra != rb) {
      return ra < rb;
    }
    return std::tie(task, model, prompt) < std::tie(other.task, other.model, other.prompt);
  }
};

std::string format1(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", value);
  return buf;
}

std::string format_full(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) {
    return value;
  }
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') {
      quoted += "\"\"";
    } else {
      quoted.push_back(c);
    }
  }
  quoted.push_back('"');
  return quoted;
}

void finalize_row(MetricsRow& row) {
  if (row.n_clean > 0) {
    row.acc_clean = 100.0 * static_cast<double>(row.correct_clean) /
                    static_cast<double>(row.n_clean);
  }
  if (row.n_typo > 0) {
    row.acc_typo = 100.0 * static_cast<double>(row.correct_typo) /
                   static_cast<double>(row.n_typo);
  }
  if (row.acc_clean && row.acc_typo) {
    row.gap = *row.acc_clean - *row.acc_typo;
  }
}

}  // namespace

MetricsReport compute_metrics(const std::vector<EvalRecord>& records,
                              const std::vector<std::string>& expected_tasks) {
  std::map<GroupKey, MetricsRow> groups;
  for (const EvalRecord& r : records) {
    const GroupKey key{r.task, r.model_name, r.prompt_id};
    MetricsRow& row = groups[key];
    if (row.task.empty()) {
      row.task = r.task;
      row.model = r.model_name;
      row.prompt = r.prompt_id;
    }
    if (r.on_typo_image) {
      ++row.n_typo;
      row.correct_typo += r.correct ? 1 : 0;
    } else {
      ++row.n_clean;
      row.correct_clean += r.correct ? 1 : 0;
    }
  }

  MetricsReport report;
  for (auto& [key, row] : groups) {
    finalize_row(row);
    report.rows.push_back(row);
  }

  // Overall rows per (model, prompt). The mean row averages the task-level
  // accuracies with equal weight; the pooled row divides summed corrects by
  // summed counts. They differ whenever task sizes differ, so both are
  // reported side by side.
  std::map<std::pair<std::string, std::string>, std::vector<const MetricsRow*>> by_run;
  for (const MetricsRow& row : report.rows) {
    by_run[{row.model, row.prompt}].push_back(&row);
  }
  for (const auto& [run, rows] : by_run) {
    MetricsRow mean;
    mean.task = "Overall (mean)";
    mean.model = run.first;
    mean.prompt = run.second;
    MetricsRow pooled = mean;
    pooled.task = "Overall (pooled)";

    double clean_sum = 0;
    int clean_terms = 0;
    double typo_sum = 0;
    int typo_terms = 0;
    for (const MetricsRow* row : rows) {
      pooled.n_clean += row->n_clean;
      pooled.n_typo += row->n_typo;
      pooled.correct_clean += row->correct_clean;
      pooled.correct_typo += row->correct_typo;
      if (row->acc_clean) {
        clean_sum += *row->acc_clean;
        ++clean_terms;
      }
      if (row->acc_typo) {
        typo_sum += *row->acc_typo;
        ++typo_terms;
      }
    }
    mean.n_clean = pooled.n_clean;
    mean.n_typo = pooled.n_typo;
    mean.correct_clean = pooled.correct_clean;
    mean.correct_typo = pooled.correct_typo;
    if (clean_terms > 0) {
      mean.acc_clean = clean_sum / clean_terms;
    }
    if (typo_terms > 0) {
      mean.acc_typo = typo_sum / typo_terms;
    }
    if (mean.acc_clean && mean.acc_typo) {
      mean.gap = *mean.acc_clean - *mean.acc_typo;
    }
    finalize_row(pooled);
    report.overall.push_back(std::move(mean));
    report.overall.push_back(std::move(pooled));
  }

  std::set<std::string> seen_tasks;
  for (const MetricsRow& row : report.rows) {
    seen_tasks.insert(row.task);
  }
  for (const std::string& task : expected_tasks) {
    if (!seen_tasks.count(task)) {
      report.notes.push_back("NoRecordsForTask: " + task);
    }
  }
  return report;
}

namespace {

// Display names of the swept settings plus the matching variant tag prefix.
std::vector<std::string> axis_settings(Axis axis) {
  std::vector<std::string> out;
  switch (axis) {
    case Axis::FontSize:
      for (int v : font_size_values()) {
        out.push_back(std::to_string(v) + "px");
      }
      break;
    case Axis::Opacity:
      for (int v : opacity_values()) {
        out.push_back(std::to_string(v) + "%");
      }
      break;
    case Axis::Color:
      out = color_values();
      break;
    case Axis::Position:
      for (GridCell cell : position_values()) {
        out.push_back(format_cell(cell));
      }
      break;
  }
  return out;
}

// Maps a variant tag such as "FC-red" to the display setting "red";
// returns nullopt for tags of other axes.
std::optional<std::string> setting_for_tag(Axis axis, const std::string& tag) {
  const auto strip = [&](const char* prefix) -> std::optional<std::string> {
    const std::size_t len = std::string_view(prefix).size();
    if (tag.rfind(prefix, 0) == 0) {
      return tag.substr(len);
    }
    return std::nullopt;
  };
  switch (axis) {
    case Axis::FontSize:
      return strip("FS-");
    case Axis::Opacity: {
      if (auto raw = strip("FO-")) {
        return *raw + "%";
      }
      return std::nullopt;
    }
    case Axis::Color:
      return strip("FC-");
    case Axis::Position:
      return strip("FP-");
  }
  return std::nullopt;
}

}  // namespace

FactorTable compute_factor_table(const std::vector<EvalRecord>& records, Axis axis) {
  FactorTable table;
  table.axis = axis;
  table.settings = axis_settings(axis);

  struct Tally {
    std::int64_t n = 0;
    std::int64_t correct = 0;
  };
  std::map<std::pair<std::string, std::string>, std::map<std::string, Tally>> grouped;
  for (const EvalRecord& r : records) {
    const std::optional<std::string> setting = setting_for_tag(axis, r.variant_tag);
    if (!setting || !r.on_typo_image) {
      throw AxisMismatch("record " + r.instance_id + " with variant '" + r.variant_tag +
                         "' does not belong to the " + axis_name(axis) + " sweep");
    }
    if (std::find(table.settings.begin(), table.settings.end(), *setting) ==
        table.settings.end()) {
      throw AxisMismatch("record " + r.instance_id + " has unknown setting '" + *setting + "'");
    }
    Tally& tally = grouped[{r.task, r.model_name}][*setting];
    ++tally.n;
    tally.correct += r.correct ? 1 : 0;
  }

  std::vector<std::pair<std::string, std::string>> keys;
  for (const auto& [key, cells] : grouped) {
    keys.push_back(key);
  }
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    const int ra = task_rank(a.first);
    const int rb = task_rank(b.first);
    if (ra != rb) {
      return ra < rb;
    }
    return a < b;
  });
  for (const auto& key : keys) {
    FactorTable::Row row;
    row.task = key.first;
    row.model = key.second;
    for (const auto& [setting, tally] : grouped[key]) {
      row.cells[setting] = {100.0 * static_cast<double>(tally.correct) /
                                static_cast<double>(tally.n),
                            tally.n};
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string render_report(const MetricsReport& report, ReportFormat format) {
  std::ostringstream out;
  const auto cell = [](const std::optional<double>& v) {
    return v ? format1(*v) : std::string("—");
  };

  if (format == ReportFormat::Markdown) {
    out << "| Task | Model | Prompt | N clean | N typo | ACC | ACC- | GAP |\n";
    out << "|---|---|---|---:|---:|---:|---:|---:|\n";
    const auto emit = [&](const MetricsRow& row) {
      out << "| " << row.task << " | " << row.model << " | " << row.prompt << " | "
          << row.n_clean << " | " << row.n_typo << " | " << cell(row.acc_clean) << " | "
          << cell(row.acc_typo) << " | "
          << (row.gap ? "**" + format1(*row.gap) + "**" : std::string("—")) << " |\n";
    };
    for (const MetricsRow& row : report.rows) {
      emit(row);
    }
    for (const MetricsRow& row : report.overall) {
      emit(row);
    }
    if (!report.overall.empty()) {
      out << "\nOverall (mean) weights each task equally; Overall (pooled) weights by instance "
             "count. They differ whenever task sizes differ.\n";
    }
    for (const std::string& note : report.notes) {
      out << "\nWARNING: " << note << "\n";
    }
    return out.str();
  }

  const auto num = [](const std::optional<double>& v) {
    return v ? format_full(*v) : std::string();
  };
  out << "task,model,prompt,n_clean,n_typo,acc_clean,acc_typo,gap\n";
  const auto emit = [&](const MetricsRow& row) {
    out << csv_field(row.task) << ',' << csv_field(row.model) << ',' << csv_field(row.prompt)
        << ',' << row.n_clean << ',' << row.n_typo << ',' << num(row.acc_clean) << ','
        << num(row.acc_typo) << ',' << num(row.gap) << '\n';
  };
  for (const MetricsRow& row : report.rows) {
    emit(row);
  }
  for (const MetricsRow& row : report.overall) {
    emit(row);
  }
  for (const std::string& note : report.notes) {
    out << "# " << note << '\n';
  }
  return out.str();
}

std::string render_factor_table(const FactorTable& table, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Markdown) {
    out << "| Task | Model |";
    for (const std::string& s : table.settings) {
      out << ' ' << s << " |";
    }
    out << "\n|---|---|";
    for (std::size_t i = 0; i < table.settings.size(); ++i) {
      out << "---:|";
    }
    out << '\n';
    for (const FactorTable::Row& row : table.rows) {
      out << "| " << row.task << " | " << row.model << " |";
      for (const std::string& s : table.settings) {
        const auto it = row.cells.find(s);
        if (it == row.cells.end()) {
          out << " — |";
        } else {
          out << ' ' << format1(it->second.first) << " |";
        }
      }
      out << '\n';
    }
    return out.str();
  }

  out << "task,model";
  for (const std::string& s : table.settings) {
    out << ',' << csv_field(s);
  }
  out << '\n';
  for (const FactorTable::Row& row : table.rows) {
    out << csv_field(row.task) << ',' << csv_field(row.model);
    for (const std::string& s : table.settings) {
      const auto it = row.cells.find(s);
      out << ',';
      if (it != row.cells.end()) {
        out << format_full(it->second.first);
      }
    }
    out << '\n';
  }
  return out.str();
}

std::vector<ParsedCsvRow> parse_report_csv(const std::string& csv) {
  std::vector<ParsedCsvRow> rows;
  std::istringstream in(csv);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') {
      continue;
    }
    if (first) {
      first = false;  // header
      continue;
    }
    // Split one CSV line, honoring quoted fields.
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (quoted) {
        if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else if (c == '"') {
          quoted = false;
        } else {
          field.push_back(c);
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        fields.push_back(std::move(field));
        field.clear();
      } else {
        field.push_back(c);
      }
    }
    fields.push_back(std::move(field));
    if (fields.size() != 8) {
      throw IoError("bad CSV row: " + line);
    }
    ParsedCsvRow row;
    row.task = fields[0];
    row.model = fields[1];
    row.prompt = fields[2];
    row.n_clean = std::stoll(fields[3]);
    row.n_typo = std::stoll(fields[4]);
    const auto opt = [](const std::string& s) -> std::optional<double> {
      if (s.empty()) {
        return std::nullopt;
      }
      return std::stod(s);
    };
    row.acc_clean = opt(fields[5]);
    row.acc_typo = opt(fields[6]);
    row.gap = opt(fields[7]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace typobench
