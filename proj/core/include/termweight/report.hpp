#pragma once

#include <string>
#include <utility>
#include <vector>

#include "termweight/evaluation.hpp"

namespace termweight {

// Emitted tables are UTF-8 TSV with LF endings, a header row and a fixed
// column order; doubles use shortest round-trip decimals. All emitters
// are pure functions of their inputs, so reruns produce identical bytes.

// Single data row: tp fp fn tn accuracy precision recall f1.
std::string eval_report_tsv(const EvalReport& report);

// One row per fold (or one "holdout" row in fixed-split mode).
std::string experiment_tsv(const ExperimentRecord& record);

// One row per axis value: param, metric, status, error.
std::string sweep_tsv(const SweepResult& result);

using Provenance = std::vector<std::pair<std::string, std::string>>;

// Every core configuration key with its resolved value, dotted-key
// style. Callers may prepend their own entries (e.g. file paths).
Provenance config_provenance(const ExperimentConfig& cfg);

std::string eval_report_json(const EvalReport& report, const Provenance& provenance);
std::string experiment_json(const ExperimentRecord& record, const Provenance& provenance);
std::string sweep_json(const SweepResult& result, const Provenance& provenance);

} // namespace termweight
