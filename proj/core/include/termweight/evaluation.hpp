#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "termweight/classifier.hpp"
#include "termweight/corpus.hpp"
#include "termweight/textproc.hpp"
#include "termweight/weighting.hpp"

namespace termweight {

enum class Metric { Accuracy, F1 };

struct EvalReport {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    std::uint64_t tn = 0;
    double accuracy = 0.0;
    double precision = 0.0; // positive class
    double recall = 0.0;    // positive class
    double f1 = 0.0;        // 0 when precision + recall is 0

    double metric(Metric m) const { return m == Metric::Accuracy ? accuracy : f1; }

    friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

EvalReport make_eval_report(std::uint64_t tp, std::uint64_t fp, std::uint64_t fn, std::uint64_t tn);

std::vector<double> default_b0_grid(); // {0.0, 0.1, ..., 1.0}

struct ExperimentConfig {
    enum class Mode { CrossVal, FixedSplit };

    int ngram_max = 1;
    std::size_t min_count = 3;
    LocalScheme local{};
    GlobalScheme global{};
    bool tune_bias = false; // tune b0 over b0_grid before training (re only)
    std::vector<double> b0_grid = default_b0_grid();
    bool normalize = true;
    TrainConfig svm{};
    Mode mode = Mode::CrossVal;
    int folds = 10;
    double tune_holdout = 0.2; // held-out fraction for b0 tuning
    Metric metric = Metric::Accuracy;
    std::uint64_t seed = 1;
};

// Everything fitted on one training corpus.
struct Pipeline {
    Vocabulary vocab;
    WeightModel wm;
    LinearModel model;
};

struct SweepRow {
    std::string param;
    double metric = 0.0;
    bool ok = false;
    std::string error;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::optional<std::size_t> best; // argmax over ok rows; ties go to the later row
};

struct CvResult {
    std::vector<EvalReport> fold_reports;
    std::vector<double> fold_b0; // chosen b0 per fold; empty unless tuned
    std::vector<std::size_t> vocab_sizes;
    double mean_metric = 0.0;
    Metric metric = Metric::Accuracy;
};

struct TuneResult {
    double b0 = 0.0;
    SweepResult sweep;
    Pipeline pipeline; // refit on the entire training corpus with the chosen b0
};

struct ExperimentRecord {
    ExperimentConfig cfg;
    std::optional<CvResult> cv;              // Mode::CrossVal
    std::optional<EvalReport> split_report;  // Mode::FixedSplit
    std::optional<double> chosen_b0;         // FixedSplit with tuning
    std::optional<SweepResult> tuning;       // FixedSplit tuning table
    std::optional<Pipeline> pipeline;        // FixedSplit fitted artifacts
    std::vector<std::size_t> vocab_sizes;
    double metric_value = 0.0;
    double seconds = 0.0; // wall time; reported on the console, never written into report files
};

// Confusion counts of the model over test documents vectorized with the
// training-fitted weight model.
EvalReport evaluate(const LinearModel& model, const WeightModel& wm, std::span<const CountedDoc> test_docs);

Dataset make_dataset(std::span<const CountedDoc> docs, const WeightModel& wm);

// Tokenizes and counts a corpus against an existing vocabulary.
std::vector<CountedDoc> apply_vocabulary(const Corpus& corpus, const Vocabulary& vocab);

// Vocabulary, weight model and classifier fitted on `train` only.
// b0_override replaces the configured bias term when set.
Pipeline fit_pipeline(const Corpus& train, const ExperimentConfig& cfg,
                      std::optional<double> b0_override = std::nullopt);

// Held-out b0 search: stratified holdout of cfg.tune_holdout, one fit
// per grid value scored on the held part, argmax of the metric with
// ties broken toward the larger b0, then a refit on all of `train`.
TuneResult tune_b0(const Corpus& train, const ExperimentConfig& cfg,
                   std::optional<std::uint64_t> seed_override = std::nullopt);

// Per fold: vocabulary, weights and classifier are fitted on the
// training folds only (including b0 tuning when configured), then
// evaluated on the held fold.
CvResult cross_validate(const ExperimentConfig& cfg, const Corpus& corpus);

// Runs the configured protocol. FixedSplit mode requires `test`.
ExperimentRecord run_experiment(const ExperimentConfig& cfg, const Corpus& train, const Corpus* test = nullptr);

// One run_experiment per axis value with everything else fixed (same
// seed, same splits). Failing rows are flagged and skipped.
SweepResult sweep_b0(const ExperimentConfig& cfg, const Corpus& train, const Corpus* test,
                     std::span<const double> grid);
SweepResult sweep_scaling(const ExperimentConfig& cfg, const Corpus& train, const Corpus* test,
                          std::span<const ScalingId> ids);
SweepResult sweep_schemes(const ExperimentConfig& cfg, const Corpus& train, const Corpus* test,
                          std::span<const GlobalScheme> schemes);

const char* to_string(Metric metric);
Metric parse_metric(std::string_view text);

} // namespace termweight
