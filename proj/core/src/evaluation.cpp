#include "termweight/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "termweight/error.hpp"
#include "termweight/prng.hpp"
#include "termweight/textio.hpp"

namespace termweight {

namespace {

struct PreparedCorpus {
    Vocabulary vocab;
    std::vector<CountedDoc> counted;
};

PreparedCorpus prepare_training(const Corpus& corpus, const ExperimentConfig& cfg) {
    std::vector<TokenizedDoc> tokenized = tokenize_corpus(corpus, cfg.ngram_max);
    Vocabulary vocab = build_vocabulary(tokenized, cfg.min_count, cfg.ngram_max);
    std::vector<CountedDoc> counted = count_corpus(corpus, tokenized, vocab);
    return {std::move(vocab), std::move(counted)};
}

GlobalScheme with_b0(GlobalScheme scheme, std::optional<double> b0) {
    if (b0) scheme.b0 = *b0;
    return scheme;
}

Pipeline fit_on_prepared(const PreparedCorpus& prep, const ExperimentConfig& cfg, std::optional<double> b0) {
    Pipeline pipe;
    pipe.vocab = prep.vocab;
    pipe.wm = fit_weight_model(prep.counted, prep.vocab, cfg.local, with_b0(cfg.global, b0), cfg.normalize);
    pipe.model = train(make_dataset(prep.counted, pipe.wm), cfg.svm);
    return pipe;
}

bool wants_tuning(const ExperimentConfig& cfg) {
    return cfg.tune_bias && cfg.global.id == GlobalId::Re && !cfg.b0_grid.empty();
}

void pick_best(SweepResult& result) {
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        if (!result.rows[i].ok) continue;
        if (!result.best || result.rows[i].metric >= result.rows[*result.best].metric) {
            result.best = i; // >= so ties go to the later row
        }
    }
}

} // namespace

EvalReport make_eval_report(std::uint64_t tp, std::uint64_t fp, std::uint64_t fn, std::uint64_t tn) {
    EvalReport r;
    r.tp = tp;
    r.fp = fp;
    r.fn = fn;
    r.tn = tn;
    const std::uint64_t total = tp + fp + fn + tn;
    r.accuracy = total > 0 ? static_cast<double>(tp + tn) / static_cast<double>(total) : 0.0;
    r.precision = tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
    r.recall = tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
    r.f1 = r.precision + r.recall > 0.0 ? 2.0 * r.precision * r.recall / (r.precision + r.recall) : 0.0;
    return r;
}

std::vector<double> default_b0_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i) grid.push_back(static_cast<double>(i) / 10.0);
    return grid;
}

EvalReport evaluate(const LinearModel& model, const WeightModel& wm, std::span<const CountedDoc> test_docs) {
    if (test_docs.empty()) {
        throw DomainError("cannot evaluate on an empty test set");
    }
    std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
    for (const CountedDoc& doc : test_docs) {
        const Label predicted = predict(model, vectorize(doc, wm));
        const bool truth_pos = doc.label == Label::Positive;
        const bool pred_pos = predicted == Label::Positive;
        if (truth_pos && pred_pos) ++tp;
        else if (!truth_pos && pred_pos) ++fp;
        else if (truth_pos && !pred_pos) ++fn;
        else ++tn;
    }
    return make_eval_report(tp, fp, fn, tn);
}

Dataset make_dataset(std::span<const CountedDoc> docs, const WeightModel& wm) {
    Dataset data;
    data.dim = wm.global_weights.size();
    data.rows.reserve(docs.size());
    data.labels.reserve(docs.size());
    for (const CountedDoc& doc : docs) {
        data.rows.push_back(vectorize(doc, wm));
        data.labels.push_back(doc.label == Label::Positive ? 1 : -1);
    }
    return data;
}

std::vector<CountedDoc> apply_vocabulary(const Corpus& corpus, const Vocabulary& vocab) {
    std::vector<TokenizedDoc> tokenized = tokenize_corpus(corpus, vocab.ngram_max());
    return count_corpus(corpus, tokenized, vocab);
}

Pipeline fit_pipeline(const Corpus& train, const ExperimentConfig& cfg, std::optional<double> b0_override) {
    PreparedCorpus prep = prepare_training(train, cfg);
    return fit_on_prepared(prep, cfg, b0_override);
}

TuneResult tune_b0(const Corpus& train, const ExperimentConfig& cfg, std::optional<std::uint64_t> seed_override) {
    if (cfg.global.id != GlobalId::Re) {
        throw DomainError("b0 tuning is only defined for the re scheme");
    }
    if (cfg.b0_grid.empty()) {
        throw DomainError("b0 tuning requires a non-empty grid");
    }
    const std::uint64_t seed = seed_override.value_or(cfg.seed);
    auto [tune_train, tune_held] = holdout_split(train, cfg.tune_holdout, seed);

    PreparedCorpus prep = prepare_training(tune_train, cfg);
    std::vector<CountedDoc> held_counted = apply_vocabulary(tune_held, prep.vocab);

    TuneResult result;
    for (double b0 : cfg.b0_grid) {
        SweepRow row;
        row.param = format_double(b0);
        try {
            Pipeline pipe = fit_on_prepared(prep, cfg, b0);
            row.metric = evaluate(pipe.model, pipe.wm, held_counted).metric(cfg.metric);
            row.ok = true;
        } catch (const Error& err) {
            row.error = err.what();
        }
        result.sweep.rows.push_back(std::move(row));
    }
    pick_best(result.sweep);
    if (!result.sweep.best) {
        throw DomainError("b0 tuning failed for every grid value");
    }
    result.b0 = cfg.b0_grid[*result.sweep.best];
    result.pipeline = fit_pipeline(train, cfg, result.b0);
    return result;
}

CvResult cross_validate(const ExperimentConfig& cfg, const Corpus& corpus) {
    if (cfg.mode != ExperimentConfig::Mode::CrossVal) {
        throw ConfigError("cross_validate called with a fixed-split configuration");
    }
    const FoldAssignment folds = stratified_folds(corpus, cfg.folds, cfg.seed);
    CvResult result;
    result.metric = cfg.metric;
    const bool tuned = wants_tuning(cfg);
    double metric_sum = 0.0;
    for (int fold = 0; fold < cfg.folds; ++fold) {
        auto [fold_train, fold_test] = split_fold(corpus, folds, fold);
        Pipeline pipe;
        if (tuned) {
            TuneResult tuned_fit =
                tune_b0(fold_train, cfg, derive_seed(cfg.seed, 1000 + static_cast<std::uint64_t>(fold)));
            result.fold_b0.push_back(tuned_fit.b0);
            pipe = std::move(tuned_fit.pipeline);
        } else {
            pipe = fit_pipeline(fold_train, cfg);
        }
        std::vector<CountedDoc> test_counted = apply_vocabulary(fold_test, pipe.vocab);
        EvalReport report = evaluate(pipe.model, pipe.wm, test_counted);
        metric_sum += report.metric(cfg.metric);
        result.vocab_sizes.push_back(pipe.vocab.size());
        result.fold_reports.push_back(report);
    }
    result.mean_metric = metric_sum / static_cast<double>(cfg.folds);
    return result;
}

ExperimentRecord run_experiment(const ExperimentConfig& cfg, const Corpus& train, const Corpus* test) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentRecord record;
    record.cfg = cfg;
    if (cfg.mode == ExperimentConfig::Mode::CrossVal) {
        record.cv = cross_validate(cfg, train);
        record.metric_value = record.cv->mean_metric;
        record.vocab_sizes = record.cv->vocab_sizes;
    } else {
        if (test == nullptr) {
            throw ConfigError("fixed-split mode requires a test corpus");
        }
        Pipeline pipe;
        if (wants_tuning(cfg)) {
            TuneResult tuned = tune_b0(train, cfg);
            record.chosen_b0 = tuned.b0;
            record.tuning = std::move(tuned.sweep);
            pipe = std::move(tuned.pipeline);
        } else {
            pipe = fit_pipeline(train, cfg);
        }
        std::vector<CountedDoc> test_counted = apply_vocabulary(*test, pipe.vocab);
        record.split_report = evaluate(pipe.model, pipe.wm, test_counted);
        record.metric_value = record.split_report->metric(cfg.metric);
        record.vocab_sizes.push_back(pipe.vocab.size());
        record.pipeline = std::move(pipe);
    }
    record.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

namespace {

template <typename Value, typename Apply>
SweepResult sweep_impl(const ExperimentConfig& cfg, const Corpus& train, const Corpus* test,
                       std::span<const Value> values, Apply apply) {
    SweepResult result;
    for (const Value& value : values) {
        ExperimentConfig row_cfg = cfg;
        SweepRow row;
        row.param = apply(row_cfg, value);
        try {
            row.metric = run_experiment(row_cfg, train, test).metric_value;
            row.ok = true;
        } catch (const Error& err) {
            row.error = err.what();
        }
        result.rows.push_back(std::move(row));
    }
    pick_best(result);
    return result;
}

} // namespace

SweepResult sweep_b0(const ExperimentConfig& cfg, const Corpus& train, const Corpus* test,
                     std::span<const double> grid) {
    return sweep_impl(cfg, train, test, grid, [](ExperimentConfig& row_cfg, double b0) {
        row_cfg.global.id = GlobalId::Re;
        row_cfg.global.b0 = b0;
        row_cfg.tune_bias = false;
        return format_double(b0);
    });
}

SweepResult sweep_scaling(const ExperimentConfig& cfg, const Corpus& train, const Corpus* test,
                          std::span<const ScalingId> ids) {
    return sweep_impl(cfg, train, test, ids, [](ExperimentConfig& row_cfg, ScalingId id) {
        row_cfg.global.id = GlobalId::ScaledX;
        row_cfg.global.scaling = id;
        row_cfg.tune_bias = false;
        return std::string(to_string(id));
    });
}

SweepResult sweep_schemes(const ExperimentConfig& cfg, const Corpus& train, const Corpus* test,
                          std::span<const GlobalScheme> schemes) {
    return sweep_impl(cfg, train, test, schemes, [](ExperimentConfig& row_cfg, const GlobalScheme& scheme) {
        row_cfg.global = scheme;
        return std::string(to_string(scheme.id));
    });
}

const char* to_string(Metric metric) {
    return metric == Metric::Accuracy ? "accuracy" : "f1";
}

Metric parse_metric(std::string_view text) {
    if (text == "accuracy") return Metric::Accuracy;
    if (text == "f1") return Metric::F1;
    throw ConfigError("unknown metric '" + std::string(text) + "'");
}

} // namespace termweight
