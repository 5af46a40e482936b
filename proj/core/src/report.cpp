#include "termweight/report.hpp"

#include <json.hpp>

#include "termweight/textio.hpp"

namespace termweight {

namespace {

using nlohmann::json;

void append_row(std::string& out, std::initializer_list<std::string> cells) {
    bool first = true;
    for (const std::string& cell : cells) {
        if (!first) out += '\t';
        out += cell;
        first = false;
    }
    out += '\n';
}

std::vector<std::string> report_cells(const EvalReport& r) {
    return {std::to_string(r.tp),      std::to_string(r.fp),     std::to_string(r.fn),
            std::to_string(r.tn),     format_double(r.accuracy), format_double(r.precision),
            format_double(r.recall), format_double(r.f1)};
}

json report_json(const EvalReport& r) {
    json j;
    j["tp"] = r.tp;
    j["fp"] = r.fp;
    j["fn"] = r.fn;
    j["tn"] = r.tn;
    j["accuracy"] = r.accuracy;
    j["precision"] = r.precision;
    j["recall"] = r.recall;
    j["f1"] = r.f1;
    return j;
}

json sweep_rows_json(const SweepResult& result) {
    json rows = json::array();
    for (const SweepRow& row : result.rows) {
        json j;
        j["param"] = row.param;
        j["status"] = row.ok ? "ok" : "failed";
        if (row.ok) j["metric"] = row.metric;
        if (!row.error.empty()) j["error"] = row.error;
        rows.push_back(std::move(j));
    }
    return rows;
}

json provenance_json(const Provenance& provenance) {
    json j = json::object();
    for (const auto& [key, value] : provenance) j[key] = value;
    return j;
}

} // namespace

std::string eval_report_tsv(const EvalReport& report) {
    std::string out;
    append_row(out, {"tp", "fp", "fn", "tn", "accuracy", "precision", "recall", "f1"});
    auto cells = report_cells(report);
    append_row(out, {cells[0], cells[1], cells[2], cells[3], cells[4], cells[5], cells[6], cells[7]});
    return out;
}

std::string experiment_tsv(const ExperimentRecord& record) {
    std::string out;
    append_row(out, {"fold", "tp", "fp", "fn", "tn", "accuracy", "precision", "recall", "f1", "chosen_b0"});
    auto emit = [&out](const std::string& fold, const EvalReport& r, const std::string& b0) {
        auto cells = report_cells(r);
        append_row(out, {fold, cells[0], cells[1], cells[2], cells[3], cells[4], cells[5], cells[6], cells[7], b0});
    };
    if (record.cv) {
        for (std::size_t i = 0; i < record.cv->fold_reports.size(); ++i) {
            const std::string b0 = i < record.cv->fold_b0.size() ? format_double(record.cv->fold_b0[i]) : "";
            emit(std::to_string(i), record.cv->fold_reports[i], b0);
        }
    } else if (record.split_report) {
        emit("holdout", *record.split_report, record.chosen_b0 ? format_double(*record.chosen_b0) : "");
    }
    return out;
}

std::string sweep_tsv(const SweepResult& result) {
    std::string out;
    append_row(out, {"param", "metric", "status", "error"});
    for (const SweepRow& row : result.rows) {
        append_row(out, {row.param, row.ok ? format_double(row.metric) : "", row.ok ? "ok" : "failed", row.error});
    }
    return out;
}

Provenance config_provenance(const ExperimentConfig& cfg) {
    Provenance p;
    p.emplace_back("data.ngram_max", std::to_string(cfg.ngram_max));
    p.emplace_back("data.min_count", std::to_string(cfg.min_count));
    p.emplace_back("weighting.local", to_string(cfg.local.id));
    p.emplace_back("weighting.atf_k", format_double(cfg.local.k));
    p.emplace_back("weighting.btf_k1", format_double(cfg.local.k1));
    p.emplace_back("weighting.btf_b", format_double(cfg.local.b));
    p.emplace_back("weighting.global", to_string(cfg.global.id));
    p.emplace_back("weighting.b0", cfg.tune_bias ? "" : format_double(cfg.global.b0));
    std::string grid;
    for (double b0 : cfg.b0_grid) {
        if (!grid.empty()) grid += ',';
        grid += format_double(b0);
    }
    p.emplace_back("weighting.b0_grid", grid);
    p.emplace_back("weighting.scaling", to_string(cfg.global.scaling));
    p.emplace_back("weighting.normalize", cfg.normalize ? "true" : "false");
    p.emplace_back("svm.C", format_double(cfg.svm.C));
    p.emplace_back("svm.tol", format_double(cfg.svm.tol));
    p.emplace_back("svm.max_iter", std::to_string(cfg.svm.max_iter));
    p.emplace_back("eval.mode", cfg.mode == ExperimentConfig::Mode::CrossVal ? "cv" : "split");
    p.emplace_back("eval.folds", std::to_string(cfg.folds));
    p.emplace_back("eval.metric", to_string(cfg.metric));
    p.emplace_back("tune.holdout", format_double(cfg.tune_holdout));
    p.emplace_back("seed", std::to_string(cfg.seed));
    return p;
}

std::string eval_report_json(const EvalReport& report, const Provenance& provenance) {
    json j;
    j["report"] = report_json(report);
    j["provenance"] = provenance_json(provenance);
    return j.dump(2) + "\n";
}

std::string experiment_json(const ExperimentRecord& record, const Provenance& provenance) {
    json j;
    j["metric_value"] = record.metric_value;
    j["vocab_sizes"] = record.vocab_sizes;
    if (record.cv) {
        json folds = json::array();
        for (std::size_t i = 0; i < record.cv->fold_reports.size(); ++i) {
            json fold = report_json(record.cv->fold_reports[i]);
            if (i < record.cv->fold_b0.size()) fold["chosen_b0"] = record.cv->fold_b0[i];
            folds.push_back(std::move(fold));
        }
        j["folds"] = std::move(folds);
        j["mean_metric"] = record.cv->mean_metric;
    }
    if (record.split_report) {
        j["report"] = report_json(*record.split_report);
    }
    if (record.chosen_b0) j["chosen_b0"] = *record.chosen_b0;
    if (record.tuning) j["tuning"] = sweep_rows_json(*record.tuning);
    j["provenance"] = provenance_json(provenance);
    return j.dump(2) + "\n";
}

std::string sweep_json(const SweepResult& result, const Provenance& provenance) {
    json j;
    j["rows"] = sweep_rows_json(result);
    if (result.best) {
        json best;
        best["param"] = result.rows[*result.best].param;
        best["metric"] = result.rows[*result.best].metric;
        j["optimum"] = std::move(best);
    }
    j["provenance"] = provenance_json(provenance);
    return j.dump(2) + "\n";
}

} // namespace termweight
