// termweight: corpus prep, weighting, SVM training, evaluation and
// experiment sweeps over labeled text corpora, driven by a flat config
// file plus flag overrides (flags > file > defaults).

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "termweight/cliconfig.hpp"
#include "termweight/error.hpp"
#include "termweight/report.hpp"
#include "termweight/serialize.hpp"
#include "termweight/textio.hpp"

namespace tw = termweight;
namespace fs = std::filesystem;

namespace {

struct CommonArgs {
    std::string config_path;
    std::vector<std::string> sets;
    std::string seed;
    std::string out_dir;
    bool has_seed = false;
    bool has_out_dir = false;
};

void add_common_options(CLI::App* sub, CommonArgs& args) {
    sub->add_option("--config", args.config_path, "flat key = value config file");
    sub->add_option("--set", args.sets, "override a config key, e.g. --set weighting.global=re")
        ->take_all();
    sub->add_option("--seed", args.seed, "override the seed config key")
        ->each([&args](const std::string&) { args.has_seed = true; });
    sub->add_option("--out-dir", args.out_dir, "override the out.dir config key")
        ->each([&args](const std::string&) { args.has_out_dir = true; });
}

tw::CliConfig resolve_config(const CommonArgs& args) {
    tw::CliConfig config;
    if (!args.config_path.empty()) {
        config.apply(tw::parse_keyval(tw::read_file(args.config_path)));
    }
    for (const std::string& pair : args.sets) {
        std::size_t eq = pair.find('=');
        if (eq == std::string::npos) {
            throw tw::ConfigError("--set expects key=value, got '" + pair + "'");
        }
        config.apply_override(pair.substr(0, eq), pair.substr(eq + 1));
    }
    if (args.has_seed) config.apply_override("seed", args.seed);
    if (args.has_out_dir) config.apply_override("out.dir", args.out_dir);
    return config;
}

std::string config_keys_footer() {
    std::string out = "Config keys (config file or --set, flags > file > defaults):\n";
    for (const tw::ConfigKey& key : tw::config_registry()) {
        out += "  " + std::string(key.name) + " (default: '" + std::string(key.default_value) + "')  " +
               std::string(key.help) + "\n";
    }
    return out;
}

void write_report(const fs::path& path, std::string_view content) {
    tw::write_file_atomic(path, content);
    std::cout << "wrote " << path.string() << "\n";
}

int cmd_vocab(const tw::CliConfig& config) {
    tw::Corpus corpus = config.load_corpus();
    tw::ExperimentConfig cfg = config.experiment_config();
    std::vector<tw::TokenizedDoc> tokenized = tw::tokenize_corpus(corpus, cfg.ngram_max);
    tw::Vocabulary vocab = tw::build_vocabulary(tokenized, cfg.min_count, cfg.ngram_max);
    std::size_t unigrams = 0;
    for (const tw::FeatureKey& key : vocab.entries()) {
        if (key.kind == tw::FeatureKind::Unigram) ++unigrams;
    }
    write_report(config.out_dir() / "vocabulary.tsv", tw::serialize_vocabulary(vocab));
    std::cout << "vocabulary: " << vocab.size() << " features (" << unigrams << " unigrams, "
              << vocab.size() - unigrams << " bigrams) from " << corpus.size() << " documents\n";
    return 0;
}

int cmd_train(const tw::CliConfig& config) {
    tw::Corpus corpus = config.load_corpus();
    tw::ExperimentConfig cfg = config.experiment_config();

    tw::Pipeline pipe;
    std::optional<double> chosen_b0;
    std::optional<tw::SweepResult> tuning;
    if (cfg.tune_bias) {
        tw::TuneResult tuned = tw::tune_b0(corpus, cfg);
        chosen_b0 = tuned.b0;
        tuning = std::move(tuned.sweep);
        pipe = std::move(tuned.pipeline);
        std::cout << "chose b0 = " << tw::format_double(tuned.b0) << " on the held-out portion\n";
    } else {
        pipe = tw::fit_pipeline(corpus, cfg);
    }

    tw::GlobalScheme fitted_global = cfg.global;
    if (chosen_b0) fitted_global.b0 = *chosen_b0;

    fs::path out = config.out_dir();
    write_report(out / "vocabulary.tsv", tw::serialize_vocabulary(pipe.vocab));
    write_report(out / "weight_model.tsv", tw::serialize_weight_model(pipe.wm, fitted_global));
    write_report(out / "linear_model.tsv", tw::serialize_linear_model(pipe.model));

    tw::ExperimentRecord record;
    record.cfg = cfg;
    record.chosen_b0 = chosen_b0;
    record.tuning = std::move(tuning);
    record.vocab_sizes.push_back(pipe.vocab.size());
    tw::Provenance provenance = config.provenance();
    write_report(out / "provenance.json", tw::experiment_json(record, provenance));
    std::cout << "trained on " << corpus.size() << " documents, " << pipe.vocab.size() << " features\n";
    return 0;
}

struct LoadedModel {
    tw::Vocabulary vocab;
    tw::WeightModel wm;
    tw::LinearModel model;
};

LoadedModel load_model(const fs::path& dir) {
    LoadedModel loaded;
    loaded.vocab = tw::parse_vocabulary(tw::read_file(dir / "vocabulary.tsv"));
    auto [wm, global] = tw::parse_weight_model(tw::read_file(dir / "weight_model.tsv"));
    loaded.wm = std::move(wm);
    loaded.model = tw::parse_linear_model(tw::read_file(dir / "linear_model.tsv"));
    if (loaded.wm.global_weights.size() != loaded.vocab.size()) {
        throw tw::FormatError("dimension mismatch: weight model has " +
                              std::to_string(loaded.wm.global_weights.size()) + " terms, vocabulary has " +
                              std::to_string(loaded.vocab.size()));
    }
    if (loaded.model.w.size() != loaded.vocab.size()) {
        throw tw::FormatError("dimension mismatch: linear model has dim " + std::to_string(loaded.model.w.size()) +
                              ", vocabulary has " + std::to_string(loaded.vocab.size()));
    }
    return loaded;
}

int cmd_eval(const tw::CliConfig& config, const std::string& model_dir_flag) {
    fs::path model_dir = model_dir_flag.empty() ? config.out_dir() : fs::path(model_dir_flag);
    LoadedModel loaded = load_model(model_dir);

    tw::Corpus test = config.test_corpus_path().empty() ? config.load_corpus() : config.load_test_corpus();
    std::vector<tw::CountedDoc> counted = tw::apply_vocabulary(test, loaded.vocab);
    tw::EvalReport report = tw::evaluate(loaded.model, loaded.wm, counted);

    tw::Provenance provenance = config.provenance();
    provenance.emplace_back("model.dir", model_dir.string());
    fs::path out = config.out_dir();
    write_report(out / "eval.tsv", tw::eval_report_tsv(report));
    write_report(out / "eval.json", tw::eval_report_json(report, provenance));
    std::cout << "accuracy " << tw::format_double(report.accuracy) << ", f1 " << tw::format_double(report.f1)
              << " over " << test.size() << " documents\n";
    return 0;
}

int cmd_experiment(const tw::CliConfig& config) {
    tw::Corpus corpus = config.load_corpus();
    tw::ExperimentConfig cfg = config.experiment_config();
    std::optional<tw::Corpus> test;
    if (cfg.mode == tw::ExperimentConfig::Mode::FixedSplit) {
        test = config.load_test_corpus();
    }
    tw::ExperimentRecord record = tw::run_experiment(cfg, corpus, test ? &*test : nullptr);

    fs::path out = config.out_dir();
    write_report(out / "experiment.tsv", tw::experiment_tsv(record));
    write_report(out / "experiment.json", tw::experiment_json(record, config.provenance()));
    std::cout << "mean " << tw::to_string(cfg.metric) << " " << tw::format_double(record.metric_value) << " ("
              << tw::format_double(record.seconds) << " s)\n";
    return 0;
}

int cmd_sweep(const tw::CliConfig& config, const std::string& b0_spec, const std::string& scaling_spec) {
    if (b0_spec.empty() == scaling_spec.empty()) {
        throw tw::ConfigError("sweep requires exactly one of --sweep-b0 or --sweep-scaling");
    }
    tw::Corpus corpus = config.load_corpus();
    tw::ExperimentConfig cfg = config.experiment_config();
    std::optional<tw::Corpus> test;
    if (cfg.mode == tw::ExperimentConfig::Mode::FixedSplit) {
        test = config.load_test_corpus();
    }
    const tw::Corpus* test_ptr = test ? &*test : nullptr;

    tw::SweepResult result;
    if (!b0_spec.empty()) {
        std::vector<double> grid = tw::parse_b0_grid(b0_spec);
        if (grid.empty()) throw tw::ConfigError("--sweep-b0 grid is empty");
        result = tw::sweep_b0(cfg, corpus, test_ptr, grid);
    } else {
        std::vector<tw::ScalingId> ids = tw::parse_scaling_list(scaling_spec);
        if (ids.empty()) throw tw::ConfigError("--sweep-scaling list is empty");
        result = tw::sweep_scaling(cfg, corpus, test_ptr, ids);
    }

    fs::path out = config.out_dir();
    write_report(out / "sweep.tsv", tw::sweep_tsv(result));
    write_report(out / "sweep.json", tw::sweep_json(result, config.provenance()));

    std::size_t failed = 0;
    for (const tw::SweepRow& row : result.rows) {
        if (!row.ok) ++failed;
    }
    if (failed == result.rows.size()) {
        throw tw::DomainError("every sweep row failed");
    }
    if (failed > 0) {
        std::cout << failed << " of " << result.rows.size() << " sweep rows failed (flagged in the table)\n";
    }
    if (result.best) {
        std::cout << "best " << tw::to_string(cfg.metric) << " " << tw::format_double(result.rows[*result.best].metric)
                  << " at " << result.rows[*result.best].param << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"termweight: supervised term weighting and text categorization experiments"};
    app.require_subcommand(1);
    app.footer(config_keys_footer());

    CommonArgs vocab_args, train_args, eval_args, experiment_args, sweep_args;
    std::string model_dir;
    std::string sweep_b0_spec, sweep_scaling_spec;

    CLI::App* vocab = app.add_subcommand("vocab", "build and write the vocabulary");
    add_common_options(vocab, vocab_args);
    CLI::App* train = app.add_subcommand("train", "fit weighting and classifier, write model files");
    add_common_options(train, train_args);
    CLI::App* eval = app.add_subcommand("eval", "score a trained model on a test corpus");
    add_common_options(eval, eval_args);
    eval->add_option("--model-dir", model_dir, "directory containing the model files (default: out.dir)");
    CLI::App* experiment = app.add_subcommand("experiment", "run the configured protocol (cv or split)");
    add_common_options(experiment, experiment_args);
    CLI::App* sweep = app.add_subcommand("sweep", "run one experiment per axis value");
    add_common_options(sweep, sweep_args);
    sweep->add_option("--sweep-b0", sweep_b0_spec, "b0 grid, start:end:step or comma list");
    sweep->add_option("--sweep-scaling", sweep_scaling_spec, "scaling functions, e.g. f0..f7 or f2,f5");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*vocab) return cmd_vocab(resolve_config(vocab_args));
        if (*train) return cmd_train(resolve_config(train_args));
        if (*eval) return cmd_eval(resolve_config(eval_args), model_dir);
        if (*experiment) return cmd_experiment(resolve_config(experiment_args));
        if (*sweep) return cmd_sweep(resolve_config(sweep_args), sweep_b0_spec, sweep_scaling_spec);
    } catch (const tw::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const tw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
