#include "termweight/cliconfig.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

#include "termweight/error.hpp"
#include "termweight/prng.hpp"
#include "termweight/textio.hpp"

namespace termweight {

namespace {

constexpr std::array<ConfigKey, 27> kRegistry{{
    {"data.corpus", "", "path to the corpus (TSV file or class-directory root)"},
    {"data.format", "tsv", "corpus layout: tsv | dirs"},
    {"data.test_corpus", "", "test corpus path for split mode and eval"},
    {"data.ngram_max", "1", "1 = unigrams, 2 = unigrams + bigrams"},
    {"data.min_count", "3", "vocabulary frequency cutoff (total occurrences)"},
    {"labels.positive", "pos", "positive label token in TSV corpora"},
    {"labels.negative", "neg", "negative label token in TSV corpora"},
    {"dirs.positive", "pos", "positive class subdirectory name (dirs format)"},
    {"dirs.negative", "neg", "negative class subdirectory name (dirs format)"},
    {"weighting.local", "tf", "local scheme: tf | tp | atf | ltf | btf"},
    {"weighting.atf_k", "0.5", "atf interpolation parameter k"},
    {"weighting.btf_k1", "1.2", "btf saturation parameter k1"},
    {"weighting.btf_b", "0.95", "btf length-normalization parameter b"},
    {"weighting.global", "no",
     "global scheme: no | idf | pidf | bidf | ig | gr | mi | mi_prime | chi | didf | dsidf | dsidf_legacy | dspidf "
     "| dbidf | rf | ne | re | scaled_x"},
    {"weighting.b0", "", "fixed bias term for re; empty = tune over weighting.b0_grid"},
    {"weighting.b0_grid", "0:1:0.1", "b0 tuning grid, start:end:step or comma list"},
    {"weighting.scaling", "f0", "scaling function for scaled_x: f0..f7"},
    {"weighting.normalize", "true", "cosine-normalize document vectors"},
    {"svm.C", "1", "SVM regularization trade-off"},
    {"svm.tol", "0.1", "SVM stopping tolerance on the projected gradient"},
    {"svm.max_iter", "1000", "SVM outer-pass cap"},
    {"eval.mode", "cv", "evaluation protocol: cv | split"},
    {"eval.folds", "10", "fold count for cross-validation"},
    {"eval.metric", "accuracy", "reported metric: accuracy | f1"},
    {"tune.holdout", "0.2", "held-out fraction of the training data for b0 tuning"},
    {"seed", "1", "seed for folds, splits and the SVM permutation"},
    {"out.dir", "out", "output directory"},
}};

bool known_key(std::string_view key) {
    return std::any_of(kRegistry.begin(), kRegistry.end(), [&](const ConfigKey& k) { return k.name == key; });
}

std::string_view trim(std::string_view text) {
    std::size_t begin = text.find_first_not_of(" \t");
    if (begin == std::string_view::npos) return {};
    std::size_t end = text.find_last_not_of(" \t");
    return text.substr(begin, end - begin + 1);
}

std::uint64_t to_uint(std::string_view value, std::string_view key) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ConfigError("key '" + std::string(key) + "': invalid integer '" + std::string(value) + "'");
    }
    return out;
}

double to_double(std::string_view value, std::string_view key) {
    try {
        return parse_double(value, key);
    } catch (const FormatError& err) {
        throw ConfigError("key '" + std::string(key) + "': invalid number '" + std::string(value) + "'");
    }
}

bool to_bool(std::string_view value, std::string_view key) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("key '" + std::string(key) + "': expected true or false, got '" + std::string(value) + "'");
}

} // namespace

std::map<std::string, std::string> parse_keyval(std::string_view text) {
    std::map<std::string, std::string> out;
    std::size_t line_no = 0;
    for (std::string_view line : split_lines(text)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw FormatError("config line " + std::to_string(line_no) + ": expected key = value");
        }
        std::string key(trim(line.substr(0, eq)));
        if (key.empty()) {
            throw FormatError("config line " + std::to_string(line_no) + ": empty key");
        }
        out[key] = std::string(trim(line.substr(eq + 1)));
    }
    return out;
}

std::span<const ConfigKey> config_registry() {
    return kRegistry;
}

CliConfig::CliConfig() {
    for (const ConfigKey& key : kRegistry) {
        values_[std::string(key.name)] = std::string(key.default_value);
    }
}

void CliConfig::apply(const std::map<std::string, std::string>& values) {
    for (const auto& [key, value] : values) {
        if (!known_key(key)) {
            throw ConfigError("unknown config key '" + key + "'");
        }
        values_[key] = value;
    }
}

void CliConfig::apply_override(const std::string& key, const std::string& value) {
    if (!known_key(key)) {
        throw ConfigError("unknown config key '" + key + "'");
    }
    values_[key] = value;
}

const std::string& CliConfig::get(std::string_view key) const {
    auto it = values_.find(std::string(key));
    if (it == values_.end()) {
        throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
    return it->second;
}

ExperimentConfig CliConfig::experiment_config() const {
    ExperimentConfig cfg;
    cfg.ngram_max = static_cast<int>(to_uint(get("data.ngram_max"), "data.ngram_max"));
    if (cfg.ngram_max != 1 && cfg.ngram_max != 2) {
        throw ConfigError("data.ngram_max must be 1 or 2");
    }
    cfg.min_count = to_uint(get("data.min_count"), "data.min_count");
    if (cfg.min_count < 1) throw ConfigError("data.min_count must be at least 1");

    cfg.local.id = parse_local_id(get("weighting.local"));
    cfg.local.k = to_double(get("weighting.atf_k"), "weighting.atf_k");
    if (!(cfg.local.k >= 0.0 && cfg.local.k <= 1.0)) throw ConfigError("weighting.atf_k must lie in [0,1]");
    cfg.local.k1 = to_double(get("weighting.btf_k1"), "weighting.btf_k1");
    if (!(cfg.local.k1 > 0.0)) throw ConfigError("weighting.btf_k1 must be positive");
    cfg.local.b = to_double(get("weighting.btf_b"), "weighting.btf_b");
    if (!(cfg.local.b >= 0.0 && cfg.local.b <= 1.0)) throw ConfigError("weighting.btf_b must lie in [0,1]");

    cfg.global.id = parse_global_id(get("weighting.global"));
    cfg.global.scaling = parse_scaling_id(get("weighting.scaling"));
    cfg.b0_grid = parse_b0_grid(get("weighting.b0_grid"));
    const std::string& b0 = get("weighting.b0");
    if (b0.empty()) {
        cfg.tune_bias = cfg.global.id == GlobalId::Re && !cfg.b0_grid.empty();
    } else {
        cfg.global.b0 = to_double(b0, "weighting.b0");
        if (!(cfg.global.b0 >= 0.0 && cfg.global.b0 <= 1.0)) throw ConfigError("weighting.b0 must lie in [0,1]");
        cfg.tune_bias = false;
    }

    cfg.normalize = to_bool(get("weighting.normalize"), "weighting.normalize");
    cfg.svm.C = to_double(get("svm.C"), "svm.C");
    if (!(cfg.svm.C > 0.0)) throw ConfigError("svm.C must be positive");
    cfg.svm.tol = to_double(get("svm.tol"), "svm.tol");
    if (!(cfg.svm.tol > 0.0)) throw ConfigError("svm.tol must be positive");
    cfg.svm.max_iter = static_cast<int>(to_uint(get("svm.max_iter"), "svm.max_iter"));
    if (cfg.svm.max_iter < 1) throw ConfigError("svm.max_iter must be at least 1");

    const std::string& mode = get("eval.mode");
    if (mode == "cv") cfg.mode = ExperimentConfig::Mode::CrossVal;
    else if (mode == "split") cfg.mode = ExperimentConfig::Mode::FixedSplit;
    else throw ConfigError("eval.mode must be 'cv' or 'split', got '" + mode + "'");
    cfg.folds = static_cast<int>(to_uint(get("eval.folds"), "eval.folds"));
    if (cfg.folds < 2) throw ConfigError("eval.folds must be at least 2");
    cfg.metric = parse_metric(get("eval.metric"));
    cfg.tune_holdout = to_double(get("tune.holdout"), "tune.holdout");
    if (!(cfg.tune_holdout > 0.0 && cfg.tune_holdout < 1.0)) {
        throw ConfigError("tune.holdout must lie in (0,1)");
    }
    cfg.seed = to_uint(get("seed"), "seed");
    cfg.svm.seed = derive_seed(cfg.seed, 0x5f5eULL); // SVM permutation stream
    return cfg;
}

LabelTokens CliConfig::label_tokens() const {
    return LabelTokens{get("labels.positive"), get("labels.negative")};
}

LabelTokens CliConfig::dir_names() const {
    return LabelTokens{get("dirs.positive"), get("dirs.negative")};
}

std::filesystem::path CliConfig::corpus_path() const {
    const std::string& path = get("data.corpus");
    if (path.empty()) {
        throw ConfigError("data.corpus is required");
    }
    return path;
}

std::filesystem::path CliConfig::test_corpus_path() const {
    return get("data.test_corpus");
}

std::string CliConfig::corpus_format() const {
    const std::string& format = get("data.format");
    if (format != "tsv" && format != "dirs") {
        throw ConfigError("data.format must be 'tsv' or 'dirs', got '" + format + "'");
    }
    return format;
}

std::filesystem::path CliConfig::out_dir() const {
    return get("out.dir");
}

Corpus CliConfig::load_corpus() const {
    if (corpus_format() == "tsv") return load_tsv(corpus_path(), label_tokens());
    return load_class_dirs(corpus_path(), dir_names());
}

Corpus CliConfig::load_test_corpus() const {
    std::filesystem::path path = test_corpus_path();
    if (path.empty()) {
        throw ConfigError("data.test_corpus is required for this command");
    }
    if (corpus_format() == "tsv") return load_tsv(path, label_tokens());
    return load_class_dirs(path, dir_names());
}

std::vector<std::pair<std::string, std::string>> CliConfig::provenance() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const ConfigKey& key : kRegistry) {
        out.emplace_back(std::string(key.name), get(key.name));
    }
    return out;
}

namespace {

// Plain decimal as integer units at a fixed scale, so range grids land
// exactly on the decimals the user wrote (no step accumulation error).
struct Decimal {
    std::int64_t units = 0;
    int decimals = 0;
};

Decimal parse_plain_decimal(std::string_view text, std::string_view what) {
    Decimal out;
    std::size_t pos = 0;
    bool any_digit = false;
    bool seen_dot = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    const bool negative = !text.empty() && text[0] == '-';
    for (; pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (ch == '.') {
            if (seen_dot) break;
            seen_dot = true;
            continue;
        }
        if (ch < '0' || ch > '9') break;
        any_digit = true;
        out.units = out.units * 10 + (ch - '0');
        if (seen_dot) ++out.decimals;
        if (out.decimals > 15) break;
    }
    if (!any_digit || pos != text.size()) {
        throw ConfigError("grid " + std::string(what) + " must be a plain decimal, got '" + std::string(text) + "'");
    }
    if (negative) out.units = -out.units;
    return out;
}

std::int64_t rescale(const Decimal& value, int decimals) {
    std::int64_t units = value.units;
    for (int i = value.decimals; i < decimals; ++i) units *= 10;
    return units;
}

} // namespace

std::vector<double> parse_b0_grid(std::string_view spec) {
    std::vector<double> grid;
    std::string_view trimmed = trim(spec);
    if (trimmed.empty()) return grid;
    if (trimmed.find(':') != std::string_view::npos) {
        auto parts = split(trimmed, ':');
        if (parts.size() != 3) {
            throw ConfigError("grid spec must be start:end:step, got '" + std::string(spec) + "'");
        }
        const Decimal start = parse_plain_decimal(trim(parts[0]), "start");
        const Decimal end = parse_plain_decimal(trim(parts[1]), "end");
        const Decimal step = parse_plain_decimal(trim(parts[2]), "step");
        const int decimals = std::max({start.decimals, end.decimals, step.decimals});
        double scale = 1.0;
        for (int i = 0; i < decimals; ++i) scale *= 10.0;
        const std::int64_t step_units = rescale(step, decimals);
        const std::int64_t end_units = rescale(end, decimals);
        if (step_units <= 0 || end_units < rescale(start, decimals)) {
            throw ConfigError("grid spec must have positive step and end >= start");
        }
        for (std::int64_t units = rescale(start, decimals); units <= end_units; units += step_units) {
            grid.push_back(static_cast<double>(units) / scale);
        }
    } else {
        for (std::string_view part : split(trimmed, ',')) {
            grid.push_back(to_double(trim(part), "grid value"));
        }
    }
    for (double value : grid) {
        if (!(value >= 0.0 && value <= 1.0)) {
            throw ConfigError("b0 grid values must lie in [0,1], got " + format_double(value));
        }
    }
    return grid;
}

std::vector<ScalingId> parse_scaling_list(std::string_view spec) {
    std::string_view trimmed = trim(spec);
    std::vector<ScalingId> ids;
    std::size_t range = trimmed.find("..");
    if (range != std::string_view::npos) {
        const ScalingId first = parse_scaling_id(trim(trimmed.substr(0, range)));
        const ScalingId last = parse_scaling_id(trim(trimmed.substr(range + 2)));
        if (static_cast<int>(last) < static_cast<int>(first)) {
            throw ConfigError("scaling range is reversed: '" + std::string(spec) + "'");
        }
        for (int i = static_cast<int>(first); i <= static_cast<int>(last); ++i) {
            ids.push_back(static_cast<ScalingId>(i));
        }
        return ids;
    }
    for (std::string_view part : split(trimmed, ',')) {
        ids.push_back(parse_scaling_id(trim(part)));
    }
    return ids;
}

} // namespace termweight
