#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "termweight/corpus.hpp"
#include "termweight/evaluation.hpp"

namespace termweight {

// Parses flat `key = value` text. '#' starts a comment; blank lines are
// ignored. Later assignments win. Throws FormatError with line numbers.
std::map<std::string, std::string> parse_keyval(std::string_view text);

struct ConfigKey {
    std::string_view name;
    std::string_view default_value;
    std::string_view help;
};

// Every configuration key with its documented default.
std::span<const ConfigKey> config_registry();

// Flat key-value view of a full run configuration. Unknown keys are
// rejected; precedence is overrides > file values > defaults.
class CliConfig {
public:
    // Starts from the documented defaults.
    CliConfig();

    void apply(const std::map<std::string, std::string>& values);         // from a config file
    void apply_override(const std::string& key, const std::string& value); // from a flag

    const std::string& get(std::string_view key) const;
    const std::map<std::string, std::string>& values() const { return values_; }

    // Typed views, validated on access.
    ExperimentConfig experiment_config() const;
    LabelTokens label_tokens() const;
    LabelTokens dir_names() const;
    std::filesystem::path corpus_path() const;      // data.corpus, required
    std::filesystem::path test_corpus_path() const; // data.test_corpus, may be empty
    std::string corpus_format() const;              // "tsv" | "dirs"
    std::filesystem::path out_dir() const;

    // Loads data.corpus (respecting data.format) or data.test_corpus.
    Corpus load_corpus() const;
    Corpus load_test_corpus() const;

    // Dotted key/value pairs for provenance blocks, in registry order.
    std::vector<std::pair<std::string, std::string>> provenance() const;

private:
    std::map<std::string, std::string> values_;
};

// Parses "start:end:step" or a comma-separated list of values in [0,1].
std::vector<double> parse_b0_grid(std::string_view spec);

// Parses "f0..f7" ranges or comma-separated scaling ids.
std::vector<ScalingId> parse_scaling_list(std::string_view spec);

} // namespace termweight
