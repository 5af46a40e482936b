#include "termweight/serialize.hpp"

#include <charconv>

#include "termweight/error.hpp"
#include "termweight/textio.hpp"

namespace termweight {

namespace {

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw FormatError("invalid integer for " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> fields_of(std::string_view line, std::size_t expected, std::string_view what,
                                        std::size_t line_no) {
    std::vector<std::string_view> fields = split(line, '\t');
    if (fields.size() != expected) {
        throw FormatError(std::string(what) + ": line " + std::to_string(line_no) + ": expected " +
                          std::to_string(expected) + " tab-separated fields, got " + std::to_string(fields.size()));
    }
    return fields;
}

} // namespace

std::string serialize_vocabulary(const Vocabulary& vocab) {
    std::string out;
    out += "# ngram_max=" + std::to_string(vocab.ngram_max()) + " min_count=" + std::to_string(vocab.min_count()) +
           "\n";
    for (std::size_t i = 0; i < vocab.size(); ++i) {
        const FeatureKey& key = vocab.at(static_cast<std::uint32_t>(i));
        out += std::to_string(i);
        out += '\t';
        out += key.kind == FeatureKind::Unigram ? "uni" : "bi";
        out += '\t';
        out += key.text;
        out += '\n';
    }
    return out;
}

Vocabulary parse_vocabulary(std::string_view text) {
    std::vector<std::string_view> lines = split_lines(text);
    if (lines.empty()) {
        throw FormatError("vocabulary: empty file");
    }
    int ngram_max = 1;
    std::size_t min_count = 1;
    std::size_t start = 0;
    if (!lines[0].empty() && lines[0][0] == '#') {
        for (std::string_view part : split(lines[0].substr(1), ' ')) {
            if (part.starts_with("ngram_max=")) ngram_max = static_cast<int>(parse_uint(part.substr(10), "ngram_max"));
            else if (part.starts_with("min_count=")) min_count = parse_uint(part.substr(10), "min_count");
        }
        start = 1;
    }
    std::vector<FeatureKey> entries;
    for (std::size_t i = start; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto fields = fields_of(lines[i], 3, "vocabulary", i + 1);
        const std::uint64_t index = parse_uint(fields[0], "vocabulary index");
        if (index != entries.size()) {
            throw FormatError("vocabulary: line " + std::to_string(i + 1) + ": index " + std::to_string(index) +
                              " is not dense (expected " + std::to_string(entries.size()) + ")");
        }
        FeatureKind kind;
        if (fields[1] == "uni") kind = FeatureKind::Unigram;
        else if (fields[1] == "bi") kind = FeatureKind::Bigram;
        else throw FormatError("vocabulary: line " + std::to_string(i + 1) + ": unknown kind '" +
                               std::string(fields[1]) + "'");
        entries.push_back(FeatureKey{kind, std::string(fields[2])});
    }
    return Vocabulary(std::move(entries), min_count, ngram_max);
}

std::string serialize_weight_model(const WeightModel& wm, const GlobalScheme& global) {
    std::string out;
    out += std::string("local\t") + to_string(wm.local.id) + "\t" + format_double(wm.local.k) + "\t" +
           format_double(wm.local.k1) + "\t" + format_double(wm.local.b) + "\n";
    out += std::string("global\t") + to_string(global.id) + "\t" + format_double(global.b0) + "\t" +
           to_string(global.scaling) + "\n";
    out += std::string("normalize\t") + (wm.normalize ? "1" : "0") + "\n";
    out += "stats\t" + std::to_string(wm.stats.n_docs) + "\t" + std::to_string(wm.stats.n_pos) + "\t" +
           std::to_string(wm.stats.n_neg) + "\t" + format_double(wm.stats.avg_dl) + "\n";
    out += "terms\t" + std::to_string(wm.global_weights.size()) + "\n";
    for (std::size_t i = 0; i < wm.global_weights.size(); ++i) {
        out += std::to_string(i);
        out += '\t';
        out += format_double(wm.global_weights[i]);
        out += '\n';
    }
    return out;
}

std::pair<WeightModel, GlobalScheme> parse_weight_model(std::string_view text) {
    std::vector<std::string_view> lines = split_lines(text);
    if (lines.size() < 5) {
        throw FormatError("weight model: truncated header");
    }
    WeightModel wm;
    GlobalScheme global;

    auto local_fields = fields_of(lines[0], 5, "weight model", 1);
    if (local_fields[0] != "local") throw FormatError("weight model: line 1 must start with 'local'");
    wm.local.id = parse_local_id(local_fields[1]);
    wm.local.k = parse_double(local_fields[2], "local k");
    wm.local.k1 = parse_double(local_fields[3], "local k1");
    wm.local.b = parse_double(local_fields[4], "local b");
    validate_local_scheme(wm.local);

    auto global_fields = fields_of(lines[1], 4, "weight model", 2);
    if (global_fields[0] != "global") throw FormatError("weight model: line 2 must start with 'global'");
    global.id = parse_global_id(global_fields[1]);
    global.b0 = parse_double(global_fields[2], "global b0");
    global.scaling = parse_scaling_id(global_fields[3]);

    auto norm_fields = fields_of(lines[2], 2, "weight model", 3);
    if (norm_fields[0] != "normalize") throw FormatError("weight model: line 3 must start with 'normalize'");
    wm.normalize = norm_fields[1] == "1";

    auto stats_fields = fields_of(lines[3], 5, "weight model", 4);
    if (stats_fields[0] != "stats") throw FormatError("weight model: line 4 must start with 'stats'");
    wm.stats.n_docs = parse_uint(stats_fields[1], "stats N");
    wm.stats.n_pos = parse_uint(stats_fields[2], "stats N+");
    wm.stats.n_neg = parse_uint(stats_fields[3], "stats N-");
    wm.stats.avg_dl = parse_double(stats_fields[4], "stats avg_dl");

    auto terms_fields = fields_of(lines[4], 2, "weight model", 5);
    if (terms_fields[0] != "terms") throw FormatError("weight model: line 5 must start with 'terms'");
    const std::uint64_t n_terms = parse_uint(terms_fields[1], "term count");

    wm.global_weights.reserve(n_terms);
    for (std::size_t i = 5; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto fields = fields_of(lines[i], 2, "weight model", i + 1);
        const std::uint64_t index = parse_uint(fields[0], "term index");
        if (index != wm.global_weights.size()) {
            throw FormatError("weight model: line " + std::to_string(i + 1) + ": term index " +
                              std::to_string(index) + " is not dense");
        }
        wm.global_weights.push_back(parse_double(fields[1], "global weight"));
    }
    if (wm.global_weights.size() != n_terms) {
        throw FormatError("weight model: header declares " + std::to_string(n_terms) + " terms, found " +
                          std::to_string(wm.global_weights.size()));
    }
    return {std::move(wm), global};
}

std::string serialize_linear_model(const LinearModel& model) {
    std::string out;
    out += "dim\t" + std::to_string(model.w.size()) + "\n";
    for (std::size_t i = 0; i < model.w.size(); ++i) {
        if (model.w[i] == 0.0) continue;
        out += std::to_string(i);
        out += '\t';
        out += format_double(model.w[i]);
        out += '\n';
    }
    return out;
}

LinearModel parse_linear_model(std::string_view text) {
    std::vector<std::string_view> lines = split_lines(text);
    if (lines.empty()) {
        throw FormatError("linear model: empty file");
    }
    auto dim_fields = fields_of(lines[0], 2, "linear model", 1);
    if (dim_fields[0] != "dim") throw FormatError("linear model: line 1 must start with 'dim'");
    const std::uint64_t dim = parse_uint(dim_fields[1], "dim");
    LinearModel model;
    model.w.assign(dim, 0.0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto fields = fields_of(lines[i], 2, "linear model", i + 1);
        const std::uint64_t index = parse_uint(fields[0], "weight index");
        if (index >= dim) {
            throw FormatError("linear model: line " + std::to_string(i + 1) + ": index " + std::to_string(index) +
                              " out of range for dim " + std::to_string(dim));
        }
        model.w[index] = parse_double(fields[1], "weight");
    }
    return model;
}

} // namespace termweight
