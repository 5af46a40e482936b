#include "termweight/corpus.hpp"

#include <algorithm>
#include <cmath>

#include "termweight/error.hpp"
#include "termweight/prng.hpp"
#include "termweight/textio.hpp"

namespace termweight {

namespace {

std::string unescape_text(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        char ch = raw[i];
        if (ch == '\\' && i + 1 < raw.size()) {
            char next = raw[i + 1];
            if (next == 't') { out.push_back('\t'); ++i; continue; }
            if (next == 'n') { out.push_back('\n'); ++i; continue; }
            if (next == '\\') { out.push_back('\\'); ++i; continue; }
        }
        out.push_back(ch);
    }
    return out;
}

void require_both_classes(const Corpus& corpus, const std::string& origin) {
    if (corpus.documents.empty()) {
        throw FormatError("empty corpus: " + origin);
    }
    if (corpus.n_pos == 0) {
        throw FormatError("no documents in positive class: " + origin);
    }
    if (corpus.n_neg == 0) {
        throw FormatError("no documents in negative class: " + origin);
    }
}

// Indices of one class, in corpus order.
std::vector<std::size_t> class_indices(const Corpus& corpus, Label label) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
        if (corpus.documents[i].label == label) out.push_back(i);
    }
    return out;
}

Corpus select(const Corpus& corpus, const std::vector<bool>& keep) {
    std::vector<Document> docs;
    for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
        if (keep[i]) docs.push_back(corpus.documents[i]);
    }
    return make_corpus(std::move(docs));
}

} // namespace

Corpus make_corpus(std::vector<Document> documents) {
    Corpus corpus;
    corpus.documents = std::move(documents);
    for (const Document& doc : corpus.documents) {
        if (doc.label == Label::Positive) ++corpus.n_pos;
        else ++corpus.n_neg;
    }
    return corpus;
}

Corpus load_tsv(const std::filesystem::path& path, const LabelTokens& labels) {
    std::string content = read_file(path);
    std::vector<Document> docs;
    std::size_t line_no = 0;
    for (std::string_view line : split_lines(content)) {
        ++line_no;
        if (line.empty()) continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos) {
            throw FormatError(path.string() + ": line " + std::to_string(line_no) + ": missing tab separator");
        }
        std::string_view token = line.substr(0, tab);
        Label label;
        if (token == labels.positive) {
            label = Label::Positive;
        } else if (token == labels.negative) {
            label = Label::Negative;
        } else {
            throw FormatError(path.string() + ": line " + std::to_string(line_no) +
                              ": unknown label token '" + std::string(token) + "'");
        }
        docs.push_back(Document{"line-" + std::to_string(line_no), label, unescape_text(line.substr(tab + 1))});
    }
    Corpus corpus = make_corpus(std::move(docs));
    require_both_classes(corpus, path.string());
    return corpus;
}

Corpus load_class_dirs(const std::filesystem::path& root, const LabelTokens& dirs) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(root)) {
        throw IoError("corpus root is not a directory: " + root.string());
    }
    std::vector<Document> docs;
    auto load_class = [&](const std::string& dir_name, Label label) {
        fs::path dir = root / dir_name;
        if (!fs::is_directory(dir)) {
            throw IoError("missing class directory: " + dir.string());
        }
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.is_regular_file()) files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end(),
                  [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });
        for (const fs::path& file : files) {
            docs.push_back(Document{dir_name + "/" + file.filename().string(), label, read_file(file)});
        }
    };
    load_class(dirs.positive, Label::Positive);
    load_class(dirs.negative, Label::Negative);
    Corpus corpus = make_corpus(std::move(docs));
    require_both_classes(corpus, root.string());
    return corpus;
}

FoldAssignment stratified_folds(const Corpus& corpus, int k, std::uint64_t seed) {
    if (k < 2) {
        throw DomainError("fold count must be at least 2, got " + std::to_string(k));
    }
    std::size_t smaller = std::min(corpus.n_pos, corpus.n_neg);
    if (static_cast<std::size_t>(k) > smaller) {
        throw DomainError("fold count " + std::to_string(k) + " exceeds smaller class size " +
                          std::to_string(smaller));
    }
    FoldAssignment assignment;
    assignment.k = k;
    assignment.fold_of.assign(corpus.documents.size(), 0);
    int class_idx = 0;
    for (Label label : {Label::Positive, Label::Negative}) {
        std::vector<std::size_t> indices = class_indices(corpus, label);
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(class_idx)));
        shuffle_vector(indices, rng);
        for (std::size_t pos = 0; pos < indices.size(); ++pos) {
            assignment.fold_of[indices[pos]] = static_cast<int>(pos % static_cast<std::size_t>(k));
        }
        ++class_idx;
    }
    return assignment;
}

std::pair<Corpus, Corpus> split_fold(const Corpus& corpus, const FoldAssignment& folds, int fold) {
    if (folds.fold_of.size() != corpus.documents.size()) {
        throw DomainError("fold assignment does not match corpus size");
    }
    std::vector<bool> held(corpus.documents.size(), false);
    for (std::size_t i = 0; i < held.size(); ++i) {
        held[i] = folds.fold_of[i] == fold;
    }
    std::vector<bool> kept(held.size());
    for (std::size_t i = 0; i < held.size(); ++i) kept[i] = !held[i];
    return {select(corpus, kept), select(corpus, held)};
}

std::pair<Corpus, Corpus> holdout_split(const Corpus& corpus, double fraction, std::uint64_t seed) {
    if (!(fraction > 0.0 && fraction < 1.0)) {
        throw DomainError("holdout fraction must lie in (0,1), got " + format_double(fraction));
    }
    std::vector<bool> held(corpus.documents.size(), false);
    int class_idx = 0;
    for (Label label : {Label::Positive, Label::Negative}) {
        std::vector<std::size_t> indices = class_indices(corpus, label);
        std::size_t take = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(indices.size())));
        if (take == 0 || take >= indices.size()) {
            throw DomainError("holdout fraction " + format_double(fraction) + " leaves an empty " +
                              to_string(label) + " class on one side");
        }
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(class_idx)));
        shuffle_vector(indices, rng);
        for (std::size_t pos = 0; pos < take; ++pos) held[indices[pos]] = true;
        ++class_idx;
    }
    std::vector<bool> kept(held.size());
    for (std::size_t i = 0; i < held.size(); ++i) kept[i] = !held[i];
    return {select(corpus, kept), select(corpus, held)};
}

const char* to_string(Label label) {
    return label == Label::Positive ? "positive" : "negative";
}

} // namespace termweight
