#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace termweight {

enum class Label { Positive, Negative };

struct Document {
    std::string id;
    Label label = Label::Positive;
    std::string text;
};

// Immutable after construction; safe to share across concurrent readers.
struct Corpus {
    std::vector<Document> documents;
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;

    std::size_t size() const { return documents.size(); }
};

// Builds a corpus from documents, computing the class counts.
Corpus make_corpus(std::vector<Document> documents);

struct LabelTokens {
    std::string positive = "pos";
    std::string negative = "neg";
};

// Loads `label<TAB>text` lines (UTF-8, LF). Escapes "\t", "\n" and "\\"
// in the text field are decoded; document ids are "line-<n>" with n the
// 1-based file line number. Both classes must be non-empty.
Corpus load_tsv(const std::filesystem::path& path, const LabelTokens& labels = {});

// Loads `<root>/<pos-dir>/*` and `<root>/<neg-dir>/*`, one document per
// regular file, id = relative path. Positive class first, files in
// lexicographic order within each class.
Corpus load_class_dirs(const std::filesystem::path& root, const LabelTokens& dirs = {});

struct FoldAssignment {
    int k = 0;
    std::vector<int> fold_of; // per-document fold index in [0, k)
};

// Stratified k-fold assignment: each class is shuffled with a seeded
// generator and dealt round-robin, so per-fold class counts deviate from
// exact proportionality by at most one.
FoldAssignment stratified_folds(const Corpus& corpus, int k, std::uint64_t seed);

// Returns (train, test) for one fold; both preserve corpus order.
std::pair<Corpus, Corpus> split_fold(const Corpus& corpus, const FoldAssignment& folds, int fold);

// Stratified holdout: per class, round(fraction * class size) documents
// go to the held part. Deterministic per seed; train and held are
// disjoint and their union is the corpus.
std::pair<Corpus, Corpus> holdout_split(const Corpus& corpus, double fraction, std::uint64_t seed);

const char* to_string(Label label);

} // namespace termweight
