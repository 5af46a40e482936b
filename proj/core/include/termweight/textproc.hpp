#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "termweight/corpus.hpp"

namespace termweight {

enum class FeatureKind { Unigram, Bigram };

// A unigram or bigram feature. Bigram tokens are joined with a single
// space; tokens themselves never contain whitespace, so the text field
// is unambiguous.
struct FeatureKey {
    FeatureKind kind = FeatureKind::Unigram;
    std::string text;

    static FeatureKey unigram(std::string token) {
        return FeatureKey{FeatureKind::Unigram, std::move(token)};
    }
    static FeatureKey bigram(std::string_view first, std::string_view second) {
        std::string joined;
        joined.reserve(first.size() + second.size() + 1);
        joined.append(first);
        joined.push_back(' ');
        joined.append(second);
        return FeatureKey{FeatureKind::Bigram, std::move(joined)};
    }

    friend bool operator==(const FeatureKey&, const FeatureKey&) = default;
    friend std::strong_ordering operator<=>(const FeatureKey& lhs, const FeatureKey& rhs) {
        if (lhs.kind != rhs.kind) {
            return lhs.kind == FeatureKind::Unigram ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return lhs.text.compare(rhs.text) <=> 0;
    }
};

struct TokenizedDoc {
    std::string doc_id;
    std::vector<FeatureKey> features; // unigrams in order, then bigrams in order
    std::uint32_t dl = 0;             // unigram token count
};

// Lowercased word tokens. A token is a maximal run of alphanumeric
// characters with embedded apostrophes; leading and trailing apostrophes
// are stripped. Case folding is ASCII-only; bytes >= 0x80 are treated as
// word characters and copied through, so multi-byte UTF-8 sequences stay
// intact.
std::vector<std::string> tokenize(std::string_view text);

// All unigrams in order; with ngram_max = 2 additionally every adjacent
// token pair of the document stream.
std::vector<FeatureKey> extract_features(std::span<const std::string> tokens, int ngram_max);

class Vocabulary {
public:
    Vocabulary() = default;
    Vocabulary(std::vector<FeatureKey> sorted_entries, std::size_t min_count, int ngram_max);

    std::size_t size() const { return entries_.size(); }
    std::size_t min_count() const { return min_count_; }
    int ngram_max() const { return ngram_max_; }
    const FeatureKey& at(std::uint32_t index) const { return entries_.at(index); }
    const std::vector<FeatureKey>& entries() const { return entries_; }

    std::optional<std::uint32_t> index_of(const FeatureKey& key) const {
        auto it = by_text_.find(key.text);
        if (it == by_text_.end()) return std::nullopt;
        return it->second;
    }

private:
    std::vector<FeatureKey> entries_; // lexicographic (kind, text), index = position
    std::unordered_map<std::string, std::uint32_t> by_text_;
    std::size_t min_count_ = 0;
    int ngram_max_ = 1;
};

// Features whose total occurrence count over the training documents is
// at least min_count, indexed lexicographically (unigrams first).
// min_count is a term-frequency threshold, not a document-frequency one.
Vocabulary build_vocabulary(std::span<const TokenizedDoc> train_docs, std::size_t min_count, int ngram_max);

struct CountedDoc {
    std::string doc_id;
    Label label = Label::Positive;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tf; // (vocab index, raw tf), index-sorted
    std::uint32_t max_tf = 0; // max tf over in-vocabulary features
    std::uint32_t dl = 0;     // unigram token count, including out-of-vocabulary tokens
};

// In-vocabulary raw term frequencies; out-of-vocabulary features are
// silently dropped.
CountedDoc count_document(const TokenizedDoc& doc, const Vocabulary& vocab);

std::vector<TokenizedDoc> tokenize_corpus(const Corpus& corpus, int ngram_max);

// count_document over a corpus, carrying each document's label along.
std::vector<CountedDoc> count_corpus(const Corpus& corpus, std::span<const TokenizedDoc> tokenized,
                                     const Vocabulary& vocab);

} // namespace termweight
