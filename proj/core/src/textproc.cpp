#include "termweight/textproc.hpp"

#include <algorithm>
#include <map>

#include "termweight/error.hpp"

namespace termweight {

namespace {

inline bool is_ascii_alnum(unsigned char ch) {
    return (ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z');
}

// Word characters: ASCII alphanumerics plus any byte >= 0x80 (keeps
// multi-byte UTF-8 sequences together).
inline bool is_word_char(unsigned char ch) {
    return is_ascii_alnum(ch) || ch >= 0x80;
}

inline char fold_case(unsigned char ch) {
    if (ch >= 'A' && ch <= 'Z') return static_cast<char>(ch - 'A' + 'a');
    return static_cast<char>(ch);
}

} // namespace

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&]() {
        // Strip leading/trailing apostrophes; embedded ones stay.
        std::size_t begin = current.find_first_not_of('\'');
        if (begin == std::string::npos) {
            current.clear();
            return;
        }
        std::size_t end = current.find_last_not_of('\'');
        tokens.push_back(current.substr(begin, end - begin + 1));
        current.clear();
    };
    for (char raw : text) {
        unsigned char ch = static_cast<unsigned char>(raw);
        if (is_word_char(ch) || ch == '\'') {
            current.push_back(fold_case(ch));
        } else if (!current.empty()) {
            flush();
        }
    }
    if (!current.empty()) flush();
    return tokens;
}

std::vector<FeatureKey> extract_features(std::span<const std::string> tokens, int ngram_max) {
    if (ngram_max != 1 && ngram_max != 2) {
        throw ConfigError("ngram_max must be 1 or 2, got " + std::to_string(ngram_max));
    }
    std::vector<FeatureKey> features;
    features.reserve(ngram_max == 2 && tokens.size() > 1 ? tokens.size() * 2 - 1 : tokens.size());
    for (const std::string& token : tokens) {
        features.push_back(FeatureKey::unigram(token));
    }
    if (ngram_max == 2) {
        for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
            features.push_back(FeatureKey::bigram(tokens[i], tokens[i + 1]));
        }
    }
    return features;
}

Vocabulary::Vocabulary(std::vector<FeatureKey> sorted_entries, std::size_t min_count, int ngram_max)
    : entries_(std::move(sorted_entries)), min_count_(min_count), ngram_max_(ngram_max) {
    by_text_.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        auto [it, inserted] = by_text_.emplace(entries_[i].text, static_cast<std::uint32_t>(i));
        if (!inserted) {
            throw FormatError("duplicate vocabulary entry: '" + entries_[i].text + "'");
        }
    }
}

Vocabulary build_vocabulary(std::span<const TokenizedDoc> train_docs, std::size_t min_count, int ngram_max) {
    if (min_count < 1) {
        throw ConfigError("min_count must be at least 1, got " + std::to_string(min_count));
    }
    std::unordered_map<std::string, std::uint64_t> counts;
    for (const TokenizedDoc& doc : train_docs) {
        for (const FeatureKey& key : doc.features) {
            ++counts[key.text];
        }
    }
    std::vector<FeatureKey> kept;
    for (const auto& [text, count] : counts) {
        if (count >= min_count) {
            FeatureKind kind = text.find(' ') == std::string::npos ? FeatureKind::Unigram : FeatureKind::Bigram;
            kept.push_back(FeatureKey{kind, text});
        }
    }
    std::sort(kept.begin(), kept.end());
    if (kept.empty()) {
        throw DomainError("empty vocabulary: no feature occurs at least " + std::to_string(min_count) + " times");
    }
    return Vocabulary(std::move(kept), min_count, ngram_max);
}

CountedDoc count_document(const TokenizedDoc& doc, const Vocabulary& vocab) {
    CountedDoc counted;
    counted.doc_id = doc.doc_id;
    counted.dl = doc.dl;
    std::map<std::uint32_t, std::uint32_t> counts;
    for (const FeatureKey& key : doc.features) {
        if (auto index = vocab.index_of(key)) {
            ++counts[*index];
        }
    }
    counted.tf.assign(counts.begin(), counts.end());
    for (const auto& [index, tf] : counted.tf) {
        counted.max_tf = std::max(counted.max_tf, tf);
    }
    return counted;
}

std::vector<TokenizedDoc> tokenize_corpus(const Corpus& corpus, int ngram_max) {
    std::vector<TokenizedDoc> out;
    out.reserve(corpus.documents.size());
    for (const Document& doc : corpus.documents) {
        std::vector<std::string> tokens = tokenize(doc.text);
        TokenizedDoc tokenized;
        tokenized.doc_id = doc.id;
        tokenized.dl = static_cast<std::uint32_t>(tokens.size());
        tokenized.features = extract_features(tokens, ngram_max);
        out.push_back(std::move(tokenized));
    }
    return out;
}

std::vector<CountedDoc> count_corpus(const Corpus& corpus, std::span<const TokenizedDoc> tokenized,
                                     const Vocabulary& vocab) {
    if (corpus.documents.size() != tokenized.size()) {
        throw DomainError("tokenized document count does not match corpus size");
    }
    std::vector<CountedDoc> out;
    out.reserve(tokenized.size());
    for (std::size_t i = 0; i < tokenized.size(); ++i) {
        CountedDoc counted = count_document(tokenized[i], vocab);
        counted.label = corpus.documents[i].label;
        out.push_back(std::move(counted));
    }
    return out;
}

} // namespace termweight
