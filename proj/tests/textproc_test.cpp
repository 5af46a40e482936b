#include <doctest.h>

#include <map>
#include <numeric>

#include "termweight/error.hpp"
#include "termweight/textproc.hpp"

using namespace termweight;

namespace {

TokenizedDoc tokenized(const std::string& id, const std::string& text, int ngram_max = 1) {
    std::vector<std::string> tokens = tokenize(text);
    TokenizedDoc doc;
    doc.doc_id = id;
    doc.dl = static_cast<std::uint32_t>(tokens.size());
    doc.features = extract_features(tokens, ngram_max);
    return doc;
}

std::string join(const std::vector<std::string>& tokens) {
    std::string out;
    for (const std::string& token : tokens) {
        if (!out.empty()) out += ' ';
        out += token;
    }
    return out;
}

} // namespace

TEST_CASE("tokenize lowercases and splits on punctuation") {
    CHECK(tokenize("Good, GOOD movie!") == std::vector<std::string>{"good", "good", "movie"});
}

TEST_CASE("tokenize keeps embedded apostrophes") {
    CHECK(tokenize("don't stop") == std::vector<std::string>{"don't", "stop"});
    CHECK(tokenize("'tis 'quoted' rock'n'roll") == std::vector<std::string>{"tis", "quoted", "rock'n'roll"});
    CHECK(tokenize("'''") == std::vector<std::string>{});
}

TEST_CASE("tokenize handles empty text, digits and UTF-8") {
    CHECK(tokenize("") == std::vector<std::string>{});
    CHECK(tokenize("3rd place in 2024") == std::vector<std::string>{"3rd", "place", "in", "2024"});
    CHECK(tokenize("caf\xc3\xa9 time") == std::vector<std::string>{"caf\xc3\xa9", "time"});
}

TEST_CASE("tokenize is idempotent on its own space-joined output") {
    for (const char* text : {"Good, GOOD movie!", "don't ''quote'' me", "a-b-c 1.5x", "  ", "C'est la vie..."}) {
        std::vector<std::string> once = tokenize(text);
        CHECK(tokenize(join(once)) == once);
    }
}

TEST_CASE("extract_features emits unigrams then adjacent bigrams") {
    std::vector<std::string> tokens{"a", "b", "c"};
    auto uni = extract_features(tokens, 1);
    REQUIRE(uni.size() == 3);
    CHECK(uni[0] == FeatureKey::unigram("a"));

    auto both = extract_features(tokens, 2);
    REQUIRE(both.size() == 5);
    CHECK(both[3] == FeatureKey::bigram("a", "b"));
    CHECK(both[4] == FeatureKey::bigram("b", "c"));

    std::vector<std::string> single{"a"};
    CHECK(extract_features(single, 2).size() == 1);
}

TEST_CASE("build_vocabulary applies the total-occurrence cutoff") {
    std::vector<TokenizedDoc> docs;
    docs.push_back(tokenized("d1", "good good rare"));
    docs.push_back(tokenized("d2", "good movie"));
    Vocabulary vocab = build_vocabulary(docs, 3, 1);
    CHECK(vocab.size() == 1);
    CHECK(vocab.index_of(FeatureKey::unigram("good")).has_value());
    CHECK(!vocab.index_of(FeatureKey::unigram("rare")).has_value());
}

TEST_CASE("build_vocabulary with min_count 1 keeps every distinct feature") {
    std::vector<TokenizedDoc> docs;
    docs.push_back(tokenized("d1", "b a b", 2));
    Vocabulary vocab = build_vocabulary(docs, 1, 2);
    // unigrams a, b plus bigrams "a b", "b a"
    CHECK(vocab.size() == 4);
    // lexicographic, unigrams first
    CHECK(vocab.at(0) == FeatureKey::unigram("a"));
    CHECK(vocab.at(1) == FeatureKey::unigram("b"));
    CHECK(vocab.at(2) == FeatureKey::bigram("a", "b"));
    CHECK(vocab.at(3) == FeatureKey::bigram("b", "a"));
    for (std::uint32_t i = 0; i < vocab.size(); ++i) {
        CHECK(vocab.index_of(vocab.at(i)) == i);
    }
}

TEST_CASE("tighter min_count vocabularies are subsets") {
    std::vector<TokenizedDoc> docs;
    docs.push_back(tokenized("d1", "a a a b b c d d d d"));
    docs.push_back(tokenized("d2", "a b e"));
    for (std::size_t loose = 1; loose <= 4; ++loose) {
        Vocabulary base = build_vocabulary(docs, loose, 1);
        for (std::size_t tight = loose; tight <= 5; ++tight) {
            std::vector<TokenizedDoc> copy = docs;
            if (tight == 5) continue; // empty vocabulary would throw
            Vocabulary smaller = build_vocabulary(copy, tight, 1);
            for (const FeatureKey& key : smaller.entries()) {
                CHECK(base.index_of(key).has_value());
            }
        }
    }
}

TEST_CASE("build_vocabulary rejects an empty result") {
    std::vector<TokenizedDoc> docs;
    docs.push_back(tokenized("d1", "one two three"));
    CHECK_THROWS_AS(build_vocabulary(docs, 10, 1), DomainError);
    CHECK_THROWS_AS(build_vocabulary(docs, 0, 1), ConfigError);
}

TEST_CASE("count_document counts in-vocabulary features only") {
    std::vector<TokenizedDoc> docs;
    docs.push_back(tokenized("d1", "good good bad"));
    Vocabulary vocab = build_vocabulary(docs, 1, 1);

    CountedDoc counted = count_document(tokenized("q", "good good bad"), vocab);
    REQUIRE(counted.tf.size() == 2);
    const std::uint32_t good = *vocab.index_of(FeatureKey::unigram("good"));
    const std::uint32_t bad = *vocab.index_of(FeatureKey::unigram("bad"));
    std::map<std::uint32_t, std::uint32_t> by_index(counted.tf.begin(), counted.tf.end());
    CHECK(by_index[good] == 2);
    CHECK(by_index[bad] == 1);
    CHECK(counted.max_tf == 2);
    CHECK(counted.dl == 3);

    CountedDoc oov = count_document(tokenized("q2", "zebra"), vocab);
    CHECK(oov.tf.empty());
    CHECK(oov.max_tf == 0);
    CHECK(oov.dl == 1);

    CountedDoc multi = count_document(tokenized("q3", "a b a b a"), vocab);
    CHECK(multi.tf.empty()); // a, b are out of this vocabulary
    CHECK(multi.dl == 5);
}

TEST_CASE("count_document tracks max_tf and dl") {
    std::vector<TokenizedDoc> docs;
    docs.push_back(tokenized("d1", "a b"));
    Vocabulary vocab = build_vocabulary(docs, 1, 1);
    CountedDoc counted = count_document(tokenized("q", "a b a b a"), vocab);
    REQUIRE(counted.tf.size() == 2);
    CHECK(counted.tf[0].second == 3); // a
    CHECK(counted.tf[1].second == 2); // b
    CHECK(counted.max_tf == 3);
    CHECK(counted.dl == 5);
}

TEST_CASE("per-document counts sum to the vocabulary totals") {
    std::vector<TokenizedDoc> docs;
    docs.push_back(tokenized("d1", "a a b c", 2));
    docs.push_back(tokenized("d2", "a b b c c c", 2));
    docs.push_back(tokenized("d3", "c a", 2));
    Vocabulary vocab = build_vocabulary(docs, 1, 2);

    std::map<std::uint32_t, std::uint64_t> sums;
    for (const TokenizedDoc& doc : docs) {
        for (const auto& [index, tf] : count_document(doc, vocab).tf) {
            sums[index] += tf;
        }
    }
    // Recount occurrences independently.
    std::map<std::string, std::uint64_t> expected;
    for (const TokenizedDoc& doc : docs) {
        for (const FeatureKey& key : doc.features) ++expected[key.text];
    }
    for (const auto& [index, total] : sums) {
        CHECK(total == expected[vocab.at(index).text]);
    }
    CHECK(sums.size() == expected.size()); // min_count 1: every feature appears
}

TEST_CASE("vocabularies are deterministic") {
    std::vector<TokenizedDoc> docs;
    docs.push_back(tokenized("d1", "z y x w w y z z"));
    Vocabulary a = build_vocabulary(docs, 2, 1);
    Vocabulary b = build_vocabulary(docs, 2, 1);
    CHECK(a.entries() == b.entries());
}
