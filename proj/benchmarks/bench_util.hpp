#pragma once

#include <random>
#include <string>

#include "termweight/corpus.hpp"
#include "termweight/prng.hpp"

namespace bench {

// Small two-class corpus with shared noise terms and class markers,
// mirroring the shape of the test corpora.
inline termweight::Corpus make_corpus(std::size_t docs_per_class, std::size_t doc_len, std::size_t n_noise,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<termweight::Document> docs;
    for (termweight::Label label : {termweight::Label::Positive, termweight::Label::Negative}) {
        const char* marker = label == termweight::Label::Positive ? "p" : "q";
        for (std::size_t d = 0; d < docs_per_class; ++d) {
            std::string text;
            for (std::size_t slot = 0; slot < doc_len; ++slot) {
                if (slot > 0) text += ' ';
                if (termweight::uniform01(rng) < 0.2) {
                    text += marker;
                    text += std::to_string(termweight::bounded(rng, 40));
                } else {
                    text += 'n';
                    text += std::to_string(termweight::bounded(rng, n_noise));
                }
            }
            docs.push_back({marker + std::to_string(d), label, std::move(text)});
        }
    }
    return termweight::make_corpus(std::move(docs));
}

} // namespace bench
