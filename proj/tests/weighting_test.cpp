#include <doctest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "support/scheme_grid.hpp"
#include "termweight/error.hpp"
#include "termweight/weighting.hpp"

using namespace termweight;
using grid_checks::make_contingency;
using grid_checks::make_stats;

namespace {

std::vector<TokenizedDoc> tokenize_texts(const std::vector<std::pair<Label, std::string>>& texts,
                                         std::vector<Label>* labels_out) {
    std::vector<TokenizedDoc> docs;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        std::vector<std::string> tokens = tokenize(texts[i].second);
        TokenizedDoc doc;
        doc.doc_id = "d" + std::to_string(i);
        doc.dl = static_cast<std::uint32_t>(tokens.size());
        doc.features = extract_features(tokens, 1);
        docs.push_back(std::move(doc));
        if (labels_out) labels_out->push_back(texts[i].first);
    }
    return docs;
}

std::vector<CountedDoc> counted_from(const std::vector<std::pair<Label, std::string>>& texts,
                                     const Vocabulary& vocab) {
    std::vector<CountedDoc> counted;
    std::vector<Label> labels;
    std::vector<TokenizedDoc> docs = tokenize_texts(texts, &labels);
    for (std::size_t i = 0; i < docs.size(); ++i) {
        CountedDoc c = count_document(docs[i], vocab);
        c.label = labels[i];
        counted.push_back(std::move(c));
    }
    return counted;
}

} // namespace

TEST_CASE("contingency counts documents, not occurrences") {
    std::vector<std::pair<Label, std::string>> texts = {
        {Label::Positive, "good good good good good"},
        {Label::Positive, "good other"},
        {Label::Negative, "other plain"},
    };
    std::vector<TokenizedDoc> docs = tokenize_texts(texts, nullptr);
    Vocabulary vocab = build_vocabulary(docs, 1, 1);
    auto [table, stats] = contingency_counts(counted_from(texts, vocab), vocab.size());

    CHECK(stats.n_docs == 3);
    CHECK(stats.n_pos == 2);
    CHECK(stats.n_neg == 1);
    CHECK(stats.avg_dl == doctest::Approx((5.0 + 2.0 + 2.0) / 3.0));

    const TermContingency good = table[*vocab.index_of(FeatureKey::unigram("good"))];
    CHECK(good.a == 2); // two positive docs contain it, regardless of tf
    CHECK(good.b == 0);
    CHECK(good.c == 0);
    CHECK(good.d == 1);
    const TermContingency other = table[*vocab.index_of(FeatureKey::unigram("other"))];
    CHECK(other.a == 1);
    CHECK(other.c == 1);
}

TEST_CASE("local weights match their formulas") {
    LocalScheme tf{LocalId::Tf};
    CHECK(local_weight(tf, 7, 9, 10, 10.0) == 7.0);
    CHECK(local_weight(tf, 0, 1, 10, 10.0) == 0.0);

    LocalScheme tp{LocalId::Tp};
    CHECK(local_weight(tp, 7, 9, 10, 10.0) == 1.0);
    CHECK(local_weight(tp, 0, 1, 10, 10.0) == 0.0);

    LocalScheme ltf{LocalId::Ltf};
    CHECK(local_weight(ltf, 3, 3, 10, 10.0) == doctest::Approx(2.0)); // log2(4)
    CHECK(local_weight(ltf, 0, 1, 10, 10.0) == 0.0);

    LocalScheme atf{LocalId::Atf};
    CHECK(local_weight(atf, 4, 4, 10, 10.0) == doctest::Approx(1.0)); // tf == max_tf
    CHECK(local_weight(atf, 1, 4, 10, 10.0) == doctest::Approx(0.5 + 0.5 * 0.25));

    LocalScheme btf{LocalId::Btf};
    // tf=1 at dl == avg_dl: (k1+1)*1 / (k1*1 + 1) = 2.2 / 2.2
    CHECK(local_weight(btf, 1, 1, 10, 10.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(local_weight(btf, 1, 1, 10, 0.0), DomainError);
    // Longer-than-average documents are damped.
    CHECK(local_weight(btf, 1, 1, 20, 10.0) < local_weight(btf, 1, 1, 10, 10.0));
}

TEST_CASE("imbalance ratio follows the smoothed rate definition") {
    CollectionStats s = make_stats(1000, 1000);
    CHECK(imbalance_x(make_contingency(99, 0, s), s) == doctest::Approx(100.0)); // 0.1 / 0.001
    CHECK(imbalance_x(make_contingency(10, 10, s), s) == doctest::Approx(1.0));
    CHECK(imbalance_x(make_contingency(0, 0, s), s) == doctest::Approx(1.0));

    CollectionStats uneven = make_stats(100, 400);
    // r+ = 3/100, r- = 12/400 -> equal after smoothing
    CHECK(imbalance_x(make_contingency(2, 11, uneven), uneven) == doctest::Approx(1.0));
}

TEST_CASE("scaling functions evaluate exactly") {
    CHECK(scale(ScalingId::F4, 1.0) == 0.0);
    CHECK(scale(ScalingId::F5, 100.0) == doctest::Approx(100.0 / 11.0)); // 1/(0.1+0.01)
    CHECK(scale(ScalingId::F1, 10.0) == doctest::Approx(100.0));
    CHECK(scale(ScalingId::F7, 64.0) == doctest::Approx(2.0));
    CHECK(scale(ScalingId::F2, 9.0) == doctest::Approx(3.0));
    CHECK(scale(ScalingId::F3, 27.0) == doctest::Approx(3.0));
    CHECK(scale(ScalingId::F6, 1.0) == doctest::Approx(1.0 / 1.05));
    CHECK_THROWS_AS(scale(ScalingId::F0, 0.5), DomainError);
}

TEST_CASE("scaling ordering and bounds") {
    grid_checks::check_scaling_properties();
}

TEST_CASE("entropy matches hand-evaluated cases") {
    CollectionStats s = make_stats(1000, 1000);
    // Evenly distributed term: maximal uncertainty.
    CHECK(entropy_h(make_contingency(10, 10, s), s, false) == doctest::Approx(1.0));
    // Raw singular term: zero entropy.
    CHECK(entropy_h(make_contingency(100, 0, s), s, false) == 0.0);
    // Smoothed singular term, checked against the independent oracle and
    // the printed approximation 0.0795.
    const double h = entropy_h(make_contingency(100, 0, s), s, true);
    CHECK(std::fabs(h - static_cast<double>(oracles::entropy_smoothed(100, 0, 1000, 1000))) <= 1e-12);
    CHECK(h == doctest::Approx(0.0795).epsilon(1e-3));
    CHECK_THROWS_AS(entropy_h(make_contingency(0, 0, s), s, false), DomainError);
}

TEST_CASE("smoothed entropy equals the high-precision oracle over the balanced grid") {
    grid_checks::check_entropy_oracle(10, 10, 1e-12);
}

TEST_CASE("delta smoothed idf variants match their reference values") {
    CollectionStats s = make_stats(1000, 1000);
    GlobalScheme legacy{GlobalId::DsidfLegacy};
    CHECK(std::fabs(global_weight(legacy, make_contingency(100, 0, s), s) - 17.6) <= 0.05);
    CHECK(std::fabs(global_weight(legacy, make_contingency(2, 0, s), s) - 12.0) <= 0.05);
    CHECK(std::fabs(global_weight(legacy, make_contingency(100, 1, s), s) - 6.6) <= 0.05);

    GlobalScheme dsidf{GlobalId::Dsidf};
    CHECK(global_weight(dsidf, make_contingency(100, 0, s), s) == doctest::Approx(std::log2(201.0)));
    CHECK(global_weight(dsidf, make_contingency(100, 1, s), s) == doctest::Approx(std::log2(67.0)));
    // The corrected form at (a=2, c=0) evaluates to log2(5) ~ 2.32 even
    // though 1.3 is sometimes quoted for it; the formula wins.
    CHECK(global_weight(dsidf, make_contingency(2, 0, s), s) == doctest::Approx(std::log2(5.0)));
}

TEST_CASE("global weights match hand-evaluated formulas") {
    CollectionStats s = make_stats(500, 500);
    GlobalScheme idf{GlobalId::Idf};
    CHECK(global_weight(idf, make_contingency(500, 500, s), s) == 0.0); // term in every doc
    CHECK(global_weight(idf, make_contingency(5, 5, s), s) == doctest::Approx(std::log2(100.0)));

    GlobalScheme rf{GlobalId::Rf};
    CHECK(global_weight(rf, make_contingency(0, 7, s), s) == doctest::Approx(1.0)); // log2 2
    CHECK(global_weight(rf, make_contingency(100, 0, s), s) == doctest::Approx(std::log2(102.0)));

    GlobalScheme ig{GlobalId::Ig};
    // Perfect predictor on a balanced corpus carries one full bit.
    CHECK(global_weight(ig, make_contingency(500, 0, s), s) == doctest::Approx(1.0));
    CHECK(global_weight(ig, make_contingency(500, 500, s), s) == doctest::Approx(0.0));

    GlobalScheme gr{GlobalId::Gr};
    // Balanced corpus: class entropy is 1, so gr == ig.
    CHECK(global_weight(gr, make_contingency(123, 45, s), s) ==
          doctest::Approx(global_weight(ig, make_contingency(123, 45, s), s)));

    GlobalScheme chi{GlobalId::Chi};
    CHECK(global_weight(chi, make_contingency(500, 0, s), s) == doctest::Approx(1000.0)); // == N
    CHECK(global_weight(chi, make_contingency(250, 250, s), s) == 0.0);

    GlobalScheme mi_prime{GlobalId::MiPrime};
    CHECK(global_weight(mi_prime, make_contingency(30, 10, s), s) == doctest::Approx(std::log2(1.5)));
    CHECK(global_weight(mi_prime, make_contingency(25, 25, s), s) == doctest::Approx(0.0));

    GlobalScheme bidf{GlobalId::Bidf};
    CHECK(global_weight(bidf, make_contingency(10, 10, s), s) ==
          doctest::Approx(std::log2(980.5) - std::log2(20.5)));

    GlobalScheme no{GlobalId::No};
    CHECK(global_weight(no, make_contingency(0, 500, s), s) == 1.0);

    GlobalScheme mi{GlobalId::Mi};
    // log2 max(aN/((a+c)N+), cN/((a+c)N-))
    CHECK(global_weight(mi, make_contingency(30, 10, s), s) == doctest::Approx(std::log2(1.5)));
    CollectionStats skew = make_stats(100, 900);
    CHECK(global_weight(mi, make_contingency(10, 10, skew), skew) == doctest::Approx(std::log2(5.0)));

    GlobalScheme dspidf{GlobalId::Dspidf};
    // log2((N- - c)(a + 0.5) / ((N+ - a)(c + 0.5)))
    CHECK(global_weight(dspidf, make_contingency(100, 20, s), s) ==
          doctest::Approx(std::log2(480.0 * 100.5 / (400.0 * 20.5))));

    GlobalScheme dbidf{GlobalId::Dbidf};
    CHECK(global_weight(dbidf, make_contingency(100, 20, s), s) ==
          doctest::Approx(std::log2(480.5 * 100.5 / (400.5 * 20.5))));
}

TEST_CASE("gain ratio divides information gain by the class entropy") {
    CollectionStats s = make_stats(5, 15);
    const double class_entropy = -(0.25 * std::log2(0.25) + 0.75 * std::log2(0.75));
    GlobalScheme ig{GlobalId::Ig};
    GlobalScheme gr{GlobalId::Gr};
    for (std::uint64_t a : {0u, 2u, 5u}) {
        for (std::uint64_t c : {1u, 7u, 15u}) {
            const TermContingency t = make_contingency(a, c, s);
            CHECK(global_weight(gr, t, s) == doctest::Approx(global_weight(ig, t, s) / class_entropy));
        }
    }
}

TEST_CASE("re composes smoothed entropy with the bias term") {
    CollectionStats s = make_stats(1000, 1000);
    const double h = entropy_h(make_contingency(100, 0, s), s, true);
    GlobalScheme re{GlobalId::Re, 0.5};
    CHECK(global_weight(re, make_contingency(100, 0, s), s) == doctest::Approx(0.5 + 0.5 * (1.0 - h)));
    CHECK(global_weight(re, make_contingency(100, 0, s), s) == doctest::Approx(0.9602).epsilon(1e-3));

    GlobalScheme re_one{GlobalId::Re, 1.0};
    CHECK(global_weight(re_one, make_contingency(100, 0, s), s) == 1.0);
    CHECK(global_weight(re_one, make_contingency(3, 499, s), s) == 1.0);
}

TEST_CASE("degenerate schemes raise explicit errors") {
    CollectionStats s = make_stats(100, 100);
    GlobalScheme didf{GlobalId::Didf};
    CHECK_THROWS_WITH_AS(global_weight(didf, make_contingency(5, 0, s), s), doctest::Contains("singular"),
                         DomainError);
    CHECK_THROWS_AS(global_weight(didf, make_contingency(0, 5, s), s), DomainError);
    CHECK(global_weight(didf, make_contingency(4, 2, s), s) == doctest::Approx(1.0)); // log2(400/200)

    GlobalScheme pidf{GlobalId::Pidf};
    CHECK_THROWS_AS(global_weight(pidf, make_contingency(100, 100, s), s), DomainError);
    CHECK(global_weight(pidf, make_contingency(25, 25, s), s) == doctest::Approx(std::log2(3.0)));

    GlobalScheme dspidf{GlobalId::Dspidf};
    CHECK_THROWS_AS(global_weight(dspidf, make_contingency(100, 5, s), s), DomainError);
}

TEST_CASE("regularize is exact at the endpoints") {
    CHECK(regularize(0.0, 0.3) == 0.3);
    CHECK(regularize(1.0, 0.3) == 1.0);
    CHECK(regularize(1.0, 0.0) == 1.0);
    CHECK(regularize(0.4, 0.5) == doctest::Approx(0.7));
    CHECK_THROWS_AS(regularize(0.5, 1.5), DomainError);
    CHECK_THROWS_AS(regularize(-0.1, 0.5), DomainError);
}

TEST_CASE("re is monotone in the imbalance direction") {
    // Moving one containing document from the minority to the majority
    // class never decreases re.
    for (auto [n_pos, n_neg] : {std::pair<std::uint64_t, std::uint64_t>{10, 10}, {5, 15}}) {
        CollectionStats s = make_stats(n_pos, n_neg);
        GlobalScheme re{GlobalId::Re, 0.25};
        for (std::uint64_t a = 0; a < n_pos; ++a) {
            for (std::uint64_t c = 1; c <= n_neg; ++c) {
                const double rp = (static_cast<double>(a) + 1.0) / static_cast<double>(n_pos);
                const double rn = (static_cast<double>(c) + 1.0) / static_cast<double>(n_neg);
                if (rp < rn) continue; // positive side must already be the majority
                const double before = global_weight(re, make_contingency(a, c, s), s);
                const double after = global_weight(re, make_contingency(a + 1, c - 1, s), s);
                CHECK(after >= before - 1e-12);
            }
        }
    }
}

TEST_CASE("scheme properties hold across the full contingency grids") {
    grid_checks::check_scheme_grid(10, 10);
    grid_checks::check_scheme_grid(5, 15);
}

TEST_CASE("fit_weight_model evaluates every vocabulary term") {
    std::vector<std::pair<Label, std::string>> texts = {
        {Label::Positive, "good fine good"},
        {Label::Positive, "good fun"},
        {Label::Negative, "bad awful"},
        {Label::Negative, "bad fine"},
    };
    std::vector<TokenizedDoc> docs = tokenize_texts(texts, nullptr);
    Vocabulary vocab = build_vocabulary(docs, 1, 1);
    std::vector<CountedDoc> counted = counted_from(texts, vocab);

    WeightModel none = fit_weight_model(counted, vocab, LocalScheme{}, GlobalScheme{GlobalId::No}, true);
    REQUIRE(none.global_weights.size() == vocab.size());
    for (double g : none.global_weights) CHECK(g == 1.0);
    CHECK(none.stats.n_pos == 2);
    CHECK(none.stats.n_neg == 2);

    // didf propagates the singular-term error naming the offending term
    // ("awful" is the first singular entry in vocabulary order).
    CHECK_THROWS_WITH_AS(fit_weight_model(counted, vocab, LocalScheme{}, GlobalScheme{GlobalId::Didf}, true),
                         doctest::Contains("term 'awful'"), DomainError);
}

TEST_CASE("re with b0 = 1 vectorizes identically to the no scheme") {
    std::vector<std::pair<Label, std::string>> texts = {
        {Label::Positive, "alpha beta alpha"},
        {Label::Negative, "beta gamma"},
        {Label::Positive, "alpha gamma gamma"},
        {Label::Negative, "beta beta"},
    };
    std::vector<TokenizedDoc> docs = tokenize_texts(texts, nullptr);
    Vocabulary vocab = build_vocabulary(docs, 1, 1);
    std::vector<CountedDoc> counted = counted_from(texts, vocab);

    WeightModel none = fit_weight_model(counted, vocab, LocalScheme{}, GlobalScheme{GlobalId::No}, true);
    WeightModel re_one = fit_weight_model(counted, vocab, LocalScheme{}, GlobalScheme{GlobalId::Re, 1.0}, true);
    for (const CountedDoc& doc : counted) {
        CHECK(vectorize(doc, none) == vectorize(doc, re_one));
    }
}

TEST_CASE("vectorize applies cosine normalization") {
    WeightModel model;
    model.local = LocalScheme{LocalId::Tf};
    model.global_weights = {3.0, 2.0};
    model.normalize = true;
    model.stats = make_stats(10, 10);

    CountedDoc doc;
    doc.tf = {{0, 1}, {1, 2}}; // unnormalized values 3 and 4
    doc.max_tf = 2;
    doc.dl = 3;
    SparseVector vec = vectorize(doc, model);
    REQUIRE(vec.entries.size() == 2);
    CHECK(vec.entries[0].second == doctest::Approx(0.6));
    CHECK(vec.entries[1].second == doctest::Approx(0.8));

    model.normalize = false;
    SparseVector raw = vectorize(doc, model);
    CHECK(raw.entries[0].second == doctest::Approx(3.0));
    CHECK(raw.entries[1].second == doctest::Approx(4.0));

    CountedDoc empty;
    CHECK(vectorize(empty, model).entries.empty());
}

TEST_CASE("normalized vectors have unit norm within 1e-9") {
    CollectionStats s = make_stats(50, 50);
    WeightModel model;
    model.local = LocalScheme{LocalId::Ltf};
    model.normalize = true;
    model.stats = s;
    model.global_weights.assign(40, 0.0);
    for (std::size_t i = 0; i < model.global_weights.size(); ++i) {
        model.global_weights[i] = 0.25 + static_cast<double>(i % 7);
    }
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        CountedDoc doc;
        doc.dl = 0;
        for (std::uint32_t idx = 0; idx < 40; idx += 1 + static_cast<std::uint32_t>(rng() % 5)) {
            const std::uint32_t tf = 1 + static_cast<std::uint32_t>(rng() % 9);
            doc.tf.emplace_back(idx, tf);
            doc.max_tf = std::max(doc.max_tf, tf);
            doc.dl += tf;
        }
        SparseVector vec = vectorize(doc, model);
        if (vec.entries.empty()) continue;
        double sq = 0.0;
        for (const auto& [index, value] : vec.entries) sq += value * value;
        CHECK(std::fabs(sq - 1.0) < 1e-9);
    }
}
