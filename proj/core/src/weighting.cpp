#include "termweight/weighting.hpp"

#include <algorithm>
#include <cmath>

#include "termweight/error.hpp"
#include "termweight/textio.hpp"

namespace termweight {

namespace {

// One information-gain summand (count/N) * log2(count*N / (row*col)).
// A zero joint count contributes zero.
double ig_summand(double count, double n, double row, double col) {
    if (count == 0.0) return 0.0;
    return (count / n) * std::log2(count * n / (row * col));
}

double class_entropy(const CollectionStats& s) {
    const double n = static_cast<double>(s.n_docs);
    const double pp = static_cast<double>(s.n_pos) / n;
    const double pn = static_cast<double>(s.n_neg) / n;
    return -pp * std::log2(pp) - pn * std::log2(pn);
}

[[noreturn]] void degenerate(const char* scheme, const TermContingency& t) {
    throw DomainError(std::string("degenerate ") + scheme + " weight for term with a=" + std::to_string(t.a) +
                      ", c=" + std::to_string(t.c));
}

double finite_or_degenerate(double value, const char* scheme, const TermContingency& t) {
    if (!std::isfinite(value)) degenerate(scheme, t);
    return value;
}

} // namespace

std::pair<std::vector<TermContingency>, CollectionStats>
contingency_counts(std::span<const CountedDoc> train_docs, std::size_t vocab_size) {
    std::vector<TermContingency> table(vocab_size);
    CollectionStats stats;
    std::uint64_t total_dl = 0;
    for (const CountedDoc& doc : train_docs) {
        ++stats.n_docs;
        total_dl += doc.dl;
        const bool positive = doc.label == Label::Positive;
        if (positive) ++stats.n_pos;
        else ++stats.n_neg;
        for (const auto& [index, tf] : doc.tf) {
            if (index >= vocab_size) {
                throw DomainError("term index " + std::to_string(index) + " out of range for vocabulary of size " +
                                  std::to_string(vocab_size));
            }
            if (positive) ++table[index].a;
            else ++table[index].c;
        }
    }
    for (TermContingency& t : table) {
        t.b = stats.n_pos - t.a;
        t.d = stats.n_neg - t.c;
    }
    stats.avg_dl = stats.n_docs > 0 ? static_cast<double>(total_dl) / static_cast<double>(stats.n_docs) : 0.0;
    return {std::move(table), stats};
}

double local_weight(const LocalScheme& scheme, std::uint32_t tf, std::uint32_t max_tf, std::uint32_t dl,
                    double avg_dl) {
    switch (scheme.id) {
    case LocalId::Tf:
        return static_cast<double>(tf);
    case LocalId::Tp:
        return tf > 0 ? 1.0 : 0.0;
    case LocalId::Atf: {
        if (tf == 0) return scheme.k; // atf of an absent term; never emitted into vectors
        if (max_tf < tf) {
            throw DomainError("atf: max_tf " + std::to_string(max_tf) + " below tf " + std::to_string(tf));
        }
        return scheme.k + (1.0 - scheme.k) * static_cast<double>(tf) / static_cast<double>(max_tf);
    }
    case LocalId::Ltf:
        return std::log2(1.0 + static_cast<double>(tf));
    case LocalId::Btf: {
        if (!(avg_dl > 0.0)) {
            throw DomainError("btf requires a positive average document length, got " + format_double(avg_dl));
        }
        const double len_norm = (1.0 - scheme.b) + scheme.b * static_cast<double>(dl) / avg_dl;
        return (scheme.k1 + 1.0) * static_cast<double>(tf) / (scheme.k1 * len_norm + static_cast<double>(tf));
    }
    }
    throw DomainError("unknown local scheme");
}

double imbalance_x(const TermContingency& t, const CollectionStats& s) {
    const double rp = (static_cast<double>(t.a) + 1.0) / static_cast<double>(s.n_pos);
    const double rn = (static_cast<double>(t.c) + 1.0) / static_cast<double>(s.n_neg);
    return std::max(rp, rn) / std::min(rp, rn);
}

double scale(ScalingId id, double x) {
    if (!(x >= 1.0)) {
        throw DomainError("scaling functions are defined for x >= 1, got " + format_double(x));
    }
    switch (id) {
    case ScalingId::F0: return x;
    case ScalingId::F1: return x * x;
    case ScalingId::F2: return std::sqrt(x);
    case ScalingId::F3: return std::cbrt(x);
    case ScalingId::F4: return std::log2(x);
    case ScalingId::F5: return 1.0 / (0.1 + 1.0 / x);
    case ScalingId::F6: return 1.0 / (0.05 + 1.0 / x);
    case ScalingId::F7: return std::sqrt(std::cbrt(x));
    }
    throw DomainError("unknown scaling function");
}

double entropy_h(const TermContingency& t, const CollectionStats& s, bool smoothed) {
    const double a = static_cast<double>(t.a) + (smoothed ? 1.0 : 0.0);
    const double c = static_cast<double>(t.c) + (smoothed ? 1.0 : 0.0);
    if (a + c <= 0.0) {
        throw DomainError("entropy of a term contained in no document");
    }
    const double rp = a / static_cast<double>(s.n_pos);
    const double rn = c / static_cast<double>(s.n_neg);
    const double denom = rp + rn;
    const double pp = rp / denom;
    const double pn = rn / denom;
    auto plog = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
    return std::clamp(plog(pp) + plog(pn), 0.0, 1.0);
}

double global_weight(const GlobalScheme& scheme, const TermContingency& t, const CollectionStats& s) {
    const double a = static_cast<double>(t.a);
    const double b = static_cast<double>(t.b);
    const double c = static_cast<double>(t.c);
    const double d = static_cast<double>(t.d);
    const double n = static_cast<double>(s.n_docs);
    const double n_pos = static_cast<double>(s.n_pos);
    const double n_neg = static_cast<double>(s.n_neg);

    switch (scheme.id) {
    case GlobalId::No:
        return 1.0;
    case GlobalId::Idf:
        return finite_or_degenerate(std::log2(n / (a + c)), "idf", t);
    case GlobalId::Pidf: {
        if (t.a + t.c >= s.n_docs) {
            throw DomainError("pidf is undefined for a term present in every document (a=" + std::to_string(t.a) +
                              ", c=" + std::to_string(t.c) + ", N=" + std::to_string(s.n_docs) + ")");
        }
        return finite_or_degenerate(std::log2(n / (a + c) - 1.0), "pidf", t);
    }
    case GlobalId::Bidf:
        return std::log2(b + d + 0.5) - std::log2(a + c + 0.5);
    case GlobalId::Ig: {
        // Grouped per class so the (a <-> c, N+ <-> N-) swap mirrors exactly.
        const double pos_class = ig_summand(a, n, n_pos, a + c) + ig_summand(b, n, n_pos, b + d);
        const double neg_class = ig_summand(c, n, n_neg, a + c) + ig_summand(d, n, n_neg, b + d);
        return pos_class + neg_class;
    }
    case GlobalId::Gr: {
        GlobalScheme ig_scheme{GlobalId::Ig};
        return global_weight(ig_scheme, t, s) / class_entropy(s);
    }
    case GlobalId::Mi: {
        if (t.a + t.c == 0) degenerate("mi", t);
        const double ratio = std::max(a * n / ((a + c) * n_pos), c * n / ((a + c) * n_neg));
        return finite_or_degenerate(std::log2(ratio), "mi", t);
    }
    case GlobalId::MiPrime: {
        if (t.a + t.c == 0) degenerate("mi_prime", t);
        const double rp = a / n_pos;
        const double rn = c / n_neg;
        const double denom = rp + rn;
        return finite_or_degenerate(std::log2(std::max(2.0 * rp / denom, 2.0 * rn / denom)), "mi_prime", t);
    }
    case GlobalId::Chi: {
        const double diff = a * d - b * c;
        if (diff == 0.0) return 0.0;
        const double m1 = (a + c) * (b + d);
        const double m2 = (a + b) * (c + d);
        return n * diff * diff / (m1 * m2);
    }
    case GlobalId::Didf: {
        if (t.a == 0 || t.c == 0) {
            throw DomainError("didf is undefined for a singular term (a=" + std::to_string(t.a) +
                              ", c=" + std::to_string(t.c) + ")");
        }
        return std::log2(n_neg * a) - std::log2(n_pos * c);
    }
    case GlobalId::Dsidf:
        return std::log2(n_neg * (a + 0.5)) - std::log2(n_pos * (c + 0.5));
    case GlobalId::DsidfLegacy:
        return std::log2(n_neg * a + 0.5) - std::log2(n_pos * c + 0.5);
    case GlobalId::Dspidf: {
        if (t.c == s.n_neg || t.a == s.n_pos) degenerate("dspidf", t);
        return std::log2((n_neg - c) * (a + 0.5)) - std::log2((n_pos - a) * (c + 0.5));
    }
    case GlobalId::Dbidf:
        return std::log2((n_neg - c + 0.5) * (a + 0.5)) - std::log2((n_pos - a + 0.5) * (c + 0.5));
    case GlobalId::Rf:
        return std::log2(2.0 + a / std::max(1.0, c));
    case GlobalId::Ne:
        return 1.0 - entropy_h(t, s, /*smoothed=*/false);
    case GlobalId::Re:
        return regularize(scheme.b0, 1.0 - entropy_h(t, s, /*smoothed=*/true));
    case GlobalId::ScaledX:
        return scale(scheme.scaling, imbalance_x(t, s));
    }
    throw DomainError("unknown global scheme");
}

double regularize(double b0, double fx) {
    if (!(b0 >= 0.0 && b0 <= 1.0)) {
        throw DomainError("bias term b0 must lie in [0,1], got " + format_double(b0));
    }
    if (!(fx >= 0.0 && fx <= 1.0)) {
        throw DomainError("regularize expects f(x) in [0,1], got " + format_double(fx));
    }
    return b0 + (1.0 - b0) * fx;
}

void validate_local_scheme(const LocalScheme& scheme) {
    if (!(scheme.k >= 0.0 && scheme.k <= 1.0)) {
        throw DomainError("atf parameter k must lie in [0,1], got " + format_double(scheme.k));
    }
    if (!(scheme.k1 > 0.0)) {
        throw DomainError("btf parameter k1 must be positive, got " + format_double(scheme.k1));
    }
    if (!(scheme.b >= 0.0 && scheme.b <= 1.0)) {
        throw DomainError("btf parameter b must lie in [0,1], got " + format_double(scheme.b));
    }
}

WeightModel fit_weight_model(std::span<const CountedDoc> train_docs, const Vocabulary& vocab,
                             const LocalScheme& local, const GlobalScheme& global, bool normalize) {
    validate_local_scheme(local);
    auto [table, stats] = contingency_counts(train_docs, vocab.size());
    WeightModel model;
    model.local = local;
    model.normalize = normalize;
    model.stats = stats;
    model.global_weights.resize(vocab.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        try {
            model.global_weights[i] = global_weight(global, table[i], stats);
        } catch (const DomainError& err) {
            throw DomainError(std::string(err.what()) + " (term '" + vocab.at(static_cast<std::uint32_t>(i)).text +
                              "')");
        }
    }
    return model;
}

SparseVector vectorize(const CountedDoc& doc, const WeightModel& model) {
    SparseVector vec;
    vec.entries.reserve(doc.tf.size());
    for (const auto& [index, tf] : doc.tf) {
        if (index >= model.global_weights.size()) {
            throw DomainError("document term index " + std::to_string(index) + " out of range for weight model");
        }
        const double value =
            local_weight(model.local, tf, doc.max_tf, doc.dl, model.stats.avg_dl) * model.global_weights[index];
        if (value != 0.0) {
            vec.entries.emplace_back(index, value);
        }
    }
    if (model.normalize) {
        double sq = 0.0;
        for (const auto& [index, value] : vec.entries) sq += value * value;
        if (sq > 0.0) {
            const double norm = std::sqrt(sq);
            for (auto& [index, value] : vec.entries) value /= norm;
        }
    }
    return vec;
}

const char* to_string(LocalId id) {
    switch (id) {
    case LocalId::Tf: return "tf";
    case LocalId::Tp: return "tp";
    case LocalId::Atf: return "atf";
    case LocalId::Ltf: return "ltf";
    case LocalId::Btf: return "btf";
    }
    return "?";
}

const char* to_string(GlobalId id) {
    switch (id) {
    case GlobalId::No: return "no";
    case GlobalId::Idf: return "idf";
    case GlobalId::Pidf: return "pidf";
    case GlobalId::Bidf: return "bidf";
    case GlobalId::Ig: return "ig";
    case GlobalId::Gr: return "gr";
    case GlobalId::Mi: return "mi";
    case GlobalId::MiPrime: return "mi_prime";
    case GlobalId::Chi: return "chi";
    case GlobalId::Didf: return "didf";
    case GlobalId::Dsidf: return "dsidf";
    case GlobalId::DsidfLegacy: return "dsidf_legacy";
    case GlobalId::Dspidf: return "dspidf";
    case GlobalId::Dbidf: return "dbidf";
    case GlobalId::Rf: return "rf";
    case GlobalId::Ne: return "ne";
    case GlobalId::Re: return "re";
    case GlobalId::ScaledX: return "scaled_x";
    }
    return "?";
}

const char* to_string(ScalingId id) {
    switch (id) {
    case ScalingId::F0: return "f0";
    case ScalingId::F1: return "f1";
    case ScalingId::F2: return "f2";
    case ScalingId::F3: return "f3";
    case ScalingId::F4: return "f4";
    case ScalingId::F5: return "f5";
    case ScalingId::F6: return "f6";
    case ScalingId::F7: return "f7";
    }
    return "?";
}

LocalId parse_local_id(std::string_view text) {
    for (LocalId id : {LocalId::Tf, LocalId::Tp, LocalId::Atf, LocalId::Ltf, LocalId::Btf}) {
        if (text == to_string(id)) return id;
    }
    throw ConfigError("unknown local scheme '" + std::string(text) + "'");
}

GlobalId parse_global_id(std::string_view text) {
    for (GlobalId id :
         {GlobalId::No, GlobalId::Idf, GlobalId::Pidf, GlobalId::Bidf, GlobalId::Ig, GlobalId::Gr, GlobalId::Mi,
          GlobalId::MiPrime, GlobalId::Chi, GlobalId::Didf, GlobalId::Dsidf, GlobalId::DsidfLegacy, GlobalId::Dspidf,
          GlobalId::Dbidf, GlobalId::Rf, GlobalId::Ne, GlobalId::Re, GlobalId::ScaledX}) {
        if (text == to_string(id)) return id;
    }
    throw ConfigError("unknown global scheme '" + std::string(text) + "'");
}

ScalingId parse_scaling_id(std::string_view text) {
    for (ScalingId id : {ScalingId::F0, ScalingId::F1, ScalingId::F2, ScalingId::F3, ScalingId::F4, ScalingId::F5,
                         ScalingId::F6, ScalingId::F7}) {
        if (text == to_string(id)) return id;
    }
    throw ConfigError("unknown scaling function '" + std::string(text) + "'");
}

} // namespace termweight
