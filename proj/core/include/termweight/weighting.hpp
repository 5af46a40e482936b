#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "termweight/textproc.hpp"

namespace termweight {

struct CollectionStats {
    std::uint64_t n_docs = 0; // N
    std::uint64_t n_pos = 0;  // N+
    std::uint64_t n_neg = 0;  // N-
    double avg_dl = 0.0;      // mean unigram length of the training documents

    friend bool operator==(const CollectionStats&, const CollectionStats&) = default;
};

// Per-term document counts split by class and presence:
//   a docs of the positive class containing the term, b = N+ - a,
//   c docs of the negative class containing the term, d = N- - c.
struct TermContingency {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t c = 0;
    std::uint64_t d = 0;

    friend bool operator==(const TermContingency&, const TermContingency&) = default;
};

enum class LocalId { Tf, Tp, Atf, Ltf, Btf };

struct LocalScheme {
    LocalId id = LocalId::Tf;
    double k = 0.5;   // atf interpolation
    double k1 = 1.2;  // btf saturation
    double b = 0.95;  // btf length normalization

    friend bool operator==(const LocalScheme&, const LocalScheme&) = default;
};

enum class GlobalId {
    No,
    Idf,
    Pidf,
    Bidf,
    Ig,
    Gr,
    Mi,
    MiPrime,
    Chi,
    Didf,
    Dsidf,
    DsidfLegacy, // uncorrected smoothing log2((N-*a+0.5)/(N+*c+0.5)); kept for comparison
    Dspidf,
    Dbidf,
    Rf,
    Ne,
    Re,
    ScaledX,
};

enum class ScalingId { F0, F1, F2, F3, F4, F5, F6, F7 };

struct GlobalScheme {
    GlobalId id = GlobalId::No;
    double b0 = 0.0;                    // bias term, re only
    ScalingId scaling = ScalingId::F0;  // scaled_x only

    friend bool operator==(const GlobalScheme&, const GlobalScheme&) = default;
};

// Serializable product of training-side weighting: the local scheme,
// one fitted global weight per vocabulary term, and the normalization
// flag. Immutable once fitted; safe for concurrent read-only use.
struct WeightModel {
    LocalScheme local;
    std::vector<double> global_weights; // aligned with vocabulary indices
    bool normalize = true;
    CollectionStats stats;

    friend bool operator==(const WeightModel&, const WeightModel&) = default;
};

// Strictly index-sorted sparse vector; zero values omitted.
struct SparseVector {
    std::vector<std::pair<std::uint32_t, double>> entries;

    friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

// Document-frequency contingency per vocabulary term plus collection
// stats, computed from training documents only.
std::pair<std::vector<TermContingency>, CollectionStats>
contingency_counts(std::span<const CountedDoc> train_docs, std::size_t vocab_size);

// Within-document weight:
//   tf  -> tf
//   tp  -> 1 if tf > 0 else 0
//   atf -> k + (1-k) * tf / max_tf
//   ltf -> log2(1 + tf)
//   btf -> (k1+1)*tf / (k1*((1-b) + b*dl/avg_dl) + tf)
double local_weight(const LocalScheme& scheme, std::uint32_t tf, std::uint32_t max_tf, std::uint32_t dl,
                    double avg_dl);

// Imbalance ratio x = max(r+, r-) / min(r+, r-) with add-one-smoothed
// class-conditional rates r+ = (a+1)/N+, r- = (c+1)/N-. Always >= 1.
double imbalance_x(const TermContingency& t, const CollectionStats& s);

// Scaling functions over x >= 1:
//   f0: x      f1: x^2       f2: x^(1/2)       f3: x^(1/3)
//   f4: log2 x f5: 1/(0.1+1/x) f6: 1/(0.05+1/x) f7: x^(1/6)
double scale(ScalingId id, double x);

// Entropy of the class distribution of documents containing the term,
// h = -p+ log2 p+ - p- log2 p- with p+ = (a/N+)/(a/N+ + c/N-).
// smoothed substitutes a+1 and c+1 for a and c. Result clamped to [0,1];
// 0*log2(0) is taken as 0.
double entropy_h(const TermContingency& t, const CollectionStats& s, bool smoothed);

// Collection-level weight of one term under the given scheme. Throws
// DomainError for didf on singular terms (a = 0 or c = 0), for pidf on
// a term present in every document, and whenever a formula degenerates
// to a non-finite value.
double global_weight(const GlobalScheme& scheme, const TermContingency& t, const CollectionStats& s);

// Bias-term regularization g = b0 + (1 - b0) * fx for fx in [0,1].
double regularize(double b0, double fx);

// Enforces k in [0,1], k1 > 0, b in [0,1].
void validate_local_scheme(const LocalScheme& scheme);

// Computes contingency and stats from the training documents and
// evaluates the global scheme for every vocabulary term. Errors from
// global_weight are rethrown naming the offending term.
WeightModel fit_weight_model(std::span<const CountedDoc> train_docs, const Vocabulary& vocab,
                             const LocalScheme& local, const GlobalScheme& global, bool normalize);

// Final document vector: per in-vocabulary term, local weight times the
// fitted global weight; cosine-normalized to unit Euclidean norm when
// the model says so and the vector is nonzero.
SparseVector vectorize(const CountedDoc& doc, const WeightModel& model);

const char* to_string(LocalId id);
const char* to_string(GlobalId id);
const char* to_string(ScalingId id);
LocalId parse_local_id(std::string_view text);
GlobalId parse_global_id(std::string_view text);
ScalingId parse_scaling_id(std::string_view text);

} // namespace termweight
