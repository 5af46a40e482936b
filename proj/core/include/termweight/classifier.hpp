#pragma once

#include <cstdint>
#include <vector>

#include "termweight/corpus.hpp"
#include "termweight/weighting.hpp"

namespace termweight {

struct Dataset {
    std::vector<SparseVector> rows;
    std::vector<std::int8_t> labels; // +1 / -1
    std::size_t dim = 0;
};

// Sparse weight vector of the decision function d(x) = w'x. Immutable
// once trained; safe for concurrent scoring.
struct LinearModel {
    std::vector<double> w;

    friend bool operator==(const LinearModel&, const LinearModel&) = default;
};

struct TrainConfig {
    double C = 1.0;       // regularization trade-off
    double tol = 0.1;     // stop when the largest projected-gradient violation in a pass falls below this
    int max_iter = 1000;  // outer-pass cap
    std::uint64_t seed = 1;

    friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

// L2-regularized L2-loss SVM, minimizing
//   0.5*w'w + C * sum_i max(0, 1 - y_i*w'x_i)^2
// by dual coordinate descent with a seeded random coordinate permutation
// each pass (Hsieh et al., ICML 2008, without shrinking). No intercept.
// Deterministic given (data order, cfg). If dual_trace is non-null, the
// dual objective after each pass is appended to it.
LinearModel train(const Dataset& data, const TrainConfig& cfg, std::vector<double>* dual_trace = nullptr);

double decision(const LinearModel& model, const SparseVector& x);

// Positive iff decision(model, x) >= 0; exact zero ties go to Positive.
Label predict(const LinearModel& model, const SparseVector& x);

} // namespace termweight
