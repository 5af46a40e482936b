#include "termweight/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "termweight/error.hpp"
#include "termweight/prng.hpp"
#include "termweight/textio.hpp"

namespace termweight {

namespace {

double sparse_dot(const std::vector<double>& w, const SparseVector& x) {
    double sum = 0.0;
    for (const auto& [index, value] : x.entries) {
        sum += w[index] * value;
    }
    return sum;
}

void sparse_axpy(double scalar, const SparseVector& x, std::vector<double>& w) {
    for (const auto& [index, value] : x.entries) {
        w[index] += scalar * value;
    }
}

void validate(const Dataset& data, const TrainConfig& cfg) {
    if (!(cfg.C > 0.0)) throw ConfigError("svm C must be positive, got " + format_double(cfg.C));
    if (!(cfg.tol > 0.0)) throw ConfigError("svm tol must be positive, got " + format_double(cfg.tol));
    if (cfg.max_iter < 1) throw ConfigError("svm max_iter must be at least 1");
    if (data.rows.size() != data.labels.size()) {
        throw DomainError("dataset rows and labels differ in length");
    }
    bool has_pos = false, has_neg = false;
    for (std::size_t i = 0; i < data.rows.size(); ++i) {
        if (data.labels[i] == 1) has_pos = true;
        else if (data.labels[i] == -1) has_neg = true;
        else throw DomainError("labels must be +1 or -1");
        for (const auto& [index, value] : data.rows[i].entries) {
            if (index >= data.dim) {
                throw DomainError("feature index " + std::to_string(index) + " out of range for dim " +
                                  std::to_string(data.dim));
            }
            if (!std::isfinite(value)) {
                throw DomainError("non-finite feature value in row " + std::to_string(i));
            }
        }
    }
    if (!has_pos || !has_neg) {
        throw DomainError("training data must contain both classes");
    }
}

} // namespace

LinearModel train(const Dataset& data, const TrainConfig& cfg, std::vector<double>* dual_trace) {
    validate(data, cfg);
    const std::size_t l = data.rows.size();

    // L2-loss dual: min 0.5*alpha'(Q + D)alpha - e'alpha with
    // D_ii = 1/(2C) and alpha unbounded above.
    const double diag = 1.0 / (2.0 * cfg.C);

    std::vector<double> w(data.dim, 0.0);
    std::vector<double> alpha(l, 0.0);
    std::vector<double> qd(l);
    for (std::size_t i = 0; i < l; ++i) {
        double sq = 0.0;
        for (const auto& [index, value] : data.rows[i].entries) sq += value * value;
        qd[i] = sq + diag;
    }

    std::vector<std::size_t> order(l);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(cfg.seed);

    for (int pass = 0; pass < cfg.max_iter; ++pass) {
        shuffle_vector(order, rng);
        double max_violation = 0.0;
        for (std::size_t i : order) {
            const double yi = static_cast<double>(data.labels[i]);
            const double g = yi * sparse_dot(w, data.rows[i]) - 1.0 + alpha[i] * diag;
            const double pg = (alpha[i] == 0.0) ? std::min(g, 0.0) : g;
            max_violation = std::max(max_violation, std::fabs(pg));
            if (std::fabs(pg) > 1e-12) {
                const double old = alpha[i];
                alpha[i] = std::max(old - g / qd[i], 0.0);
                sparse_axpy((alpha[i] - old) * yi, data.rows[i], w);
            }
        }
        if (dual_trace) {
            double asq = 0.0, asum = 0.0, wsq = 0.0;
            for (double v : alpha) { asq += v * v; asum += v; }
            for (double v : w) wsq += v * v;
            dual_trace->push_back(0.5 * (wsq + diag * asq) - asum);
        }
        if (max_violation < cfg.tol) break;
    }
    return LinearModel{std::move(w)};
}

double decision(const LinearModel& model, const SparseVector& x) {
    if (!x.entries.empty() && x.entries.back().first >= model.w.size()) {
        throw DomainError("feature index " + std::to_string(x.entries.back().first) +
                          " out of range for model of dim " + std::to_string(model.w.size()));
    }
    return sparse_dot(model.w, x);
}

Label predict(const LinearModel& model, const SparseVector& x) {
    return decision(model, x) >= 0.0 ? Label::Positive : Label::Negative;
}

} // namespace termweight
