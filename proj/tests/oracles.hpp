#pragma once

// Reference implementations for tests. Everything here works on exact rationals
// (GMP) or plain pair enumeration and shares no code path with the library beyond
// the data containers.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <span>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mcthresh/confusion.hpp"
#include "mcthresh/roc.hpp"
#include "mcthresh/simplex.hpp"

namespace oracle {

using mcthresh::ClassConfusion;
using mcthresh::LabeledPredictions;
using mcthresh::SimplexPoint;

inline mpq_class q(double x) { return mpq_class(x); }

// Direct membership test of the natural region: z^j - z^k > tau^j - tau^k for all k != j.
inline bool in_natural_region(std::span<const double> z, std::span<const double> tau, std::size_t j) {
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (k == j) continue;
        if (!(q(z[j]) - q(z[k]) > q(tau[j]) - q(tau[k]))) return false;
    }
    return true;
}

struct Decision {
    std::size_t cls;
    bool tie;
};

// Region membership when some region holds z; on region boundaries, the smallest
// index among the exact maximizers of z - tau.
inline Decision decide(std::span<const double> z, std::span<const double> tau) {
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (in_natural_region(z, tau, j)) members.push_back(j);
    }
    if (members.size() == 1) return {members.front(), false};
    mpq_class best = q(z[0]) - q(tau[0]);
    for (std::size_t j = 1; j < z.size(); ++j) best = std::max(best, mpq_class(q(z[j]) - q(tau[j])));
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (q(z[j]) - q(tau[j]) == best) return {j, true};
    }
    return {0, true};
}

inline std::vector<ClassConfusion> confusions(const LabeledPredictions& data, std::span<const double> tau) {
    const std::size_t m = data.num_classes();
    std::vector<ClassConfusion> out(m);
    for (std::size_t i = 0; i < data.size(); ++i) {
        const std::size_t c = decide(data.row(i), tau).cls;
        const std::size_t y = data.label(i);
        for (std::size_t j = 0; j < m; ++j) {
            const bool pos = y == j;
            const bool hit = c == j;
            if (pos && hit) ++out[j].tp;
            else if (pos) ++out[j].fn;
            else if (hit) ++out[j].fp;
            else ++out[j].tn;
        }
    }
    return out;
}

inline mpq_class ratio(std::uint64_t a, std::uint64_t b) {
    return b == 0 ? mpq_class(0) : mpq_class(static_cast<unsigned long>(a), static_cast<unsigned long>(b));
}

inline mpq_class f1(const ClassConfusion& c) { return ratio(2 * c.tp, 2 * c.tp + c.fp + c.fn); }

// AUC as the fraction of (positive, negative) pairs ranked correctly, ties worth 1/2.
inline double pair_counting_auc(const LabeledPredictions& data, std::size_t j) {
    std::uint64_t twice = 0;
    std::uint64_t pairs = 0;
    for (std::size_t a = 0; a < data.size(); ++a) {
        if (data.label(a) != j) continue;
        for (std::size_t b = 0; b < data.size(); ++b) {
            if (data.label(b) == j) continue;
            const double sa = data.row(a)[j];
            const double sb = data.row(b)[j];
            twice += sa > sb ? 2 : (sa == sb ? 1 : 0);
            ++pairs;
        }
    }
    return static_cast<double>(twice) / (2.0 * static_cast<double>(pairs));
}

struct ReferenceTune {
    std::size_t best_index;
    double best_score;
    std::vector<double> macro;
};

// Scores come from the library's score() so the comparison is bit-for-bit; the counts
// and the selection rule are independent.
template <typename ScoreFn>
ReferenceTune reference_tune(const LabeledPredictions& data, const mcthresh::ThresholdSet& thresholds,
                             ScoreFn&& macro_of) {
    ReferenceTune ref{0, 0.0, {}};
    for (const auto& t : thresholds) ref.macro.push_back(macro_of(confusions(data, t.components())));
    const double top = *std::max_element(ref.macro.begin(), ref.macro.end());
    std::vector<std::size_t> maximizers;
    for (std::size_t k = 0; k < ref.macro.size(); ++k) {
        if (ref.macro[k] == top) maximizers.push_back(k);
    }
    const auto center = SimplexPoint::barycenter(thresholds.dim());
    auto l1 = [&](std::size_t k) {
        double d = 0.0;
        for (std::size_t i = 0; i < center.dim(); ++i) d += std::abs(thresholds[k][i] - center[i]);
        return d;
    };
    double nearest = l1(maximizers.front());
    for (auto k : maximizers) nearest = std::min(nearest, l1(k));
    std::erase_if(maximizers, [&](std::size_t k) { return l1(k) != nearest; });
    ref.best_index = *std::min_element(maximizers.begin(), maximizers.end(), [&](std::size_t a, std::size_t b) {
        const auto ta = thresholds[a].components();
        const auto tb = thresholds[b].components();
        return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
    });
    ref.best_score = top;
    return ref;
}

// Flat Dirichlet draw via normalized exponentials, independent of the library sampler.
template <typename Rng>
std::vector<double> random_simplex(std::size_t m, Rng& rng) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> v(m);
    double s = 0.0;
    for (auto& x : v) s += (x = e(rng));
    for (auto& x : v) x /= s;
    return v;
}

// Random dataset. With coarse = true, probabilities are multiples of 1/8 so ties
// between components and between scores are frequent.
template <typename Rng>
LabeledPredictions random_dataset(std::size_t n, std::size_t m, Rng& rng, bool coarse = false) {
    std::vector<double> flat;
    std::vector<std::size_t> labels;
    std::uniform_int_distribution<std::size_t> label(0, m - 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> row;
        if (coarse) {
            std::vector<unsigned> parts(m, 0);
            std::uniform_int_distribution<std::size_t> pick(0, m - 1);
            for (int u = 0; u < 8; ++u) ++parts[pick(rng)];
            for (auto p : parts) row.push_back(p / 8.0);
        } else {
            row = random_simplex(m, rng);
        }
        flat.insert(flat.end(), row.begin(), row.end());
        labels.push_back(label(rng));
    }
    return LabeledPredictions(m, std::move(flat), std::move(labels));
}

}  // namespace oracle
