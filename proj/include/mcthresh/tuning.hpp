#pragma once

#include <cstddef>
#include <vector>

#include "mcthresh/confusion.hpp"
#include "mcthresh/simplex.hpp"

namespace mcthresh {

struct TuningEntry {
    SimplexPoint threshold;
    double macro{0.0};
    std::vector<double> per_class;
};

struct TuningReport {
    /// One entry per threshold, in ThresholdSet order. Empty when streaming.
    std::vector<TuningEntry> entries;
    bool streamed{false};
    std::size_t evaluated{0};

    SimplexPoint best_threshold;
    std::size_t best_index{0};
    double best_score{0.0};
    std::vector<double> best_per_class;
    ScoreKind score_kind{ScoreKind::F1};
    double baseline_argmax_score{0.0};
};

struct TuneOptions {
    /// Worker threads; 0 selects the hardware concurrency.
    std::size_t threads{0};
    /// Landscapes larger than this are not retained; only the running best is kept.
    std::size_t max_entries{10'000'000};
};

/// Exhaustive search for the threshold maximizing the macro score.
///
/// Score ties are broken by smallest L1 distance to the barycenter, then by the
/// lexicographically smallest threshold. That order is total, so the result does not
/// depend on evaluation order or worker count.
///
/// Throws DimensionMismatch when the thresholds and data disagree on m.
TuningReport tune(const LabeledPredictions& data, const ThresholdSet& thresholds, ScoreKind kind,
                  const TuneOptions& options = {});

}  // namespace mcthresh
