#pragma once

#include <cstddef>
#include <vector>

#include "mcthresh/confusion.hpp"
#include "mcthresh/simplex.hpp"

namespace mcthresh {

struct RocPoint {
    double fpr{0.0};
    double tpr{0.0};

    friend bool operator==(const RocPoint&, const RocPoint&) = default;
};

/// Per-class (fpr, tpr) points. per_class[j][k] comes from threshold k of the set the
/// cloud was built from, for every class j.
struct RocCloud {
    std::vector<std::vector<RocPoint>> per_class;
    /// Classes with no positive sample; their tpr is 0 by the 0/0 convention.
    std::vector<bool> absent_class;

    std::size_t num_classes() const noexcept { return per_class.size(); }
    std::size_t size() const noexcept { return per_class.empty() ? 0 : per_class.front().size(); }
};

struct DfpSummary {
    std::vector<double> per_class;
    double overall{0.0};
};

/// Step curve from sweeping a scalar threshold over one class's scores.
struct OvrCurve {
    std::size_t class_index{0};
    std::vector<RocPoint> points;
    double auc{0.0};
};

/// Evaluates every threshold under the natural rule. threads = 0 selects the
/// hardware concurrency; output is identical for any worker count.
/// Throws DimensionMismatch.
RocCloud roc_cloud(const LabeledPredictions& data, const ThresholdSet& thresholds,
                   std::size_t threads = 0);

/// Mean L1 distance of each class's cloud to (0, 1), and the mean over classes.
/// Throws EmptyCloud.
DfpSummary dfp(const RocCloud& cloud);

/// One-vs-rest ROC curve of class_index with trapezoidal AUC. Equal scores form a
/// single sweep step. Throws InvalidArgument for a bad index and DegenerateClass when
/// the class has no positives or no negatives.
OvrCurve ovr_curve(const LabeledPredictions& data, std::size_t class_index);

}  // namespace mcthresh
