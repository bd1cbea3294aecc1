#include "mcthresh/roc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mcthresh/error.hpp"
#include "parallel.hpp"

namespace mcthresh {

RocCloud roc_cloud(const LabeledPredictions& data, const ThresholdSet& thresholds, std::size_t threads) {
    const std::size_t m = data.num_classes();
    if (thresholds.dim() != m) {
        throw Error(ErrorKind::DimensionMismatch,
                    "thresholds have " + std::to_string(thresholds.dim()) +
                        " components, data has " + std::to_string(m) + " classes");
    }
    const std::size_t count = thresholds.size();
    RocCloud cloud;
    cloud.per_class.assign(m, std::vector<RocPoint>(count));
    cloud.absent_class.resize(m);
    for (std::size_t j = 0; j < m; ++j) cloud.absent_class[j] = data.class_counts()[j] == 0;

    detail::parallel_chunks(count, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const auto cms = confusion_matrices(data, thresholds[k].components());
            for (std::size_t j = 0; j < m; ++j) {
                cloud.per_class[j][k] = {score(cms[j], ScoreKind::Fpr), score(cms[j], ScoreKind::Recall)};
            }
        }
    });
    return cloud;
}

DfpSummary dfp(const RocCloud& cloud) {
    if (cloud.num_classes() == 0 || cloud.size() == 0) {
        throw Error(ErrorKind::EmptyCloud, "ROC cloud has no points");
    }
    DfpSummary out;
    out.per_class.reserve(cloud.num_classes());
    for (const auto& points : cloud.per_class) {
        double sum = 0.0;
        for (const auto& p : points) sum += std::abs(p.fpr) + std::abs(p.tpr - 1.0);
        out.per_class.push_back(sum / static_cast<double>(points.size()));
    }
    out.overall = std::accumulate(out.per_class.begin(), out.per_class.end(), 0.0) /
                  static_cast<double>(out.per_class.size());
    return out;
}

OvrCurve ovr_curve(const LabeledPredictions& data, std::size_t class_index) {
    const std::size_t m = data.num_classes();
    if (class_index >= m) {
        throw Error(ErrorKind::InvalidArgument, "class index " + std::to_string(class_index) +
                                                    " out of range for m = " + std::to_string(m));
    }
    const std::size_t n = data.size();
    const std::uint64_t positives = data.class_counts()[class_index];
    const std::uint64_t negatives = n - positives;
    if (positives == 0 || negatives == 0) {
        throw Error(ErrorKind::DegenerateClass,
                    "class " + std::to_string(class_index) + " has " + std::to_string(positives) +
                        " positives and " + std::to_string(negatives) + " negatives; AUC undefined");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto score_of = [&](std::size_t i) { return data.row(i)[class_index]; };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return score_of(a) > score_of(b); });

    OvrCurve curve;
    curve.class_index = class_index;
    curve.points.push_back({0.0, 0.0});
    const double p = static_cast<double>(positives);
    const double q = static_cast<double>(negatives);
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    double area = 0.0;
    for (std::size_t i = 0; i < n;) {
        const double s = score_of(order[i]);
        std::uint64_t group_tp = 0;
        std::uint64_t group_fp = 0;
        for (; i < n && score_of(order[i]) == s; ++i) {
            if (data.label(order[i]) == class_index) {
                ++group_tp;
            } else {
                ++group_fp;
            }
        }
        // Trapezoid in count space, normalized once at the end.
        area += static_cast<double>(group_fp) * (static_cast<double>(2 * tp + group_tp) / 2.0);
        tp += group_tp;
        fp += group_fp;
        curve.points.push_back({static_cast<double>(fp) / q, static_cast<double>(tp) / p});
    }
    curve.auc = area / (p * q);
    return curve;
}

}  // namespace mcthresh
