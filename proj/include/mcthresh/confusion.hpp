#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mcthresh/simplex.hpp"

namespace mcthresh {

/// n classifier outputs on the simplex paired with integer labels in [0, m).
/// Probabilities are held row-major in one buffer; row(i) views sample i.
class LabeledPredictions {
public:
    LabeledPredictions(const std::vector<SimplexPoint>& predictions, std::vector<std::size_t> labels);

    /// Flat row-major constructor; every row is validated as a simplex point.
    LabeledPredictions(std::size_t m, std::vector<double> flat, std::vector<std::size_t> labels,
                       double sum_tolerance = kDefaultSumTolerance);

    std::size_t size() const noexcept { return labels_.size(); }
    std::size_t num_classes() const noexcept { return m_; }

    std::span<const double> row(std::size_t i) const noexcept {
        return std::span<const double>(probs_).subspan(i * m_, m_);
    }
    std::size_t label(std::size_t i) const noexcept { return labels_[i]; }
    const std::vector<std::size_t>& labels() const noexcept { return labels_; }
    const std::vector<double>& flat() const noexcept { return probs_; }

    /// Number of samples per class, n_j.
    const std::vector<std::uint64_t>& class_counts() const noexcept { return class_counts_; }

private:
    void validate(double sum_tolerance);

    std::size_t m_{0};
    std::vector<double> probs_;
    std::vector<std::size_t> labels_;
    std::vector<std::uint64_t> class_counts_;
};

/// One-vs-rest counts for a single class.
struct ClassConfusion {
    std::uint64_t tn{0};
    std::uint64_t fp{0};
    std::uint64_t fn{0};
    std::uint64_t tp{0};

    std::uint64_t total() const noexcept { return tn + fp + fn + tp; }

    friend bool operator==(const ClassConfusion&, const ClassConfusion&) = default;
};

enum class ScoreKind { Accuracy, F1, Precision, Recall, Fpr, Tnr };

std::string_view to_string(ScoreKind kind);

/// Accepts accuracy, f1, precision, recall, tpr (alias of recall), fpr, tnr.
/// Throws InvalidArgument otherwise.
ScoreKind parse_score_kind(std::string_view name);

/// Per-class counts under the natural rule at tau. Throws DimensionMismatch.
std::vector<ClassConfusion> confusion_matrices(const LabeledPredictions& data, const SimplexPoint& tau);

/// Same, without the dimension check; used by the evaluation loops.
std::vector<ClassConfusion> confusion_matrices(const LabeledPredictions& data,
                                               std::span<const double> tau);

/// Standard binary scores. Any 0/0 ratio evaluates to 0.
double score(const ClassConfusion& cm, ScoreKind kind) noexcept;

struct MacroScore {
    double mean{0.0};
    std::vector<double> per_class;
};

/// Arithmetic mean of score(CM_j, kind) over the m classes.
MacroScore macro_score(const LabeledPredictions& data, const SimplexPoint& tau, ScoreKind kind);

MacroScore macro_from_confusions(const std::vector<ClassConfusion>& cms, ScoreKind kind);

}  // namespace mcthresh
