#include "mcthresh/confusion.hpp"

#include <string>

#include "mcthresh/decision.hpp"
#include "mcthresh/error.hpp"

namespace mcthresh {

namespace {

double ratio(std::uint64_t num, std::uint64_t den) noexcept {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

LabeledPredictions::LabeledPredictions(const std::vector<SimplexPoint>& predictions,
                                       std::vector<std::size_t> labels)
    : labels_(std::move(labels)) {
    if (predictions.empty()) throw Error(ErrorKind::InvalidArgument, "dataset is empty");
    m_ = predictions.front().dim();
    probs_.reserve(predictions.size() * m_);
    for (const auto& p : predictions) {
        if (p.dim() != m_) throw Error(ErrorKind::DimensionMismatch, "predictions mix class counts");
        probs_.insert(probs_.end(), p.components().begin(), p.components().end());
    }
    if (labels_.size() != predictions.size()) {
        throw Error(ErrorKind::DimensionMismatch, "got " + std::to_string(predictions.size()) +
                                                      " predictions but " +
                                                      std::to_string(labels_.size()) + " labels");
    }
    validate(kDefaultSumTolerance);
}

LabeledPredictions::LabeledPredictions(std::size_t m, std::vector<double> flat,
                                       std::vector<std::size_t> labels, double sum_tolerance)
    : m_(m), probs_(std::move(flat)), labels_(std::move(labels)) {
    if (m_ < 2) throw Error(ErrorKind::DimensionTooSmall, "dataset needs m >= 2");
    if (labels_.empty()) throw Error(ErrorKind::InvalidArgument, "dataset is empty");
    if (probs_.size() != labels_.size() * m_) {
        throw Error(ErrorKind::DimensionMismatch, "probability buffer does not match n * m");
    }
    validate(sum_tolerance);
}

void LabeledPredictions::validate(double sum_tolerance) {
    class_counts_.assign(m_, 0);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        validate_simplex(row(i), sum_tolerance);
        if (labels_[i] >= m_) {
            throw Error(ErrorKind::LabelOutOfRange, "sample " + std::to_string(i) + " has label " +
                                                        std::to_string(labels_[i]) + " >= m = " +
                                                        std::to_string(m_));
        }
        ++class_counts_[labels_[i]];
    }
}

std::string_view to_string(ScoreKind kind) {
    switch (kind) {
        case ScoreKind::Accuracy: return "accuracy";
        case ScoreKind::F1: return "f1";
        case ScoreKind::Precision: return "precision";
        case ScoreKind::Recall: return "recall";
        case ScoreKind::Fpr: return "fpr";
        case ScoreKind::Tnr: return "tnr";
    }
    return "unknown";
}

ScoreKind parse_score_kind(std::string_view name) {
    if (name == "accuracy") return ScoreKind::Accuracy;
    if (name == "f1") return ScoreKind::F1;
    if (name == "precision") return ScoreKind::Precision;
    if (name == "recall" || name == "tpr") return ScoreKind::Recall;
    if (name == "fpr") return ScoreKind::Fpr;
    if (name == "tnr") return ScoreKind::Tnr;
    throw Error(ErrorKind::InvalidArgument, "unknown score kind '" + std::string(name) + "'");
}

std::vector<ClassConfusion> confusion_matrices(const LabeledPredictions& data,
                                               std::span<const double> tau) {
    const std::size_t m = data.num_classes();
    const std::size_t n = data.size();
    // Only tp and fp are accumulated; fn and tn follow from the class counts.
    std::vector<std::uint64_t> predicted(m, 0);
    std::vector<std::uint64_t> correct(m, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t c = classify_natural(data.row(i), tau).class_index;
        ++predicted[c];
        correct[c] += (c == data.label(i));
    }
    std::vector<ClassConfusion> out(m);
    const auto& counts = data.class_counts();
    for (std::size_t j = 0; j < m; ++j) {
        auto& cm = out[j];
        cm.tp = correct[j];
        cm.fp = predicted[j] - correct[j];
        cm.fn = counts[j] - correct[j];
        cm.tn = n - cm.tp - cm.fp - cm.fn;
    }
    return out;
}

std::vector<ClassConfusion> confusion_matrices(const LabeledPredictions& data, const SimplexPoint& tau) {
    if (tau.dim() != data.num_classes()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "threshold has " + std::to_string(tau.dim()) + " components, data has " +
                        std::to_string(data.num_classes()) + " classes");
    }
    return confusion_matrices(data, tau.components());
}

double score(const ClassConfusion& cm, ScoreKind kind) noexcept {
    switch (kind) {
        case ScoreKind::Accuracy: return ratio(cm.tp + cm.tn, cm.total());
        case ScoreKind::F1: return ratio(2 * cm.tp, 2 * cm.tp + cm.fp + cm.fn);
        case ScoreKind::Precision: return ratio(cm.tp, cm.tp + cm.fp);
        case ScoreKind::Recall: return ratio(cm.tp, cm.tp + cm.fn);
        case ScoreKind::Fpr: return ratio(cm.fp, cm.fp + cm.tn);
        case ScoreKind::Tnr: return cm.fp + cm.tn == 0 ? 0.0 : 1.0 - ratio(cm.fp, cm.fp + cm.tn);
    }
    return 0.0;
}

MacroScore macro_from_confusions(const std::vector<ClassConfusion>& cms, ScoreKind kind) {
    MacroScore out;
    out.per_class.reserve(cms.size());
    double sum = 0.0;
    for (const auto& cm : cms) {
        out.per_class.push_back(score(cm, kind));
        sum += out.per_class.back();
    }
    out.mean = sum / static_cast<double>(cms.size());
    return out;
}

MacroScore macro_score(const LabeledPredictions& data, const SimplexPoint& tau, ScoreKind kind) {
    return macro_from_confusions(confusion_matrices(data, tau), kind);
}

}  // namespace mcthresh
