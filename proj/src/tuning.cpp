#include "mcthresh/tuning.hpp"

#include <optional>
#include <string>

#include "mcthresh/error.hpp"
#include "parallel.hpp"

namespace mcthresh {

namespace {

struct Candidate {
    std::size_t index{0};
    double score{0.0};
    double l1_to_center{0.0};
};

// True when a should be preferred over b.
bool better(const Candidate& a, const Candidate& b, const ThresholdSet& thresholds) {
    if (a.score != b.score) return a.score > b.score;
    if (a.l1_to_center != b.l1_to_center) return a.l1_to_center < b.l1_to_center;
    const auto ta = thresholds[a.index].components();
    const auto tb = thresholds[b.index].components();
    if (lex_less(ta, tb)) return true;
    if (lex_less(tb, ta)) return false;
    return a.index < b.index;
}

}  // namespace

TuningReport tune(const LabeledPredictions& data, const ThresholdSet& thresholds, ScoreKind kind,
                  const TuneOptions& options) {
    const std::size_t m = data.num_classes();
    if (thresholds.dim() != m) {
        throw Error(ErrorKind::DimensionMismatch,
                    "thresholds have " + std::to_string(thresholds.dim()) +
                        " components, data has " + std::to_string(m) + " classes");
    }
    const std::size_t count = thresholds.size();
    const bool keep = count <= options.max_entries;
    const auto center = SimplexPoint::barycenter(m);

    std::vector<MacroScore> scores(keep ? count : 0);
    const std::size_t workers =
        std::max<std::size_t>(1, std::min(detail::resolve_threads(options.threads), count));
    std::vector<std::optional<Candidate>> local_best(workers);

    detail::parallel_chunks(count, workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
        std::optional<Candidate> best;
        for (std::size_t k = begin; k < end; ++k) {
            const auto& tau = thresholds[k];
            MacroScore s = macro_from_confusions(confusion_matrices(data, tau.components()), kind);
            const Candidate c{k, s.mean, tau.l1_distance(center.components())};
            if (!best || better(c, *best, thresholds)) best = c;
            if (keep) scores[k] = std::move(s);
        }
        local_best[w] = best;
    });

    std::optional<Candidate> best;
    for (const auto& b : local_best) {
        if (b && (!best || better(*b, *best, thresholds))) best = b;
    }

    TuningReport report{.entries = {},
                        .streamed = !keep,
                        .evaluated = count,
                        .best_threshold = thresholds[best->index],
                        .best_index = best->index,
                        .best_score = best->score,
                        .best_per_class = {},
                        .score_kind = kind,
                        .baseline_argmax_score = 0.0};
    if (keep) {
        report.entries.reserve(count);
        for (std::size_t k = 0; k < count; ++k) {
            report.entries.push_back({thresholds[k], scores[k].mean, std::move(scores[k].per_class)});
        }
        report.best_per_class = report.entries[best->index].per_class;
        report.baseline_argmax_score = report.entries[thresholds.barycenter_index()].macro;
    } else {
        report.best_per_class =
            macro_from_confusions(confusion_matrices(data, report.best_threshold), kind).per_class;
        report.baseline_argmax_score = macro_score(data, center, kind).mean;
    }
    return report;
}

}  // namespace mcthresh
