#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcthresh/confusion.hpp"
#include "mcthresh/roc.hpp"
#include "mcthresh/simplex.hpp"
#include "mcthresh/tuning.hpp"

namespace mcthresh::io {

// Predictions file: header p0,...,p{m-1},label then one row per sample.

/// Throws ParseError (MalformedHeader, RowValidation, LabelOutOfRange) with the
/// 1-based file line, or Error(Io) when the file cannot be read.
LabeledPredictions parse_predictions(const std::string& path);
LabeledPredictions parse_predictions(std::istream& in);

/// Probabilities with 9 significant digits, so write -> parse -> write is stable.
void write_predictions(std::ostream& out, const LabeledPredictions& data);
void write_predictions(const std::string& path, const LabeledPredictions& data);

// Thresholds file: header t0,...,t{m-1}, one point per row.
ThresholdSet parse_thresholds(std::istream& in);
ThresholdSet parse_thresholds(const std::string& path);
void write_thresholds(std::ostream& out, const ThresholdSet& thresholds);

/// t0..t{m-1},macro,s0..s{m-1}; one row per evaluated threshold.
void write_landscape(std::ostream& out, const TuningReport& report);

/// class,k,t0..t{m-1},fpr,tpr
void write_cloud(std::ostream& out, const RocCloud& cloud, const ThresholdSet& thresholds);

/// class,fpr,tpr
void write_ovr_curves(std::ostream& out, const std::vector<OvrCurve>& curves);

/// Shortest decimal that parses back to the same double.
std::string format_double(double x);

struct ReportMeta {
    std::size_t m{0};
    std::size_t n{0};
    std::string score_kind;
    std::string sampler;
    std::size_t thresholds{0};  // M
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> resolution;
};

/// Report document. Keys: meta, tuning, dfp, ovr_auc, artifacts. Sections not computed
/// are null.
nlohmann::json make_report(const ReportMeta& meta, const TuningReport* tuning,
                           const DfpSummary* dfp_summary, const RocCloud* cloud,
                           const std::vector<std::optional<double>>* ovr_auc,
                           const std::map<std::string, std::string>& artifacts);

}  // namespace mcthresh::io
