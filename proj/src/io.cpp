#include "mcthresh/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "mcthresh/error.hpp"

namespace mcthresh::io {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

bool parse_double(std::string_view s, double& out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

// Header of the form <prefix>0,<prefix>1,...; returns the column count.
std::size_t check_indexed_header(const std::vector<std::string_view>& fields, std::size_t count,
                                 char prefix, const std::string& what) {
    if (count < 2) {
        throw ParseError(ErrorKind::MalformedHeader, 1, ErrorKind::DimensionTooSmall,
                         what + " header needs at least two " + prefix + "-columns");
    }
    for (std::size_t i = 0; i < count; ++i) {
        const std::string expected = prefix + std::to_string(i);
        if (fields[i] != expected) {
            throw ParseError(ErrorKind::MalformedHeader, 1, ErrorKind::MalformedHeader,
                             what + " header column " + std::to_string(i + 1) + " is '" +
                                 std::string(fields[i]) + "', expected '" + expected + "'");
        }
    }
    return count;
}

ParseError row_error(std::size_t line, ErrorKind cause, const std::string& msg) {
    return ParseError(ErrorKind::RowValidation, line, cause,
                      "line " + std::to_string(line) + ": " + msg);
}

std::vector<double> parse_row_values(const std::vector<std::string_view>& fields, std::size_t count,
                                     std::size_t line) {
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (!parse_double(fields[i], values[i])) {
            throw row_error(line, ErrorKind::InvalidArgument,
                            "column " + std::to_string(i + 1) + " is not a number: '" +
                                std::string(fields[i]) + "'");
        }
    }
    try {
        validate_simplex(values);
    } catch (const Error& e) {
        throw row_error(line, e.kind(), std::string(to_string(e.kind())) + ": " + e.what());
    }
    return values;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
    return out;
}

std::string format_9g(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

void write_indexed_header(std::ostream& out, char prefix, std::size_t m) {
    for (std::size_t i = 0; i < m; ++i) out << (i ? "," : "") << prefix << i;
}

void write_values(std::ostream& out, std::span<const double> xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << format_double(xs[i]);
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

LabeledPredictions parse_predictions(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(ErrorKind::MalformedHeader, 1, ErrorKind::MalformedHeader,
                         "predictions file is empty");
    }
    const auto header = split(line);
    if (header.empty() || header.back() != "label") {
        throw ParseError(ErrorKind::MalformedHeader, 1, ErrorKind::MalformedHeader,
                         "predictions header must end with 'label'");
    }
    const std::size_t m = check_indexed_header(header, header.size() - 1, 'p', "predictions");

    std::vector<double> flat;
    std::vector<std::size_t> labels;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split(line);
        if (fields.size() != m + 1) {
            throw row_error(line_no, ErrorKind::DimensionMismatch,
                            "expected " + std::to_string(m + 1) + " fields, got " +
                                std::to_string(fields.size()));
        }
        const auto values = parse_row_values(fields, m, line_no);
        const std::string_view label_text = fields[m];
        long long label = 0;
        const auto [ptr, ec] =
            std::from_chars(label_text.data(), label_text.data() + label_text.size(), label);
        if (ec != std::errc() || ptr != label_text.data() + label_text.size() || label_text.empty()) {
            throw row_error(line_no, ErrorKind::InvalidArgument,
                            "label is not an integer: '" + std::string(label_text) + "'");
        }
        if (label < 0 || static_cast<unsigned long long>(label) >= m) {
            throw ParseError(ErrorKind::LabelOutOfRange, line_no, ErrorKind::LabelOutOfRange,
                             "line " + std::to_string(line_no) + ": label " + std::to_string(label) +
                                 " outside [0, " + std::to_string(m) + ")");
        }
        flat.insert(flat.end(), values.begin(), values.end());
        labels.push_back(static_cast<std::size_t>(label));
    }
    if (labels.empty()) {
        throw ParseError(ErrorKind::RowValidation, line_no, ErrorKind::InvalidArgument,
                         "predictions file has no data rows");
    }
    return LabeledPredictions(m, std::move(flat), std::move(labels));
}

LabeledPredictions parse_predictions(const std::string& path) {
    auto in = open_in(path);
    return parse_predictions(in);
}

void write_predictions(std::ostream& out, const LabeledPredictions& data) {
    const std::size_t m = data.num_classes();
    write_indexed_header(out, 'p', m);
    out << ",label\n";
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto row = data.row(i);
        for (std::size_t j = 0; j < m; ++j) out << format_9g(row[j]) << ',';
        out << data.label(i) << '\n';
    }
}

void write_predictions(const std::string& path, const LabeledPredictions& data) {
    auto out = open_out(path);
    write_predictions(out, data);
    if (!out) throw Error(ErrorKind::Io, "failed writing '" + path + "'");
}

ThresholdSet parse_thresholds(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(ErrorKind::MalformedHeader, 1, ErrorKind::MalformedHeader,
                         "thresholds file is empty");
    }
    const auto header = split(line);
    const std::size_t m = check_indexed_header(header, header.size(), 't', "thresholds");
    std::vector<SimplexPoint> points;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split(line);
        if (fields.size() != m) {
            throw row_error(line_no, ErrorKind::DimensionMismatch,
                            "expected " + std::to_string(m) + " fields, got " +
                                std::to_string(fields.size()));
        }
        points.emplace_back(parse_row_values(fields, m, line_no));
    }
    if (points.empty()) {
        throw ParseError(ErrorKind::RowValidation, line_no, ErrorKind::EmptyThresholdSet,
                         "thresholds file has no data rows");
    }
    return explicit_thresholds(std::move(points));
}

ThresholdSet parse_thresholds(const std::string& path) {
    auto in = open_in(path);
    return parse_thresholds(in);
}

void write_thresholds(std::ostream& out, const ThresholdSet& thresholds) {
    write_indexed_header(out, 't', thresholds.dim());
    out << '\n';
    for (const auto& p : thresholds) {
        write_values(out, p.components());
        out << '\n';
    }
}

void write_landscape(std::ostream& out, const TuningReport& report) {
    const std::size_t m = report.best_threshold.dim();
    write_indexed_header(out, 't', m);
    out << ",macro,";
    write_indexed_header(out, 's', m);
    out << '\n';
    for (const auto& e : report.entries) {
        write_values(out, e.threshold.components());
        out << ',' << format_double(e.macro) << ',';
        write_values(out, e.per_class);
        out << '\n';
    }
}

void write_cloud(std::ostream& out, const RocCloud& cloud, const ThresholdSet& thresholds) {
    const std::size_t m = cloud.num_classes();
    out << "class,k,";
    write_indexed_header(out, 't', m);
    out << ",fpr,tpr\n";
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < cloud.size(); ++k) {
            out << j << ',' << k << ',';
            write_values(out, thresholds[k].components());
            const auto& p = cloud.per_class[j][k];
            out << ',' << format_double(p.fpr) << ',' << format_double(p.tpr) << '\n';
        }
    }
}

void write_ovr_curves(std::ostream& out, const std::vector<OvrCurve>& curves) {
    out << "class,fpr,tpr\n";
    for (const auto& c : curves) {
        for (const auto& p : c.points) {
            out << c.class_index << ',' << format_double(p.fpr) << ',' << format_double(p.tpr) << '\n';
        }
    }
}

nlohmann::json make_report(const ReportMeta& meta, const TuningReport* tuning,
                           const DfpSummary* dfp_summary, const RocCloud* cloud,
                           const std::vector<std::optional<double>>* ovr_auc,
                           const std::map<std::string, std::string>& artifacts) {
    using nlohmann::json;
    json report;
    report["meta"] = {
        {"m", meta.m},
        {"n", meta.n},
        {"score_kind", meta.score_kind},
        {"sampler", meta.sampler},
        {"M", meta.thresholds},
        {"seed", meta.seed ? json(*meta.seed) : json(nullptr)},
        {"resolution", meta.resolution ? json(*meta.resolution) : json(nullptr)},
    };
    if (tuning) {
        const auto t = tuning->best_threshold.components();
        report["tuning"] = {
            {"best_threshold", std::vector<double>(t.begin(), t.end())},
            {"best_score", tuning->best_score},
            {"best_per_class", tuning->best_per_class},
            {"baseline_argmax_score", tuning->baseline_argmax_score},
            {"delta", tuning->best_score - tuning->baseline_argmax_score},
            {"landscape_retained", !tuning->streamed},
        };
    } else {
        report["tuning"] = nullptr;
    }
    if (dfp_summary) {
        report["dfp"] = {{"per_class", dfp_summary->per_class}, {"overall", dfp_summary->overall}};
        if (cloud) {
            std::vector<std::size_t> absent;
            for (std::size_t j = 0; j < cloud->absent_class.size(); ++j) {
                if (cloud->absent_class[j]) absent.push_back(j);
            }
            report["dfp"]["absent_classes"] = absent;
        }
    } else {
        report["dfp"] = nullptr;
    }
    if (ovr_auc) {
        json aucs = json::array();
        for (const auto& a : *ovr_auc) aucs.push_back(a ? json(*a) : json(nullptr));
        report["ovr_auc"] = aucs;
    } else {
        report["ovr_auc"] = nullptr;
    }
    report["artifacts"] = artifacts;
    return report;
}

}  // namespace mcthresh::io
