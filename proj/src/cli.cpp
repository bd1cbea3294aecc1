#include "mcthresh/cli.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcthresh/confusion.hpp"
#include "mcthresh/error.hpp"
#include "mcthresh/io.hpp"
#include "mcthresh/roc.hpp"
#include "mcthresh/simplex.hpp"
#include "mcthresh/synth.hpp"
#include "mcthresh/tuning.hpp"

namespace mcthresh::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataOptions {
    std::string input;
    std::string metric{"f1"};
    std::size_t threads{0};
};

struct SamplerOptions {
    std::string sampler{"grid"};
    std::optional<std::uint64_t> resolution;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    std::string thresholds_file;
};

void add_data_options(CLI::App& cmd, DataOptions& opts) {
    cmd.add_option("--input,-i", opts.input, "Predictions CSV (p0..p{m-1},label)")->required();
    cmd.add_option("--metric", opts.metric, "accuracy|f1|precision|recall|fpr|tnr")
        ->capture_default_str();
    cmd.add_option("--threads", opts.threads, "Worker threads (0 = all cores)")->capture_default_str();
}

void add_sampler_options(CLI::App& cmd, SamplerOptions& opts) {
    cmd.add_option("--sampler", opts.sampler, "grid|dirichlet|explicit")
        ->check(CLI::IsMember({"grid", "dirichlet", "explicit"}))
        ->capture_default_str();
    cmd.add_option("--resolution,-k", opts.resolution, "Grid resolution k (grid sampler)");
    cmd.add_option("--samples", opts.samples, "Number of random thresholds (dirichlet sampler)");
    cmd.add_option("--seed", opts.seed, "RNG seed (required by dirichlet sampler)");
    cmd.add_option("--thresholds", opts.thresholds_file, "Thresholds CSV (explicit sampler)");
}

void check_sampler(const SamplerOptions& opts) {
    if (opts.sampler == "grid" && !opts.resolution) throw UsageError("--sampler grid requires --resolution");
    if (opts.sampler == "dirichlet") {
        if (!opts.samples) throw UsageError("--sampler dirichlet requires --samples");
        if (!opts.seed) throw UsageError("--sampler dirichlet requires an explicit --seed");
    }
    if (opts.sampler == "explicit" && opts.thresholds_file.empty()) {
        throw UsageError("--sampler explicit requires --thresholds");
    }
}

ThresholdSet make_thresholds(const SamplerOptions& opts, std::size_t m) {
    check_sampler(opts);
    if (opts.sampler == "grid") return grid(m, *opts.resolution);
    if (opts.sampler == "dirichlet") return dirichlet_sample(m, *opts.samples, *opts.seed);
    auto set = io::parse_thresholds(opts.thresholds_file);
    if (set.dim() != m) {
        throw Error(ErrorKind::DimensionMismatch,
                    "thresholds file has " + std::to_string(set.dim()) + " columns, data has " +
                        std::to_string(m) + " classes");
    }
    return set;
}

io::ReportMeta make_meta(const LabeledPredictions& data, const DataOptions& d,
                         const SamplerOptions& s, const ThresholdSet& thresholds) {
    io::ReportMeta meta;
    meta.m = data.num_classes();
    meta.n = data.size();
    meta.score_kind = std::string(to_string(parse_score_kind(d.metric)));
    meta.sampler = s.sampler;
    meta.thresholds = thresholds.size();
    if (s.sampler == "dirichlet") meta.seed = s.seed;
    if (s.sampler == "grid") meta.resolution = s.resolution;
    return meta;
}

fs::path prepare_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create output directory '" + dir + "': " + ec.message());
    return fs::path(dir);
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
    return out;
}

bool same_run(const json& a, const json& b) {
    for (const char* key : {"m", "n", "sampler", "M", "seed", "resolution"}) {
        if (!a.contains(key) || !b.contains(key) || a[key] != b[key]) return false;
    }
    return true;
}

// tune and roc write into the same report.json when run on the same data and thresholds.
json merge_report(const fs::path& path, json fresh) {
    std::ifstream in(path);
    if (!in) return fresh;
    json existing = json::parse(in, nullptr, false);
    if (existing.is_discarded() || !existing.is_object() || !existing.contains("meta") ||
        !same_run(existing["meta"], fresh["meta"])) {
        return fresh;
    }
    for (const char* key : {"tuning", "dfp", "ovr_auc"}) {
        if (!fresh[key].is_null()) existing[key] = fresh[key];
    }
    if (!fresh["tuning"].is_null()) existing["meta"]["score_kind"] = fresh["meta"]["score_kind"];
    for (auto& [k, v] : fresh["artifacts"].items()) existing["artifacts"][k] = v;
    return existing;
}

void write_report(const fs::path& path, const json& report) {
    auto out = open_out(path);
    out << report.dump(2) << '\n';
    if (!out) throw Error(ErrorKind::Io, "failed writing '" + path.string() + "'");
}

int cmd_tune(const DataOptions& d, const SamplerOptions& s, const std::string& out_dir, std::ostream& out) {
    const auto kind = parse_score_kind(d.metric);
    check_sampler(s);
    const auto data = io::parse_predictions(d.input);
    const auto thresholds = make_thresholds(s, data.num_classes());
    const auto report = tune(data, thresholds, kind, {.threads = d.threads});

    const auto dir = prepare_out_dir(out_dir);
    std::map<std::string, std::string> artifacts;
    if (!report.streamed) {
        const auto landscape = dir / "landscape.csv";
        auto f = open_out(landscape);
        io::write_landscape(f, report);
        artifacts["landscape_csv"] = landscape.string();
    }
    const auto report_path = dir / "report.json";
    artifacts["report_json"] = report_path.string();
    auto doc = io::make_report(make_meta(data, d, s, thresholds), &report, nullptr, nullptr, nullptr,
                               artifacts);
    doc = merge_report(report_path, std::move(doc));
    write_report(report_path, doc);
    out << doc.dump(2) << '\n';
    return kOk;
}

int cmd_roc(const DataOptions& d, const SamplerOptions& s, const std::string& out_dir, std::ostream& out) {
    check_sampler(s);
    const auto data = io::parse_predictions(d.input);
    const auto thresholds = make_thresholds(s, data.num_classes());
    const auto cloud = roc_cloud(data, thresholds, d.threads);
    const auto summary = dfp(cloud);

    std::vector<OvrCurve> curves;
    std::vector<std::optional<double>> aucs;
    for (std::size_t j = 0; j < data.num_classes(); ++j) {
        try {
            curves.push_back(ovr_curve(data, j));
            aucs.emplace_back(curves.back().auc);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegenerateClass) throw;
            aucs.emplace_back(std::nullopt);
        }
    }

    const auto dir = prepare_out_dir(out_dir);
    std::map<std::string, std::string> artifacts;
    {
        const auto path = dir / "cloud.csv";
        auto f = open_out(path);
        io::write_cloud(f, cloud, thresholds);
        artifacts["cloud_csv"] = path.string();
    }
    {
        const auto path = dir / "ovr.csv";
        auto f = open_out(path);
        io::write_ovr_curves(f, curves);
        artifacts["ovr_csv"] = path.string();
    }
    const auto report_path = dir / "report.json";
    artifacts["report_json"] = report_path.string();
    auto doc = io::make_report(make_meta(data, d, s, thresholds), nullptr, &summary, &cloud, &aucs,
                               artifacts);
    doc = merge_report(report_path, std::move(doc));
    write_report(report_path, doc);
    out << doc.dump(2) << '\n';
    return kOk;
}

SimplexPoint parse_tau(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used == 0 || used != item.size()) {
            throw Error(ErrorKind::InvalidArgument, "--tau component '" + item + "' is not a number");
        }
        values.push_back(v);
    }
    return SimplexPoint(std::move(values));
}

int cmd_eval(const DataOptions& d, const std::string& tau_text, std::ostream& out) {
    const auto kind = parse_score_kind(d.metric);
    const auto tau = parse_tau(tau_text);
    const auto data = io::parse_predictions(d.input);
    if (tau.dim() != data.num_classes()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "--tau has " + std::to_string(tau.dim()) + " components, data has " +
                        std::to_string(data.num_classes()) + " classes");
    }
    const auto s = macro_score(data, tau, kind);
    const auto baseline = macro_score(data, SimplexPoint::barycenter(data.num_classes()), kind);
    const auto t = tau.components();
    json doc = {
        {"tau", std::vector<double>(t.begin(), t.end())},
        {"score_kind", std::string(to_string(kind))},
        {"macro", s.mean},
        {"per_class", s.per_class},
        {"baseline_argmax_score", baseline.mean},
        {"n", data.size()},
    };
    out << doc.dump() << '\n';
    return kOk;
}

int cmd_synth(const std::string& config, const std::string& path, std::optional<std::uint64_t> seed,
              std::ostream& out) {
    auto spec = load_synth_spec(config);
    if (seed) spec.seed = *seed;
    const auto data = generate(spec);
    io::write_predictions(path, data);
    out << "wrote n=" << data.size() << " m=" << data.num_classes() << " to " << path << '\n';
    return kOk;
}

void print_error(std::ostream& err, int code, std::string_view kind, const std::string& message,
                 std::optional<std::size_t> row = std::nullopt) {
    err << "error: code=" << code << " kind=" << kind;
    if (row) err << " row=" << *row;
    err << " message=" << json(message).dump() << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multiclass threshold tuning and simplex ROC analysis", "mcthresh"};
    app.require_subcommand(1);

    DataOptions data_opts;
    SamplerOptions sampler_opts;
    std::string out_dir;
    std::string tau_text;
    std::string config;
    std::string synth_out;
    std::optional<std::uint64_t> synth_seed;
    std::size_t grid_m = 0;
    std::uint64_t grid_k = 0;

    auto* tune_cmd = app.add_subcommand("tune", "Search the threshold maximizing a macro score");
    add_data_options(*tune_cmd, data_opts);
    add_sampler_options(*tune_cmd, sampler_opts);
    tune_cmd->add_option("--out,-o", out_dir, "Output directory")->required();

    auto* roc_cmd = app.add_subcommand("roc", "ROC clouds, DFP and one-vs-rest curves");
    add_data_options(*roc_cmd, data_opts);
    add_sampler_options(*roc_cmd, sampler_opts);
    roc_cmd->add_option("--out,-o", out_dir, "Output directory")->required();

    auto* eval_cmd = app.add_subcommand("eval", "Score a fixed threshold");
    add_data_options(*eval_cmd, data_opts);
    eval_cmd->add_option("--tau", tau_text, "Comma-separated threshold, e.g. 0.2,0.3,0.5")->required();

    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic predictions file");
    synth_cmd->add_option("--config,-c", config, "JSON generator config")->required();
    synth_cmd->add_option("--out,-o", synth_out, "Output predictions CSV")->required();
    synth_cmd->add_option("--seed", synth_seed, "Override the config seed");

    auto* grid_cmd = app.add_subcommand("grid-info", "Print the number of grid thresholds");
    grid_cmd->add_option("-m,--classes", grid_m, "Number of classes")->required();
    grid_cmd->add_option("-k,--resolution", grid_k, "Grid resolution")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        print_error(err, kUsage, "Usage", e.what());
        return kUsage;
    }

    try {
        if (tune_cmd->parsed()) return cmd_tune(data_opts, sampler_opts, out_dir, out);
        if (roc_cmd->parsed()) return cmd_roc(data_opts, sampler_opts, out_dir, out);
        if (eval_cmd->parsed()) return cmd_eval(data_opts, tau_text, out);
        if (synth_cmd->parsed()) return cmd_synth(config, synth_out, synth_seed, out);
        if (grid_cmd->parsed()) {
            out << grid_size(grid_m, grid_k) << '\n';
            return kOk;
        }
    } catch (const UsageError& e) {
        print_error(err, kUsage, "Usage", e.what());
        return kUsage;
    } catch (const ParseError& e) {
        print_error(err, kValidation, to_string(e.kind()), e.what(), e.row());
        return kValidation;
    } catch (const Error& e) {
        const int code = e.kind() == ErrorKind::Io ? kIo : kValidation;
        print_error(err, code, to_string(e.kind()), e.what());
        return code;
    } catch (const std::exception& e) {
        print_error(err, kIo, "Internal", e.what());
        return kIo;
    }
    return kUsage;
}

}  // namespace mcthresh::cli
