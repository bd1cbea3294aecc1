#include "mcthresh/synth.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "mcthresh/error.hpp"

namespace mcthresh {

void validate(const SynthSpec& spec) {
    const std::size_t m = spec.num_classes();
    if (spec.n < 1) throw Error(ErrorKind::InvalidArgument, "synth: n must be >= 1");
    if (!(spec.concentration > 0.0) || !std::isfinite(spec.concentration)) {
        throw Error(ErrorKind::InvalidArgument, "synth: concentration must be positive and finite");
    }
    if (spec.confusion_bias) {
        const auto& bias = *spec.confusion_bias;
        if (bias.size() != m) {
            throw Error(ErrorKind::DimensionMismatch, "synth: confusion_bias needs m rows");
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (bias[i].size() != m) {
                throw Error(ErrorKind::DimensionMismatch,
                            "synth: confusion_bias row " + std::to_string(i) + " needs m entries");
            }
            try {
                validate_simplex(bias[i]);
            } catch (const Error& e) {
                throw Error(ErrorKind::InvalidArgument,
                            "synth: confusion_bias row " + std::to_string(i) + ": " + e.what());
            }
        }
    }
}

LabeledPredictions generate(const SynthSpec& spec) {
    validate(spec);
    const std::size_t m = spec.num_classes();
    std::mt19937_64 rng(spec.seed);

    const auto priors = spec.priors.components();
    std::discrete_distribution<std::size_t> label_dist(priors.begin(), priors.end());
    std::vector<std::discrete_distribution<std::size_t>> target_dist;
    if (spec.confusion_bias) {
        for (const auto& row : *spec.confusion_bias) target_dist.emplace_back(row.begin(), row.end());
    }
    std::gamma_distribution<double> unit_gamma(1.0, 1.0);
    std::gamma_distribution<double> peak_gamma(1.0 + spec.concentration, 1.0);

    std::vector<double> flat(spec.n * m);
    std::vector<std::size_t> labels(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        const std::size_t label = label_dist(rng);
        const std::size_t target = target_dist.empty() ? label : target_dist[label](rng);
        double* row = flat.data() + i * m;
        double total = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            row[k] = k == target ? peak_gamma(rng) : unit_gamma(rng);
            total += row[k];
        }
        for (std::size_t k = 0; k < m; ++k) row[k] /= total;
        labels[i] = label;
    }
    return LabeledPredictions(m, std::move(flat), std::move(labels));
}

SynthSpec synth_spec_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("synth config: ") + e.what());
    }
    try {
        SynthSpec spec{.n = j.at("n").get<std::size_t>(),
                       .priors = SimplexPoint(j.at("priors").get<std::vector<double>>()),
                       .concentration = j.at("concentration").get<double>(),
                       .confusion_bias = std::nullopt,
                       .seed = j.at("seed").get<std::uint64_t>()};
        if (j.contains("confusion_bias") && !j["confusion_bias"].is_null()) {
            spec.confusion_bias = j["confusion_bias"].get<std::vector<std::vector<double>>>();
        }
        if (j.contains("m") && j["m"].get<std::size_t>() != spec.num_classes()) {
            throw Error(ErrorKind::DimensionMismatch, "synth config: m disagrees with priors");
        }
        validate(spec);
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("synth config: ") + e.what());
    }
}

SynthSpec load_synth_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open synth config '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return synth_spec_from_json(buf.str());
}

}  // namespace mcthresh
