#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcthresh/confusion.hpp"
#include "mcthresh/simplex.hpp"

namespace mcthresh {

/// Parameters of the synthetic prediction generator.
///
/// A sample of class i first picks a target vertex j from row i of confusion_bias
/// (the identity when absent), then draws its prediction from a Dirichlet with
/// alpha = 1 everywhere plus `concentration` on coordinate j.
struct SynthSpec {
    std::size_t n{1000};
    SimplexPoint priors{SimplexPoint::barycenter(3)};
    double concentration{5.0};
    std::optional<std::vector<std::vector<double>>> confusion_bias;
    std::uint64_t seed{0};

    std::size_t num_classes() const noexcept { return priors.dim(); }
};

/// Throws InvalidArgument or DimensionMismatch on bad parameters.
void validate(const SynthSpec& spec);

/// Deterministic in spec (including seed).
LabeledPredictions generate(const SynthSpec& spec);

/// Reads a JSON object with keys n, priors, concentration, seed and optionally
/// confusion_bias (m rows of m numbers) and m (must equal the length of priors).
SynthSpec synth_spec_from_json(const std::string& text);
SynthSpec load_synth_spec(const std::string& path);

}  // namespace mcthresh
