#include <doctest.h>

#include <cmath>

#include "mcthresh/decision.hpp"
#include "mcthresh/error.hpp"
#include "mcthresh/synth.hpp"

using namespace mcthresh;

TEST_CASE("generation is a pure function of the spec") {
    SynthSpec spec{.n = 500, .priors = make_point({0.5, 0.3, 0.2}), .concentration = 4.0, .seed = 99};
    const auto a = generate(spec);
    const auto b = generate(spec);
    CHECK(a.flat() == b.flat());
    CHECK(a.labels() == b.labels());
    spec.seed = 100;
    CHECK(generate(spec).flat() != a.flat());
}

TEST_CASE("very sharp predictions are almost always right") {
    const SynthSpec spec{.n = 2000, .priors = SimplexPoint::barycenter(4), .concentration = 1e4, .seed = 3};
    const auto d = generate(spec);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < d.size(); ++i) correct += classify_argmax(d.row(i)).class_index == d.label(i);
    CHECK(static_cast<double>(correct) / static_cast<double>(d.size()) >= 0.99);
}

TEST_CASE("class counts follow the multinomial") {
    const SynthSpec spec{.n = 3000, .priors = SimplexPoint::barycenter(3), .concentration = 2.0, .seed = 12345};
    const auto d = generate(spec);
    const double expected = 1000.0;
    const double sigma = std::sqrt(3000.0 * (1.0 / 3) * (2.0 / 3));
    for (auto c : d.class_counts()) CHECK(std::abs(static_cast<double>(c) - expected) <= 3 * sigma);
}

TEST_CASE("uniform confusion rows give chance-level macro f1") {
    SynthSpec spec{.n = 6000, .priors = SimplexPoint::barycenter(3), .concentration = 5.0, .seed = 8};
    spec.confusion_bias = std::vector<std::vector<double>>(3, std::vector<double>(3, 1.0 / 3));
    const auto d = generate(spec);
    const auto macro = macro_score(d, SimplexPoint::barycenter(3), ScoreKind::F1).mean;
    // Predictions are independent of labels; per-class f1 concentrates near 1/3 with
    // standard deviation well under 0.02 at this size.
    CHECK(std::abs(macro - 1.0 / 3) < 0.03);
}

TEST_CASE("spec validation and json") {
    SynthSpec bad{.priors = SimplexPoint::barycenter(3), .concentration = -1.0};
    CHECK_THROWS_AS(validate(bad), Error);
    bad.concentration = 1.0;
    bad.confusion_bias = std::vector<std::vector<double>>{{1, 0, 0}, {0, 1, 0}};
    CHECK_THROWS_AS(validate(bad), Error);
    bad.confusion_bias = std::vector<std::vector<double>>{{1, 0, 0}, {0, 1, 0}, {0, 0.5, 0.4}};
    CHECK_THROWS_AS(validate(bad), Error);

    const auto spec = synth_spec_from_json(
        R"({"n": 100, "priors": [0.9, 0.05, 0.05], "concentration": 3.0, "seed": 7,
            "confusion_bias": [[0.8, 0.1, 0.1], [0, 1, 0], [0, 0, 1]]})");
    CHECK(spec.n == 100);
    CHECK(spec.num_classes() == 3);
    CHECK(spec.seed == 7);
    CHECK(spec.confusion_bias.has_value());
    CHECK(generate(spec).size() == 100);

    CHECK_THROWS_AS(synth_spec_from_json(R"({"n": 10})"), Error);
    CHECK_THROWS_AS(synth_spec_from_json(R"({"n": 10, "m": 4, "priors": [0.5, 0.5], "concentration": 1, "seed": 1})"),
                    Error);
    CHECK_THROWS_AS(synth_spec_from_json("not json"), Error);
}
