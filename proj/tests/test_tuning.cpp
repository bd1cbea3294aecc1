#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "mcthresh/error.hpp"
#include "mcthresh/synth.hpp"
#include "mcthresh/tuning.hpp"
#include "oracles.hpp"

using namespace mcthresh;

namespace {

auto macro_f1 = [](const std::vector<ClassConfusion>& cms) {
    return macro_from_confusions(cms, ScoreKind::F1).mean;
};

}  // namespace

TEST_CASE("perfect predictor selects the barycenter") {
    const auto d = fixtures::perfect_dataset({0, 1, 2, 0, 1}, 3);
    const auto r = tune(d, grid(3, 6), ScoreKind::F1);
    CHECK(r.best_score == 1.0);
    CHECK(r.best_threshold == SimplexPoint::barycenter(3));
    CHECK(r.baseline_argmax_score == 1.0);
}

TEST_CASE("hand dataset on grid(3, 10)") {
    const auto d = fixtures::hand_dataset();
    const auto thresholds = grid(3, 10);
    const auto r = tune(d, thresholds, ScoreKind::F1);
    CHECK(r.entries.size() == thresholds.size());
    CHECK(r.baseline_argmax_score == doctest::Approx(11.0 / 18));
    CHECK(r.best_score >= r.baseline_argmax_score);
    // Exhaustive search in exact rational arithmetic gives 37/45, reached by ten grid
    // points; the one nearest the barycenter is (0.2, 0.5, 0.3).
    CHECK(r.best_score == doctest::Approx(37.0 / 45).epsilon(1e-15));
    CHECK(r.best_threshold == make_point({0.2, 0.5, 0.3}));

    const auto ref = oracle::reference_tune(d, thresholds, macro_f1);
    CHECK(ref.best_index == r.best_index);
    CHECK(ref.best_score == r.best_score);
}

TEST_CASE("result does not depend on worker count") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 5; ++it) {
        const auto d = oracle::random_dataset(60, 3, rng, it % 2 == 1);
        const auto thresholds = grid(3, 15);
        const auto one = tune(d, thresholds, ScoreKind::F1, {.threads = 1});
        const auto ref = oracle::reference_tune(d, thresholds, macro_f1);
        CHECK(one.best_index == ref.best_index);
        for (std::size_t k = 0; k < thresholds.size(); ++k) CHECK(one.entries[k].macro == ref.macro[k]);
        for (std::size_t w : {2u, 3u, 8u, 64u}) {
            const auto many = tune(d, thresholds, ScoreKind::F1, {.threads = w});
            CHECK(many.best_index == one.best_index);
            CHECK(many.best_score == one.best_score);
            for (std::size_t k = 0; k < thresholds.size(); ++k) {
                CHECK(many.entries[k].macro == one.entries[k].macro);
                CHECK(many.entries[k].per_class == one.entries[k].per_class);
            }
        }
    }
}

TEST_CASE("streaming mode keeps only the best") {
    const auto d = fixtures::hand_dataset();
    const auto full = tune(d, grid(3, 10), ScoreKind::F1);
    const auto streamed = tune(d, grid(3, 10), ScoreKind::F1, {.threads = 2, .max_entries = 5});
    CHECK(streamed.streamed);
    CHECK(streamed.entries.empty());
    CHECK(streamed.evaluated == full.entries.size());
    CHECK(streamed.best_index == full.best_index);
    CHECK(streamed.best_score == full.best_score);
    CHECK(streamed.best_per_class == full.best_per_class);
    CHECK(streamed.baseline_argmax_score == full.baseline_argmax_score);
}

TEST_CASE("adding thresholds never lowers the best score") {
    std::mt19937_64 rng(8);
    const auto d = oracle::random_dataset(80, 4, rng);
    std::vector<SimplexPoint> pts;
    double prev = -1.0;
    for (int it = 0; it < 30; ++it) {
        pts.emplace_back(oracle::random_simplex(4, rng));
        const auto r = tune(d, explicit_thresholds(pts), ScoreKind::F1);
        CHECK(r.best_score >= prev);
        CHECK(r.best_score >= r.baseline_argmax_score);
        prev = r.best_score;
    }
}

TEST_CASE("imbalanced synthetic data gains from tuning") {
    SynthSpec spec{.n = 2000, .priors = make_point({0.9, 0.05, 0.05}), .concentration = 2.0, .seed = 11};
    const auto d = generate(spec);
    const auto thresholds = grid(3, 40);
    const auto r = tune(d, thresholds, ScoreKind::F1);
    CHECK(r.best_score > r.baseline_argmax_score);
}

TEST_CASE("tune errors") {
    const auto d = fixtures::hand_dataset();
    try {
        tune(d, grid(4, 3), ScoreKind::F1);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
    try {
        explicit_thresholds({});
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyThresholdSet);
    }
}
