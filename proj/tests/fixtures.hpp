#pragma once

#include <vector>

#include "mcthresh/confusion.hpp"
#include "mcthresh/simplex.hpp"

namespace fixtures {

// Five samples, three classes.
inline mcthresh::LabeledPredictions hand_dataset() {
    using mcthresh::SimplexPoint;
    return mcthresh::LabeledPredictions(
        {SimplexPoint({0.6, 0.3, 0.1}), SimplexPoint({0.2, 0.5, 0.3}), SimplexPoint({0.1, 0.8, 0.1}),
         SimplexPoint({0.2, 0.2, 0.6}), SimplexPoint({0.4, 0.3, 0.3})},
        {0, 0, 1, 2, 2});
}

// Every prediction is the vertex of its own label.
inline mcthresh::LabeledPredictions perfect_dataset(const std::vector<std::size_t>& labels, std::size_t m) {
    std::vector<mcthresh::SimplexPoint> preds;
    for (auto y : labels) preds.push_back(mcthresh::SimplexPoint::vertex(m, y));
    return mcthresh::LabeledPredictions(preds, labels);
}

}  // namespace fixtures
