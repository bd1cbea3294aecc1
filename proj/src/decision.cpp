#include "mcthresh/decision.hpp"

#include <string>

#include "mcthresh/error.hpp"

namespace mcthresh {

namespace {

// z - t held exactly as an unevaluated sum hi + lo (Knuth TwoSum).
struct ExactDiff {
    double hi;
    double lo;
};

inline ExactDiff exact_diff(double z, double t) noexcept {
    const double hi = z - t;
    const double zv = hi + t;
    const double tv = zv - hi;
    const double lo = (z - zv) + (tv - t);
    return {hi, lo};
}

// hi is the correctly rounded value of the exact difference and rounding is monotone,
// so ordering on hi first and lo second is the exact ordering.
inline int compare(ExactDiff a, ExactDiff b) noexcept {
    if (a.hi != b.hi) return a.hi < b.hi ? -1 : 1;
    if (a.lo != b.lo) return a.lo < b.lo ? -1 : 1;
    return 0;
}

void require_same_dim(const SimplexPoint& z, const SimplexPoint& tau) {
    if (z.dim() != tau.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "prediction has " + std::to_string(z.dim()) + " classes, threshold has " +
                        std::to_string(tau.dim()));
    }
}

}  // namespace

ClassAssignment classify_natural(std::span<const double> z, std::span<const double> tau) noexcept {
    ClassAssignment out{0, false};
    ExactDiff best = exact_diff(z[0], tau[0]);
    for (std::size_t j = 1; j < z.size(); ++j) {
        const ExactDiff d = exact_diff(z[j], tau[j]);
        const int c = compare(d, best);
        if (c > 0) {
            best = d;
            out = {j, false};
        } else if (c == 0) {
            out.tie = true;
        }
    }
    return out;
}

ClassAssignment classify_natural(const SimplexPoint& z, const SimplexPoint& tau) {
    require_same_dim(z, tau);
    return classify_natural(z.components(), tau.components());
}

ClassAssignment classify_argmax(std::span<const double> z) noexcept {
    ClassAssignment out{0, false};
    double best = z[0];
    for (std::size_t j = 1; j < z.size(); ++j) {
        if (z[j] > best) {
            best = z[j];
            out = {j, false};
        } else if (z[j] == best) {
            out.tie = true;
        }
    }
    return out;
}

ClassAssignment classify_argmax(const SimplexPoint& z) { return classify_argmax(z.components()); }

OvrAssignment assign_ovr(const SimplexPoint& z, const SimplexPoint& tau) {
    require_same_dim(z, tau);
    OvrAssignment out;
    for (std::size_t j = 0; j < z.dim(); ++j) {
        if (z[j] > tau[j]) out.classes.push_back(j);
    }
    return out;
}

}  // namespace mcthresh
