#include "mcthresh/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "mcthresh/error.hpp"

namespace mcthresh {

namespace {

// Exact match, so the barycenter entry scores exactly like plain argmax.
bool is_barycenter(const SimplexPoint& p) {
    const double c = 1.0 / static_cast<double>(p.dim());
    return std::all_of(p.components().begin(), p.components().end(),
                       [c](double x) { return x == c; });
}

}  // namespace

void validate_simplex(std::span<const double> components, double sum_tolerance) {
    if (components.size() < 2) {
        throw Error(ErrorKind::DimensionTooSmall,
                    "simplex point needs at least 2 components, got " +
                        std::to_string(components.size()));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const double x = components[i];
        // NaN fails this test too.
        if (!(x >= 0.0)) {
            throw Error(ErrorKind::NegativeComponent,
                        "component " + std::to_string(i) + " is negative: " + std::to_string(x));
        }
        sum += x;
    }
    if (!(std::abs(sum - 1.0) <= sum_tolerance)) {
        throw Error(ErrorKind::SumNotOne,
                    "components sum to " + std::to_string(sum) + ", expected 1");
    }
}

SimplexPoint::SimplexPoint(std::vector<double> components, double sum_tolerance)
    : components_(std::move(components)) {
    validate_simplex(components_, sum_tolerance);
}

SimplexPoint SimplexPoint::barycenter(std::size_t m) {
    return SimplexPoint(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

SimplexPoint SimplexPoint::vertex(std::size_t m, std::size_t j) {
    if (j >= m) throw Error(ErrorKind::InvalidArgument, "vertex index out of range");
    std::vector<double> c(m, 0.0);
    c[j] = 1.0;
    return SimplexPoint(std::move(c));
}

double SimplexPoint::l1_distance(std::span<const double> other) const {
    if (other.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "l1_distance: dimension mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) d += std::abs(components_[i] - other[i]);
    return d;
}

SimplexPoint make_point(std::vector<double> components, double sum_tolerance) {
    return SimplexPoint(std::move(components), sum_tolerance);
}

bool lex_less(std::span<const double> a, std::span<const double> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

ThresholdSet::ThresholdSet(std::vector<SimplexPoint> points, Provenance provenance)
    : points_(std::move(points)), provenance_(provenance) {
    if (points_.empty()) throw Error(ErrorKind::EmptyThresholdSet, "threshold set is empty");
    const std::size_t m = points_.front().dim();
    for (const auto& p : points_) {
        if (p.dim() != m) throw Error(ErrorKind::DimensionMismatch, "threshold set mixes dimensions");
    }
    for (std::size_t k = 0; k < points_.size(); ++k) {
        if (is_barycenter(points_[k])) {
            barycenter_index_ = k;
            return;
        }
    }
    points_.push_back(SimplexPoint::barycenter(m));
    barycenter_index_ = points_.size() - 1;
    barycenter_appended_ = true;
}

std::uint64_t grid_size(std::size_t m, std::uint64_t k, std::uint64_t cap) {
    if (m < 2) throw Error(ErrorKind::DimensionTooSmall, "grid needs m >= 2");
    if (k < 1) throw Error(ErrorKind::InvalidArgument, "grid needs resolution k >= 1");
    // C(k+r, r) with r = m-1, built as a running product of exact binomials C(k+i, i).
    const std::uint64_t r = m - 1;
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        std::uint64_t scaled = 0;
        const bool wrapped = __builtin_add_overflow(k, i, &scaled) || __builtin_mul_overflow(c, scaled, &scaled);
        if (!wrapped) c = scaled / i;
        if (wrapped || c > cap) {
            throw Error(ErrorKind::Overflow, "grid of m=" + std::to_string(m) + ", k=" +
                                                 std::to_string(k) + " exceeds cap " +
                                                 std::to_string(cap));
        }
    }
    return c;
}

ThresholdSet grid(std::size_t m, std::uint64_t k, std::uint64_t cap) {
    const std::uint64_t count = grid_size(m, k, cap);
    std::vector<SimplexPoint> points;
    points.reserve(count + 1);

    const double kd = static_cast<double>(k);
    // Ascending lexicographic walk over compositions; the last part absorbs the remainder.
    std::vector<std::uint64_t> comp(m, 0);
    comp[m - 1] = k;
    std::vector<double> coords(m);
    while (true) {
        for (std::size_t i = 0; i < m; ++i) coords[i] = static_cast<double>(comp[i]) / kd;
        points.emplace_back(coords);

        // Successor: the rightmost position i < m-1 whose suffix is non-empty grows by one.
        std::uint64_t tail = comp[m - 1];
        std::size_t i = m - 2;
        while (true) {
            if (tail > 0) break;
            if (i == 0) return ThresholdSet(std::move(points), {SamplerKind::Grid, k, 0, 0});
            tail += comp[i];
            comp[i] = 0;
            --i;
        }
        // comp[i+1..m-1] currently sums to tail; bump comp[i] and put the rest at the end.
        for (std::size_t j = i + 1; j < m; ++j) comp[j] = 0;
        ++comp[i];
        comp[m - 1] = tail - 1;
    }
}

ThresholdSet dirichlet_sample(std::size_t m, std::uint64_t count, std::uint64_t seed) {
    if (m < 2) throw Error(ErrorKind::DimensionTooSmall, "dirichlet_sample needs m >= 2");
    if (count < 1) throw Error(ErrorKind::InvalidArgument, "dirichlet_sample needs count >= 1");
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> expo(1.0);
    std::vector<SimplexPoint> points;
    points.reserve(count + 1);
    std::vector<double> draw(m);
    for (std::uint64_t s = 0; s < count; ++s) {
        double total = 0.0;
        for (auto& x : draw) {
            x = expo(rng);
            total += x;
        }
        for (auto& x : draw) x /= total;
        points.emplace_back(draw);
    }
    return ThresholdSet(std::move(points), {SamplerKind::Dirichlet, 0, count, seed});
}

ThresholdSet explicit_thresholds(std::vector<SimplexPoint> points) {
    return ThresholdSet(std::move(points), {SamplerKind::Explicit, 0, 0, 0});
}

}  // namespace mcthresh
