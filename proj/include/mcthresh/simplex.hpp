#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mcthresh {

inline constexpr double kDefaultSumTolerance = 1e-6;
inline constexpr std::uint64_t kDefaultGridCap = 100'000'000;

/// A point of the (m-1)-simplex: m >= 2 nonnegative components summing to one.
/// Used both for classifier outputs and for multiclass thresholds.
class SimplexPoint {
public:
    /// Validates and stores the components unchanged.
    /// Throws DimensionTooSmall, NegativeComponent or SumNotOne.
    explicit SimplexPoint(std::vector<double> components,
                          double sum_tolerance = kDefaultSumTolerance);

    static SimplexPoint barycenter(std::size_t m);
    static SimplexPoint vertex(std::size_t m, std::size_t j);

    std::size_t dim() const noexcept { return components_.size(); }
    double operator[](std::size_t i) const noexcept { return components_[i]; }
    std::span<const double> components() const noexcept { return components_; }

    double l1_distance(std::span<const double> other) const;

    friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;

private:
    std::vector<double> components_;
};

/// Checks a raw component vector without constructing a point.
void validate_simplex(std::span<const double> components,
                      double sum_tolerance = kDefaultSumTolerance);

SimplexPoint make_point(std::vector<double> components,
                        double sum_tolerance = kDefaultSumTolerance);

/// Strict lexicographic order on components.
bool lex_less(std::span<const double> a, std::span<const double> b);

enum class SamplerKind { Grid, Dirichlet, Explicit };

struct Provenance {
    SamplerKind kind{SamplerKind::Explicit};
    std::uint64_t resolution{0};  // grid
    std::uint64_t count{0};       // dirichlet
    std::uint64_t seed{0};        // dirichlet
};

/// Ordered candidate thresholds. Always non-empty and always holds the barycenter.
class ThresholdSet {
public:
    /// Appends the barycenter (1/m, ..., 1/m) unless a point equals it exactly.
    ThresholdSet(std::vector<SimplexPoint> points, Provenance provenance);

    std::size_t size() const noexcept { return points_.size(); }
    std::size_t dim() const noexcept { return points_.front().dim(); }
    const SimplexPoint& operator[](std::size_t k) const noexcept { return points_[k]; }
    const std::vector<SimplexPoint>& points() const noexcept { return points_; }
    const Provenance& provenance() const noexcept { return provenance_; }

    /// Points produced by the generator, i.e. size() minus an appended barycenter.
    std::size_t generated_count() const noexcept { return points_.size() - (barycenter_appended_ ? 1 : 0); }

    /// True when the generator itself produced the barycenter.
    bool barycenter_generated() const noexcept { return !barycenter_appended_; }
    std::size_t barycenter_index() const noexcept { return barycenter_index_; }

    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

private:
    std::vector<SimplexPoint> points_;
    Provenance provenance_;
    bool barycenter_appended_{false};
    std::size_t barycenter_index_{0};
};

/// Number of weak compositions of k into m parts, C(k+m-1, m-1).
/// Throws Overflow when the count exceeds cap.
std::uint64_t grid_size(std::size_t m, std::uint64_t k, std::uint64_t cap = kDefaultGridCap);

/// All points with components c_i / k, c a weak composition of k into m parts, in
/// ascending lexicographic order of the compositions: (0,..,0,k) first, (k,0,..,0) last.
ThresholdSet grid(std::size_t m, std::uint64_t k, std::uint64_t cap = kDefaultGridCap);

/// count points drawn uniformly on the simplex (flat Dirichlet via normalized
/// exponentials), deterministic in (m, count, seed).
ThresholdSet dirichlet_sample(std::size_t m, std::uint64_t count, std::uint64_t seed);

ThresholdSet explicit_thresholds(std::vector<SimplexPoint> points);

}  // namespace mcthresh
