#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mcthresh/simplex.hpp"

namespace mcthresh {

struct ClassAssignment {
    std::size_t class_index{0};
    // Set when several classes share the maximal shifted score; class_index is then
    // the smallest of them.
    bool tie{false};

    friend bool operator==(const ClassAssignment&, const ClassAssignment&) = default;
};

/// Classes j with z^j > tau^j. May be empty or hold several classes.
struct OvrAssignment {
    std::vector<std::size_t> classes;

    friend bool operator==(const OvrAssignment&, const OvrAssignment&) = default;
};

/// Natural rule: class j such that z^j - z^k > tau^j - tau^k for every k != j, i.e. the
/// argmax of z - tau. Shifted scores are compared exactly (no rounding), so with tau at
/// the barycenter the result coincides with classify_argmax bit for bit.
/// Throws DimensionMismatch.
ClassAssignment classify_natural(const SimplexPoint& z, const SimplexPoint& tau);

/// Unchecked span form used in hot loops; sizes must match.
ClassAssignment classify_natural(std::span<const double> z, std::span<const double> tau) noexcept;

ClassAssignment classify_argmax(const SimplexPoint& z);
ClassAssignment classify_argmax(std::span<const double> z) noexcept;

/// One-vs-rest regions, not a partition of the simplex. Throws DimensionMismatch.
OvrAssignment assign_ovr(const SimplexPoint& z, const SimplexPoint& tau);

}  // namespace mcthresh
