#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multizero/cones.hpp"
#include "multizero/rational.hpp"

namespace multizero {

/// sign(a e^x - b e^y) for a, b in {-1, 0, 1}: either a constant or
/// `factor * sign(x - y)` for the variables x, y.
struct ExpComparison {
    std::optional<Sign> constant;
    Sign factor = 0;
    std::size_t x = 0;
    std::size_t y = 0;

    /// Exact sign at a rational point.
    Sign evaluate(const std::vector<Rat>& point) const;
};

ExpComparison compare_exp(Sign a, std::size_t x, Sign b, std::size_t y);

/// Subset of {-1, 0, 1} as a bit mask.
struct SignSet {
    std::uint8_t bits = 0;

    static SignSet of(Sign v) { return {static_cast<std::uint8_t>(1u << (v + 1))}; }
    static SignSet at_most_zero() { return {static_cast<std::uint8_t>(of(-1).bits | of(0).bits)}; }
    bool contains(Sign v) const { return (bits >> (v + 1)) & 1u; }
};

/// Adds linear constraints forcing the comparison's sign into `allowed`.
/// Returns false when that is impossible (constant outside the set).
/// Throws InternalError for a non-convex request such as {-1, 1}.
bool require_sign(ConstraintSystem& sys, const ExpComparison& cmp, SignSet allowed, const std::string& label = {});

}  // namespace multizero
