#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "multizero/rational.hpp"

namespace multizero {

/// Finds y >= 0 with A y = b by an exact phase-I simplex (Bland's rule).
/// Returns nullopt when no such y exists.
std::optional<std::vector<Rat>> nonnegative_solution(const RatMatrix& A, const std::vector<Rat>& b);

/// Number of LP solves performed on the calling thread.
std::uint64_t lp_calls_on_this_thread();

}  // namespace multizero
