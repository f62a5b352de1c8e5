#include "multizero/lp.hpp"

namespace multizero {

namespace {

thread_local std::uint64_t lp_calls = 0;

}  // namespace

std::uint64_t lp_calls_on_this_thread() { return lp_calls; }

std::optional<std::vector<Rat>> nonnegative_solution(const RatMatrix& a, const std::vector<Rat>& b) {
    ++lp_calls;
    const std::size_t rows = a.rows();
    const std::size_t n = a.cols();
    if (b.size() != rows) {
        throw DimensionMismatch("right-hand side length differs from row count");
    }
    const std::size_t width = n + rows;  // original columns, then one artificial per row
    // Tableau rows: [coefficients | rhs].
    std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(width + 1));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) {
            t[i][j] = flip ? Rat(-a(i, j)) : a(i, j);
        }
        t[i][n + i] = 1;
        t[i][width] = flip ? Rat(-b[i]) : b[i];
        basis[i] = n + i;
    }
    // Reduced costs of the phase-I objective (sum of artificials), minimized.
    std::vector<Rat> cost(width + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cost[j] -= t[i][j];
        }
        cost[width] -= t[i][width];
    }

    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < width; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) {
            break;
        }
        std::size_t leave = rows;
        Rat best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] > 0) {
                Rat ratio = t[i][width] / t[i][enter];
                if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
        }
        if (leave == rows) {
            throw InternalError("phase-I simplex unbounded");
        }
        const Rat pivot = t[leave][enter];
        for (auto& v : t[leave]) {
            v /= pivot;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) {
                continue;
            }
            const Rat factor = t[i][enter];
            for (std::size_t j = 0; j <= width; ++j) {
                if (t[leave][j] != 0) {
                    t[i][j] -= factor * t[leave][j];
                }
            }
        }
        if (cost[enter] != 0) {
            const Rat factor = cost[enter];
            for (std::size_t j = 0; j <= width; ++j) {
                if (t[leave][j] != 0) {
                    cost[j] -= factor * t[leave][j];
                }
            }
        }
        basis[leave] = enter;
    }

    if (cost[width] != 0) {
        return std::nullopt;
    }
    std::vector<Rat> y(n);
    for (std::size_t i = 0; i < rows; ++i) {
        if (basis[i] < n) {
            y[basis[i]] = t[i][width];
        }
    }
    return y;
}

}  // namespace multizero
