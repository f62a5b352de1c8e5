#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "multizero/model.hpp"
#include "oracles.hpp"

#ifndef MULTIZERO_DATA_DIR
#define MULTIZERO_DATA_DIR "data"
#endif

namespace corpus {

using namespace multizero;

inline std::string data_path(const std::string& name) { return std::string(MULTIZERO_DATA_DIR) + "/" + name; }

inline std::string read(const std::string& name) {
    std::ifstream in(data_path(name));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline AugmentedVerticalSystem hhk_from_network() { return network_to_system(parse_network(read("hhk.crn"))); }
inline AugmentedVerticalSystem hhk_from_matrices() { return parse_system(read("hhk.mat")); }

/// C = (1 -1), M = (a b), no L: kappa1 x^a = kappa2 x^b.
inline AugmentedVerticalSystem univariate(long a, long b) {
    return make_system(RatMatrix{{1, -1}}, IntMatrix{{a, b}}, RatMatrix(0, 1));
}

/// Small systems C = (I | -Pbar) whose Pbar induces a forest, with proportional
/// rows or columns mixed in so that maximal partitions are nontrivial.
inline std::vector<AugmentedVerticalSystem> random_forest_systems(std::size_t count, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<AugmentedVerticalSystem> out;
    std::uniform_int_distribution<int> coin(0, 2);
    std::uniform_int_distribution<int> dim(1, 2);
    while (out.size() < count) {
        const std::size_t rows = static_cast<std::size_t>(dim(rng));
        std::size_t l_bar = static_cast<std::size_t>(dim(rng));
        RatMatrix pbar = oracle::random_matrix(rng, rows, l_bar, -2, 2);
        const int extra = coin(rng);
        if (extra == 1) {
            // Duplicate the first column with a random nonzero factor.
            const Rat f = std::vector<Rat>{Rat(2), Rat(-1), Rat(1, 2), Rat(-2)}[rng() % 4];
            RatMatrix wider(rows, l_bar + 1);
            for (std::size_t i = 0; i < rows; ++i) {
                for (std::size_t j = 0; j < l_bar; ++j) {
                    wider(i, j) = pbar(i, j);
                }
                wider(i, l_bar) = f * pbar(i, 0);
            }
            pbar = wider;
            ++l_bar;
        } else if (extra == 2) {
            // Append twice the first row.
            RatMatrix taller(rows + 1, l_bar);
            for (std::size_t i = 0; i < rows; ++i) {
                for (std::size_t j = 0; j < l_bar; ++j) {
                    taller(i, j) = pbar(i, j);
                }
            }
            for (std::size_t j = 0; j < l_bar; ++j) {
                taller(rows, j) = 2 * pbar(0, j);
            }
            pbar = taller;
        }
        if (!oracle::support_is_forest(pbar)) {
            continue;
        }
        const std::size_t s_bar = pbar.rows();
        const std::size_t n = s_bar + static_cast<std::size_t>(coin(rng) % 2);
        const std::size_t m_bar = s_bar + l_bar;
        RatMatrix c(s_bar, m_bar);
        for (std::size_t i = 0; i < s_bar; ++i) {
            c(i, i) = 1;
            for (std::size_t j = 0; j < l_bar; ++j) {
                c(i, s_bar + j) = -pbar(i, j);
            }
        }
        IntMatrix m(n, m_bar);
        std::uniform_int_distribution<long> entry(0, 2);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < m_bar; ++j) {
                m(i, j) = entry(rng);
            }
        }
        RatMatrix l = oracle::random_matrix(rng, n - s_bar, n, 1, 2);
        try {
            out.push_back(make_system(c, m, l));
        } catch (const Error&) {
        }
    }
    return out;
}

}  // namespace corpus
