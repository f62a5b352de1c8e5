#include "multizero/linalg.hpp"

#include <utility>

namespace multizero {

Echelon rref(const RatMatrix& a) {
    RatMatrix r = a;
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < r.cols() && lead_row < r.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < r.rows() && r(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == r.rows()) {
            continue;
        }
        if (pivot != lead_row) {
            for (std::size_t j = 0; j < r.cols(); ++j) {
                std::swap(r(pivot, j), r(lead_row, j));
            }
        }
        const Rat inv = 1 / r(lead_row, col);
        for (std::size_t j = col; j < r.cols(); ++j) {
            r(lead_row, j) *= inv;
        }
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead_row || r(i, col) == 0) {
                continue;
            }
            const Rat factor = r(i, col);
            for (std::size_t j = col; j < r.cols(); ++j) {
                r(i, j) -= factor * r(lead_row, j);
            }
        }
        pivots.push_back(col);
        ++lead_row;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const RatMatrix& a) { return rref(a).pivot_columns.size(); }

RatMatrix right_kernel(const RatMatrix& a) {
    const auto [r, pivots] = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!is_pivot[j]) {
            free_cols.push_back(j);
        }
    }
    RatMatrix basis(a.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis(free_cols[k], k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            basis(pivots[i], k) = -r(i, free_cols[k]);
        }
    }
    return basis;
}

RatMatrix kernel_basis_principal(const RatMatrix& c) {
    const std::size_t s = c.rows();
    const auto [r, pivots] = rref(c);
    if (pivots.size() < s) {
        throw RankDeficient("coefficient matrix has rank " + std::to_string(pivots.size()) + " < " +
                            std::to_string(s) + " rows");
    }
    for (std::size_t i = 0; i < s; ++i) {
        if (pivots[i] != i) {
            throw NotPrincipal("leading " + std::to_string(s) + "x" + std::to_string(s) +
                               " block of the coefficient matrix is singular");
        }
    }
    const std::size_t l = c.cols() - s;
    RatMatrix basis(c.cols(), l);
    for (std::size_t k = 0; k < l; ++k) {
        for (std::size_t i = 0; i < s; ++i) {
            basis(i, k) = -r(i, s + k);
        }
        basis(s + k, k) = 1;
    }
    return basis;
}

RatMatrix left_kernel(const RatMatrix& n) { return right_kernel(n.transpose()).transpose(); }

PrincipalForm make_principal(const RatMatrix& c) {
    const std::size_t s = c.rows();
    // Incremental echelon basis of the chosen columns, reduced against each other.
    std::vector<std::vector<Rat>> basis;
    std::vector<std::size_t> basis_pivot;
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < c.cols(); ++j) {
        std::vector<Rat> v = c.column(j);
        if (chosen.size() < s) {
            for (std::size_t b = 0; b < basis.size(); ++b) {
                const Rat f = v[basis_pivot[b]];
                if (f != 0) {
                    for (std::size_t i = 0; i < s; ++i) {
                        v[i] -= f * basis[b][i];
                    }
                }
            }
            std::size_t p = 0;
            while (p < s && v[p] == 0) {
                ++p;
            }
            if (p < s) {
                const Rat inv = 1 / v[p];
                for (auto& x : v) {
                    x *= inv;
                }
                for (auto& b : basis) {
                    const Rat f = b[p];
                    if (f != 0) {
                        for (std::size_t i = 0; i < s; ++i) {
                            b[i] -= f * v[i];
                        }
                    }
                }
                basis.push_back(std::move(v));
                basis_pivot.push_back(p);
                chosen.push_back(j);
                continue;
            }
        }
        rest.push_back(j);
    }
    if (chosen.size() < s) {
        throw RankDeficient("coefficient matrix has rank " + std::to_string(chosen.size()) + " < " +
                            std::to_string(s) + " rows");
    }
    std::vector<std::size_t> permutation = chosen;
    permutation.insert(permutation.end(), rest.begin(), rest.end());
    return {c.select_columns(permutation), permutation};
}

bool is_identity_permutation(const std::vector<std::size_t>& permutation) {
    for (std::size_t i = 0; i < permutation.size(); ++i) {
        if (permutation[i] != i) {
            return false;
        }
    }
    return true;
}

}  // namespace multizero
