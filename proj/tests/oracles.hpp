#pragma once

// Independent reference implementations used by the tests.

#include <cstddef>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "multizero/bigfloat.hpp"
#include "multizero/cones.hpp"
#include "multizero/rational.hpp"
#include "multizero/signs.hpp"

namespace oracle {

using multizero::BigFloat;
using multizero::ConstraintSystem;
using multizero::Orientation;
using multizero::Rat;
using multizero::RatMatrix;
using multizero::Relation;
using multizero::Sign;
using multizero::SignMatrix;

/// Union-find cycle test on the bipartite support graph.
inline bool support_is_forest(const RatMatrix& p) {
    const std::size_t s = p.rows();
    std::vector<std::size_t> parent(s + p.cols());
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) {
            if (p(i, j) == 0) {
                continue;
            }
            const auto a = find(i);
            const auto b = find(s + j);
            if (a == b) {
                return false;
            }
            parent[a] = b;
        }
    }
    return true;
}

inline std::vector<std::string> names(const char* prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(prefix + std::to_string(i + 1));
    }
    return out;
}

/// Row-by-row existence of Q with sign(Q) = S and Q mu = 0, decided by Fourier-Motzkin.
inline bool q_exists(const SignMatrix& s, const std::vector<Rat>& mu) {
    const std::size_t l = s.cols();
    for (std::size_t i = 0; i < s.rows(); ++i) {
        ConstraintSystem sys(names("q", l));
        std::vector<Rat> balance(l);
        for (std::size_t j = 0; j < l; ++j) {
            std::vector<Rat> row(l);
            row[j] = 1;
            if (s(i, j) == 0) {
                sys.add(row, Relation::Equal);
            } else {
                row[j] = s(i, j);
                sys.add(row, Relation::Greater);
            }
            balance[j] = mu[j];
        }
        sys.add(balance, Relation::Equal);
        if (!multizero::fourier_motzkin_feasible(sys)) {
            return false;
        }
    }
    return true;
}

/// The explicit row construction: 1/(|J+| mu_j) on positive entries, -1/(|J-| mu_j) on negative ones.
inline RatMatrix construct_q(const SignMatrix& s, const std::vector<Rat>& mu) {
    RatMatrix q(s.rows(), s.cols());
    for (std::size_t i = 0; i < s.rows(); ++i) {
        long pos = 0;
        long neg = 0;
        for (std::size_t j = 0; j < s.cols(); ++j) {
            pos += s(i, j) > 0;
            neg += s(i, j) < 0;
        }
        for (std::size_t j = 0; j < s.cols(); ++j) {
            if (s(i, j) > 0) {
                q(i, j) = Rat(1) / (Rat(pos) * mu[j]);
            } else if (s(i, j) < 0) {
                q(i, j) = Rat(-1) / (Rat(neg) * mu[j]);
            }
        }
    }
    return q;
}

inline RatMatrix oriented(const RatMatrix& p, const Orientation& sigma) {
    RatMatrix out(p.rows(), p.cols());
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) {
            out(i, j) = p(i, j) * sigma.first[j];
        }
    }
    return out;
}

/// rho in D, straight from the definitions of I+, I-, Gamma, with exponentials at 256 bits
/// and the Gamma intersection decided by Fourier-Motzkin.
inline bool in_D(const RatMatrix& p, const Orientation& sigma, const SignMatrix& s, const std::vector<Rat>& rho) {
    const std::size_t rows = p.rows();
    const std::size_t l = p.cols();
    const RatMatrix ps = oriented(p, sigma);
    const auto value = [&](std::size_t j) {
        const long r = sigma.second[j] * sigma.first[j];
        return BigFloat(r, 256) * exp(BigFloat(rho[rows + j], 256));
    };
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<std::size_t> pp, pm, zp, zm, mp, mm;
        for (std::size_t j = 0; j < l; ++j) {
            const int a = multizero::sign_of(ps(i, j));
            const int b = s(i, j);
            if (a > 0 && b > 0) pp.push_back(j);
            if (a > 0 && b < 0) pm.push_back(j);
            if (a == 0 && b > 0) zp.push_back(j);
            if (a == 0 && b < 0) zm.push_back(j);
            if (a < 0 && b > 0) mp.push_back(j);
            if (a < 0 && b < 0) mm.push_back(j);
        }
        const auto max_le_min = [&](const std::vector<std::size_t>& hi, const std::vector<std::size_t>& lo) {
            for (auto a : hi) {
                for (auto b : lo) {
                    if (!(value(a) <= value(b))) {
                        return false;
                    }
                }
            }
            return true;
        };
        const bool plus = pm.empty() && zm.empty() && !pp.empty() && !mm.empty() && max_le_min(pp, mm);
        const bool minus = pp.empty() && zp.empty() && !mp.empty() && !pm.empty() && max_le_min(mp, pm);
        if (plus || minus) {
            active.push_back(i);
        }
    }
    if (active.empty()) {
        return false;
    }
    ConstraintSystem gamma(names("mu", l));
    for (std::size_t j = 0; j < l; ++j) {
        std::vector<Rat> row(l);
        row[j] = 1;
        gamma.add(row, Relation::Greater);
    }
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<Rat> row(ps.row(i).begin(), ps.row(i).end());
        gamma.add(row, Relation::Greater);
    }
    for (auto i : active) {
        std::vector<Rat> row(l);
        for (std::size_t j = 0; j < l; ++j) {
            if (s(i, j) == 0) {
                row[j] = ps(i, j);
            }
        }
        gamma.add(row, Relation::Greater);
    }
    return !multizero::fourier_motzkin_feasible(gamma);
}

inline RatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = d(rng);
        }
    }
    return m;
}

inline Orientation random_orientation(std::mt19937& rng, std::size_t l) {
    std::uniform_int_distribution<int> d(-1, 1);
    Orientation o;
    for (std::size_t k = 0; k < l; ++k) {
        o.first.push_back(static_cast<Sign>(d(rng)));
        o.second.push_back(static_cast<Sign>(d(rng)));
    }
    return o;
}

inline SignMatrix random_signs(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> d(-1, 1);
    SignMatrix s(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            s(i, j) = static_cast<Sign>(d(rng));
        }
    }
    return s;
}

}  // namespace oracle
