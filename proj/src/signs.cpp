#include "multizero/signs.hpp"

#include <algorithm>
#include <sstream>

namespace multizero {

namespace {

constexpr Sign kSignOrder[3] = {1, -1, 0};
constexpr Sign kEntryOrder[3] = {-1, 0, 1};

Sign mul(Sign a, Sign b) { return static_cast<Sign>(a * b); }

}  // namespace

Orientation Orientation::positive(std::size_t l) { return {std::vector<Sign>(l, 1), std::vector<Sign>(l, 1)}; }

bool Orientation::is_positive() const {
    return std::all_of(first.begin(), first.end(), [](Sign v) { return v == 1; }) &&
           std::all_of(second.begin(), second.end(), [](Sign v) { return v == 1; });
}

std::string to_string(const Orientation& sigma) {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        os << (k == 0 ? "" : " ") << int(sigma.first[k]);
    }
    os << "; ";
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        os << (k == 0 ? "" : " ") << int(sigma.second[k]);
    }
    os << ')';
    return os.str();
}

std::string to_string(const SignMatrix& s) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < s.rows(); ++i) {
        for (std::size_t j = 0; j < s.cols(); ++j) {
            os << (j == 0 ? "" : " ") << int(s(i, j));
        }
        if (i + 1 < s.rows()) {
            os << "; ";
        }
    }
    os << ')';
    return os.str();
}

OrientationEnumerator::OrientationEnumerator(const Reduction& red)
    : free_columns_(red.U2()), digits_(free_columns_.size() * 2, 0), l_(red.l()) {}

std::optional<Orientation> OrientationEnumerator::next() {
    if (done_) {
        return std::nullopt;
    }
    Orientation sigma = Orientation::positive(l_);
    for (std::size_t f = 0; f < free_columns_.size(); ++f) {
        sigma.first[free_columns_[f]] = kSignOrder[digits_[2 * f]];
        sigma.second[free_columns_[f]] = kSignOrder[digits_[2 * f + 1]];
    }
    // Advance the odometer; the last digit moves fastest.
    std::size_t pos = digits_.size();
    while (pos > 0) {
        --pos;
        if (++digits_[pos] < 3) {
            break;
        }
        digits_[pos] = 0;
        if (pos == 0) {
            done_ = true;
        }
    }
    if (digits_.empty()) {
        done_ = true;
    }
    return sigma;
}

std::vector<Orientation> enumerate_orientations(const Reduction& red) {
    std::vector<Orientation> out;
    OrientationEnumerator it(red);
    while (auto sigma = it.next()) {
        out.push_back(std::move(*sigma));
    }
    return out;
}

std::optional<Sign> forced_sign(const Rat& p, Sign sigma1, Sign sigma2) {
    const Sign sp = sign_of(p);
    if (sp == 0) {
        return Sign(0);
    }
    if (sigma1 == 0) {
        return static_cast<Sign>(-sp * sigma2);
    }
    if (sigma2 == 0) {
        return mul(sp, sigma1);
    }
    if (sigma1 == -sigma2) {
        return mul(sp, sigma1);
    }
    return std::nullopt;
}

std::vector<std::size_t> RowLambda::all() const {
    std::vector<std::size_t> out;
    for (const auto* set : {&plus_plus, &plus_minus, &minus_minus, &minus_plus, &zero_plus, &zero_minus}) {
        out.insert(out.end(), set->begin(), set->end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> RowLambda::nonzero() const {
    std::vector<std::size_t> out;
    for (const auto* set : {&plus_plus, &plus_minus, &minus_minus, &minus_plus}) {
        out.insert(out.end(), set->begin(), set->end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool RowLambda::contains(std::size_t j) const {
    const auto a = all();
    return std::binary_search(a.begin(), a.end(), j);
}

namespace {

RowLambda row_lambda(const RatMatrix& p, const Orientation& sigma, std::span<const Sign> s_row, std::size_t i) {
    RowLambda row;
    for (std::size_t j = 0; j < p.cols(); ++j) {
        const Sign ps = mul(sign_of(p(i, j)), sigma.first[j]);
        const Sign ss = s_row[j];
        if (ps > 0) {
            (ss > 0 ? row.plus_plus : ss < 0 ? row.plus_minus : row.plus_zero).push_back(j);
        } else if (ps < 0) {
            if (ss > 0) {
                row.minus_plus.push_back(j);
            } else if (ss < 0) {
                row.minus_minus.push_back(j);
            }
        } else if (ss > 0) {
            row.zero_plus.push_back(j);
        } else if (ss < 0) {
            row.zero_minus.push_back(j);
        }
    }
    return row;
}

bool row_is_feasible(const RowLambda& row) {
    const bool has_lambda = !row.plus_plus.empty() || !row.plus_minus.empty() || !row.minus_minus.empty() ||
                            !row.minus_plus.empty() || !row.zero_plus.empty() || !row.zero_minus.empty();
    if (has_lambda) {
        const bool negative = !row.plus_minus.empty() || !row.minus_minus.empty() || !row.zero_minus.empty();
        const bool positive = !row.plus_plus.empty() || !row.minus_plus.empty() || !row.zero_plus.empty();
        if (!negative || !positive) {
            return false;
        }
    }
    return !row.plus_minus.empty() || !row.plus_plus.empty() || !row.plus_zero.empty();
}

}  // namespace

LambdaSets lambda_sets(const RatMatrix& p, const Orientation& sigma, const SignMatrix& s) {
    LambdaSets out;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        out.rows.push_back(row_lambda(p, sigma, s.row(i), i));
    }
    return out;
}

bool is_feasible_sign(const RatMatrix& p, const Orientation& sigma, const SignMatrix& s) {
    for (std::size_t i = 0; i < p.rows(); ++i) {
        if (!row_is_feasible(row_lambda(p, sigma, s.row(i), i))) {
            return false;
        }
    }
    return true;
}

bool respects_forced_signs(const RatMatrix& p, const Orientation& sigma, const SignMatrix& s) {
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) {
            const auto forced = forced_sign(p(i, j), sigma.first[j], sigma.second[j]);
            if (forced && *forced != s(i, j)) {
                return false;
            }
        }
    }
    return true;
}

std::size_t free_position_count(const RatMatrix& p, const Orientation& sigma) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) {
            if (!forced_sign(p(i, j), sigma.first[j], sigma.second[j])) {
                ++count;
            }
        }
    }
    return count;
}

bool enumerate_sign_matrices(const RatMatrix& p, const Orientation& sigma,
                             const std::function<bool(const SignMatrix&)>& visit) {
    const std::size_t s = p.rows();
    const std::size_t l = p.cols();
    // Feasible completions of each row, in enumeration order.
    std::vector<std::vector<std::vector<Sign>>> row_options(s);
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<Sign> base(l, 0);
        std::vector<std::size_t> free;
        for (std::size_t j = 0; j < l; ++j) {
            const auto forced = forced_sign(p(i, j), sigma.first[j], sigma.second[j]);
            if (forced) {
                base[j] = *forced;
            } else {
                free.push_back(j);
            }
        }
        std::vector<int> digits(free.size(), 0);
        while (true) {
            std::vector<Sign> candidate = base;
            for (std::size_t f = 0; f < free.size(); ++f) {
                candidate[free[f]] = kEntryOrder[digits[f]];
            }
            if (row_is_feasible(row_lambda(p, sigma, candidate, i))) {
                row_options[i].push_back(std::move(candidate));
            }
            std::size_t pos = digits.size();
            bool wrapped = true;
            while (pos > 0) {
                --pos;
                if (++digits[pos] < 3) {
                    wrapped = false;
                    break;
                }
                digits[pos] = 0;
            }
            if (wrapped) {
                break;
            }
        }
        if (row_options[i].empty()) {
            return true;
        }
    }

    SignMatrix current(s, l);
    std::vector<std::size_t> choice(s, 0);
    if (s == 0) {
        return visit(current);
    }
    // Odometer over rows; the last row varies fastest.
    while (true) {
        for (std::size_t i = 0; i < s; ++i) {
            const auto& option = row_options[i][choice[i]];
            std::copy(option.begin(), option.end(), current.row(i).begin());
        }
        if (!visit(current)) {
            return false;
        }
        std::size_t pos = s;
        bool wrapped = true;
        while (pos > 0) {
            --pos;
            if (++choice[pos] < row_options[pos].size()) {
                wrapped = false;
                break;
            }
            choice[pos] = 0;
        }
        if (wrapped) {
            return true;
        }
    }
}

std::vector<SignMatrix> all_sign_matrices(const RatMatrix& p, const Orientation& sigma) {
    std::vector<SignMatrix> out;
    enumerate_sign_matrices(p, sigma, [&out](const SignMatrix& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace multizero
