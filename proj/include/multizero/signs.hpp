#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "multizero/rational.hpp"
#include "multizero/reduction.hpp"

namespace multizero {

/// 2 x l sign matrix; `first[k]` is sigma_{1k} and `second[k]` is sigma_{2k}.
struct Orientation {
    std::vector<Sign> first;
    std::vector<Sign> second;

    std::size_t size() const { return first.size(); }
    static Orientation positive(std::size_t l);
    bool is_positive() const;

    friend bool operator==(const Orientation&, const Orientation&) = default;
};

using SignMatrix = Matrix<Sign>;

std::string to_string(const Orientation& sigma);
std::string to_string(const SignMatrix& s);

/// Lazily walks the 9^|U2| orientations compatible with the column partition.
/// Columns in U1 are fixed to (1, 1); each U2 column runs through the pairs
/// with entries ordered (+, -, 0), the first U2 column varying slowest.
class OrientationEnumerator {
public:
    explicit OrientationEnumerator(const Reduction& red);
    std::optional<Orientation> next();

private:
    std::vector<std::size_t> free_columns_;
    std::vector<int> digits_;
    std::size_t l_ = 0;
    bool done_ = false;
};

std::vector<Orientation> enumerate_orientations(const Reduction& red);

/// Sign of P_ik (sigma_1k e^{rho_i} - sigma_2k e^{rho_{s+k}}) when it does not
/// depend on rho; nullopt for the free cases sigma_1k = sigma_2k = +-1 with P_ik != 0.
std::optional<Sign> forced_sign(const Rat& p, Sign sigma1, Sign sigma2);

/// Per-row Lambda-sets. First sign: P^sigma_ij, second: S_ij.
struct RowLambda {
    std::vector<std::size_t> plus_plus;
    std::vector<std::size_t> plus_minus;
    std::vector<std::size_t> zero_plus;
    std::vector<std::size_t> zero_minus;
    std::vector<std::size_t> minus_plus;
    std::vector<std::size_t> minus_minus;
    std::vector<std::size_t> plus_zero;

    /// Lambda_i: every j with S_ij != 0.
    std::vector<std::size_t> all() const;
    /// Lambda_i^{!=}: the four sets where both signs are nonzero.
    std::vector<std::size_t> nonzero() const;
    bool contains(std::size_t j) const;
};

struct LambdaSets {
    std::vector<RowLambda> rows;
};

LambdaSets lambda_sets(const RatMatrix& P, const Orientation& sigma, const SignMatrix& S);

/// The three nonemptiness conditions on the Lambda-sets of every row.
bool is_feasible_sign(const RatMatrix& P, const Orientation& sigma, const SignMatrix& S);

/// S vanishes off the support of P and agrees with every forced sign.
bool respects_forced_signs(const RatMatrix& P, const Orientation& sigma, const SignMatrix& S);

/// Visits every feasible sign matrix consistent with the forced signs, rows
/// top-down and free entries in column order with values (-, 0, +), so S comes
/// out in lexicographic order. Rows are pruned individually since feasibility
/// is row-local. Stops early when the visitor returns false; returns false in
/// that case.
bool enumerate_sign_matrices(const RatMatrix& P, const Orientation& sigma,
                             const std::function<bool(const SignMatrix&)>& visit);

std::vector<SignMatrix> all_sign_matrices(const RatMatrix& P, const Orientation& sigma);

/// Number of free positions (the raw candidate count is 3 to this power).
std::size_t free_position_count(const RatMatrix& P, const Orientation& sigma);

}  // namespace multizero
