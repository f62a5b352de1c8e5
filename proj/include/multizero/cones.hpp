#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "multizero/rational.hpp"

namespace multizero {

enum class Relation { Equal, Greater, GreaterEqual };

/// Homogeneous constraint `coefficients . x  (=, >, >=)  0`.
struct Constraint {
    std::vector<Rat> coefficients;
    Relation relation = Relation::Equal;
    std::string label;
};

/// Named variables with homogeneous linear constraints.
class ConstraintSystem {
public:
    ConstraintSystem() = default;
    explicit ConstraintSystem(std::vector<std::string> variables) : variables_(std::move(variables)) {}

    std::size_t add_variable(std::string name);
    std::size_t variable_count() const { return variables_.size(); }
    const std::vector<std::string>& variables() const { return variables_; }
    std::optional<std::size_t> find_variable(const std::string& name) const;

    void add(std::vector<Rat> coefficients, Relation relation, std::string label = {});
    /// Sparse helper: pairs of (variable index, coefficient).
    void add_terms(const std::vector<std::pair<std::size_t, Rat>>& terms, Relation relation, std::string label = {});
    /// x_a - x_b (relation) 0.
    void add_difference(std::size_t a, std::size_t b, Relation relation, std::string label = {});
    /// Appends every constraint of `other`, whose variables must be a prefix of ours.
    void append(const ConstraintSystem& other);

    const std::vector<Constraint>& constraints() const { return constraints_; }
    std::size_t strict_count() const;
    bool satisfied_by(const std::vector<Rat>& point) const;
    std::string describe(const Constraint& c) const;

private:
    std::vector<std::string> variables_;
    std::vector<Constraint> constraints_;
};

/// Exact rational point satisfying every constraint, or nullopt.
std::optional<std::vector<Rat>> cone_feasible(const ConstraintSystem& sys);

/// Removes variable `var` (its coefficient column is kept but zero afterwards).
/// Throws BlowupLimit when more than `row_cap` rows would be produced.
ConstraintSystem fourier_motzkin_eliminate(const ConstraintSystem& sys, std::size_t var, std::size_t row_cap = 20000);

/// Feasibility decided by eliminating every variable.
bool fourier_motzkin_feasible(const ConstraintSystem& sys, std::size_t row_cap = 20000);

struct Branch {
    ConstraintSystem system;
    std::string provenance;
};

struct Disjunction {
    std::vector<Branch> branches;
};

using SignVector = std::vector<Sign>;

/// Visits each nonzero sign vector of ker(L) together with an exact kernel
/// point of that sign, coordinates in index order with branch order (+, -, 0).
/// `n` is the ambient dimension (needed when L has no rows). Stops when the
/// visitor returns false.
void for_each_realizable_sign_vector(const RatMatrix& L, std::size_t n,
                                     const std::function<bool(const SignVector&, const std::vector<Rat>&)>& visit);

std::vector<SignVector> realizable_sign_vectors(const RatMatrix& L, std::size_t n);

/// Memoized realizability of sign patterns on leading coordinates of ker(L).
class KernelSignOracle {
public:
    KernelSignOracle(RatMatrix L, std::size_t n);

    /// Kernel point whose first prefix.size() coordinates have the given signs.
    std::optional<std::vector<Rat>> witness(const SignVector& prefix);
    bool realizable(const SignVector& prefix) { return witness(prefix).has_value(); }
    std::size_t dimension() const { return n_; }

private:
    RatMatrix L_;
    std::size_t n_;
    std::map<SignVector, std::optional<std::vector<Rat>>> cache_;
    std::mutex mutex_;
};

}  // namespace multizero
