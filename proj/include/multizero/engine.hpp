#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multizero/certificate.hpp"
#include "multizero/cones.hpp"
#include "multizero/model.hpp"
#include "multizero/reduction.hpp"
#include "multizero/signs.hpp"
#include "multizero/witness.hpp"

namespace multizero {

/// Variable order shared by every constraint system of the search:
/// rho_1..rho_m, delta_1..delta_n, then (alpha+, alpha-) for each block in U2.
class VariableLayout {
public:
    VariableLayout() = default;
    VariableLayout(const Reduction& red, std::size_t n);

    std::size_t s() const { return s_; }
    std::size_t l() const { return l_; }
    std::size_t m() const { return s_ + l_; }
    std::size_t n() const { return n_; }
    std::size_t rho(std::size_t i) const { return i; }
    std::size_t delta(std::size_t r) const { return m() + r; }
    bool has_alpha(std::size_t k) const { return alpha_slot_[k] != no_node; }
    std::size_t alpha_plus(std::size_t k) const { return m() + n_ + 2 * alpha_slot_[k]; }
    std::size_t alpha_minus(std::size_t k) const { return alpha_plus(k) + 1; }
    std::size_t count() const { return m() + n_ + 2 * u2_count_; }

    std::vector<std::string> names() const;
    ConstraintSystem empty_system() const { return ConstraintSystem(names()); }

private:
    std::size_t s_ = 0;
    std::size_t l_ = 0;
    std::size_t n_ = 0;
    std::size_t u2_count_ = 0;
    std::vector<std::size_t> alpha_slot_;
};

/// Constraints common to all branches plus independent case splits; a
/// branch picks one alternative from every factor.
struct FactoredDisjunction {
    ConstraintSystem fixed;
    std::vector<std::vector<Branch>> factors;

    /// True when some factor has no alternative left.
    bool empty() const;
    std::size_t branch_count() const;
    Disjunction expand() const;
};

/// sign(A^sigma_rho) = S as constraints over rho; nullopt on a forced-sign contradiction.
std::optional<ConstraintSystem> encode_sign_conditions(const RatMatrix& P, const Orientation& sigma,
                                                       const SignMatrix& S, const VariableLayout& layout);

/// Oriented ground set conditions without the pattern of delta.
FactoredDisjunction encode_ground_set(const Reduction& red, const IntMatrix& M, const Orientation& sigma,
                                      const VariableLayout& layout);

/// The ground set for one sign pattern of delta, expanded into branches.
Disjunction encode_ground_set(const Reduction& red, const IntMatrix& M, const Orientation& sigma,
                              const SignVector& delta_sign, const VariableLayout& layout);

void add_delta_sign(ConstraintSystem& sys, const VariableLayout& layout, std::size_t r, Sign value);

/// {mu > 0, P^sigma mu > 0} and, for each listed row, sum_{j not in Lambda_i} P^sigma_ij mu_j > 0.
std::optional<std::vector<Rat>> gamma_intersection(const RatMatrix& P, const Orientation& sigma,
                                                   const LambdaSets& lambda, const std::vector<std::size_t>& rows);

/// One way of lying outside D: I^+ = i_plus and I^- = i_minus exactly (both
/// empty for the case where no row is active).
struct NotDCase {
    std::vector<std::size_t> i_plus;
    std::vector<std::size_t> i_minus;
    FactoredDisjunction constraints;
    bool gamma_feasible = true;
    std::vector<Rat> gamma_witness;
    std::string provenance;
};

struct NotDEncoding {
    std::vector<std::size_t> eligible_plus;
    std::vector<std::size_t> eligible_minus;
    std::vector<NotDCase> cases;
    std::size_t pruned = 0;

    /// Exact classification of a rational point: true iff it satisfies some
    /// branch of a Gamma-feasible case, i.e. lies outside D.
    bool outside_D(const std::vector<Rat>& point) const;
};

/// With `prune` off, Gamma-infeasible cases are kept and flagged instead of dropped.
NotDEncoding encode_not_D(const RatMatrix& P, const Orientation& sigma, const SignMatrix& S,
                          const LambdaSets& lambda, const VariableLayout& layout, bool prune = true);

/// Text form of the exclusion set D for reports.
std::string describe_D(const RatMatrix& P, const Orientation& sigma, const LambdaSets& lambda,
                       const VariableLayout& layout);

struct SearchStats {
    std::uint64_t orientations = 0;
    std::uint64_t orientations_skipped = 0;
    std::uint64_t sign_matrices = 0;
    std::uint64_t sign_condition_dead = 0;
    std::uint64_t branches = 0;
    std::uint64_t lp_calls = 0;
    std::uint64_t gamma_pruned = 0;

    SearchStats& operator+=(const SearchStats& other);
};

struct SearchOptions {
    bool prune_gamma = true;
};

/// First point (in exploration order) of the feasible ground set of (sigma, S).
std::optional<Certificate> feasible_ground_set_search(const AugmentedVerticalSystem& sys, const Reduction& red,
                                                      const Orientation& sigma, const SignMatrix& S,
                                                      KernelSignOracle& kernel, const std::vector<Rat>& mu_star,
                                                      SearchStats& stats, const SearchOptions& options = {});

/// Point mu > 0 with P^sigma mu > 0, if any.
std::optional<std::vector<Rat>> oriented_positive_point(const RatMatrix& P, const Orientation& sigma);

enum class VerdictKind { Precluded, Multiple, MultipleNumeric, Inconclusive };

std::string to_string(VerdictKind kind);
VerdictKind parse_verdict_kind(const std::string& text);
int exit_code(VerdictKind kind);

struct DecideOptions {
    PartitionMode mode = PartitionMode::Maximal;
    long precision = 128;
    bool construct_witness = true;
    std::size_t threads = 1;
    bool prune_gamma = true;
    std::size_t max_certificates = 8;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::string reason;
    Reduction reduction;
    bool pbar_forest = false;
    bool p_forest = false;
    std::vector<Certificate> certificates;
    std::optional<Witness> witness;
    std::optional<VerificationReport> verification;
    SearchStats stats;
};

Verdict decide(const AugmentedVerticalSystem& sys, const DecideOptions& options = {});

}  // namespace multizero
