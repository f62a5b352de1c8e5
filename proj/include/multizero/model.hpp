#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "multizero/rational.hpp"

namespace multizero {

struct Reaction {
    std::vector<long> reactant;  // alpha_j
    std::vector<long> product;   // beta_j
    std::string label;
};

struct ReactionNetwork {
    std::vector<std::string> species;
    std::vector<Reaction> reactions;

    /// N = (beta - alpha), species x reactions.
    IntMatrix stoichiometric_matrix() const;
    /// M = (alpha), species x reactions.
    IntMatrix reactant_matrix() const;
};

/// The data (C, M, L) of the system (C(kappa o x^M), Lx - b).
///
/// C is stored principal: the leading s-bar x s-bar block is invertible. The
/// columns of C and M are in internal order; `column_permutation[k]` is the
/// original index of internal column k, so kappa values can be mapped back.
struct AugmentedVerticalSystem {
    RatMatrix C;
    IntMatrix M;
    RatMatrix L;
    std::vector<std::size_t> column_permutation;
    std::vector<std::string> rate_labels;  // original order; may be empty

    std::size_t species_count() const { return M.rows(); }     // n
    std::size_t equation_count() const { return C.rows(); }    // s-bar
    std::size_t monomial_count() const { return C.cols(); }    // m-bar
    std::size_t kernel_dimension() const { return C.cols() - C.rows(); }  // l-bar

    /// C and M with columns restored to the original order.
    RatMatrix original_C() const;
    IntMatrix original_M() const;
};

/// Validates dimensions and ranks, permuting columns to make C principal when needed.
AugmentedVerticalSystem make_system(RatMatrix c, IntMatrix m, RatMatrix l);

ReactionNetwork parse_network(std::string_view text);
AugmentedVerticalSystem network_to_system(const ReactionNetwork& net);
AugmentedVerticalSystem parse_system(std::string_view text);

/// Matrix-format rendering in original column order; the L block is omitted when empty.
std::string format_system(const AugmentedVerticalSystem& sys);

}  // namespace multizero
