#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "multizero/cones.hpp"
#include "multizero/rational.hpp"
#include "multizero/signs.hpp"

namespace multizero {

/// A point of the feasible ground set for one (sigma, S) together with
/// everything needed to rebuild and audit it.
struct Certificate {
    std::size_t orientation_index = 0;
    Orientation sigma;
    SignMatrix S;
    std::vector<Rat> point;           // all variables of `system`
    std::vector<Rat> rho;             // length m = s + l
    std::vector<Rat> delta;           // length n
    SignVector delta_sign;
    std::vector<Rat> alpha_plus;      // per column block; 0 for blocks in U1
    std::vector<Rat> alpha_minus;
    std::vector<Rat> kernel_witness;  // z in ker(L) with sign(z) = sign(delta)
    std::vector<std::size_t> i_plus;  // I^+_rho and I^-_rho on this branch
    std::vector<std::size_t> i_minus;
    std::vector<Rat> base_mu;         // Gamma witness, or the orientation's positive point
    std::vector<std::string> branch_trace;
    ConstraintSystem system;
};

}  // namespace multizero
