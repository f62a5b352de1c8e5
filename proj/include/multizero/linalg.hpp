#pragma once

#include <cstddef>
#include <vector>

#include "multizero/rational.hpp"

namespace multizero {

struct Echelon {
    RatMatrix reduced;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
Echelon rref(const RatMatrix& a);

std::size_t rank(const RatMatrix& a);

/// Columns form a basis of {x : A x = 0}; one column per free variable of rref(A).
RatMatrix right_kernel(const RatMatrix& a);

/// Kernel basis [Pbar; I] of a principal full-row-rank C.
/// Throws RankDeficient when rank(C) < rows(C) and NotPrincipal when the
/// leading square block is singular.
RatMatrix kernel_basis_principal(const RatMatrix& c);

/// Full-row-rank L with L N = 0 and rows(L) = rows(N) - rank(N).
RatMatrix left_kernel(const RatMatrix& n);

struct PrincipalForm {
    RatMatrix matrix;
    /// permutation[internal column] = original column.
    std::vector<std::size_t> permutation;
};

/// Reorders columns so that the leading block is invertible. Columns are
/// picked greedily left to right whenever they extend the rank; the rest keep
/// their relative order.
PrincipalForm make_principal(const RatMatrix& c);

bool is_identity_permutation(const std::vector<std::size_t>& permutation);

}  // namespace multizero
