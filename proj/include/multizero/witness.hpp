#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multizero/bigfloat.hpp"
#include "multizero/certificate.hpp"
#include "multizero/model.hpp"
#include "multizero/reduction.hpp"

namespace multizero {

inline constexpr long default_precision = 128;
inline constexpr long default_tolerance_exponent = -64;

/// Solution mu of A^sigma_rho mu = 0, P^sigma mu > 0, mu > 0 at the
/// certificate's rho, with the intermediate data of its construction.
struct OrientedSolution {
    std::vector<BigFloat> mu;
    std::vector<BigFloat> row_scale;    // omega_i of the two-entry/row-scaling step
    std::vector<BigFloat> path_weight;  // products along the tree paths
    RatMatrix Q_tilde;
    std::vector<BigFloat> Q;            // row-major s x l
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> pairs;
    std::vector<BigFloat> row_residuals;  // (A mu)_i
    std::vector<std::string> trace;
};

/// Requires a forest-inducing P. Throws NotForest, PrecisionExhausted.
OrientedSolution solve_oriented_characteristic(const Certificate& cert, const Reduction& red, long precision);

/// Entries of A^sigma_rho; entries whose exact sign is zero are exactly zero.
std::vector<BigFloat> oriented_characteristic_matrix(const Certificate& cert, const Reduction& red, long precision);

struct Lift {
    std::vector<BigFloat> mu_bar;  // length l-bar
    std::vector<Rat> rho_bar;      // M^T delta, length m-bar
    std::vector<BigFloat> beta;    // convex weights per column of Pbar
    std::vector<BigFloat> omega_plus;
    std::vector<BigFloat> omega_minus;
};

Lift lift_simplification(const std::vector<BigFloat>& mu, const Certificate& cert, const Reduction& red,
                         const IntMatrix& M, long precision);

/// Convex weights w_j in (0, 1), summing to one, with sum w_j e^{v_j} = target,
/// for a target strictly between min and max of e^{v_j} (or equal to all of them).
std::vector<BigFloat> convex_weights(const std::vector<BigFloat>& exp_values, const BigFloat& target);

struct Witness {
    long precision = default_precision;
    std::vector<BigFloat> kappa;  // original rate order
    std::vector<BigFloat> b;
    std::vector<BigFloat> x;
    std::vector<BigFloat> y;
    std::vector<Rat> delta;
    std::vector<Rat> kernel_witness;
};

Witness build_witness(const Lift& lift, const Certificate& cert, const AugmentedVerticalSystem& sys, long precision);

struct VerificationCheck {
    std::string name;
    BigFloat value;
    BigFloat bound;
    bool passed = false;
};

struct VerificationReport {
    long precision = 0;
    BigFloat tolerance;
    std::vector<VerificationCheck> checks;
    bool passed = false;

    /// Largest of the four equation residuals.
    BigFloat max_residual() const;
    const VerificationCheck* find(const std::string& name) const;
};

/// Recomputes residuals at `precision` bits (0: twice the witness precision).
/// Checks C(kappa x^M), C(kappa y^M), Lx - b, Ly - b against tolerance * (1 + scale),
/// positivity, the relative separation max_i |x_i - y_i| / max(x_i, y_i), and,
/// when the exact data is present, x = e^delta y and x - y = z.
VerificationReport verify_witness(const AugmentedVerticalSystem& sys, const Witness& w, const BigFloat& tolerance,
                                  long precision = 0);

BigFloat default_tolerance();

/// solve, lift and build in one step, retrying at doubled precision when
/// margins are too thin. Returns the witness and the precision actually used.
Witness construct_witness(const Certificate& cert, const Reduction& red, const AugmentedVerticalSystem& sys,
                          long precision);

/// Best-effort path for a P that does not induce a forest: solves the oriented
/// system with A rounded to rationals by exact LP, then lifts and builds.
std::optional<Witness> numeric_witness(const Certificate& cert, const Reduction& red,
                                       const AugmentedVerticalSystem& sys, long precision);

}  // namespace multizero
